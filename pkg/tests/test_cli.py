from __future__ import annotations

import json

import pytest

from hadamard_bounds.cli import EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, main, parse_function
from hadamard_bounds.errors import ConfigError


def _cfg(tmp_path, **extra):
    doc = {"functions": [{"name": "power", "n": 2}], "intervals": [[0, 1]], "m_values": [1],
           "families": ["T", "V"], **extra}
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(doc))
    return path


def test_parse_function():
    assert parse_function("power:n=2") == {"name": "power", "n": 2.0}
    assert parse_function("affine:alpha=2, beta=-1") == {"name": "affine", "alpha": 2.0, "beta": -1.0}
    assert parse_function("sqrt") == {"name": "sqrt"}
    with pytest.raises(ConfigError):
        parse_function("power:n")
    with pytest.raises(ConfigError):
        parse_function("power:n=two")


def test_verify_writes_report(tmp_path, capsys):
    out = tmp_path / "r.csv"
    assert main(["verify", str(_cfg(tmp_path)), "--out", str(out), "--format", "csv"]) == EXIT_OK
    assert len(out.read_text().splitlines()) == 3
    assert "2 records: 2 pass" in capsys.readouterr().err


def test_verify_stdout_json(tmp_path, capsys):
    assert main(["verify", str(_cfg(tmp_path)), "--format", "json"]) == EXIT_OK
    rows = json.loads(capsys.readouterr().out)
    assert [r["family"] for r in rows] == ["T", "V"]


def test_verify_exit_code_on_violation(tmp_path):
    # the (m+1)/4 upper side is exceeded for x^2 on [0, 1] at m = 1/4
    cfg = _cfg(tmp_path, m_values=[0.25], families=["sandwich"])
    assert main(["verify", str(cfg)]) == EXIT_VIOLATION


def test_verify_bad_config(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"functions": [], "intervals": [], "m_values": [0]}))
    assert main(["verify", str(path)]) == EXIT_USAGE
    assert "m_values[0]" in capsys.readouterr().err


def test_certify_subcommand(capsys):
    assert main(["certify", "power:n=3", "--m", "0.5", "--b", "1"]) == EXIT_OK
    out = json.loads(capsys.readouterr().out)
    assert out["status"] == "pass" and out["function"] == "x^3"
    assert main(["certify", "exp:c=1", "--m", "0.5", "--of", "derivative", "--q", "2"]) == EXIT_VIOLATION
    out = json.loads(capsys.readouterr().out)
    assert out["status"] == "fail" and len(out["witness"]) == 3


@pytest.mark.parametrize("pred, code", [("concave-nonneg", EXIT_OK), ("thunsdorff", EXIT_VIOLATION)])
def test_certify_predicates_on_sqrt(pred, code):
    assert main(["certify", "sqrt", "--predicate", pred, "--b", "4"]) == code


def test_means_subcommand(capsys):
    assert main(["means", "--a", "1", "--b", "3", "--n", "2", "--format", "json"]) == EXIT_OK
    rows = json.loads(capsys.readouterr().out)
    assert rows[0]["lhs"] == pytest.approx(1 / 3)
    assert main(["means", "--a", "1", "--b", "3"]) == EXIT_OK
    assert "argmin" in capsys.readouterr().out


def test_compare_subcommand(capsys):
    assert main(["compare", "power:n=2", "--q", "2", "--format", "json"]) == EXIT_OK
    rows = {r["bound"]: r for r in json.loads(capsys.readouterr().out)}
    assert set(rows) >= {"T", "U", "U-loose", "V", "l0", "l1", "l2", "bakula"}
    assert rows["T"]["value"] == pytest.approx(0.25)
    assert rows["l0"]["gap_value"] == pytest.approx(1 / 6)
    assert main(["compare", "power:n=3", "--a", "1", "--b", "2", "--m", "0.5"]) == EXIT_OK


def test_unknown_function_is_usage_error(capsys):
    assert main(["compare", "gamma"]) == EXIT_USAGE
    assert "unknown built-in" in capsys.readouterr().err
