"""Command-line entry point: ``verify``, ``certify``, ``means`` and ``compare``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Optional, Sequence

from . import bounds as B
from . import certify as C
from .campaign import CampaignSummary, load_config, run_campaign
from .core import ExponentPair, Interval, midpoint_gap, trapezoid_gap
from .errors import ConfigError, HadamardError
from .functions import builtin
from .means import prop1_bounds, prop2_bounds
from .report import emit_report, render

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


def parse_function(text: str) -> dict:
    """``"power:n=2"`` -> ``{"name": "power", "n": 2.0}``."""
    name, _, rest = text.partition(":")
    entry: dict = {"name": name.strip()}
    for item in filter(None, (s.strip() for s in rest.split(","))):
        key, sep, value = item.partition("=")
        if not sep:
            raise ConfigError(f"function parameter {item!r} is not key=value")
        try:
            entry[key.strip()] = float(value)
        except ValueError:
            raise ConfigError(f"function parameter {key!r}: {value!r} is not a number") from None
    return entry


def _cmd_verify(args: argparse.Namespace) -> int:
    cfg = load_config(args.config).override(
        quad_tol=args.tol, slack_tol=args.slack_tol, output_path=args.out, output_format=args.format
    )
    records = run_campaign(cfg)
    summary = CampaignSummary.of(records)
    if cfg.output_path:
        emit_report(records, cfg.output_format, cfg.output_path)
        print(f"wrote {cfg.output_path} ({cfg.output_format})", file=sys.stderr)
    else:
        sys.stdout.write(render(records, cfg.output_format))
    print(summary, file=sys.stderr)
    return EXIT_OK if summary.failed == 0 and summary.errored == 0 else EXIT_VIOLATION


def _cmd_certify(args: argparse.Namespace) -> int:
    upper = max(args.b / args.m, args.b)
    spec = builtin(parse_function(args.function), upper=upper)
    if args.of == "derivative":
        q = args.q
        g = lambda x: abs(spec.derivative(x)) ** q  # noqa: E731
    else:
        g = spec
    iv = Interval(args.a, args.b)
    pred = args.predicate
    if pred == "m-convex":
        cert = C.certify_m_convex(g, args.m, upper, args.grid_n, args.tol,
                                  require_nonpositive_origin=args.origin)
    elif pred == "m-concave":
        cert = C.certify_m_concave(g, args.m, upper, args.grid_n, args.tol)
    elif pred == "convex":
        cert = C.certify_convex(g, iv, args.grid_n, args.tol)
    elif pred == "concave-nonneg":
        cert = C.certify_concave_nonneg(g, iv, args.grid_n, args.tol)
    else:
        cert = C.certify_thunsdorff(g, iv, args.grid_n, args.tol)
    print(json.dumps({
        "function": spec.label,
        "of": args.of,
        "predicate": cert.predicate,
        "status": cert.status,
        "worst_violation": cert.worst_violation,
        "witness": cert.witness,
        "samples": cert.samples,
        "tolerance": cert.tolerance,
        "note": cert.note,
    }, indent=2))
    return EXIT_OK if cert.passed else EXIT_VIOLATION


def _cmd_means(args: argparse.Namespace) -> int:
    rows = []
    for n in args.n:
        r1 = prop1_bounds(args.a, args.b, n, args.m)
        rows.append({"family": "K", "n": n, "k": 1.0, "q": 1.0, "lhs": r1.lhs,
                     "literal_lhs": r1.literal_lhs, "bounds": list(r1.bounds.values),
                     "min": r1.bounds.minimum, "argmin": r1.bounds.argmin, "slack": r1.slack})
        r2 = prop2_bounds(args.a, args.b, n, args.k, args.m, args.q)
        rows.append({"family": "L", "n": n, "k": args.k, "q": args.q, "lhs": r2.lhs,
                     "literal_lhs": r2.literal_lhs, "bounds": list(r2.bounds.values),
                     "min": r2.bounds.minimum, "argmin": r2.bounds.argmin, "slack": r2.slack})
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    else:
        print(f"a={args.a} b={args.b} m={args.m}")
        print(f"{'fam':>4} {'n':>4} {'k':>5} {'q':>5} {'lhs':>14} {'min bound':>14} {'argmin':>6} {'slack':>14}")
        for r in rows:
            print(f"{r['family']:>4} {r['n']:>4} {r['k']:>5g} {r['q']:>5g} {r['lhs']:>14.8g} "
                  f"{r['min']:>14.8g} {r['argmin']:>6} {r['slack']:>14.8g}")
    return EXIT_OK if all(r["slack"] >= -1e-8 for r in rows) else EXIT_VIOLATION


def compare_table(entry: dict, a: float, b: float, m: float, q: float, tol: float = 1e-10) -> list[dict]:
    """Tightness rows: the new families' minima next to the classical baselines."""
    spec = builtin(entry, upper=b / m)
    iv = Interval(a, b)
    mid = midpoint_gap(spec, iv, tol)
    trap = trapezoid_gap(spec, iv, tol)
    rows = [{"bound": "T", "value": B.t_bounds(spec, iv, m).minimum, "gap": "midpoint"}]
    if q > 1.0:
        tight, loose = B.u_bounds(spec, iv, m, ExponentPair.from_q(q))
        rows.append({"bound": "U", "value": tight.minimum, "gap": "midpoint"})
        rows.append({"bound": "U-loose", "value": loose.minimum, "gap": "midpoint"})
    rows.append({"bound": "V", "value": B.v_bounds(spec, iv, m, q).minimum, "gap": "midpoint"})
    l1, l2 = B.pearce_pecaric_bounds(spec, iv, q)
    rows.append({"bound": "l0", "value": B.classical_trapezoid_bound(spec, iv), "gap": "trapezoid"})
    rows.append({"bound": "l1", "value": l1, "gap": "trapezoid"})
    rows.append({"bound": "l2", "value": l2, "gap": "midpoint"})
    rows.append({"bound": "bakula", "value": B.bakula_midpoint_bound(spec, iv, m, q), "gap": "midpoint"})
    for r in rows:
        r["gap_value"] = mid if r["gap"] == "midpoint" else trap
        r["ratio"] = r["value"] / r["gap_value"] if r["gap_value"] > 0 else float("inf")
    return rows


def _cmd_compare(args: argparse.Namespace) -> int:
    entry = parse_function(args.function)
    rows = compare_table(entry, args.a, args.b, args.m, args.q)
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    else:
        label = builtin(entry).label
        print(f"{label} on [{args.a}, {args.b}], m={args.m}, q={args.q}")
        print(f"{'bound':>8} {'value':>14} {'gap':>10} {'gap value':>14} {'bound/gap':>10}")
        for r in rows:
            print(f"{r['bound']:>8} {r['value']:>14.8g} {r['gap']:>10} {r['gap_value']:>14.8g} {r['ratio']:>10.4g}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hadamard-bounds",
        description="Midpoint-gap bounds for functions with m-convex derivatives.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run a verification campaign from a JSON config")
    p.add_argument("config")
    p.add_argument("--tol", type=float, help="quadrature tolerance")
    p.add_argument("--slack-tol", type=float, help="allowed negative slack")
    p.add_argument("--out", help="report path (stdout when omitted)")
    p.add_argument("--format", choices=("json", "csv"))
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("certify", help="sample one hypothesis for one built-in function")
    p.add_argument("function", help="e.g. power:n=3, exp:c=1, sqrt")
    p.add_argument("--predicate", default="m-convex",
                   choices=("m-convex", "m-concave", "convex", "concave-nonneg", "thunsdorff"))
    p.add_argument("--of", choices=("f", "derivative"), default="f",
                   help="certify f itself or |f'|^q")
    p.add_argument("--q", type=float, default=1.0)
    p.add_argument("--m", type=float, default=1.0)
    p.add_argument("--a", type=float, default=0.0)
    p.add_argument("--b", type=float, default=1.0)
    p.add_argument("--grid-n", type=int, default=C.DEFAULT_GRID)
    p.add_argument("--tol", type=float, default=C.DEFAULT_TOL)
    p.add_argument("--origin", action="store_true", help="also require g(0) <= 0")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("means", help="special-means gap bounds for x^n and x^(n/k)")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--n", type=int, nargs="+", default=[2, 3, 4])
    p.add_argument("--m", type=float, default=1.0)
    p.add_argument("--k", type=float, default=1.0)
    p.add_argument("--q", type=float, default=1.0)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_means)

    p = sub.add_parser("compare", help="tightness of the new bounds against the baselines")
    p.add_argument("function")
    p.add_argument("--a", type=float, default=0.0)
    p.add_argument("--b", type=float, default=1.0)
    p.add_argument("--m", type=float, default=1.0)
    p.add_argument("--q", type=float, default=2.0)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_compare)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (ConfigError, HadamardError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
