from __future__ import annotations

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hadamard_bounds.certify import (
    FAIL,
    INCONCLUSIVE,
    PASS,
    certify_concave_nonneg,
    certify_m_concave,
    certify_m_convex,
    certify_monotone,
    certify_thunsdorff,
    certify_zero_at,
    combine,
)
from hadamard_bounds.core import Interval
from hadamard_bounds.errors import DomainError, NonFiniteError


def test_square_is_convex():
    cert = certify_m_convex(lambda x: x * x, 1.0, 2.0)
    assert cert.status == PASS
    assert cert.witness is None
    assert cert.samples == 33**3
    assert "not a proof" in cert.note


@pytest.mark.parametrize("m", [0.1, 0.25, 0.5, 0.75, 1.0])
def test_cube_is_m_convex(m):
    assert certify_m_convex(lambda x: x**3, m, 2.0).passed


def test_concave_parabola_fails_with_witness():
    cert = certify_m_convex(lambda x: 1.0 - x * x, 1.0, 2.0)
    assert cert.status == FAIL
    assert cert.worst_violation > cert.tolerance
    x, y, t = cert.witness
    assert 0.0 <= x <= 2.0 and 0.0 <= y <= 2.0 and 0.0 <= t <= 1.0
    g = lambda s: 1.0 - s * s  # noqa: E731
    recomputed = g(t * x + (1 - t) * y) - t * g(x) - (1 - t) * g(y)
    assert recomputed == pytest.approx(cert.worst_violation)
    # the worst violation is at least the hand-checked one at (0, 2, 1/2)
    assert cert.worst_violation >= 1.0 - 1e-12


def test_exponential_is_not_m_convex_below_one():
    # g(0) = 1 > m g(0): the inequality fails at x = y = 0, t = 0
    assert certify_m_convex(math.exp, 0.5, 4.0).status == FAIL
    # the relative test still catches it for fast growth
    assert certify_m_convex(lambda x: math.exp(3 * x), 0.25, 12.0, relative=True).status == FAIL


def test_origin_condition():
    shifted = lambda x: x * x + 0.5  # noqa: E731
    assert certify_m_convex(shifted, 1.0, 1.0).passed
    cert = certify_m_convex(shifted, 1.0, 1.0, require_nonpositive_origin=True)
    assert cert.status == FAIL
    assert cert.witness == (0.0, 0.0, 0.0)


def test_m_concave_sqrt():
    assert certify_m_concave(math.sqrt, 0.5, 2.0).passed
    assert certify_m_concave(lambda x: x * x, 1.0, 2.0).status == FAIL


@pytest.mark.parametrize(
    "f, a, b, status",
    [
        (lambda x: x, 0.0, 1.0, PASS),
        (math.sqrt, 0.0, 4.0, PASS),
        (lambda x: x * x, 0.0, 1.0, FAIL),
        (lambda x: x - 0.5, 0.0, 1.0, FAIL),
    ],
)
def test_concave_nonneg(f, a, b, status):
    assert certify_concave_nonneg(f, Interval(a, b)).status == status


@pytest.mark.parametrize(
    "f, status",
    [(lambda x: x * x, PASS), (lambda x: x * x + 1.0, FAIL), (lambda x: x, PASS), (math.sqrt, FAIL)],
)
def test_thunsdorff(f, status):
    assert certify_thunsdorff(f, Interval(0.0, 1.0)).status == status


def test_partial_failure_is_inconclusive():
    g = lambda x: x * x if x < 1.5 else math.nan  # noqa: E731
    assert certify_m_convex(g, 1.0, 2.0).status == INCONCLUSIVE


def test_total_failure_raises():
    with pytest.raises(NonFiniteError):
        certify_m_convex(lambda x: math.nan, 1.0, 1.0)


def test_bad_grid():
    with pytest.raises(DomainError):
        certify_m_convex(lambda x: x, 1.0, 1.0, grid_n=2)


def test_monotone_and_zero():
    iv = Interval(0.0, 2.0)
    assert certify_monotone(lambda x: x * x, iv, True).passed
    assert certify_monotone(lambda x: x * x, iv, False).status == FAIL
    assert certify_zero_at(lambda x: x - 1.0, (1.0,)).passed
    assert certify_zero_at(lambda x: x, (1.0,)).status == FAIL


def test_combine_worst_status_wins():
    ok = certify_m_convex(lambda x: x * x, 1.0, 1.0)
    bad = certify_m_convex(lambda x: -x * x, 1.0, 1.0)
    both = combine(ok, bad, predicate="pair")
    assert both.status == FAIL and both.witness == bad.witness
    assert both.samples == ok.samples + bad.samples
    with pytest.raises(ValueError):
        combine()


def _family(k: int):
    return [lambda x: x**3, lambda x: x * x - x, lambda x: 1.0 - x * x, math.sin, lambda x: abs(x - 1.0)][k]


@given(st.integers(0, 4), st.floats(0.05, 1.0), st.floats(0.01, 100.0))
def test_positive_scaling_preserves_status(k, m, c):
    g = _family(k)
    base = certify_m_convex(g, m, 2.0, grid_n=9, tol=1e-9)
    scaled = certify_m_convex(lambda x: c * g(x), m, 2.0, grid_n=9, tol=1e-9 * c)
    assert base.status == scaled.status


@given(st.integers(0, 4), st.floats(0.05, 1.0))
def test_deterministic(k, m):
    g = _family(k)
    assert certify_m_convex(g, m, 2.0, grid_n=9) == certify_m_convex(g, m, 2.0, grid_n=9)
