from __future__ import annotations

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hadamard_bounds.core import FunctionSpec, Interval
from hadamard_bounds.functions import affine, exponential, power, shifted_square
from hadamard_bounds.identity import lemma1_residual, lemma1_sides


def test_square_both_sides():
    sides = lemma1_sides(power(2), Interval(0.0, 1.0))
    assert sides.lhs == pytest.approx(-1 / 12, abs=1e-12)
    assert sides.rhs == pytest.approx(-1 / 12, abs=1e-9)
    assert sides.residual <= 1e-9


def test_affine_is_zero():
    spec = affine(3.0, -2.0, upper=5.0)
    sides = lemma1_sides(spec, Interval(1.0, 4.0))
    assert abs(sides.lhs) <= 1e-12 and abs(sides.rhs) <= 1e-12
    assert sides.residual <= 1e-12


def test_exponential_against_antiderivative():
    spec = exponential(1.0, upper=2.0)
    sides = lemma1_sides(spec, Interval(0.0, 2.0))
    assert sides.lhs == pytest.approx(math.e - (math.e**2 - 1) / 2, abs=1e-10)
    assert lemma1_residual(spec, Interval(0.0, 2.0)) <= 1e-8


SMOOTH = [power(2, 50.0), power(3, 50.0), power(4, 50.0), exponential(1.0, 50.0),
          exponential(-1.0, 50.0), affine(2.0, -1.0, 50.0), shifted_square(0.5, 50.0)]


@pytest.mark.parametrize("spec", SMOOTH, ids=lambda s: s.label)
@pytest.mark.parametrize("a, b", [(0.0, 0.01), (0.0, 0.1), (0.1, 1.0), (0.0, 1.0), (1.0, 10.0), (0.5, 2.0)])
def test_residual_on_log_grid(spec, a, b):
    tol = 1e-10
    sides = lemma1_sides(spec, Interval(a, b), tol)
    # relative to the magnitude of f on the interval
    scale = max(1.0, abs(spec(a)), abs(spec(b)))
    assert sides.residual <= 10 * tol * scale


@given(st.floats(0, 3), st.floats(0.05, 2), st.floats(-100, 100))
def test_translation_invariance(a, width, c):
    tol = 1e-10
    b = a + width
    iv = Interval(a, b)
    f = lambda x: x**3 - x  # noqa: E731
    df = lambda x: 3 * x * x - 1  # noqa: E731
    base = lemma1_residual(FunctionSpec(f, b, df), iv, tol)
    moved = lemma1_residual(FunctionSpec(lambda x: f(x) + c, b, df), iv, tol)
    assert abs(base - moved) <= 2 * tol * (1 + abs(c))
