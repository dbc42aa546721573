"""Arithmetic, logarithmic and p-logarithmic means, and the midpoint-gap
bounds they inherit from the power functions ``x**n`` and ``x**(n/k)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bounds import BoundSet
from .core import Interval, as_m, midpoint_gap
from .errors import DomainError
from .functions import power
from .quadrature import DEFAULT_TOL


def arithmetic_mean(a: float, b: float) -> float:
    if a < 0 or b < 0:
        raise DomainError(f"arithmetic mean is defined for a, b >= 0, got ({a}, {b})")
    return (a + b) / 2.0


def _positive(a: float, b: float, what: str) -> None:
    if not (a > 0 and b > 0):
        raise DomainError(f"{what} needs a, b > 0, got ({a}, {b})")


def logarithmic_mean(a: float, b: float) -> float:
    """``(b - a)/(ln b - ln a)``, continuously extended by ``L(a, a) = a``."""
    _positive(a, b, "logarithmic mean")
    if a == b:
        return float(a)
    lo, hi = min(a, b), max(a, b)
    return (hi - lo) / math.log1p((hi - lo) / lo)


def p_log_mean(a: float, b: float, p: float) -> float:
    """``[(b^(p+1) - a^(p+1)) / ((p+1)(b-a))]^(1/p)``, ``p`` not in ``{-1, 0}``."""
    _positive(a, b, "p-logarithmic mean")
    if p == 0 or p == -1:
        raise DomainError(f"p-logarithmic mean excludes p in {{-1, 0}}, got {p}")
    if a == b:
        return float(a)
    lo, hi = min(a, b), max(a, b)
    # hi^(p+1) - lo^(p+1) without cancellation
    diff = lo ** (p + 1.0) * math.expm1((p + 1.0) * math.log1p((hi - lo) / lo))
    return (diff / ((p + 1.0) * (hi - lo))) ** (1.0 / p)


def power_mean_integral(a: float, b: float, r: float) -> float:
    """Integral mean of ``x**r`` over ``[a, b]``, i.e. ``L_r(a, b)**r``."""
    if r == -1:
        return 1.0 / logarithmic_mean(a, b)
    if r == 0:
        return 1.0
    return p_log_mean(a, b, r) ** r


@dataclass(frozen=True)
class MeansTriple:
    arithmetic: float
    logarithmic: float
    p_log: float
    p: float


def means_triple(a: float, b: float, p: float) -> MeansTriple:
    return MeansTriple(arithmetic_mean(a, b), logarithmic_mean(a, b), p_log_mean(a, b, p), p)


def _check_power_args(a: float, b: float, n: int) -> None:
    if not 0 < a < b:
        raise DomainError(f"need 0 < a < b, got ({a}, {b})")
    if int(n) != n or abs(n) < 2:
        raise DomainError(f"n must be an integer with |n| >= 2, got {n}")


@dataclass(frozen=True)
class PowerGapResult:
    lhs: float
    bounds: BoundSet
    literal_lhs: float

    @property
    def slack(self) -> float:
        return self.bounds.minimum - self.lhs


def prop1_bounds(a: float, b: float, n: int, m: float = 1.0) -> PowerGapResult:
    """``|A^n - L_n^n|`` against the four ``K`` variants.

    ``K`` is the first-power family specialised to ``f(x) = x**n``; the
    prefactor uses ``|n|`` so that negative powers stay nonnegative.
    """
    _check_power_args(a, b, n)
    m = as_m(m)
    e = n - 1
    A = arithmetic_mean(a, b)
    pw = lambda x: abs(x) ** e  # noqa: E731
    terms = (
        2.0 * pw(A) + m * arithmetic_mean(pw(a / m), pw(b / m)),
        pw(A) + m * pw(A / m) + arithmetic_mean(pw(a), m * pw(b / m)),
        # single-argument A(|a|^(n-1) + |b|^(n-1)) read as A(|a|^(n-1), |b|^(n-1))
        arithmetic_mean(pw(a), pw(b)) + 2.0 * m * pw(A / m),
        pw(A) + m * pw(A / m) + arithmetic_mean(m * pw(a / m), pw(b)),
    )
    bounds = BoundSet.from_terms("K", terms, abs(n) * (b - a) / 12.0)
    lhs = abs(A**n - p_log_mean(a, b, n) ** n)
    return PowerGapResult(lhs, bounds, lhs)


def prop2_bounds(
    a: float, b: float, n: int, k: float = 1.0, m: float = 1.0, q: float = 1.0,
    tol: float = DEFAULT_TOL,
) -> PowerGapResult:
    """Midpoint gap of ``x**(n/k)`` against the four ``L`` variants.

    ``lhs`` is the gap of ``x**(n/k)`` computed by quadrature.  The
    expression ``|A^(n/k) - L_n^(n/k)|`` as literally written is returned as
    ``literal_lhs``; it is a different quantity unless ``k = 1`` and no
    inequality is asserted for it.  ``bounds.values`` carry the common
    prefactor ``(b-a)/4 * (1/2)^(1-1/q)``; the bare ``L_i`` are in
    ``bounds.terms``.
    """
    _check_power_args(a, b, n)
    if not k >= 1.0:
        raise DomainError(f"k must be >= 1, got {k}")
    if not q >= 1.0:
        raise DomainError(f"q must be >= 1, got {q}")
    m = as_m(m)
    r = n / k
    e = q * (n - k) / k
    inv = 1.0 / q
    A = arithmetic_mean(a, b)
    pw = lambda x: abs(x) ** e  # noqa: E731
    heavy = lambda x, y: (2.0 * arithmetic_mean(pw(x) / 3.0, m / 6.0 * pw(y))) ** inv  # noqa: E731
    light = lambda x, y: (2.0 * arithmetic_mean(pw(x) / 6.0, m / 3.0 * pw(y))) ** inv  # noqa: E731
    terms = tuple(
        abs(r) * t
        for t in (
            heavy(A, a / m) + heavy(A, b / m),
            light(a, A / m) + heavy(A, b / m),
            light(a, A / m) + light(b, A / m),
            heavy(A, a / m) + light(b, A / m),
        )
    )
    bounds = BoundSet.from_terms("L", terms, (b - a) / 4.0 * 0.5 ** (1.0 - inv))
    spec = power(r, upper=b / m)
    lhs = midpoint_gap(spec, Interval(a, b), tol)
    literal = abs(A**r - p_log_mean(a, b, n) ** r)
    return PowerGapResult(lhs, bounds, literal)
