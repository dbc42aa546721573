"""Upper bounds on the midpoint gap for functions with m-convex ``|f'|``.

Three four-variant families are provided (``t_bounds``, ``u_bounds``,
``v_bounds``) together with the classical baselines they are compared
against, the m-convex Hermite-Hadamard sandwich, the Favard/Thunsdorff
power-mean inequality and the product inequality for pairs of m-concave
(or m-convex) functions.

Derivative magnitudes are always sampled at the six nodes
``a, b, c, a/m, b/m, c/m`` with ``c = (a+b)/2``; the absolute value is taken
after evaluating ``f'``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

from .certify import (
    DEFAULT_GRID,
    Certificate,
    certify_concave_nonneg,
    certify_m_concave,
    certify_m_convex,
    certify_monotone,
    certify_thunsdorff,
    certify_zero_at,
    combine,
)
from .core import ExponentPair, FunctionSpec, Interval, MParam, as_m, derivative_at, integral_mean
from .errors import DomainError, PreconditionError
from .quadrature import DEFAULT_TOL, integrate

TIE_TOL = 1e-12
CERT_TOL = 1e-9


@dataclass(frozen=True)
class BoundSet:
    """Four variant values of one bound family.

    ``values[i] = prefactor * terms[i]``: ``terms`` are the bracketed
    expressions, ``prefactor`` the common factor in front of the min.
    ``argmin`` is 1-based; ties within ``TIE_TOL`` go to the smaller index.
    """

    family: str
    values: tuple[float, float, float, float]
    minimum: float
    argmin: int
    terms: tuple[float, float, float, float]
    prefactor: float

    @classmethod
    def from_terms(cls, family: str, terms, prefactor: float) -> "BoundSet":
        terms = tuple(float(t) for t in terms)
        if len(terms) != 4:
            raise ValueError(f"a bound family has four variants, got {len(terms)}")
        values = tuple(prefactor * t for t in terms)
        minimum = min(values)
        argmin = next(i for i, v in enumerate(values, 1) if v <= minimum + TIE_TOL)
        return cls(family, values, minimum, argmin, terms, prefactor)


@dataclass(frozen=True)
class DerivativeNodes:
    """``|f'|`` at the six nodes used by every bound."""

    a: float
    b: float
    mid: float
    a_m: float
    b_m: float
    mid_m: float

    @classmethod
    def sample(cls, spec: FunctionSpec, iv: Interval, m: float = 1.0) -> "DerivativeNodes":
        iv.check_within(spec, m)
        c = iv.midpoint
        d = lambda x: abs(derivative_at(spec, x))  # noqa: E731
        return cls(d(iv.a), d(iv.b), d(c), d(iv.a / m), d(iv.b / m), d(c / m))


# ---------------------------------------------------------------------------
# new families


def t_bounds(spec: FunctionSpec, iv: Interval, m: MParam | float) -> BoundSet:
    """First-power family, prefactor ``(b-a)/12``."""
    m = as_m(m)
    n = DerivativeNodes.sample(spec, iv, m)
    terms = (
        2.0 * n.mid + m * (n.a_m + n.b_m) / 2.0,
        n.mid + m * n.mid_m + (n.a + m * n.b_m) / 2.0,
        (n.a + n.b) / 2.0 + 2.0 * m * n.mid_m,
        n.mid + m * n.mid_m + (m * n.a_m + n.b) / 2.0,
    )
    return BoundSet.from_terms("T", terms, iv.length / 12.0)


def _u_terms(n: DerivativeNodes, m: float, q: float) -> tuple[float, ...]:
    r = lambda x, y: (x**q + m * y**q) ** (1.0 / q)  # noqa: E731
    u1 = r(n.mid, n.a_m) + r(n.mid, n.b_m)
    u2 = r(n.a, n.mid_m) + r(n.mid, n.b_m)
    u3 = r(n.a, n.mid_m) + r(n.b, n.mid_m)
    # the fourth variant is displayed identically to the first
    u4 = r(n.mid, n.a_m) + r(n.mid, n.b_m)
    return (u1, u2, u3, u4)


def u_prefactors(iv: Interval, exps: ExponentPair) -> tuple[float, float]:
    """(tight, loose) prefactors of the Hölder family."""
    half = 0.5 ** (1.0 / exps.q)
    loose = iv.length / 4.0 * half
    return loose / (exps.p + 1.0) ** (1.0 / exps.p), loose


def u_bounds(
    spec: FunctionSpec, iv: Interval, m: MParam | float, exps: ExponentPair
) -> tuple[BoundSet, BoundSet]:
    """Hölder family: the tight bound and its weakened form without ``(p+1)^(1/p)``."""
    m = as_m(m)
    n = DerivativeNodes.sample(spec, iv, m)
    terms = _u_terms(n, m, exps.q)
    tight, loose = u_prefactors(iv, exps)
    return BoundSet.from_terms("U", terms, tight), BoundSet.from_terms("U", terms, loose)


def holder_weight(p: float) -> float:
    """``(1/(1+p))^(1/p)``, strictly between 1/2 and 1 for ``p > 1``."""
    return math.exp(-math.log1p(p) / p)


def v_bounds(spec: FunctionSpec, iv: Interval, m: MParam | float, q: float) -> BoundSet:
    """Power-mean family, prefactor ``(b-a)/4 * (1/2)^(1-1/q)``."""
    m = as_m(m)
    if not q >= 1.0:
        raise DomainError(f"v_bounds needs q >= 1, got {q}")
    n = DerivativeNodes.sample(spec, iv, m)
    inv = 1.0 / q
    heavy = lambda x, y: (x**q / 3.0 + m / 6.0 * y**q) ** inv  # noqa: E731
    light = lambda x, y: (x**q / 6.0 + m / 3.0 * y**q) ** inv  # noqa: E731
    terms = (
        heavy(n.mid, n.a_m) + heavy(n.mid, n.b_m),
        light(n.a, n.mid_m) + heavy(n.mid, n.b_m),
        light(n.a, n.mid_m) + light(n.b, n.mid_m),
        heavy(n.mid, n.a_m) + light(n.b, n.mid_m),
    )
    return BoundSet.from_terms("V", terms, iv.length / 4.0 * 0.5 ** (1.0 - inv))


# ---------------------------------------------------------------------------
# classical baselines


def classical_trapezoid_bound(spec: FunctionSpec, iv: Interval) -> float:
    """``(b-a)(|f'(a)| + |f'(b)|)/8``, bounds the trapezoid gap."""
    fa = abs(derivative_at(spec, iv.a))
    fb = abs(derivative_at(spec, iv.b))
    return iv.length * (fa + fb) / 8.0


def pearce_pecaric_bounds(spec: FunctionSpec, iv: Interval, q: float = 1.0) -> tuple[float, float]:
    """(trapezoid-gap bound, midpoint-gap bound); both share one expression."""
    if not q >= 1.0:
        raise DomainError(f"q must be >= 1, got {q}")
    fa = abs(derivative_at(spec, iv.a))
    fb = abs(derivative_at(spec, iv.b))
    value = iv.length / 4.0 * ((fa**q + fb**q) / 2.0) ** (1.0 / q)
    return value, value


def bakula_midpoint_bound(
    spec: FunctionSpec, iv: Interval, m: MParam | float, q: float = 1.0
) -> float:
    m = as_m(m)
    if not q >= 1.0:
        raise DomainError(f"q must be >= 1, got {q}")
    n = DerivativeNodes.sample(spec, iv, m)
    left = ((n.a**q + m * n.b_m**q) / 2.0) ** (1.0 / q)
    right = ((m * n.a_m**q + n.b**q) / 2.0) ** (1.0 / q)
    return iv.length / 4.0 * min(left, right)


# ---------------------------------------------------------------------------
# sandwich, Favard, products


@dataclass(frozen=True)
class SandwichResult:
    left: float
    middle: float
    right: float

    @property
    def slack(self) -> float:
        return min(self.middle - self.left, self.right - self.middle)


def _sym_mean(spec: FunctionSpec, iv: Interval, m: float, tol: float) -> float:
    g = lambda x: (spec(x) + m * spec(x / m)) / 2.0  # noqa: E731
    return integrate(g, iv.a, iv.b, tol * iv.length).value / iv.length


def dragomir_sandwich(
    spec: FunctionSpec, iv: Interval, m: MParam | float, tol: float = DEFAULT_TOL
) -> SandwichResult:
    """``f(c) <= mean((f(x) + m f(x/m))/2) <= (m+1)/4 [...]`` for m-convex ``f``."""
    m = as_m(m)
    iv.check_within(spec, m)
    a, b = iv.a, iv.b
    left = spec(iv.midpoint)
    middle = _sym_mean(spec, iv, m, tol)
    right = (m + 1.0) / 4.0 * (
        (spec(a) + spec(b)) / 2.0 + m * (spec(a / m) + spec(b / m)) / 2.0
    )
    return SandwichResult(left, middle, right)


class Direction(str, enum.Enum):
    """Which way an inequality between ``lhs`` and ``rhs`` is asserted."""

    GEQ = "lhs>=rhs"
    LEQ = "lhs<=rhs"

    def slack(self, lhs: float, rhs: float) -> float:
        return lhs - rhs if self is Direction.GEQ else rhs - lhs


@dataclass(frozen=True)
class InequalityResult:
    lhs: float
    rhs: float
    direction: Direction
    certificate: Optional[Certificate] = None

    @property
    def slack(self) -> float:
        return self.direction.slack(self.lhs, self.rhs)

    def holds(self, slack_tol: float = 1e-8) -> bool:
        return self.slack >= -slack_tol


def favard_sides(spec: FunctionSpec, iv: Interval, q: float, tol: float = DEFAULT_TOL) -> tuple[float, float]:
    """``(2^q/(q+1) * mean(f)^q, mean(f^q))`` for nonnegative ``f``."""
    if not q > 0:
        raise DomainError(f"q must be positive, got {q}")
    mean = integral_mean(spec, iv, tol)
    pos = lambda x: max(spec(x), 0.0) ** q  # noqa: E731
    lhs = 2.0**q / (q + 1.0) * max(mean, 0.0) ** q
    rhs = integrate(pos, iv.a, iv.b, tol * iv.length).value / iv.length
    return lhs, rhs


def favard_inequality(
    spec: FunctionSpec,
    iv: Interval,
    q: float,
    tol: float = DEFAULT_TOL,
    grid_n: int = DEFAULT_GRID,
    cert_tol: float = CERT_TOL,
) -> InequalityResult:
    """Favard's inequality for nonnegative concave ``f`` (``lhs >= rhs`` when
    ``q >= 1``, reversed for ``0 < q < 1``), or Thunsdorff's reversal for
    nonnegative convex ``f`` with ``f(a) = 0`` and ``q >= 1``.
    """
    concave = certify_concave_nonneg(spec, iv, grid_n, cert_tol)
    if concave.passed:
        direction, cert = (Direction.GEQ if q >= 1.0 else Direction.LEQ), concave
    else:
        thun = certify_thunsdorff(spec, iv, grid_n, cert_tol)
        if not (thun.passed and q >= 1.0):
            raise PreconditionError(
                f"{spec.label} on [{iv.a}, {iv.b}]: neither Favard nor Thunsdorff hypotheses hold "
                f"({concave.summary()}; {thun.summary()})"
            )
        direction, cert = Direction.LEQ, thun
    lhs, rhs = favard_sides(spec, iv, q, tol)
    return InequalityResult(lhs, rhs, direction, cert)


def product_constant(exps: ExponentPair) -> float:
    """``(p+1)^(1/p) (q+1)^(1/q)``."""
    return (exps.p + 1.0) ** (1.0 / exps.p) * (exps.q + 1.0) ** (1.0 / exps.q)


def _pair_certificate(
    spec: FunctionSpec, iv: Interval, m: float, grid_n: int, tol: float, concave: bool,
    relative: bool,
) -> Certificate:
    reach = iv.b / m
    if concave:
        return combine(
            certify_concave_nonneg(spec, iv, grid_n, tol, relative=relative),
            certify_m_concave(spec, m, reach, grid_n, tol, relative=relative),
            predicate=f"{spec.label}:concave&m-concave",
        )
    return combine(
        certify_m_convex(spec, 1.0, reach, grid_n, tol, relative=relative),
        certify_m_convex(spec, m, reach, grid_n, tol, relative=relative),
        predicate=f"{spec.label}:convex&m-convex",
    )


def product_lower_bound(
    fspec: FunctionSpec,
    gspec: FunctionSpec,
    iv: Interval,
    m: MParam | float,
    exps: ExponentPair,
    tol: float = DEFAULT_TOL,
    grid_n: int = DEFAULT_GRID,
    cert_tol: float = CERT_TOL,
    relative_cert: bool = False,
) -> InequalityResult:
    """Compare ``f(c) g(c)`` with ``C/16 * mean([f + m f(./m)][g + m g(./m)])``.

    For nonnegative concave, m-concave ``f, g`` the product dominates
    (``Direction.GEQ``); for convex, m-convex pairs with ``f(0) = 0`` the
    inequality reverses (``Direction.LEQ``).  Anything else raises
    :class:`PreconditionError`.
    """
    m = as_m(m)
    iv.check_within(fspec, m)
    iv.check_within(gspec, m)
    concave = combine(
        _pair_certificate(fspec, iv, m, grid_n, cert_tol, True, relative_cert),
        _pair_certificate(gspec, iv, m, grid_n, cert_tol, True, relative_cert),
    )
    if concave.passed:
        direction, cert = Direction.GEQ, concave
    else:
        convex = combine(
            _pair_certificate(fspec, iv, m, grid_n, cert_tol, False, relative_cert),
            _pair_certificate(gspec, iv, m, grid_n, cert_tol, False, relative_cert),
            certify_zero_at(fspec, (0.0,), cert_tol),
        )
        if not convex.passed:
            raise PreconditionError(
                f"({fspec.label}, {gspec.label}): neither the concave nor the convex "
                f"hypotheses hold ({concave.summary()}; {convex.summary()})"
            )
        direction, cert = Direction.LEQ, convex

    c = iv.midpoint
    lhs = fspec(c) * gspec(c)
    integrand = lambda x: (fspec(x) + m * fspec(x / m)) * (gspec(x) + m * gspec(x / m))  # noqa: E731
    mean = integrate(integrand, iv.a, iv.b, tol * iv.length).value / iv.length
    rhs = product_constant(exps) / 16.0 * mean
    return InequalityResult(lhs, rhs, direction, cert)


def product_bound_m1(
    fspec: FunctionSpec, gspec: FunctionSpec, iv: Interval, exps: ExponentPair, tol: float = DEFAULT_TOL
) -> float:
    """Right-hand side of the product inequality at ``m = 1``: ``C/4 * mean(f g)``."""
    mean = integrate(lambda x: fspec(x) * gspec(x), iv.a, iv.b, tol * iv.length).value / iv.length
    return product_constant(exps) / 4.0 * mean


# ---------------------------------------------------------------------------
# m = 1 specializations

CASES = ("general", "increasing", "decreasing", "mid_zero", "ends_zero")


def _check_case(
    spec: FunctionSpec, iv: Interval, case: str, grid_n: int, tol: float
) -> None:
    absd = lambda x: abs(derivative_at(spec, x))  # noqa: E731
    if case in ("increasing", "decreasing"):
        cert = certify_monotone(absd, iv, case == "increasing", grid_n, tol)
    elif case == "mid_zero":
        cert = certify_zero_at(absd, (iv.midpoint,), tol)
    elif case == "ends_zero":
        cert = certify_zero_at(absd, (iv.a, iv.b), tol)
    else:
        return
    if not cert.passed:
        raise PreconditionError(f"{spec.label}: case {case!r} not satisfied ({cert.summary()})")


def specialize_m1(
    family: str,
    spec: FunctionSpec,
    iv: Interval,
    case: str = "general",
    *,
    p: Optional[float] = None,
    q: Optional[float] = None,
    grid_n: int = DEFAULT_GRID,
    tol: float = CERT_TOL,
) -> float:
    """Closed-form ``m = 1`` bounds, including the monotone and vanishing-derivative cases.

    ``family`` is ``"T"``, ``"U"`` (needs ``p`` or ``q``, conjugate pair) or
    ``"V"`` (needs ``q >= 1``).  The formulas are the displayed ones; in the
    ``U``/``V`` monotone and ``U`` ends-zero cases they are not the literal
    ``m = 1`` reduction of the general bound.
    """
    if case not in CASES:
        raise ValueError(f"unknown case {case!r}; choose from {CASES}")
    _check_case(spec, iv, case, grid_n, tol)
    n = DerivativeNodes.sample(spec, iv, 1.0)
    F, Fa, Fb, h = n.mid, n.a, n.b, iv.length

    if family == "T":
        bracket = {
            "general": 2.0 * F + (Fa + Fb) / 2.0,
            "increasing": 2.0 * F + Fb,
            "decreasing": 2.0 * F + Fa,
            "mid_zero": (Fa + Fb) / 2.0,
        }
        if case == "ends_zero":
            return h / 6.0 * F
        return h / 12.0 * bracket[case]

    if family == "U":
        if p is not None:
            exps = ExponentPair.from_p(p)
        elif q is not None:
            exps = ExponentPair.from_q(q)
        else:
            raise DomainError("family U needs p or q")
        qq = exps.q
        pre = h / (4.0 * (exps.p + 1.0) ** (1.0 / exps.p))
        half = 0.5 ** (1.0 / qq)
        r = lambda x, y: (x**qq + y**qq) ** (1.0 / qq)  # noqa: E731
        if case == "general":
            return pre * half * (r(F, Fa) + r(F, Fb))
        if case == "increasing":
            return pre * r(F, Fb)
        if case == "decreasing":
            return pre * r(F, Fa)
        if case == "mid_zero":
            return pre * half * (Fa + Fb)
        return pre * half * F

    if family == "V":
        if q is None or not q >= 1.0:
            raise DomainError(f"family V needs q >= 1, got {q}")
        inv = 1.0 / q
        pre = h / 4.0 * 0.5 ** (1.0 - inv)
        heavy = lambda x, y: (x**q / 3.0 + y**q / 6.0) ** inv  # noqa: E731
        if case == "general":
            return pre * (heavy(F, Fa) + heavy(F, Fb))
        if case == "increasing":
            return pre * heavy(F, Fb)
        if case == "decreasing":
            return pre * heavy(F, Fa)
        if case == "mid_zero":
            return h / 8.0 * (1.0 / 3.0) ** inv * (Fa + Fb)
        return h / 4.0 * (1.0 / 6.0) ** (1.0 - inv) * F

    raise ValueError(f"unknown family {family!r}; choose T, U or V")
