"""Domain types, derivative evaluation and the two Hermite-Hadamard gaps."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import DomainError, NonFiniteError
from .quadrature import DEFAULT_TOL, integrate

RealFn = Callable[[float], float]

FD_REL_STEP = 1e-6
FD_MIN_STEP = 1e-6
CONJUGATE_TOL = 1e-12


def _finite(value, what: str, x=None):
    if isinstance(value, np.ndarray):
        if not np.all(np.isfinite(value)):
            raise NonFiniteError(f"{what} is not finite at some points")
        return value
    value = float(value)
    if not math.isfinite(value):
        where = "" if x is None else f"({x!r})"
        raise NonFiniteError(f"{what}{where} is not finite: {value!r}")
    return value


@dataclass(frozen=True)
class FunctionSpec:
    """A real function on ``[0, domain_upper]`` with an optional analytic derivative.

    Calling the spec evaluates ``f``; points outside the declared domain raise
    :class:`DomainError` instead of being extrapolated.  Evaluators may
    accept numpy arrays; the spec then evaluates arrays elementwise in one
    call (the certification grids rely on this for speed).
    """

    f: RealFn
    domain_upper: float
    df: Optional[RealFn] = None
    label: str = "f"

    def __post_init__(self) -> None:
        if not (math.isfinite(self.domain_upper) and self.domain_upper > 0):
            raise DomainError(f"domain_upper must be a positive real, got {self.domain_upper!r}")

    @property
    def approximate_derivative(self) -> bool:
        return self.df is None

    def check_point(self, x):
        if isinstance(x, np.ndarray):
            x = x.astype(float, copy=False)
            if x.size and not (x.min() >= 0.0 and x.max() <= self.domain_upper):
                raise DomainError(f"{self.label}: points outside [0, {self.domain_upper!r}]")
            return x
        x = float(x)
        if not (0.0 <= x <= self.domain_upper):
            raise DomainError(f"{self.label}: x={x!r} outside [0, {self.domain_upper!r}]")
        return x

    def __call__(self, x):
        x = self.check_point(x)
        y = self.f(x)
        if isinstance(x, np.ndarray):
            y = np.broadcast_to(np.asarray(y, dtype=float), x.shape)
        return _finite(y, self.label, x)

    def derivative(self, x: float) -> float:
        return derivative_at(self, x)

    def abs_derivative(self, x: float) -> float:
        return abs(derivative_at(self, x))

    def with_upper(self, domain_upper: float) -> "FunctionSpec":
        return FunctionSpec(self.f, domain_upper, self.df, self.label)


@dataclass(frozen=True)
class Interval:
    a: float
    b: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise DomainError(f"interval endpoints must be finite, got ({self.a}, {self.b})")
        if not (0.0 <= self.a < self.b):
            raise DomainError(f"interval requires 0 <= a < b, got ({self.a}, {self.b})")

    @property
    def length(self) -> float:
        return self.b - self.a

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.a + self.b)

    def check_within(self, spec: FunctionSpec, m: float = 1.0) -> None:
        """Reject the interval when ``b / m`` leaves the function's domain."""
        reach = self.b / m
        if reach > spec.domain_upper * (1.0 + 1e-15):
            raise DomainError(
                f"{spec.label}: b/m = {reach!r} exceeds domain_upper {spec.domain_upper!r}"
            )


@dataclass(frozen=True)
class MParam:
    m: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.m) and 0.0 < self.m <= 1.0):
            raise DomainError(f"m must lie in (0, 1], got {self.m!r}")

    def __float__(self) -> float:
        return self.m


@dataclass(frozen=True)
class ExponentPair:
    """Hölder conjugate exponents, ``1/p + 1/q = 1`` with ``p, q > 1``."""

    p: float
    q: float

    def __post_init__(self) -> None:
        if not (self.p > 1.0 and self.q > 1.0):
            raise DomainError(f"conjugate exponents must exceed 1, got p={self.p}, q={self.q}")
        if abs(1.0 / self.p + 1.0 / self.q - 1.0) > CONJUGATE_TOL:
            raise DomainError(f"1/p + 1/q != 1 for p={self.p}, q={self.q}")

    @classmethod
    def from_q(cls, q: float) -> "ExponentPair":
        if not q > 1.0:
            raise DomainError(f"a conjugate exponent needs q > 1, got {q}")
        return cls(p=q / (q - 1.0), q=float(q))

    @classmethod
    def from_p(cls, p: float) -> "ExponentPair":
        if not p > 1.0:
            raise DomainError(f"a conjugate exponent needs p > 1, got {p}")
        return cls(p=float(p), q=p / (p - 1.0))


def as_m(m: MParam | float) -> float:
    return m.m if isinstance(m, MParam) else MParam(float(m)).m


def fd_step(x: float) -> float:
    return max(FD_MIN_STEP, FD_REL_STEP * abs(x))


def derivative_at(spec: FunctionSpec, x: float) -> float:
    """``f'(x)``, analytic when available, else a second-order finite difference.

    The stencil is central in the interior and one-sided (forward or
    backward, three points) within one step of either domain end, so no
    evaluation ever leaves ``[0, domain_upper]``.
    """
    x = spec.check_point(x)
    if spec.df is not None:
        d = spec.df(x)
        if isinstance(x, np.ndarray):
            d = np.broadcast_to(np.asarray(d, dtype=float), x.shape)
        return _finite(d, f"{spec.label}'", x)
    if isinstance(x, np.ndarray):
        return _fd_array(spec, x)
    h = fd_step(x)
    lo, hi = 0.0, spec.domain_upper
    if x - h >= lo and x + h <= hi:
        d = (spec(x + h) - spec(x - h)) / (2.0 * h)
    elif x + 2.0 * h <= hi:
        d = (-3.0 * spec(x) + 4.0 * spec(x + h) - spec(x + 2.0 * h)) / (2.0 * h)
    elif x - 2.0 * h >= lo:
        d = (3.0 * spec(x) - 4.0 * spec(x - h) + spec(x - 2.0 * h)) / (2.0 * h)
    else:
        raise DomainError(f"{spec.label}: domain too short for a finite-difference stencil at {x!r}")
    return _finite(d, f"{spec.label}' [finite difference]", x)


def _fd_array(spec: FunctionSpec, x: np.ndarray) -> np.ndarray:
    h = np.maximum(FD_MIN_STEP, FD_REL_STEP * np.abs(x))
    hi = spec.domain_upper
    central = (x - h >= 0.0) & (x + h <= hi)
    forward = ~central & (x + 2.0 * h <= hi)
    backward = ~central & ~forward & (x - 2.0 * h >= 0.0)
    if not np.all(central | forward | backward):
        raise DomainError(f"{spec.label}: domain too short for a finite-difference stencil")
    f = lambda y: spec(np.clip(y, 0.0, hi))  # noqa: E731
    f0 = f(x)
    d_c = (f(x + h) - f(x - h)) / (2.0 * h)
    d_f = (-3.0 * f0 + 4.0 * f(x + h) - f(x + 2.0 * h)) / (2.0 * h)
    d_b = (3.0 * f0 - 4.0 * f(x - h) + f(x - 2.0 * h)) / (2.0 * h)
    d = np.where(central, d_c, np.where(forward, d_f, d_b))
    return _finite(d, f"{spec.label}' [finite difference]")


def integral_mean(spec: FunctionSpec, iv: Interval, tol: float = DEFAULT_TOL) -> float:
    """``(1/(b-a)) * integral of f over [a, b]``."""
    spec.check_point(iv.a)
    spec.check_point(iv.b)
    return integrate(spec, iv.a, iv.b, tol * iv.length).value / iv.length


def midpoint_gap(
    spec: FunctionSpec, iv: Interval, tol: float = DEFAULT_TOL, signed: bool = False
) -> float:
    """Distance between the integral mean and ``f((a+b)/2)``.

    With ``signed=True`` returns ``mean - f(mid)``, which is nonnegative for
    convex ``f``.
    """
    diff = integral_mean(spec, iv, tol) - spec(iv.midpoint)
    return diff if signed else abs(diff)


def trapezoid_gap(
    spec: FunctionSpec, iv: Interval, tol: float = DEFAULT_TOL, signed: bool = False
) -> float:
    """Distance between ``(f(a) + f(b))/2`` and the integral mean.

    With ``signed=True`` returns ``(f(a)+f(b))/2 - mean``, nonnegative for
    convex ``f``.
    """
    diff = 0.5 * (spec(iv.a) + spec(iv.b)) - integral_mean(spec, iv, tol)
    return diff if signed else abs(diff)
