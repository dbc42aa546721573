"""Numerical check of the kernel identity behind the midpoint-gap bounds.

    f(c) - mean(f) = (b-a)/4 * [ int_0^1 t f'(t c + (1-t) a) dt
                               + int_0^1 (t-1) f'(t b + (1-t) c) dt ],   c = (a+b)/2
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import FunctionSpec, Interval, derivative_at, integral_mean
from .quadrature import DEFAULT_TOL, integrate


@dataclass(frozen=True)
class IdentitySides:
    lhs: float
    rhs: float
    left_kernel: float
    right_kernel: float

    @property
    def residual(self) -> float:
        return abs(self.lhs - self.rhs)


def _fprime(spec: FunctionSpec, x: float, a: float, b: float) -> float:
    # convex combinations can overshoot [a, b] by an ulp
    return derivative_at(spec, min(max(x, a), b))


def lemma1_sides(spec: FunctionSpec, iv: Interval, tol: float = DEFAULT_TOL) -> IdentitySides:
    a, b, c = iv.a, iv.b, iv.midpoint
    lhs = spec(c) - integral_mean(spec, iv, tol)
    # the two kernels are integrated separately so a failure points at one of them
    kernel_tol = tol / max(iv.length, 1.0)
    left = integrate(lambda t: t * _fprime(spec, t * c + (1.0 - t) * a, a, b), 0.0, 1.0, kernel_tol)
    right = integrate(
        lambda t: (t - 1.0) * _fprime(spec, t * b + (1.0 - t) * c, a, b), 0.0, 1.0, kernel_tol
    )
    rhs = iv.length / 4.0 * (left.value + right.value)
    return IdentitySides(lhs, rhs, left.value, right.value)


def lemma1_residual(spec: FunctionSpec, iv: Interval, tol: float = DEFAULT_TOL) -> float:
    """``|LHS - RHS|`` of the identity, both sides by quadrature at ``tol``."""
    return lemma1_sides(spec, iv, tol).residual
