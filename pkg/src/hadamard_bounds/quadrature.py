"""Adaptive composite Simpson quadrature.

The refinement is driven by an explicit stack that always pops the leftmost
pending panel, so the sequence of function evaluations (and therefore the
floating-point result) depends only on the inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import DomainError, MaxSubdivisionError, NonFiniteError

DEFAULT_TOL = 1e-10
MAX_PANELS = 2**20
# Panels are split at least this many times before the error test is trusted.
MIN_DEPTH = 2
_EPS = 2.220446049250313e-16


@dataclass(frozen=True)
class QuadResult:
    value: float
    error_estimate: float
    subdivisions: int

    def __float__(self) -> float:
        return self.value


def _checked(g: Callable[[float], float], x: float) -> float:
    y = float(g(x))
    if not math.isfinite(y):
        raise NonFiniteError(f"integrand is not finite at x={x!r}: {y!r}")
    return y


def _simpson(h: float, fa: float, fm: float, fb: float) -> float:
    return h / 6.0 * (fa + 4.0 * fm + fb)


def integrate(
    g: Callable[[float], float],
    a: float,
    b: float,
    tol: float = DEFAULT_TOL,
    max_panels: int = MAX_PANELS,
) -> QuadResult:
    """Integrate ``g`` over ``[a, b]`` to absolute tolerance ``tol``.

    Each panel compares the one-panel Simpson value with the two-half-panel
    value; a panel is accepted when ``|S2 - S1| <= 15 * tol_local`` and the
    Richardson-corrected value ``S2 + (S2 - S1) / 15`` is accumulated.  The
    local tolerance is proportional to panel width.  Requests below the
    floating-point resolution of the integrand are clamped to a roundoff
    floor of a few ulps of the panel value, otherwise large-magnitude
    integrands could never converge.
    """
    a = float(a)
    b = float(b)
    if not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError(f"integration limits must be finite, got [{a}, {b}]")
    if not a < b:
        raise DomainError(f"integration requires a < b, got a={a}, b={b}")
    if not tol > 0:
        raise DomainError(f"tolerance must be positive, got {tol}")

    width = b - a
    fa = _checked(g, a)
    fb = _checked(g, b)
    fm = _checked(g, 0.5 * (a + b))
    whole = _simpson(width, fa, fm, fb)

    # (left, width, f(left), f(mid), f(right), S_whole, depth); widths are
    # exact halves of the parent's so S_whole and its two halves agree on h
    stack = [(a, width, fa, fm, fb, whole, 0)]
    total = 0.0
    comp = 0.0  # Kahan compensation
    err = 0.0
    panels = 1

    while stack:
        lo, h, flo, fmid, fhi, s1, depth = stack.pop()
        half = 0.5 * h
        mid = lo + half
        fl = _checked(g, lo + 0.5 * half)
        fr = _checked(g, mid + 0.5 * half)
        left = _simpson(half, flo, fl, fmid)
        right = _simpson(half, fmid, fr, fhi)
        s2 = left + right
        diff = s2 - s1
        local_tol = tol * (h / width)
        floor = 8.0 * _EPS * (abs(left) + abs(right) + h * (abs(flo) + abs(fhi)))
        # a panel a few ulps wide cannot be refined further
        unresolved = half <= 4.0 * _EPS * (abs(lo) + abs(mid))
        if (depth >= MIN_DEPTH and abs(diff) <= 15.0 * max(local_tol, floor)) or unresolved:
            y = (s2 + diff / 15.0) - comp
            t = total + y
            comp = (t - total) - y
            total = t
            err += abs(diff) / 15.0
            continue
        panels += 1
        if panels > max_panels:
            raise MaxSubdivisionError(
                f"adaptive Simpson exceeded {max_panels} panels on [{a}, {b}] at tol={tol}"
            )
        # right half pushed first so the left half is refined first
        stack.append((mid, half, fmid, fr, fhi, right, depth + 1))
        stack.append((lo, half, flo, fl, fmid, left, depth + 1))

    return QuadResult(value=total, error_estimate=err, subdivisions=panels)
