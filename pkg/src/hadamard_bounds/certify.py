"""Sampled certification of convexity-type hypotheses.

Every check evaluates a defining inequality on a uniform grid and keeps the
single worst violation.  A ``pass`` is numerical evidence on that grid, not a
proof.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .core import Interval, MParam, as_m
from .errors import DomainError, HadamardError, NonFiniteError

DEFAULT_GRID = 33
DEFAULT_TOL = 1e-9

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Certificate:
    status: str
    worst_violation: float
    witness: Optional[tuple[float, ...]]
    samples: int
    tolerance: float
    predicate: str = ""
    note: str = "sampled evidence on a finite grid, not a proof"

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def summary(self) -> str:
        w = "" if self.witness is None else " at " + ",".join(f"{v:.6g}" for v in self.witness)
        return f"{self.predicate}:{self.status} (worst={self.worst_violation:.3e}{w}, n={self.samples})"


def _evaluate(g: Callable[[float], float], points: np.ndarray) -> np.ndarray:
    """Evaluate ``g`` on an array; failures and non-finite values become nan.

    ``g`` is first tried on the whole array at once; evaluators that reject
    arrays (or fail somewhere) are retried point by point.
    """
    points = np.asarray(points, dtype=float)
    try:
        with np.errstate(all="ignore"), warnings.catch_warnings():
            # scalar-only callables handed a size-1 array must take the slow path
            warnings.simplefilter("error", DeprecationWarning)
            y = np.asarray(g(points), dtype=float)
        y = np.broadcast_to(y, points.shape)
        return np.where(np.isfinite(y), y, np.nan)
    except (HadamardError, ArithmeticError, ValueError, TypeError, DeprecationWarning):
        pass
    out = np.empty(points.size, dtype=float)
    for i, x in enumerate(points.ravel().tolist()):
        try:
            y = float(g(x))
        except (HadamardError, ArithmeticError, ValueError):
            y = math.nan
        out[i] = y if math.isfinite(y) else math.nan
    return out.reshape(points.shape)


def _finish(
    predicate: str,
    violation: np.ndarray,
    coords: tuple[np.ndarray, ...],
    tol: float,
) -> Certificate:
    violation = np.asarray(violation, dtype=float)
    samples = violation.size
    bad = np.isnan(violation)
    if bad.all():
        raise NonFiniteError(f"{predicate}: every sampled evaluation failed")
    flat = np.where(bad, -np.inf, violation).ravel()
    idx = int(np.argmax(flat))
    worst = float(flat[idx])
    if worst > tol:
        witness = tuple(float(c.ravel()[idx]) for c in coords)
        return Certificate(FAIL, worst, witness, samples, tol, predicate)
    status = INCONCLUSIVE if bad.any() else PASS
    return Certificate(status, worst, None, samples, tol, predicate)


def _m_convexity_violation(
    g: Callable[[float], float], m: float, lo: float, hi: float, grid_n: int, sign: float,
    relative: bool = False,
):
    nodes = np.linspace(lo, hi, grid_n)
    ts = np.linspace(0.0, 1.0, grid_n)
    X, Y, T = np.meshgrid(nodes, nodes, ts, indexing="ij")
    g_nodes = _evaluate(g, nodes)
    gX = g_nodes[:, None, None]
    gY = g_nodes[None, :, None]
    P = T * X + m * (1.0 - T) * Y
    lhs = _evaluate(g, P)
    rhs = T * gX + m * (1.0 - T) * gY
    viol = sign * (lhs - rhs)
    if relative:
        viol = viol / (1.0 + np.abs(lhs) + T * np.abs(gX) + m * (1.0 - T) * np.abs(gY))
    return viol, (X, Y, T)


def _check_grid(grid_n: int) -> None:
    if int(grid_n) != grid_n or grid_n < 3:
        raise DomainError(f"grid_n must be an integer >= 3, got {grid_n!r}")


def certify_m_convex(
    g: Callable[[float], float],
    m: MParam | float,
    upper: float,
    grid_n: int = DEFAULT_GRID,
    tol: float = DEFAULT_TOL,
    *,
    lower: float = 0.0,
    require_nonpositive_origin: bool = False,
    relative: bool = False,
) -> Certificate:
    """Check ``g(t x + m(1-t) y) <= t g(x) + m(1-t) g(y)`` on a ``grid_n**3`` grid.

    ``x`` and ``y`` range over ``[lower, upper]`` (``lower`` is 0 for the
    classical definition) and ``t`` over ``[0, 1]``.  With
    ``require_nonpositive_origin`` the membership condition ``g(0) <= 0`` is
    checked as well; its violation is reported with witness ``(0, 0, 0)``.

    With ``relative=True`` each violation is divided by
    ``1 + |lhs| + t|g(x)| + m(1-t)|g(y)|`` before comparison with ``tol``,
    which keeps one tolerance meaningful for fast-growing ``g``.
    """
    m = as_m(m)
    if not upper > lower >= 0.0:
        raise DomainError(f"need 0 <= lower < upper, got lower={lower}, upper={upper}")
    _check_grid(grid_n)
    viol, coords = _m_convexity_violation(g, m, lower, upper, int(grid_n), 1.0, relative)
    cert = _finish(f"{_mlabel(m)}-convex", viol, coords, tol)
    if require_nonpositive_origin:
        origin = _finish("g(0)<=0", _evaluate(g, np.array([0.0])), (np.zeros(1),) * 3, tol)
        cert = combine(cert, origin, predicate=f"{_mlabel(m)}-convex&g(0)<=0")
    return cert


def certify_m_concave(
    g: Callable[[float], float],
    m: MParam | float,
    upper: float,
    grid_n: int = DEFAULT_GRID,
    tol: float = DEFAULT_TOL,
    *,
    lower: float = 0.0,
    relative: bool = False,
) -> Certificate:
    """Reversed m-convexity inequality (``-g`` is m-convex)."""
    m = as_m(m)
    if not upper > lower >= 0.0:
        raise DomainError(f"need 0 <= lower < upper, got lower={lower}, upper={upper}")
    _check_grid(grid_n)
    viol, coords = _m_convexity_violation(g, m, lower, upper, int(grid_n), -1.0, relative)
    return _finish(f"{_mlabel(m)}-concave", viol, coords, tol)


def certify_convex(
    f: Callable[[float], float], iv: Interval, grid_n: int = DEFAULT_GRID, tol: float = DEFAULT_TOL,
    *, relative: bool = False,
) -> Certificate:
    cert = certify_m_convex(f, 1.0, iv.b, grid_n, tol, lower=iv.a, relative=relative)
    return _renamed(cert, "convex")


def certify_nonneg(
    f: Callable[[float], float], iv: Interval, grid_n: int = DEFAULT_GRID, tol: float = DEFAULT_TOL
) -> Certificate:
    _check_grid(grid_n)
    xs = np.linspace(iv.a, iv.b, int(grid_n))
    return _finish("nonneg", -_evaluate(f, xs), (xs,), tol)


def certify_concave_nonneg(
    f: Callable[[float], float], iv: Interval, grid_n: int = DEFAULT_GRID, tol: float = DEFAULT_TOL,
    *, relative: bool = False,
) -> Certificate:
    """Concavity on ``[a, b]`` together with ``f >= -tol`` at every node."""
    concave = _renamed(
        certify_m_concave(f, 1.0, iv.b, grid_n, tol, lower=iv.a, relative=relative), "concave"
    )
    return combine(concave, certify_nonneg(f, iv, grid_n, tol), predicate="concave&nonneg")


def certify_thunsdorff(
    f: Callable[[float], float], iv: Interval, grid_n: int = DEFAULT_GRID, tol: float = DEFAULT_TOL,
    *, relative: bool = False,
) -> Certificate:
    """Convex, nonnegative, and anchored at zero on the left end."""
    anchor = _evaluate(f, np.array([iv.a]))
    anchored = _finish("f(a)=0", np.abs(anchor), (np.array([iv.a]),), tol)
    return combine(
        certify_convex(f, iv, grid_n, tol, relative=relative),
        certify_nonneg(f, iv, grid_n, tol),
        anchored,
        predicate="convex&nonneg&f(a)=0",
    )


def certify_monotone(
    g: Callable[[float], float],
    iv: Interval,
    increasing: bool = True,
    grid_n: int = DEFAULT_GRID,
    tol: float = DEFAULT_TOL,
) -> Certificate:
    """Consecutive-node differences of ``g`` never go the wrong way by more than ``tol``."""
    _check_grid(grid_n)
    xs = np.linspace(iv.a, iv.b, int(grid_n))
    ys = _evaluate(g, xs)
    step = np.diff(ys)
    viol = -step if increasing else step
    return _finish("increasing" if increasing else "decreasing", viol, (xs[:-1],), tol)


def certify_zero_at(
    g: Callable[[float], float], points: tuple[float, ...], tol: float = DEFAULT_TOL
) -> Certificate:
    xs = np.asarray(points, dtype=float)
    return _finish("vanishes", np.abs(_evaluate(g, xs)), (xs,), tol)


_RANK = {PASS: 0, INCONCLUSIVE: 1, FAIL: 2}


def combine(*certs: Certificate, predicate: str | None = None) -> Certificate:
    """Conjunction of certificates: the worst status wins, the worst witness is kept."""
    if not certs:
        raise ValueError("combine() needs at least one certificate")
    status = max((c.status for c in certs), key=_RANK.__getitem__)
    failing = [c for c in certs if c.status == FAIL]
    pool = failing or list(certs)
    worst = max(pool, key=lambda c: c.worst_violation)
    return Certificate(
        status=status,
        worst_violation=max(c.worst_violation for c in certs),
        witness=worst.witness if status == FAIL else None,
        samples=sum(c.samples for c in certs),
        tolerance=max(c.tolerance for c in certs),
        predicate=predicate or "&".join(c.predicate for c in certs),
    )


def _renamed(cert: Certificate, predicate: str) -> Certificate:
    return Certificate(
        cert.status, cert.worst_violation, cert.witness, cert.samples, cert.tolerance, predicate
    )


def _mlabel(m: float) -> str:
    return f"m={m:g}"
