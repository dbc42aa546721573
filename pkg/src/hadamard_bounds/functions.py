"""Registry of built-in test functions with analytic derivatives.

Campaign configs refer to these by name; there is deliberately no
expression parser.
"""

from __future__ import annotations

import math
from typing import Any, Callable, Mapping

import numpy as np

from .core import FunctionSpec
from .errors import ConfigError


def _fmt(v: float) -> str:
    return repr(float(v)).rstrip("0").rstrip(".") if float(v) != int(v) else str(int(v))


def _pow(x, e: float):
    if isinstance(x, np.ndarray):
        with np.errstate(divide="ignore", invalid="ignore"):
            return np.power(x, e)
    try:
        return x**e
    except ZeroDivisionError:
        return math.inf


def _exp(x):
    return np.exp(x) if isinstance(x, np.ndarray) else math.exp(x)


def _const(x, value: float):
    return np.full(np.shape(x), value) if isinstance(x, np.ndarray) else value


def power(n: float, upper: float = 1.0) -> FunctionSpec:
    """``x**n`` (n may be fractional; negative n needs the domain to avoid 0)."""
    n = float(n)
    return FunctionSpec(
        f=lambda x: _pow(x, n),
        df=lambda x: n * _pow(x, n - 1.0),
        domain_upper=upper,
        label=f"x^{_fmt(n)}",
    )


def exponential(c: float = 1.0, upper: float = 1.0) -> FunctionSpec:
    c = float(c)
    return FunctionSpec(
        f=lambda x: _exp(c * x),
        df=lambda x: c * _exp(c * x),
        domain_upper=upper,
        label=f"exp({_fmt(c)}x)",
    )


def affine(alpha: float = 1.0, beta: float = 0.0, upper: float = 1.0) -> FunctionSpec:
    alpha, beta = float(alpha), float(beta)
    return FunctionSpec(
        f=lambda x: alpha * x + beta,
        df=lambda x: _const(x, alpha),
        domain_upper=upper,
        label=f"{_fmt(alpha)}x+{_fmt(beta)}",
    )


def constant(c: float = 0.0, upper: float = 1.0) -> FunctionSpec:
    return affine(0.0, c, upper)


def shifted_square(c: float = 0.5, upper: float = 1.0) -> FunctionSpec:
    c = float(c)
    return FunctionSpec(
        f=lambda x: (x - c) ** 2,
        df=lambda x: 2.0 * (x - c),
        domain_upper=upper,
        label=f"(x-{_fmt(c)})^2",
    )


def _sqrt(x):
    return np.sqrt(x) if isinstance(x, np.ndarray) else math.sqrt(x)


def _dsqrt(x):
    if isinstance(x, np.ndarray):
        with np.errstate(divide="ignore"):
            return 0.5 / np.sqrt(x)
    return 0.5 / math.sqrt(x) if x > 0 else math.inf


def square_root(upper: float = 1.0) -> FunctionSpec:
    # derivative is infinite at 0; only concavity-type checks should use it there
    return FunctionSpec(
        f=_sqrt,
        df=_dsqrt,
        domain_upper=upper,
        label="sqrt(x)",
    )


_FACTORIES: dict[str, tuple[Callable[..., FunctionSpec], tuple[str, ...]]] = {
    "power": (power, ("n",)),
    "exp": (exponential, ("c",)),
    "affine": (affine, ("alpha", "beta")),
    "constant": (constant, ("c",)),
    "shifted_square": (shifted_square, ("c",)),
    "sqrt": (square_root, ()),
}

BUILTIN_NAMES = tuple(sorted(_FACTORIES))


def builtin(entry: Mapping[str, Any], upper: float = 1.0) -> FunctionSpec:
    """Build a spec from a config entry such as ``{"name": "power", "n": 2}``."""
    name = entry.get("name")
    if name not in _FACTORIES:
        raise ConfigError(f"unknown built-in function {name!r}; choose from {', '.join(BUILTIN_NAMES)}")
    factory, params = _FACTORIES[name]
    extra = set(entry) - {"name", *params}
    if extra:
        raise ConfigError(f"function {name!r}: unexpected parameter(s) {sorted(extra)}")
    kwargs = {k: float(entry[k]) for k in params if k in entry}
    return factory(upper=upper, **kwargs)
