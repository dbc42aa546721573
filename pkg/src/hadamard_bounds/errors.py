"""Exception hierarchy shared by every module in the package."""

from __future__ import annotations


class HadamardError(Exception):
    """Base class for all package errors."""


class DomainError(HadamardError, ValueError):
    """A point, interval or parameter lies outside its admissible range."""


class NonFiniteError(HadamardError, ArithmeticError):
    """An evaluator returned nan or inf."""


class MaxSubdivisionError(HadamardError, RuntimeError):
    """Adaptive quadrature exhausted its panel budget."""


class PreconditionError(HadamardError):
    """A certified hypothesis required by a bound did not hold."""


class ConfigError(HadamardError, ValueError):
    """A campaign configuration failed validation."""
