"""Hadamard-type midpoint-gap bounds for differentiable functions whose
derivative magnitude is m-convex, with sampled hypothesis certification,
the supporting kernel identity, and special-means applications.
"""

from .bounds import (
    BoundSet,
    Direction,
    InequalityResult,
    SandwichResult,
    bakula_midpoint_bound,
    classical_trapezoid_bound,
    dragomir_sandwich,
    favard_inequality,
    pearce_pecaric_bounds,
    product_lower_bound,
    specialize_m1,
    t_bounds,
    u_bounds,
    v_bounds,
)
from .certify import Certificate, certify_concave_nonneg, certify_m_convex, certify_thunsdorff
from .core import (
    ExponentPair,
    FunctionSpec,
    Interval,
    MParam,
    derivative_at,
    midpoint_gap,
    trapezoid_gap,
)
from .errors import (
    ConfigError,
    DomainError,
    MaxSubdivisionError,
    NonFiniteError,
    PreconditionError,
)
from .identity import lemma1_residual
from .means import MeansTriple, arithmetic_mean, logarithmic_mean, p_log_mean, prop1_bounds, prop2_bounds
from .quadrature import QuadResult, integrate

__version__ = "0.1.0"
