"""Polynomial histopolation on disc supports in the plane.

Interpolation from integral (diffused) data: unisolvent support
construction, Lagrange-dual recovery through the Vandermonde matrix,
Lebesgue-constant estimation, and greedy Fekete/Leja support extraction,
on the closed unit disc.
"""

__version__ = "0.1.0"

from histopol.basis import BasisKind, BasisSpec, MultiIndex, basis_size, restricted_dim
from histopol.geometry import (
    AffineMap2,
    DiscSupport,
    Domain,
    OrbitSchedule,
    Point2,
    SupportSet,
    apply_affine,
    bojanov_xu_points,
    default_orbit_schedule,
    halton_points,
    orbit_supports,
    translated_supports,
)
from histopol.greedy import (
    CandidatePool,
    PoolRankError,
    approximate_fekete,
    build_pool,
    discrete_leja,
    uniform_disc_pool,
)
from histopol.interp import (
    Integrand,
    PolyInterpolant,
    builtin_integrands,
    eval_interpolant,
    project,
    sup_error,
)
from histopol.lebesgue import (
    EvalGrid,
    LebesgueEstimate,
    ProbeFamily,
    default_eval_grid,
    default_probe_family,
    invariance_check,
    lebesgue_long,
    lebesgue_short,
    nodal_lebesgue,
)
from histopol.quadrature import QuadRule, disc_rule, integrate, integrate_basis
from histopol.vandermonde import (
    LagrangeCoeffs,
    UnisolvenceError,
    VandermondeMatrix,
    assemble,
    condition_number,
    is_unisolvent,
    lagrange_coeffs,
)

__all__ = [
    "AffineMap2",
    "BasisKind",
    "BasisSpec",
    "CandidatePool",
    "DiscSupport",
    "Domain",
    "EvalGrid",
    "Integrand",
    "LagrangeCoeffs",
    "LebesgueEstimate",
    "MultiIndex",
    "OrbitSchedule",
    "Point2",
    "PolyInterpolant",
    "PoolRankError",
    "ProbeFamily",
    "QuadRule",
    "SupportSet",
    "UnisolvenceError",
    "VandermondeMatrix",
    "apply_affine",
    "approximate_fekete",
    "assemble",
    "basis_size",
    "bojanov_xu_points",
    "build_pool",
    "builtin_integrands",
    "condition_number",
    "default_eval_grid",
    "default_orbit_schedule",
    "default_probe_family",
    "disc_rule",
    "discrete_leja",
    "eval_interpolant",
    "halton_points",
    "integrate",
    "integrate_basis",
    "invariance_check",
    "is_unisolvent",
    "lagrange_coeffs",
    "lebesgue_long",
    "lebesgue_short",
    "nodal_lebesgue",
    "orbit_supports",
    "project",
    "restricted_dim",
    "sup_error",
    "translated_supports",
    "uniform_disc_pool",
]
