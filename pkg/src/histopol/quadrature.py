"""Quadrature on discs, exact for bivariate polynomials up to a given degree.

The rule is a polar product about the disc center: Gauss-Legendre nodes in
the radial direction (against the Jacobian factor) times equispaced angles.
ceil((degree+2)/2) radial nodes and degree+1 angles integrate every
polynomial of total degree <= degree exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from histopol import _kernels
from histopol.basis import BasisSpec, eval_basis_many
from histopol.geometry import DiscSupport, Point2


@dataclass(frozen=True)
class QuadRule:
    nodes: np.ndarray  # (n, 2)
    weights: np.ndarray  # (n,)
    exactness_degree: int

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=np.float64).reshape(-1, 2)
        weights = np.asarray(self.weights, dtype=np.float64).reshape(-1)
        if nodes.shape[0] != weights.shape[0]:
            raise ValueError("node and weight counts differ")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)


@lru_cache(maxsize=None)
def radial_rule(degree: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes/weights on [0, 1], enough for the rho-polynomial
    of a degree-`degree` integrand (one extra power from the Jacobian)."""
    n_rad = (degree + 2 + 1) // 2
    x, w = np.polynomial.legendre.leggauss(n_rad)
    return 0.5 * (x + 1.0), 0.5 * w


def disc_rule(center, radius: float, degree: int) -> QuadRule:
    """Product rule on B(center, radius) exact for total degree <= degree."""
    if radius <= 0.0:
        raise ValueError("radius must be positive")
    if degree < 0:
        raise ValueError("degree must be >= 0")
    cx, cy = (center.x, center.y) if hasattr(center, "x") else (center[0], center[1])
    rho, rho_w = radial_rule(degree)
    n_ang = degree + 1
    theta = 2.0 * np.pi * np.arange(n_ang) / n_ang
    xs = cx + radius * np.outer(rho, np.cos(theta))
    ys = cy + radius * np.outer(rho, np.sin(theta))
    weights = radius**2 * (2.0 * np.pi / n_ang) * np.outer(rho_w * rho, np.ones(n_ang))
    nodes = np.column_stack([xs.ravel(), ys.ravel()])
    return QuadRule(nodes=nodes, weights=weights.ravel(), exactness_degree=degree)


def integrate(rule: QuadRule, f) -> float:
    """Weighted sum of f over the rule's nodes.

    f must accept array arguments (x, y) elementwise; non-finite values at
    the nodes are an error.
    """
    values = np.asarray(f(rule.nodes[:, 0], rule.nodes[:, 1]), dtype=np.float64)
    if not np.all(np.isfinite(values)):
        raise ValueError("integrand produced non-finite values on the quadrature nodes")
    return float(rule.weights @ values)


def integrate_basis(
    support: DiscSupport, spec: BasisSpec, exactness: int | None = None
) -> np.ndarray:
    """Vector of basis-function integrals over one disc."""
    return integrate_basis_many([support], spec, exactness=exactness)[0]


def integrate_basis_many(
    supports, spec: BasisSpec, exactness: int | None = None
) -> np.ndarray:
    """(M, N) matrix of basis integrals over a batch of discs.

    One shared polar layout serves all discs, so the batch runs through the
    compiled kernel when it is available.
    """
    degree = spec.degree if exactness is None else max(exactness, spec.degree)
    supports = list(supports)
    centers = np.ascontiguousarray(
        [[d.center.x, d.center.y] for d in supports], dtype=np.float64
    ).reshape(-1, 2)
    radii = np.ascontiguousarray([d.radius for d in supports], dtype=np.float64)
    rho, rho_w = radial_rule(degree)
    n_ang = degree + 1
    return _kernels.disc_basis_integrals(
        _kernels.kind_code(spec.kind.value),
        spec.degree,
        centers,
        radii,
        np.ascontiguousarray(rho),
        np.ascontiguousarray(rho_w),
        n_ang,
    )


def integrate_over_support(support: DiscSupport, f, exactness: int) -> float:
    """Integral of a general integrand over one disc at the given exactness."""
    rule = disc_rule(support.center, support.radius, exactness)
    return integrate(rule, f)
