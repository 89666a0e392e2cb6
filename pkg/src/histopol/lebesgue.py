"""Lebesgue-constant estimators for diffused (integral) interpolation.

Two discretizations of the stability constant: the "short" form evaluates
the measure-weighted Lagrange-dual sum on a large point grid, the "long"
form probes with a large family of small discs (integrals instead of point
values). Both reduce to the max row sum of W V^{-1} K for the appropriate
sample matrix W; the normalized Vandermonde matrix absorbs the measure
diagonal K, which is how the computation is organized here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from histopol.basis import BasisSpec, basis_size, eval_basis_many
from histopol.geometry import (
    AffineMap2,
    DiscSupport,
    Point2,
    SupportSet,
    apply_affine,
)
from histopol.quadrature import integrate_basis_many
from histopol.vandermonde import (
    UnisolvenceError,
    assemble,
    solve_against,
)


class EstimatorMethod(str, Enum):
    SHORT = "short"
    LONG = "long"
    NODAL = "nodal"


@dataclass(frozen=True)
class EvalGrid:
    points: np.ndarray  # (M, 2)
    description: str = ""

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=np.float64).reshape(-1, 2)
        norms = np.hypot(pts[:, 0], pts[:, 1])
        if norms.size and norms.max() > 1.0 + 1e-12:
            raise ValueError("grid points must lie in the closed unit disc")
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return self.points.shape[0]


@dataclass(frozen=True)
class ProbeFamily:
    probes: tuple[DiscSupport, ...]

    def __post_init__(self):
        object.__setattr__(self, "probes", tuple(self.probes))
        for disc in self.probes:
            if not disc.contained_in_unit_disc():
                raise ValueError("probe discs must stay inside the unit disc")

    def __len__(self) -> int:
        return len(self.probes)


@dataclass(frozen=True)
class LebesgueEstimate:
    value: float
    method: EstimatorMethod
    grid_size: int
    degree: int


def default_eval_grid(n_radial: int = 60, n_angular: int = 120) -> EvalGrid:
    """Polar product grid (plus the origin) covering the closed unit disc."""
    radii = np.arange(1, n_radial + 1) / n_radial
    theta = 2.0 * np.pi * np.arange(n_angular) / n_angular
    xs = np.outer(radii, np.cos(theta)).ravel()
    ys = np.outer(radii, np.sin(theta)).ravel()
    pts = np.concatenate([[[0.0, 0.0]], np.column_stack([xs, ys])])
    return EvalGrid(points=pts, description=f"polar {n_radial}x{n_angular} plus origin")


def default_probe_family(
    n_radial: int = 40, n_angular: int = 80, radius: float = 0.01
) -> ProbeFamily:
    """Small probe discs on a polar grid, shrunk near the boundary so every
    probe stays inside the domain."""
    edge = 1.0 - 1e-3
    probes = [DiscSupport(Point2(0.0, 0.0), radius)]
    for i in range(1, n_radial + 1):
        r_c = edge * i / n_radial
        r_probe = min(radius, 1.0 - r_c)
        for k in range(n_angular):
            theta = 2.0 * math.pi * k / n_angular
            probes.append(
                DiscSupport(Point2(r_c * math.cos(theta), r_c * math.sin(theta)), r_probe)
            )
    return ProbeFamily(probes=tuple(probes))


def probes_at(points: np.ndarray, radius: float) -> ProbeFamily:
    """Probe discs of one radius centered at the given points, shrunk where
    the boundary requires it."""
    probes = []
    for x, y in np.asarray(points, dtype=np.float64).reshape(-1, 2):
        r_probe = min(radius, 1.0 - math.hypot(x, y))
        if r_probe <= 0.0:
            raise ValueError(f"no room for a probe at ({x}, {y})")
        probes.append(DiscSupport(Point2(x, y), r_probe))
    return ProbeFamily(probes=tuple(probes))


def _max_abs_row_sum(matrix: np.ndarray) -> float:
    return float(np.abs(matrix).sum(axis=1).max())


def lebesgue_short(
    support_set: SupportSet, spec: BasisSpec, grid: EvalGrid
) -> LebesgueEstimate:
    """Grid estimate: max over grid points of the measure-weighted sum of
    absolute Lagrange-dual values."""
    n = basis_size(spec.degree)
    if len(grid) < n:
        raise ValueError(f"grid has {len(grid)} points, need at least {n}")
    vmatrix = assemble(support_set, spec, normalized=True)
    sample = eval_basis_many(spec, grid.points)
    value = _max_abs_row_sum(solve_against(vmatrix, sample))
    return LebesgueEstimate(
        value=value, method=EstimatorMethod.SHORT, grid_size=len(grid), degree=spec.degree
    )


def lebesgue_long(
    support_set: SupportSet, spec: BasisSpec, probes: ProbeFamily
) -> LebesgueEstimate:
    """Probe estimate: like the grid estimate but sampling measure-averaged
    integrals over small probe discs."""
    n = basis_size(spec.degree)
    if len(probes) < n:
        raise ValueError(f"probe family has {len(probes)} discs, need at least {n}")
    vmatrix = assemble(support_set, spec, normalized=True)
    sample = integrate_basis_many(probes.probes, spec)
    sample /= np.array([p.measure for p in probes.probes])[:, None]
    value = _max_abs_row_sum(solve_against(vmatrix, sample))
    return LebesgueEstimate(
        value=value, method=EstimatorMethod.LONG, grid_size=len(probes), degree=spec.degree
    )


def nodal_lebesgue(
    points, spec: BasisSpec, grid: EvalGrid
) -> LebesgueEstimate:
    """Classical nodal Lebesgue constant on the same grid, for comparison."""
    pts = np.asarray(
        [[p.x, p.y] if isinstance(p, Point2) else p for p in points], dtype=np.float64
    ).reshape(-1, 2)
    n = basis_size(spec.degree)
    if pts.shape[0] != n:
        raise ValueError(f"need exactly {n} nodes, got {pts.shape[0]}")
    if len(grid) < n:
        raise ValueError(f"grid has {len(grid)} points, need at least {n}")
    vnodal = eval_basis_many(spec, pts)
    sigma = np.linalg.svd(vnodal, compute_uv=False)
    if sigma[-1] <= 1e-14 * sigma[0]:
        raise UnisolvenceError("nodal interpolation matrix is singular to tolerance")
    sample = eval_basis_many(spec, grid.points)
    value = _max_abs_row_sum(np.linalg.solve(vnodal.T, sample.T).T)
    return LebesgueEstimate(
        value=value, method=EstimatorMethod.NODAL, grid_size=len(grid), degree=spec.degree
    )


def invariance_check(
    support_set: SupportSet,
    spec: BasisSpec,
    affine: AffineMap2,
    grid: EvalGrid,
) -> tuple[LebesgueEstimate, LebesgueEstimate]:
    """Estimates on the original configuration and on its similarity image
    (supports and grid mapped together)."""
    original = lebesgue_short(support_set, spec, grid)
    mapped_set = apply_affine(support_set, affine)
    mapped_grid = EvalGrid(points=affine.apply(grid.points), description=f"mapped {grid.description}")
    mapped = lebesgue_short(mapped_set, spec, mapped_grid)
    return original, mapped
