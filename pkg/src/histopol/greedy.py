"""Greedy support selection from a large candidate pool of discs.

Approximate Fekete supports come from QR with column pivoting applied to the
transposed pool matrix (greedy volume maximization); discrete Leja supports
come from LU with row pivoting (greedy nested subdeterminants). Both operate
on measure-normalized basis integrals and inherit LAPACK's deterministic
first-index tie-breaking.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from histopol.basis import BasisSpec, basis_size
from histopol.geometry import CONTAINMENT_TOL, DiscSupport, Point2, SupportSet
from histopol.quadrature import integrate_basis_many

RANK_TOL = 1e-12


class PoolRankError(Exception):
    """The candidate pool does not span the polynomial space."""


@dataclass(frozen=True)
class CandidatePool:
    supports: tuple[DiscSupport, ...]
    matrix: np.ndarray  # (M, N) rows are measure-normalized basis integrals
    spec: BasisSpec

    def __post_init__(self):
        matrix = np.asarray(self.matrix, dtype=np.float64)
        n = basis_size(self.spec.degree)
        if matrix.shape != (len(self.supports), n):
            raise ValueError(
                f"pool matrix must be {len(self.supports)}x{n}, got {matrix.shape}"
            )
        if matrix.shape[0] < n:
            raise ValueError("pool must contain at least as many candidates as basis functions")
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "supports", tuple(self.supports))

    def __len__(self) -> int:
        return len(self.supports)


def build_pool(centers, radius: float, spec: BasisSpec) -> CandidatePool:
    """Assemble the normalized integral matrix for equal discs at the given centers."""
    pts = [c if isinstance(c, Point2) else Point2(c[0], c[1]) for c in centers]
    discs = tuple(DiscSupport(p, radius) for p in pts)
    for disc in discs:
        if not disc.contained_in_unit_disc():
            raise ValueError(
                f"candidate disc at ({disc.center.x}, {disc.center.y}) leaves the domain"
            )
    matrix = integrate_basis_many(discs, spec)
    matrix /= np.array([d.measure for d in discs])[:, None]
    return CandidatePool(supports=discs, matrix=matrix, spec=spec)


def uniform_disc_pool(
    n_grid: int, spec: BasisSpec, radius_factor: float = 0.4
) -> CandidatePool:
    """Pool of disjoint equal discs on a cell-centered n x n Cartesian grid
    clipped to the unit disc.

    The disc radius is radius_factor times the grid spacing; radius_factor
    below 0.5 guarantees pairwise disjointness.
    """
    spacing = 2.0 / n_grid
    radius = radius_factor * spacing
    coords = -1.0 + spacing * (np.arange(n_grid) + 0.5)
    xs, ys = np.meshgrid(coords, coords, indexing="ij")
    keep = np.hypot(xs, ys) + radius <= 1.0 - CONTAINMENT_TOL
    centers = np.column_stack([xs[keep], ys[keep]])
    return build_pool(centers, radius, spec)


def slice_pool(pool: CandidatePool, degree: int) -> CandidatePool:
    """Restrict a pool to a lower degree by taking a column prefix.

    Valid because the basis order is graded: the first basis_size(degree)
    columns of the pool matrix are exactly the lower-degree pool matrix.
    """
    if degree > pool.spec.degree:
        raise ValueError("can only slice a pool down to a lower degree")
    sub = BasisSpec(kind=pool.spec.kind, degree=degree)
    return CandidatePool(
        supports=pool.supports,
        matrix=pool.matrix[:, : basis_size(degree)],
        spec=sub,
    )


def approximate_fekete_indices(pool: CandidatePool) -> np.ndarray:
    """Pool indices selected by column-pivoted QR of the transposed matrix."""
    n = basis_size(pool.spec.degree)
    _, r, piv = scipy.linalg.qr(pool.matrix.T, mode="economic", pivoting=True)
    diag = np.abs(np.diag(r))
    if diag[n - 1] <= RANK_TOL * max(diag[0], 1e-300):
        raise PoolRankError("pool matrix is rank deficient; enlarge or diversify the pool")
    return piv[:n]


def approximate_fekete(pool: CandidatePool) -> SupportSet:
    """Supports greedily maximizing the normalized Vandermonde volume."""
    idx = approximate_fekete_indices(pool)
    return SupportSet(supports=tuple(pool.supports[i] for i in idx))


def discrete_leja_indices(pool: CandidatePool) -> np.ndarray:
    """Pool indices in Leja order from row-pivoted LU of the pool matrix."""
    n = basis_size(pool.spec.degree)
    with warnings.catch_warnings():
        # zero pivots surface as PoolRankError below
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(pool.matrix.copy())
    diag = np.abs(np.diag(lu)[:n])
    if diag.min() <= RANK_TOL * max(diag.max(), 1e-300):
        raise PoolRankError("pool matrix is rank deficient; enlarge or diversify the pool")
    perm = np.arange(len(pool))
    for i, p in enumerate(piv):
        perm[i], perm[p] = perm[p], perm[i]
    return perm[:n]


def discrete_leja(pool: CandidatePool) -> SupportSet:
    """Nested greedy support sequence; the support order is the Leja order."""
    idx = discrete_leja_indices(pool)
    return SupportSet(supports=tuple(pool.supports[i] for i in idx))


def extraction_to_json(support_set: SupportSet, order=None) -> str:
    """SupportSet JSON with an extra candidate-order field (Leja extractions)."""
    import json

    data = json.loads(support_set.to_json())
    if order is not None:
        data["order"] = [int(i) for i in order]
    return json.dumps(data)
