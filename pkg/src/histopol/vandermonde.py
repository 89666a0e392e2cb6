"""Assembly and factorization of the histopolation Vandermonde matrix.

Entry (i, j) is the integral of basis function j over support i; the
normalized variant divides each row by the support measure. Lagrange-dual
coefficients come from a pivoted solve against the transpose, never from an
explicit inverse.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from histopol.basis import BasisSpec, basis_size
from histopol.geometry import SupportSet
from histopol.quadrature import integrate_basis_many

DEFAULT_UNISOLVENCE_TOL = 1e-12


class UnisolvenceError(Exception):
    """The support set fails to determine a unique interpolant."""


@dataclass(frozen=True)
class VandermondeMatrix:
    values: np.ndarray  # (N, N)
    spec: BasisSpec
    normalized: bool
    support_measures: np.ndarray  # (N,)

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float64)
        measures = np.asarray(self.support_measures, dtype=np.float64).reshape(-1)
        n = basis_size(self.spec.degree)
        if values.shape != (n, n):
            raise ValueError(f"expected a {n}x{n} matrix, got {values.shape}")
        if measures.shape[0] != n:
            raise ValueError("one measure per support is required")
        if np.any(measures <= 0.0):
            raise ValueError("support measures must be positive")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "support_measures", measures)

    @property
    def size(self) -> int:
        return self.values.shape[0]


@dataclass(frozen=True)
class LagrangeCoeffs:
    """Row i holds the expansion of the i-th Lagrange-dual polynomial."""

    coeffs: np.ndarray  # (N, N)
    spec: BasisSpec
    residual: float


def assemble(
    support_set: SupportSet,
    spec: BasisSpec,
    normalized: bool = False,
    exactness: int | None = None,
) -> VandermondeMatrix:
    """Integrals of every basis function over every support, as a square matrix."""
    n = basis_size(spec.degree)
    if len(support_set) != n:
        raise ValueError(
            f"support count {len(support_set)} does not match basis size {n}"
        )
    values = integrate_basis_many(support_set.supports, spec, exactness=exactness)
    measures = support_set.measures()
    if normalized:
        values = values / measures[:, None]
    return VandermondeMatrix(
        values=values, spec=spec, normalized=normalized, support_measures=measures
    )


def condition_number(vmatrix) -> float:
    """2-norm condition number from the singular values.

    Accepts a VandermondeMatrix or any square array; numerically singular
    input reports +inf.
    """
    values = getattr(vmatrix, "values", vmatrix)
    sigma = scipy.linalg.svdvals(values)
    if sigma[-1] == 0.0 or not np.isfinite(sigma[-1]):
        return float("inf")
    return float(sigma[0] / sigma[-1])


def lagrange_coeffs(
    vmatrix: VandermondeMatrix, tol: float = DEFAULT_UNISOLVENCE_TOL
) -> LagrangeCoeffs:
    """Expansion coefficients of the Lagrange-dual basis via a pivoted solve.

    Solves V^T X = I so that row i of X^T = V^{-T} expands the polynomial
    dual to support i. For a normalized matrix the duals satisfy the
    measure-normalized duality relations instead.
    """
    n = vmatrix.size
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
            lu, piv = scipy.linalg.lu_factor(vmatrix.values.T)
    except scipy.linalg.LinAlgError as exc:
        raise UnisolvenceError(str(exc)) from exc
    diag = np.abs(np.diag(lu))
    if diag.min() <= tol * max(diag.max(), 1e-300):
        raise UnisolvenceError(
            f"Vandermonde matrix is singular to tolerance {tol} (unisolvence failure)"
        )
    coeffs = scipy.linalg.lu_solve((lu, piv), np.eye(n))
    residual = float(np.abs(vmatrix.values @ coeffs.T - np.eye(n)).max())
    return LagrangeCoeffs(coeffs=coeffs, spec=vmatrix.spec, residual=residual)


def _checked_lu(matrix: np.ndarray):
    try:
        with warnings.catch_warnings():
            # zero pivots surface as UnisolvenceError below
            warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
            lu, piv = scipy.linalg.lu_factor(matrix)
    except scipy.linalg.LinAlgError as exc:
        raise UnisolvenceError(str(exc)) from exc
    diag = np.abs(np.diag(lu))
    if diag.min() <= 1e-14 * max(diag.max(), 1e-300):
        raise UnisolvenceError("Vandermonde matrix is singular to working precision")
    return lu, piv


def solve_against(vmatrix: VandermondeMatrix, rhs: np.ndarray) -> np.ndarray:
    """Solve V^T X = rhs^T, i.e. return rhs @ V^{-1}, via pivoted LU."""
    lu, piv = _checked_lu(vmatrix.values.T)
    return scipy.linalg.lu_solve((lu, piv), rhs.T).T


def solve_linear(vmatrix: VandermondeMatrix, rhs: np.ndarray) -> np.ndarray:
    """Solve V x = rhs via pivoted LU."""
    lu, piv = _checked_lu(vmatrix.values)
    return scipy.linalg.lu_solve((lu, piv), rhs)


def is_unisolvent(
    support_set: SupportSet,
    spec: BasisSpec,
    tol: float = DEFAULT_UNISOLVENCE_TOL,
) -> bool:
    """True if the smallest singular value of the normalized matrix clears
    tol times the largest."""
    vmatrix = assemble(support_set, spec, normalized=True)
    sigma = scipy.linalg.svdvals(vmatrix.values)
    return bool(sigma[-1] > tol * sigma[0])


def export_csv(vmatrix: VandermondeMatrix, path) -> None:
    """Row-major CSV dump at full precision."""
    with open(path, "w") as fh:
        for row in vmatrix.values:
            fh.write(",".join(f"{v:.17e}" for v in row) + "\n")
