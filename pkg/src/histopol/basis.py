"""Total-degree bivariate polynomial bases (monomial and product-Chebyshev).

The index order is graded lexicographic: multi-indices (a, b) are sorted by
total degree a + b, ties broken by descending a. This order is nested: the
first ``basis_size(d')`` entries of a degree-d spec (d' <= d) are exactly
the degree-d' spec, which makes greedy column-prefix algorithms well defined.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple

import numpy as np

from histopol import _kernels


class BasisKind(str, Enum):
    MONOMIAL = "monomial"
    CHEBYSHEV = "chebyshev"


class MultiIndex(NamedTuple):
    a: int
    b: int

    @property
    def total_degree(self) -> int:
        return self.a + self.b


def basis_size(d: int) -> int:
    """Dimension of the space of bivariate polynomials of total degree <= d."""
    if d < 0:
        raise ValueError(f"degree must be >= 0, got {d}")
    return (d + 1) * (d + 2) // 2


def restricted_dim(d: int, variety_degree: int = 2, ambient_dim: int = 2) -> int:
    """Dimension of total-degree-d polynomials restricted to a degree-q variety.

    General formula: binom(d + n, n) - binom(d - q + n, n) with n the ambient
    dimension and q the degree of the defining polynomial. For circles in the
    plane (n = 2, q = 2) this reduces to 2d + 1.
    """
    if d < 0:
        raise ValueError(f"degree must be >= 0, got {d}")
    n, q = ambient_dim, variety_degree
    full = math.comb(d + n, n)
    drop = math.comb(d - q + n, n) if d - q + n >= n else 0
    return full - drop


def graded_indices(d: int) -> tuple[MultiIndex, ...]:
    """Multi-indices of total degree <= d in graded-lex order (a descending)."""
    return tuple(
        MultiIndex(a, t - a) for t in range(d + 1) for a in range(t, -1, -1)
    )


@dataclass(frozen=True)
class BasisSpec:
    """A fixed, ordered basis of P_d: monomials x^a y^b or products T_a(x) T_b(y)."""

    kind: BasisKind
    degree: int
    indices: tuple[MultiIndex, ...] = field(init=False, repr=False)

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError(f"degree must be >= 0, got {self.degree}")
        object.__setattr__(self, "kind", BasisKind(self.kind))
        object.__setattr__(self, "indices", graded_indices(self.degree))

    @property
    def size(self) -> int:
        return basis_size(self.degree)

    def position(self, index: MultiIndex) -> int:
        """Position of a multi-index in the graded-lex order."""
        a, b = index
        t = a + b
        return basis_size(t - 1) + (t - a) if t > 0 else 0

    def to_json(self) -> str:
        return json.dumps({"kind": self.kind.value, "degree": self.degree})

    @classmethod
    def from_json(cls, text: str) -> "BasisSpec":
        data = json.loads(text)
        return cls(kind=BasisKind(data["kind"]), degree=int(data["degree"]))


def eval_basis_many(spec: BasisSpec, points: np.ndarray) -> np.ndarray:
    """Evaluate all basis functions at many points.

    Parameters
    ----------
    spec : BasisSpec
    points : ndarray of shape (M, 2)

    Returns
    -------
    ndarray of shape (M, N) with entry (l, j) the j-th basis function at
    point l.
    """
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError(f"points must have shape (M, 2), got {pts.shape}")
    return _kernels.eval_basis_matrix(
        _kernels.kind_code(spec.kind.value),
        spec.degree,
        np.ascontiguousarray(pts[:, 0]),
        np.ascontiguousarray(pts[:, 1]),
    )


def eval_basis(spec: BasisSpec, point) -> np.ndarray:
    """Evaluate all basis functions at a single point, returned as a vector."""
    x, y = (point.x, point.y) if hasattr(point, "x") else (point[0], point[1])
    if not (np.isfinite(x) and np.isfinite(y)):
        raise ValueError(f"point must be finite, got ({x}, {y})")
    return eval_basis_many(spec, np.array([[x, y]]))[0]
