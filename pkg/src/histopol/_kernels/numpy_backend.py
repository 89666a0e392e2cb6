"""Pure-numpy implementations of the hot kernels.

These are the reference implementations; the Cython module in this package
mirrors their signatures exactly. Basis functions are indexed in graded-lex
order (total degree ascending, first exponent descending within a degree).
"""

from __future__ import annotations

import numpy as np

MONOMIAL = 0
CHEBYSHEV = 1

# Cap on per-chunk scratch memory in disc_basis_integrals (float64 entries).
_CHUNK_ENTRIES = 8_000_000


def kind_code(kind: str) -> int:
    if kind == "monomial":
        return MONOMIAL
    if kind == "chebyshev":
        return CHEBYSHEV
    raise ValueError(f"unknown basis kind {kind!r}")


def exponent_arrays(degree: int) -> tuple[np.ndarray, np.ndarray]:
    """Graded-lex exponent pairs (a descending within each total degree)."""
    a = np.concatenate([np.arange(t, -1, -1) for t in range(degree + 1)])
    b = np.concatenate([np.arange(0, t + 1) for t in range(degree + 1)])
    return a, b


def _1d_table(kind: int, degree: int, x: np.ndarray) -> np.ndarray:
    """Table of x^k (monomial) or T_k(x) (Chebyshev) for k = 0..degree."""
    n = x.shape[0]
    table = np.empty((n, degree + 1))
    table[:, 0] = 1.0
    if degree == 0:
        return table
    table[:, 1] = x
    if kind == MONOMIAL:
        for k in range(2, degree + 1):
            np.multiply(table[:, k - 1], x, out=table[:, k])
    else:
        two_x = 2.0 * x
        for k in range(2, degree + 1):
            np.subtract(two_x * table[:, k - 1], table[:, k - 2], out=table[:, k])
    return table


def eval_basis_matrix(kind: int, degree: int, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Evaluate the full graded basis at points (x[i], y[i]).

    Returns an (n, N) matrix, N = (degree+1)(degree+2)/2.
    """
    ax, by = exponent_arrays(degree)
    tx = _1d_table(kind, degree, np.asarray(x, dtype=np.float64))
    ty = _1d_table(kind, degree, np.asarray(y, dtype=np.float64))
    return tx[:, ax] * ty[:, by]


def disc_basis_integrals(
    kind: int,
    degree: int,
    centers: np.ndarray,
    radii: np.ndarray,
    rho: np.ndarray,
    rho_w: np.ndarray,
    n_ang: int,
) -> np.ndarray:
    """Integrals of every basis function over a batch of discs.

    The quadrature is a polar product rule shared by all discs: radial nodes
    ``rho`` with plain Gauss weights ``rho_w`` on [0, 1] (the rho Jacobian
    factor is applied here, not baked into the weights) and ``n_ang``
    equispaced angles. Entry (m, j) approximates the integral of basis
    function j over the disc of center ``centers[m]`` and radius
    ``radii[m]``; exact for polynomials within the rule's degree.
    """
    centers = np.asarray(centers, dtype=np.float64)
    radii = np.asarray(radii, dtype=np.float64)
    m_discs = centers.shape[0]
    n_basis = (degree + 1) * (degree + 2) // 2

    theta = 2.0 * np.pi * np.arange(n_ang) / n_ang
    # Local (unit-disc) node layout and weights, shape (n_rad * n_ang,).
    lx = np.outer(rho, np.cos(theta)).ravel()
    ly = np.outer(rho, np.sin(theta)).ravel()
    wq = np.outer(rho_w * rho, np.full(n_ang, 2.0 * np.pi / n_ang)).ravel()

    out = np.empty((m_discs, n_basis))
    nq = lx.shape[0]
    chunk = max(1, _CHUNK_ENTRIES // max(1, nq * n_basis))
    for start in range(0, m_discs, chunk):
        stop = min(start + chunk, m_discs)
        r = radii[start:stop, None]
        xs = (centers[start:stop, 0, None] + r * lx).ravel()
        ys = (centers[start:stop, 1, None] + r * ly).ravel()
        vals = eval_basis_matrix(kind, degree, xs, ys)
        vals = vals.reshape(stop - start, nq, n_basis)
        out[start:stop] = np.einsum("q,mqj->mj", wq, vals)
        out[start:stop] *= radii[start:stop, None] ** 2
    return out
