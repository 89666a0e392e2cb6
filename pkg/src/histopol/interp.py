"""The histopolation projector: integral data in, polynomial out.

The interpolant of f matches the integral of f over every support. Its
coefficient vector solves V c = data, with V the (unnormalized) Vandermonde
matrix; data integrals of non-polynomial integrands use an over-resolved
quadrature (default exactness 2*degree + 20).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from histopol.basis import BasisSpec, basis_size, eval_basis_many
from histopol.geometry import SupportSet
from histopol.lebesgue import EvalGrid
from histopol.quadrature import disc_rule, integrate
from histopol.vandermonde import assemble, solve_linear


@dataclass(frozen=True)
class Integrand:
    fn: object  # callable (x, y) -> value, elementwise on arrays
    name: str

    def __call__(self, x, y):
        return self.fn(x, y)


@dataclass(frozen=True)
class PolyInterpolant:
    spec: BasisSpec
    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = np.asarray(self.coeffs, dtype=np.float64).reshape(-1)
        if coeffs.shape[0] != basis_size(self.spec.degree):
            raise ValueError("coefficient count does not match the basis size")
        object.__setattr__(self, "coeffs", coeffs)


def default_data_exactness(degree: int) -> int:
    return 2 * degree + 20


def support_data(f, support_set: SupportSet, exactness: int) -> np.ndarray:
    """Integrals of f over each support at the stated quadrature exactness."""
    data = np.empty(len(support_set))
    for i, disc in enumerate(support_set.supports):
        rule = disc_rule(disc.center, disc.radius, exactness)
        data[i] = integrate(rule, f)
    return data


def project(
    f,
    support_set: SupportSet,
    spec: BasisSpec,
    data_exactness: int | None = None,
) -> PolyInterpolant:
    """Polynomial of total degree spec.degree matching the integrals of f.

    ``data_exactness`` controls only the quadrature applied to f; the
    Vandermonde assembly is always exact for the basis degree.
    """
    exactness = default_data_exactness(spec.degree) if data_exactness is None else data_exactness
    if exactness < spec.degree:
        raise ValueError("data exactness must be at least the basis degree")
    vmatrix = assemble(support_set, spec)
    data = support_data(f, support_set, exactness)
    if not np.all(np.isfinite(data)):
        raise ValueError("integral data is not finite")
    coeffs = solve_linear(vmatrix, data)
    return PolyInterpolant(spec=spec, coeffs=coeffs)


def eval_interpolant_many(p: PolyInterpolant, points: np.ndarray) -> np.ndarray:
    return eval_basis_many(p.spec, points) @ p.coeffs


def eval_interpolant(p: PolyInterpolant, point) -> float:
    x, y = (point.x, point.y) if hasattr(point, "x") else (point[0], point[1])
    return float(eval_interpolant_many(p, np.array([[x, y]]))[0])


def sup_error(f, p: PolyInterpolant, grid: EvalGrid) -> float:
    """Max absolute deviation between f and the interpolant over the grid."""
    xs, ys = grid.points[:, 0], grid.points[:, 1]
    exact = np.asarray(f(xs, ys), dtype=np.float64)
    return float(np.abs(exact - eval_interpolant_many(p, grid.points)).max())


def builtin_integrands() -> list[Integrand]:
    """The two standard test functions: an entire oscillation and a
    Runge-type bump centered at the origin."""

    def f1(x, y):
        return np.exp(x) * np.sin(x + y)

    def f2(x, y):
        return 1.0 / (25.0 * (np.asarray(x) ** 2 + np.asarray(y) ** 2) + 1.0)

    return [Integrand(fn=f1, name="f1"), Integrand(fn=f2, name="f2")]
