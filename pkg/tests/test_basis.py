import numpy as np
import pytest

from histopol.basis import (
    BasisKind,
    BasisSpec,
    MultiIndex,
    basis_size,
    eval_basis,
    eval_basis_many,
    graded_indices,
    restricted_dim,
)
from histopol.geometry import Point2, halton_points


def test_basis_size_values():
    assert basis_size(0) == 1
    assert basis_size(2) == 6
    assert basis_size(15) == 136
    with pytest.raises(ValueError):
        basis_size(-1)


def test_restricted_dim_circle():
    assert restricted_dim(0) == 1
    assert restricted_dim(2) == 5
    assert restricted_dim(4) == 9
    for d in range(16):
        assert restricted_dim(d) == 2 * d + 1
    # general-n formula: degree-2 variety in R^3
    assert restricted_dim(2, ambient_dim=3) == 10 - 1


def test_graded_order_round_trip():
    spec = BasisSpec("monomial", 9)
    for pos, idx in enumerate(spec.indices):
        assert spec.position(idx) == pos
        assert idx.total_degree <= 9
    assert spec.indices[0] == MultiIndex(0, 0)
    assert spec.indices[1] == MultiIndex(1, 0)
    assert spec.indices[2] == MultiIndex(0, 1)


def test_graded_prefix_nesting():
    # lower-degree index lists are prefixes of higher-degree ones
    assert graded_indices(3) == graded_indices(7)[: basis_size(3)]


def test_eval_at_origin():
    for kind in ("monomial", "chebyshev"):
        spec = BasisSpec(kind, 3)
        vals = eval_basis(spec, Point2(0.0, 0.0))
        assert vals[0] == 1.0
        if kind == "monomial":
            assert np.all(vals[1:] == 0.0)


def test_chebyshev_recurrence_value():
    spec = BasisSpec("chebyshev", 2)
    vals = eval_basis(spec, Point2(0.5, 0.0))
    j = spec.position(MultiIndex(2, 0))
    assert vals[j] == pytest.approx(-0.5, abs=1e-15)


def test_monomial_product_value():
    spec = BasisSpec("monomial", 2)
    vals = eval_basis(spec, Point2(0.3, -0.2))
    j = spec.position(MultiIndex(1, 1))
    assert vals[j] == pytest.approx(-0.06, abs=1e-15)


def test_chebyshev_bounded_on_interval():
    spec = BasisSpec("chebyshev", 15)
    xs = np.linspace(-1.0, 1.0, 100)
    vals = eval_basis_many(spec, np.column_stack([xs, np.zeros_like(xs)]))
    for a in range(16):
        j = spec.position(MultiIndex(a, 0))
        assert np.abs(vals[:, j]).max() <= 1.0 + 1e-12


def test_bases_span_the_same_space():
    for d in range(9):
        n = basis_size(d)
        pts = np.array([[p.x, p.y] for p in halton_points(n)])
        m_eval = eval_basis_many(BasisSpec("monomial", d), pts)
        c_eval = eval_basis_many(BasisSpec("chebyshev", d), pts)
        change = np.linalg.solve(c_eval, m_eval)
        assert np.all(np.isfinite(change))
        assert np.linalg.cond(change) < 1e12


def test_json_round_trip():
    spec = BasisSpec(BasisKind.CHEBYSHEV, 7)
    assert spec.to_json() == '{"kind": "chebyshev", "degree": 7}'
    again = BasisSpec.from_json('{"kind":"chebyshev","degree":7}')
    assert again == spec


def test_eval_rejects_bad_input():
    spec = BasisSpec("monomial", 1)
    with pytest.raises(ValueError):
        eval_basis(spec, (np.nan, 0.0))
    with pytest.raises(ValueError):
        eval_basis_many(spec, np.zeros((3, 3)))
