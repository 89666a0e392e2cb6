import json
import math

import numpy as np
import pytest

from histopol.basis import BasisSpec, basis_size, eval_basis_many
from histopol.geometry import (
    AffineMap2,
    DiscSupport,
    OrbitSchedule,
    Point2,
    SupportSet,
    apply_affine,
    bojanov_xu_points,
    default_orbit_schedule,
    halton_points,
    min_center_separation,
    orbit_supports,
    safe_common_radius,
    translated_supports,
)
from histopol.vandermonde import is_unisolvent


def nodal_nonsingular(points, d):
    arr = np.array([[p.x, p.y] for p in points])
    vals = eval_basis_many(BasisSpec("chebyshev", d), arr)
    sigma = np.linalg.svd(vals, compute_uv=False)
    return sigma[-1] > 1e-12 * sigma[0]


class TestHalton:
    def test_empty_request(self):
        assert halton_points(0) == []

    def test_first_point_by_hand(self):
        # index 1: radical inverses 1/2 and 1/3 -> (0, -1/3) after mapping
        (p,) = halton_points(1)
        assert p.x == pytest.approx(0.0, abs=1e-15)
        assert p.y == pytest.approx(-1.0 / 3.0, abs=1e-15)

    def test_second_point_by_hand(self):
        p = halton_points(2)[1]
        assert p.x == pytest.approx(-0.5, abs=1e-15)
        assert p.y == pytest.approx(1.0 / 3.0, abs=1e-15)

    def test_points_inside_and_distinct(self):
        pts = halton_points(200)
        arr = np.array([[p.x, p.y] for p in pts])
        assert np.all(np.hypot(arr[:, 0], arr[:, 1]) < 1.0)
        assert len({(p.x, p.y) for p in pts}) == 200

    def test_skip_advances_the_sequence(self):
        # no rejections among the first indices, so skip = plain offset here
        assert halton_points(3, skip=2) == halton_points(5)[2:]


class TestBojanovXu:
    def test_degree_zero(self):
        assert bojanov_xu_points(0) == [Point2(0.0, 0.0)]

    def test_degree_two(self):
        pts = bojanov_xu_points(2)
        assert len(pts) == 6
        assert len({(p.x, p.y) for p in pts}) == 6
        assert nodal_nonsingular(pts, 2)

    def test_degree_seven_count(self):
        assert len(bojanov_xu_points(7)) == 36

    @pytest.mark.parametrize("d", range(16))
    def test_counts_and_unisolvence(self, d):
        pts = bojanov_xu_points(d)
        assert len(pts) == basis_size(d)
        assert len({(p.x, p.y) for p in pts}) == basis_size(d)
        assert max(p.norm() for p in pts) <= 1.0
        assert nodal_nonsingular(pts, d)


class TestOrbitSupports:
    def test_even_degree_with_center(self):
        schedule = OrbitSchedule((0.7,), (0.05,), 0.05)
        ss = orbit_supports(2, schedule)
        assert len(ss) == 6
        norms = [d.center.norm() for d in ss.supports]
        assert norms[:5] == pytest.approx([0.7] * 5)
        assert norms[5] == 0.0

    def test_odd_degree_two_orbits(self):
        ss = orbit_supports(3, OrbitSchedule((0.8, 0.4), (0.05, 0.05)))
        assert len(ss) == 10
        norms = [d.center.norm() for d in ss.supports]
        assert norms[:7] == pytest.approx([0.8] * 7)
        assert norms[7:] == pytest.approx([0.4] * 3)

    def test_degree_zero_center_only(self):
        ss = orbit_supports(0, OrbitSchedule((), (), 0.3))
        assert len(ss) == 1
        assert ss.supports[0].center == Point2(0.0, 0.0)

    def test_duplicate_orbit_radii_rejected(self):
        with pytest.raises(ValueError, match="distinct"):
            OrbitSchedule((0.5, 0.5), (0.05, 0.05))

    def test_containment_enforced(self):
        with pytest.raises(ValueError, match="not contained"):
            orbit_supports(1, OrbitSchedule((0.9,), (0.2,)))

    def test_missing_center_radius(self):
        with pytest.raises(ValueError, match="center ball"):
            orbit_supports(2, OrbitSchedule((0.7,), (0.05,)))

    @pytest.mark.parametrize("d", range(16))
    def test_counts_match_dimension(self, d):
        ss = orbit_supports(d, default_orbit_schedule(d))
        assert len(ss) == basis_size(d)
        assert ss.pairwise_disjoint()


class TestTranslatedSupports:
    def test_bojanov_xu_discs_unisolvent(self):
        # the outermost circle leaves ~0.019 margin at d=7, so 0.015 fits
        ss = translated_supports(bojanov_xu_points(7), 0.015)
        assert len(ss) == 36
        assert is_unisolvent(ss, BasisSpec("chebyshev", 7))

    def test_radius_too_big_for_containment(self):
        with pytest.raises(ValueError, match="not contained"):
            translated_supports(bojanov_xu_points(7), 0.04)

    def test_empty_nodes(self):
        assert len(translated_supports([], 0.3)) == 0

    def test_single_disc_measure(self):
        ss = translated_supports([Point2(0.0, 0.0)], 0.5)
        assert ss.supports[0].measure == pytest.approx(math.pi / 4, rel=1e-15)

    def test_positive_radius_required(self):
        with pytest.raises(ValueError):
            translated_supports([Point2(0, 0)], 0.0)


class TestAffine:
    def test_identity(self):
        ss = translated_supports(bojanov_xu_points(2), 0.05)
        out = apply_affine(ss, AffineMap2.identity())
        assert out.centers() == pytest.approx(ss.centers())
        assert out.radii() == pytest.approx(ss.radii())

    def test_rotation_moves_center(self):
        ss = translated_supports([Point2(0.5, 0.0)], 0.1)
        out = apply_affine(ss, AffineMap2.rotation(math.pi / 3))
        c = out.supports[0].center
        assert c.x == pytest.approx(0.25, abs=1e-15)
        assert c.y == pytest.approx(0.5 * math.sin(math.pi / 3), abs=1e-15)
        assert out.supports[0].radius == pytest.approx(0.1)

    def test_scaling_scales_measure(self):
        ss = translated_supports([Point2(0.0, 0.0)], 0.1)
        out = apply_affine(ss, AffineMap2.scaling(2.0))
        assert out.supports[0].radius == pytest.approx(0.2)
        assert out.supports[0].measure == pytest.approx(4 * ss.supports[0].measure)

    def test_non_similarity_rejected(self):
        ss = translated_supports([Point2(0.0, 0.0)], 0.1)
        stretch = AffineMap2(np.array([[1.0, 0.0], [0.0, 2.0]]), np.zeros(2))
        with pytest.raises(ValueError, match="similarity"):
            apply_affine(ss, stretch)

    def test_disjointness_preserved(self):
        ss = orbit_supports(4, default_orbit_schedule(4))
        assert ss.pairwise_disjoint()
        out = apply_affine(ss, AffineMap2.rotation(0.3))
        assert out.pairwise_disjoint()
        out2 = apply_affine(ss, AffineMap2.scaling(0.5))
        assert out2.pairwise_disjoint()


class TestTypesAndSerialization:
    def test_point_must_be_finite(self):
        with pytest.raises(ValueError):
            Point2(float("nan"), 0.0)

    def test_disc_radius_positive(self):
        with pytest.raises(ValueError):
            DiscSupport(Point2(0, 0), -0.1)

    def test_degenerate_affine_rejected(self):
        with pytest.raises(ValueError, match="degenerate"):
            AffineMap2(np.zeros((2, 2)), np.zeros(2))

    def test_support_set_containment(self):
        with pytest.raises(ValueError, match="not contained"):
            SupportSet(supports=(DiscSupport(Point2(0.95, 0.0), 0.1),))

    def test_json_schema(self):
        ss = translated_supports([Point2(0.25, -0.5)], 0.125)
        data = json.loads(ss.to_json())
        assert data == {
            "domain": "unit_disc",
            "supports": [{"cx": 0.25, "cy": -0.5, "r": 0.125}],
        }
        again = SupportSet.from_json(ss.to_json())
        assert again == ss


def test_min_center_separation_and_radius_policy():
    pts = [Point2(0, 0), Point2(0.5, 0), Point2(0, 0.5)]
    assert min_center_separation(pts) == pytest.approx(0.5)
    r = safe_common_radius(pts, separation_factor=0.4, boundary_factor=0.95)
    assert r == pytest.approx(0.2)
    assert translated_supports(pts, r).pairwise_disjoint()
