"""Domains, disc supports, affine maps and unisolvent support constructions.

The reference domain is the closed unit disc. Supports are closed discs
B(center, radius) required to stay inside the domain up to CONTAINMENT_TOL.
Three node/support families live here: quasi-random Halton centers, the
concentric-circle "Chebyshev" grid of Bojanov and Xu, and the orbit-by-orbit
construction that saturates circles of decreasing residual degree.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional, Sequence

import numpy as np

from histopol.basis import basis_size, restricted_dim

CONTAINMENT_TOL = 1e-12
_DEGENERATE_DET_TOL = 1e-14


class Domain(str, Enum):
    UNIT_DISC = "unit_disc"


@dataclass(frozen=True)
class Point2:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"point components must be finite, got ({self.x}, {self.y})")

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y])

    def norm(self) -> float:
        return math.hypot(self.x, self.y)


@dataclass(frozen=True)
class DiscSupport:
    """Closed disc B(center, radius); its area is the derived ``measure``."""

    center: Point2
    radius: float

    def __post_init__(self):
        if not (math.isfinite(self.radius) and self.radius > 0.0):
            raise ValueError(f"radius must be positive and finite, got {self.radius}")

    @property
    def measure(self) -> float:
        return math.pi * self.radius**2

    def contained_in_unit_disc(self, tol: float = CONTAINMENT_TOL) -> bool:
        return self.center.norm() + self.radius <= 1.0 + tol


@dataclass(frozen=True)
class AffineMap2:
    """Planar affine map x -> A x + b with non-degenerate linear part."""

    linear: np.ndarray
    shift: np.ndarray

    def __post_init__(self):
        lin = np.asarray(self.linear, dtype=np.float64).reshape(2, 2)
        sh = np.asarray(self.shift, dtype=np.float64).reshape(2)
        object.__setattr__(self, "linear", lin)
        object.__setattr__(self, "shift", sh)
        if abs(np.linalg.det(lin)) <= _DEGENERATE_DET_TOL:
            raise ValueError("affine map is degenerate (|det A| too small)")

    @classmethod
    def identity(cls) -> "AffineMap2":
        return cls(np.eye(2), np.zeros(2))

    @classmethod
    def rotation(cls, angle: float) -> "AffineMap2":
        c, s = math.cos(angle), math.sin(angle)
        return cls(np.array([[c, -s], [s, c]]), np.zeros(2))

    @classmethod
    def scaling(cls, scale: float) -> "AffineMap2":
        return cls(scale * np.eye(2), np.zeros(2))

    def det(self) -> float:
        return float(np.linalg.det(self.linear))

    def similarity_scale(self) -> float:
        """Scale s of a similarity map A = s Q (Q orthogonal); raises otherwise."""
        gram = self.linear.T @ self.linear
        s2 = abs(self.det())
        if not np.allclose(gram, s2 * np.eye(2), rtol=1e-10, atol=1e-12 * max(s2, 1.0)):
            raise ValueError("linear part is not a similarity (scalar multiple of a rotation)")
        return math.sqrt(s2)

    def apply(self, points: np.ndarray) -> np.ndarray:
        pts = np.asarray(points, dtype=np.float64)
        return pts @ self.linear.T + self.shift


@dataclass(frozen=True)
class SupportSet:
    """An ordered collection of disc supports inside the reference domain."""

    supports: tuple[DiscSupport, ...]
    domain: Domain = Domain.UNIT_DISC

    def __post_init__(self):
        object.__setattr__(self, "supports", tuple(self.supports))
        object.__setattr__(self, "domain", Domain(self.domain))
        for disc in self.supports:
            if not disc.contained_in_unit_disc():
                raise ValueError(
                    f"disc at ({disc.center.x}, {disc.center.y}) with radius "
                    f"{disc.radius} is not contained in the unit disc"
                )

    def __len__(self) -> int:
        return len(self.supports)

    def centers(self) -> np.ndarray:
        return np.array([[d.center.x, d.center.y] for d in self.supports]).reshape(-1, 2)

    def radii(self) -> np.ndarray:
        return np.array([d.radius for d in self.supports])

    def measures(self) -> np.ndarray:
        return np.array([d.measure for d in self.supports])

    def pairwise_disjoint(self) -> bool:
        """True if every pair of discs has positive center gap r_i + r_j."""
        c = self.centers()
        r = self.radii()
        if len(r) < 2:
            return True
        dist = np.linalg.norm(c[:, None, :] - c[None, :, :], axis=-1)
        gap = dist - (r[:, None] + r[None, :])
        iu = np.triu_indices(len(r), k=1)
        return bool(np.all(gap[iu] > 0.0))

    def to_json(self) -> str:
        return json.dumps(
            {
                "domain": self.domain.value,
                "supports": [
                    {"cx": d.center.x, "cy": d.center.y, "r": d.radius}
                    for d in self.supports
                ],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "SupportSet":
        data = json.loads(text)
        discs = tuple(
            DiscSupport(Point2(s["cx"], s["cy"]), s["r"]) for s in data["supports"]
        )
        return cls(supports=discs, domain=Domain(data["domain"]))


@dataclass(frozen=True)
class OrbitSchedule:
    """Radii plan for the orbit construction: one circle per residual degree.

    ``orbit_radii[j]`` is the radius of the j-th circle of centers (residual
    degree d - 2j) and ``ball_radii[j]`` the common radius of the discs placed
    on it. ``center_ball_radius`` is used for the final disc at the origin
    when the residual degree bottoms out at zero (even total degree).
    """

    orbit_radii: tuple[float, ...]
    ball_radii: tuple[float, ...]
    center_ball_radius: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, "orbit_radii", tuple(float(r) for r in self.orbit_radii))
        object.__setattr__(self, "ball_radii", tuple(float(r) for r in self.ball_radii))
        if len(self.orbit_radii) != len(self.ball_radii):
            raise ValueError("orbit_radii and ball_radii must have the same length")
        if len(set(self.orbit_radii)) != len(self.orbit_radii):
            raise ValueError("orbit radii must be pairwise distinct")
        for r in self.orbit_radii:
            if not 0.0 < r < 1.0:
                raise ValueError(f"orbit radius {r} outside (0, 1)")
        for r in self.ball_radii:
            if r <= 0.0:
                raise ValueError(f"ball radius {r} must be positive")
        if self.center_ball_radius is not None and self.center_ball_radius <= 0.0:
            raise ValueError("center ball radius must be positive")


def _radical_inverse(index: int, base: int) -> float:
    inv = 0.0
    f = 1.0 / base
    while index > 0:
        index, digit = divmod(index, base)
        inv += digit * f
        f /= base
    return inv


def halton_points(count: int, skip: int = 0) -> list[Point2]:
    """Quasi-random points strictly inside the unit disc.

    The 2-D Halton sequence (bases 2 and 3, starting at index skip + 1) is
    mapped from [0,1]^2 to [-1,1]^2; points landing outside the open unit
    disc are rejected and the sequence index advances until ``count`` points
    are accepted.
    """
    if count < 0:
        raise ValueError("count must be >= 0")
    points: list[Point2] = []
    index = skip + 1
    while len(points) < count:
        x = 2.0 * _radical_inverse(index, 2) - 1.0
        y = 2.0 * _radical_inverse(index, 3) - 1.0
        if x * x + y * y < 1.0:
            points.append(Point2(x, y))
        index += 1
    return points


def bojanov_xu_points(d: int) -> list[Point2]:
    """Nodal interpolation grid on concentric circles after Bojanov and Xu.

    The grid stratifies by circles of decreasing residual degree: circle j
    (j = 0, 1, ...) carries 2(d - 2j) + 1 equispaced points, so the counts
    match the dimension of polynomials restricted to each circle, and an
    even total degree adds the origin. Circle radii are the positive
    Chebyshev abscissae cos((2j+1) pi / (4m)) with m the number of circles;
    consecutive circles are rotated against each other by half the angular
    step. Nodal unisolvence is checked numerically in the test suite.
    """
    if d < 0:
        raise ValueError("degree must be >= 0")
    if d == 0:
        return [Point2(0.0, 0.0)]
    m = (d + 1) // 2
    points: list[Point2] = []
    for j in range(m):
        radius = math.cos((2 * j + 1) * math.pi / (4 * m))
        n_here = restricted_dim(d - 2 * j)
        offset = (j % 2) * math.pi / n_here
        for k in range(n_here):
            theta = 2.0 * math.pi * k / n_here + offset
            points.append(Point2(radius * math.cos(theta), radius * math.sin(theta)))
    if d % 2 == 0:
        points.append(Point2(0.0, 0.0))
    assert len(points) == basis_size(d)
    return points


def orbit_supports(d: int, schedule: OrbitSchedule) -> SupportSet:
    """Unisolvent discs placed orbit by orbit.

    Stage j puts 2*(d - 2j) + 1 equal discs at equispaced angles on the
    circle of radius ``schedule.orbit_radii[j]``; the residual degree then
    drops by two. When it reaches zero a single disc at the origin (radius
    ``schedule.center_ball_radius``) completes the set. The total count is
    always dim P_d.
    """
    if d < 0:
        raise ValueError("degree must be >= 0")
    n_stages = (d + 1) // 2
    if len(schedule.orbit_radii) < n_stages:
        raise ValueError(
            f"schedule supplies {len(schedule.orbit_radii)} orbits, degree {d} needs {n_stages}"
        )
    discs: list[DiscSupport] = []
    residual = d
    stage = 0
    while residual >= 1:
        orbit_r = schedule.orbit_radii[stage]
        ball_r = schedule.ball_radii[stage]
        n_here = restricted_dim(residual)
        for k in range(n_here):
            theta = 2.0 * math.pi * k / n_here
            center = Point2(orbit_r * math.cos(theta), orbit_r * math.sin(theta))
            discs.append(DiscSupport(center, ball_r))
        residual -= 2
        stage += 1
    if residual == 0:
        if schedule.center_ball_radius is None:
            raise ValueError(f"degree {d} needs a center ball radius (even degree)")
        discs.append(DiscSupport(Point2(0.0, 0.0), schedule.center_ball_radius))
    assert len(discs) == basis_size(d)
    return SupportSet(supports=tuple(discs))


def default_orbit_schedule(d: int) -> OrbitSchedule:
    """Equispaced orbit radii with disc radii scaled to keep discs disjoint.

    Orbit j (outermost first) sits at radius (m - j) / (m + 1) where m is the
    number of orbits. Disc radii are 0.4 times the smallest of: the gap
    between adjacent orbits, the chord between neighbouring centers on the
    orbit, and the distance from the orbit to the domain boundary.
    """
    m = (d + 1) // 2
    orbit_radii = [(m - j) / (m + 1) for j in range(m)]
    gap = 1.0 / (m + 1)
    ball_radii = []
    for j, orbit_r in enumerate(orbit_radii):
        n_here = restricted_dim(d - 2 * j)
        chord = 2.0 * orbit_r * math.sin(math.pi / n_here)
        margin = 1.0 - orbit_r
        ball_radii.append(0.4 * min(gap, chord, margin))
    center_r = 0.4 * gap if d % 2 == 0 else None
    return OrbitSchedule(
        orbit_radii=tuple(orbit_radii),
        ball_radii=tuple(ball_radii),
        center_ball_radius=center_r,
    )


def translated_supports(nodes: Sequence[Point2], radius: float) -> SupportSet:
    """Equal discs of the given radius centered at the given nodes."""
    if radius <= 0.0:
        raise ValueError("radius must be positive")
    discs = tuple(DiscSupport(node, radius) for node in nodes)
    return SupportSet(supports=discs)


def apply_affine(support_set: SupportSet, affine: AffineMap2) -> SupportSet:
    """Map every disc by a similarity: centers move, radii scale uniformly."""
    scale = affine.similarity_scale()
    mapped = tuple(
        DiscSupport(
            Point2(*affine.apply(disc.center.as_array())),
            scale * disc.radius,
        )
        for disc in support_set.supports
    )
    return SupportSet(supports=mapped, domain=support_set.domain)


def min_center_separation(points: Iterable[Point2]) -> float:
    """Smallest pairwise distance between the given points."""
    arr = np.array([[p.x, p.y] for p in points]).reshape(-1, 2)
    if arr.shape[0] < 2:
        return math.inf
    dist = np.linalg.norm(arr[:, None, :] - arr[None, :, :], axis=-1)
    iu = np.triu_indices(arr.shape[0], k=1)
    return float(dist[iu].min())


def safe_common_radius(
    nodes: Sequence[Point2], separation_factor: float = 0.4, boundary_factor: float = 0.95
) -> float:
    """A common disc radius keeping translated discs disjoint and contained."""
    sep = min_center_separation(nodes)
    margin = 1.0 - max(p.norm() for p in nodes) if nodes else 1.0
    radius = min(separation_factor * sep, boundary_factor * margin)
    if not (radius > 0.0 and math.isfinite(radius)):
        raise ValueError("nodes leave no room for positive disc radius")
    return radius
