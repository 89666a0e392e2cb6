import numpy as np
import pytest

from histopol.basis import BasisSpec, basis_size
from histopol.geometry import DiscSupport, Point2, SupportSet
from histopol.lebesgue import default_eval_grid


@pytest.fixture(scope="session")
def grid():
    return default_eval_grid()


@pytest.fixture(scope="session")
def small_grid():
    return default_eval_grid(20, 40)


def cheb(d: int) -> BasisSpec:
    return BasisSpec("chebyshev", d)


def mono(d: int) -> BasisSpec:
    return BasisSpec("monomial", d)


def random_disjoint_set(d: int, rng: np.random.Generator, max_center: float = 0.85) -> SupportSet:
    """Random disjoint equal discs, rejection-sampled with a separation floor."""
    n = basis_size(d)
    centers: list[tuple[float, float]] = []
    min_sep = 1.2 / np.sqrt(n)
    while len(centers) < n:
        x, y = rng.uniform(-max_center, max_center, size=2)
        if x * x + y * y > max_center**2:
            continue
        if all((x - cx) ** 2 + (y - cy) ** 2 >= min_sep**2 for cx, cy in centers):
            centers.append((float(x), float(y)))
    margin = 1.0 - max(np.hypot(x, y) for x, y in centers)
    radius = min(0.4 * min_sep, 0.9 * margin)
    return SupportSet(
        supports=tuple(DiscSupport(Point2(x, y), radius) for x, y in centers)
    )
