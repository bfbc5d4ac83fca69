"""Builders for the named functions and seeded random generators.

Random generators use numpy's ``PCG64`` bit generator through
``np.random.default_rng(seed)``; outputs are reproducible per argument tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .core import (
    BooleanFunction,
    check_dimension,
    from_support,
    mask_from_point,
    popcounts,
    zeta_subset_f2,
)
from .errors import InvalidSpec


@dataclass(frozen=True)
class SubcubeSpec:
    """Subcube of co-dimension ``k``: coordinate ``j`` fixed to ``v`` per fix."""

    n: int
    fixes: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        fixes = tuple(sorted((int(j), int(v)) for j, v in self.fixes))
        coords = [j for j, _ in fixes]
        if len(set(coords)) != len(coords):
            raise InvalidSpec(f"repeated coordinate in {fixes}")
        for j, v in fixes:
            if not 1 <= j <= self.n:
                raise InvalidSpec(f"coordinate {j} outside [1, {self.n}]")
            if v not in (0, 1):
                raise InvalidSpec(f"value {v} for coordinate {j} is not 0/1")
        object.__setattr__(self, "fixes", fixes)

    @property
    def k(self) -> int:
        return len(self.fixes)

    @property
    def fixed_mask(self) -> int:
        return sum(1 << (j - 1) for j, _ in self.fixes)

    @property
    def pattern(self) -> int:
        return sum(v << (j - 1) for j, v in self.fixes)


def subcube(spec: SubcubeSpec) -> BooleanFunction:
    check_dimension(spec.n)
    x = np.arange(1 << spec.n)
    return BooleanFunction(spec.n, (x & spec.fixed_mask) == spec.pattern)


def is_subcube(f: BooleanFunction) -> bool:
    """Does ``supp(f)`` equal some subcube?  Subcube sizes are powers of two."""
    members = np.flatnonzero(f.table)
    if members.size == 0 or members.size & (members.size - 1):
        return False
    # a subcube is fixed exactly on the coordinates where all members agree
    agree_one = np.bitwise_and.reduce(members)
    agree_zero = np.bitwise_and.reduce(~members) & ((1 << f.n) - 1)
    fixed = int(agree_one | agree_zero)
    return members.size == 1 << (f.n - bin(fixed).count("1"))


# support of the n = 4 equality example, as 0/1 tuples (x1, x2, x3, x4)
EXAMPLE_N4_POINTS = (
    (0, 0, 1, 1),
    (0, 1, 0, 0),
    (0, 1, 0, 1),
    (0, 1, 1, 1),
    (1, 0, 0, 0),
    (1, 0, 1, 0),
    (1, 0, 1, 1),
    (1, 1, 0, 0),
)


def example_n4_polynomial(x1: int, x2: int, x3: int, x4: int) -> int:
    return x1 + x2 + x3 * x4 - x1 * x2 - x1 * x4 - x2 * x3


def paper_example_n4() -> BooleanFunction:
    """The non-subcube equality case at ``n = 4`` (``deg = VC = 2``)."""
    f = from_support(4, [mask_from_point(p) for p in EXAMPLE_N4_POINTS])
    for point in product((0, 1), repeat=4):
        value = example_n4_polynomial(*point)
        if value not in (0, 1) or value != f(point):
            raise AssertionError(f"polynomial and support disagree at {point}")
    return f


def counterexample_n15() -> BooleanFunction:
    """Indicator of ``F0 x {0}^6`` with ``F0 = {0,1}^9`` minus three 3-cubes.

    Coordinates 1-9 carry ``F0`` and coordinates 10-15 are zero; then
    ``s(f) = VC(f) = 7`` so ``VC + s = 14 < 15``.
    """
    removed = set()
    for cube in _counterexample_cubes():
        if removed & cube:
            raise AssertionError("the three removed subcubes must be disjoint")
        removed |= cube
    f0 = [m for m in range(1 << 9) if m not in removed]
    return from_support(15, f0)


def _counterexample_cubes() -> list[set[int]]:
    def cube(fixes):
        spec = SubcubeSpec(9, tuple(fixes))
        return set(int(m) for m in np.flatnonzero(subcube(spec).table))

    c1 = cube([(j, 0) for j in range(4, 10)])
    c2 = cube([(j, 0) for j in (1, 2, 3)] + [(j, 1) for j in (7, 8, 9)])
    c3 = cube([(j, 1) for j in range(1, 7)])
    return [c1, c2, c3]


def random_function(n: int, p: float = 0.5, seed: int = 0) -> BooleanFunction:
    """Each table bit is 1 independently with probability ``p``."""
    check_dimension(n)
    if not 0.0 <= p <= 1.0:
        raise InvalidSpec(f"density p={p} outside [0, 1]")
    rng = np.random.default_rng(seed)
    return BooleanFunction(n, rng.random(1 << n) < p)


def random_low_f2_degree(n: int, d: int, seed: int = 0) -> BooleanFunction:
    """Non-zero function whose ANF only uses monomials of size at most ``d``.

    Coefficients of the allowed monomials are uniform bits; an all-zero draw
    is resampled.
    """
    check_dimension(n)
    if not 0 <= d <= n:
        raise InvalidSpec(f"degree bound d={d} outside [0, {n}]")
    rng = np.random.default_rng(seed)
    allowed = popcounts(n) <= d
    while True:
        coeffs = rng.integers(0, 2, size=1 << n, dtype=np.uint8) * allowed
        if coeffs.any():
            return BooleanFunction(n, zeta_subset_f2(coeffs))
