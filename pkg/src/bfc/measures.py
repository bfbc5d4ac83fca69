"""Query-style complexity measures and their trade-offs with VC-dimension.

Certificate complexity and decision-tree depth work on the lattice of all
``3**n`` subcubes (see :func:`bfc.core.subcube_counts`), so they carry
their own dimension caps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from .algebraic import anf, f2_degree
from .core import (
    BooleanFunction,
    SetFamily,
    check_dimension,
    masks_of_size,
    subcube_code,
    subcube_counts,
    subcube_free_counts,
    support,
)
from .errors import DimensionCap, EmptyFamily, ZeroFunction
from .spectral import fourier_degree, wht
from .vc import vc_dimension

CERTIFICATE_CAP = 10
DEPTH_CAP = 12


@dataclass(frozen=True)
class GraphStats:
    """Statistics of the hypercube subgraph induced by a family."""

    vertex_count: int
    edge_count: int
    min_degree: int
    density: Fraction


def sensitivity_profile(f: BooleanFunction) -> np.ndarray:
    """``s(f, x)`` for every point ``x``."""
    idx = np.arange(1 << f.n)
    prof = np.zeros(1 << f.n, dtype=np.int64)
    for i in range(f.n):
        prof += f.table != f.table[idx ^ (1 << i)]
    return prof


def sensitivity(f: BooleanFunction) -> int:
    return int(sensitivity_profile(f).max())


def constant_subcubes(f: BooleanFunction) -> np.ndarray:
    """Flat ternary-coded flags: is ``f`` constant on each subcube."""
    counts = subcube_counts(f.table)
    free = subcube_free_counts(f.n)
    return (counts == 0) | (counts == (1 << free))


def certificate_profile(f: BooleanFunction, cap: int = CERTIFICATE_CAP) -> np.ndarray:
    """``C(f, x)`` for every point ``x``.

    Variable sets are tried by increasing size; a point leaves the search as
    soon as one set of the current size certifies it.
    """
    check_dimension(f.n, cap, "n (certificate complexity)")
    const = constant_subcubes(f)
    points = np.arange(1 << f.n, dtype=np.int64)
    result = np.full(1 << f.n, -1, dtype=np.int64)
    pending = points
    for k in range(f.n + 1):
        if pending.size == 0:
            break
        ps = np.fromiter(masks_of_size(f.n, k), dtype=np.int64)
        codes = subcube_code(ps[None, :], pending[:, None] & ps[None, :], f.n)
        done = const[codes].any(axis=1)
        result[pending[done]] = k
        pending = pending[~done]
    return result


def certificate_complexity(f: BooleanFunction, cap: int = CERTIFICATE_CAP) -> int:
    return int(certificate_profile(f, cap).max())


def decision_tree_depth(f: BooleanFunction, cap: int = DEPTH_CAP) -> int:
    """Depth of an optimal decision tree, by dynamic programming on subcubes.

    ``D(cube) = 0`` when ``f`` is constant on it, otherwise
    ``1 + min_i max(D(cube, x_i=0), D(cube, x_i=1))`` over its free ``i``.
    A cube with ``k`` free coordinates is exact after ``k`` sweeps.
    """
    check_dimension(f.n, cap, "n (decision-tree depth)")
    n = f.n
    const = constant_subcubes(f).reshape((3,) * n)
    big = n + 1
    depth = np.where(const, 0, big).astype(np.int64)
    for _ in range(n):
        best = np.full(depth.shape, big, dtype=np.int64)
        for axis in range(n):
            split = 1 + np.maximum(
                np.take(depth, [0], axis=axis), np.take(depth, [1], axis=axis)
            )
            sl = [slice(None)] * n
            sl[axis] = slice(2, 3)
            sl = tuple(sl)
            best[sl] = np.minimum(best[sl], split)
        new = np.where(const, 0, best)
        if np.array_equal(new, depth):
            break
        depth = new
    return int(depth.reshape(-1)[-1])  # all digits 2: the whole cube


def one_inclusion_stats(family: SetFamily) -> GraphStats:
    if not family.members:
        raise EmptyFamily("one-inclusion graph of the empty family")
    inside = np.zeros(1 << family.n, dtype=bool)
    arr = family.array
    inside[arr] = True
    degrees = np.zeros(arr.size, dtype=np.int64)
    for i in range(family.n):
        degrees += inside[arr ^ (1 << i)]
    edges = int(degrees.sum()) // 2
    return GraphStats(
        vertex_count=int(arr.size),
        edge_count=edges,
        min_degree=int(degrees.min()),
        density=Fraction(edges, int(arr.size)),
    )


@dataclass(frozen=True)
class Inequality:
    name: str
    lhs: int
    rhs: int
    holds: bool
    expected: bool = True

    @property
    def slack(self) -> int:
        return self.lhs - self.rhs


@dataclass
class TradeoffReport:
    n: int
    measures: dict = field(default_factory=dict)
    inequalities: list = field(default_factory=list)
    skipped: dict = field(default_factory=dict)

    def verdict(self, name: str) -> Optional[Inequality]:
        for ineq in self.inequalities:
            if ineq.name == name:
                return ineq
        return None

    @property
    def all_expected_hold(self) -> bool:
        return all(q.holds for q in self.inequalities if q.expected)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "measures": dict(self.measures),
            "inequalities": [
                {
                    "name": q.name,
                    "lhs": q.lhs,
                    "rhs": q.rhs,
                    "holds": q.holds,
                    "expected": q.expected,
                }
                for q in self.inequalities
            ],
            "skipped": dict(self.skipped),
        }


ALL_MEASURES = ("vc", "deg", "degf2", "s", "c", "d")


def compute_measures(
    f: BooleanFunction,
    which=ALL_MEASURES,
    certificate_cap: int = CERTIFICATE_CAP,
    depth_cap: int = DEPTH_CAP,
) -> tuple[dict, dict]:
    """Evaluate the requested measures; over-cap ones land in ``skipped``."""
    if f.is_zero():
        raise ZeroFunction("complexity measures need a non-zero function")
    values, skipped = {}, {}
    for name in which:
        try:
            if name == "vc":
                values[name] = vc_dimension(support(f))[0]
            elif name == "deg":
                values[name] = fourier_degree(wht(f))
            elif name == "degf2":
                values[name] = f2_degree(anf(f))
            elif name == "s":
                values[name] = sensitivity(f)
            elif name == "c":
                values[name] = certificate_complexity(f, certificate_cap)
            elif name == "d":
                values[name] = decision_tree_depth(f, depth_cap)
            else:
                raise ValueError(f"unknown measure {name!r}")
        except DimensionCap as exc:
            skipped[name] = str(exc)
    return values, skipped


# (name, needed measures, lhs, rhs, expected to hold universally)
TRADEOFFS = (
    ("vc+deg>=n", ("vc", "deg"), lambda m: m["vc"] + m["deg"], lambda n: n, True),
    ("vc+degf2>=n", ("vc", "degf2"), lambda m: m["vc"] + m["degf2"], lambda n: n, True),
    ("vc+D>=n", ("vc", "d"), lambda m: m["vc"] + m["d"], lambda n: n, True),
    ("vc+C>=n", ("vc", "c"), lambda m: m["vc"] + m["c"], lambda n: n, True),
    ("2vc+s>=n", ("vc", "s"), lambda m: 2 * m["vc"] + m["s"], lambda n: n, True),
    ("s^2>=deg", ("s", "deg"), lambda m: m["s"] ** 2, None, True),
    ("vc+s>=n", ("vc", "s"), lambda m: m["vc"] + m["s"], lambda n: n, False),
)


def tradeoff_report(
    f: BooleanFunction,
    certificate_cap: int = CERTIFICATE_CAP,
    depth_cap: int = DEPTH_CAP,
    which=ALL_MEASURES,
) -> TradeoffReport:
    """Evaluate every trade-off whose measures are available.

    ``vc+s>=n`` is reported for information only: it fails in general, so its
    ``expected`` flag is false.
    """
    values, skipped = compute_measures(f, which, certificate_cap, depth_cap)
    report = TradeoffReport(f.n, values, [], skipped)
    for name, needs, lhs, rhs, expected in TRADEOFFS:
        if not all(k in values for k in needs):
            continue
        left = lhs(values)
        right = values["deg"] if rhs is None else rhs(f.n)
        report.inequalities.append(Inequality(name, left, right, left >= right, expected))
    return report


def induced_min_degree_ok(f: BooleanFunction) -> bool:
    """Support and complement both induce min degree ``>= n - s(f)``."""
    s = sensitivity(f)
    fam = support(f)
    comp = SetFamily(f.n, tuple(int(i) for i in np.flatnonzero(f.table == 0)))
    return all(
        one_inclusion_stats(g).min_degree >= f.n - s for g in (fam, comp) if g.members
    )

