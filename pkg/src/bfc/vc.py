"""Shattering, VC-dimension and the F2 null-design parity conditions.

All free choices are deterministic: among sets of equal size the
lexicographically smallest (by sorted coordinates) wins, and realizers are
the smallest member mask with the required trace.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional, Union

import numpy as np

from .core import (
    BooleanFunction,
    SetFamily,
    lex_key,
    masks_of_size,
    popcount,
    popcounts,
    size_lex_key,
    submasks,
    superset_parity,
    support,
)
from .errors import EmptyFamily, PreconditionViolated, WitnessNotFound

# traces per vectorised shattering batch
_CHUNK = 1 << 22


@dataclass(frozen=True)
class ShatterWitness:
    """A shattered set plus one realizing member for each of its subsets."""

    t_mask: int
    realizers: dict

    @property
    def size(self) -> int:
        return popcount(self.t_mask)

    def is_valid(self, family: SetFamily) -> bool:
        members = set(family.members)
        if sorted(self.realizers) != submasks(self.t_mask):
            return False
        return all(
            f in members and f & self.t_mask == u for u, f in self.realizers.items()
        )


Violation = Union[int, tuple, None]


@dataclass(frozen=True)
class DesignCheckReport:
    """Outcome of one parity condition at order ``d``.

    ``violation`` is the mask ``A`` for the containment condition, the pair
    ``(S, T)`` for the trace condition and the mask ``S`` for the disjointness
    condition; it is ``None`` exactly when the condition holds.
    """

    d: int
    condition: str
    holds: bool
    violation: Violation = None


def _require_nonempty(family: SetFamily) -> None:
    if not family.members:
        raise EmptyFamily("operation is undefined for the empty family")


def is_shattered(family: SetFamily, t_mask: int) -> Optional[ShatterWitness]:
    if not 0 <= t_mask < 1 << family.n:
        raise PreconditionViolated(f"mask {t_mask} out of range for n={family.n}")
    arr = family.array
    if arr.size < 1 << popcount(t_mask):
        return None
    traces = arr & t_mask
    # members are sorted, so the first index of a trace is its smallest member
    uniq, first = np.unique(traces, return_index=True)
    if uniq.size != 1 << popcount(t_mask):
        return None
    return ShatterWitness(t_mask, {int(u): int(arr[i]) for u, i in zip(uniq, first)})


def _shattered_mask(arr: np.ndarray, cands: np.ndarray, k: int) -> np.ndarray:
    """Boolean array: which candidate ``k``-sets does the family shatter."""
    out = np.zeros(cands.size, dtype=bool)
    step = max(1, _CHUNK // max(arr.size, 1))
    for lo in range(0, cands.size, step):
        block = cands[lo : lo + step]
        traces = np.sort(arr[None, :] & block[:, None], axis=1)
        distinct = 1 + np.count_nonzero(np.diff(traces, axis=1), axis=1)
        out[lo : lo + step] = distinct == 1 << k
    return out


def shattered_sets_by_level(family: SetFamily) -> list[list[int]]:
    """Every shattered set, grouped by size, each level in lexicographic order.

    Candidates at level ``k`` are extensions of shattered ``(k-1)``-sets whose
    every ``(k-1)``-subset is shattered; shattering is hereditary, so nothing
    is missed.
    """
    _require_nonempty(family)
    n = family.n
    arr = family.array
    levels = [[0]]
    prev = {0}
    for k in range(1, n + 1):
        if arr.size < 1 << k:
            break
        cands = set()
        for t in prev:
            for i in range(t.bit_length(), n):
                c = t | 1 << i
                if all((c ^ (1 << j)) in prev for j in lex_key(c)):
                    cands.add(c)
        if not cands:
            break
        cand_arr = np.array(sorted(cands, key=lex_key), dtype=np.int64)
        hit = cand_arr[_shattered_mask(arr, cand_arr, k)]
        if hit.size == 0:
            break
        levels.append([int(t) for t in hit])
        prev = set(levels[-1])
    return levels


def vc_dimension(family: SetFamily) -> tuple[int, ShatterWitness]:
    """VC-dimension and the lexicographically smallest maximum shattered set."""
    levels = shattered_sets_by_level(family)
    d = len(levels) - 1
    witness = is_shattered(family, levels[-1][0])
    assert witness is not None
    return d, witness


def vc(f: BooleanFunction) -> int:
    """VC-dimension of ``supp(f)``."""
    return vc_dimension(support(f))[0]


def _indicator(family: SetFamily) -> np.ndarray:
    table = np.zeros(1 << family.n, dtype=np.uint8)
    table[family.array] = 1
    return table


def _first_by_size_lex(masks: np.ndarray) -> int:
    return min((int(m) for m in masks), key=size_lex_key)


def null_design_check_containment(family: SetFamily, d: int) -> DesignCheckReport:
    """Every ``A`` with ``|A| <= d`` lies in an even number of members."""
    par = superset_parity(_indicator(family))
    bad = np.flatnonzero((par == 1) & (popcounts(family.n) <= d))
    if bad.size:
        return DesignCheckReport(d, "i", False, _first_by_size_lex(bad))
    return DesignCheckReport(d, "i", True)


def null_design_check_trace(family: SetFamily, d: int) -> DesignCheckReport:
    """For ``|S| <= d`` and ``T`` in ``S``, ``#{F : F & S = T}`` is even."""
    arr = family.array
    for k in range(min(d, family.n) + 1):
        for s in masks_of_size(family.n, k):
            uniq, counts = np.unique(arr & s, return_counts=True)
            odd = uniq[counts % 2 == 1]
            if odd.size:
                return DesignCheckReport(d, "ii", False, (s, int(odd.min())))
    return DesignCheckReport(d, "ii", True)


def null_design_check_disjoint(family: SetFamily, d: int) -> DesignCheckReport:
    """Every ``S`` with ``|S| <= d`` is disjoint from an even number of members."""
    arr = family.array
    for k in range(min(d, family.n) + 1):
        level = np.fromiter(masks_of_size(family.n, k), dtype=np.int64)
        counts = np.count_nonzero((arr[None, :] & level[:, None]) == 0, axis=1)
        odd = np.flatnonzero(counts % 2 == 1)
        if odd.size:
            return DesignCheckReport(d, "disjoint", False, int(level[odd[0]]))
    return DesignCheckReport(d, "disjoint", True)


DESIGN_CHECKS = {
    "i": null_design_check_containment,
    "ii": null_design_check_trace,
    "disjoint": null_design_check_disjoint,
}


def design_order(family: SetFamily) -> int:
    """Largest ``s`` with the family a null ``s``-design over F2 (``-1`` if none).

    Equals ``n`` only for the empty family.
    """
    par = superset_parity(_indicator(family))
    odd = popcounts(family.n)[par == 1]
    return int(odd.min()) - 1 if odd.size else family.n


def extract_shattered_from_design(f: BooleanFunction, d: int) -> ShatterWitness:
    """Build a shattered ``(d+1)``-set from a null ``d``-design support.

    Take the smallest ``S`` with odd containment count (its size is ``s+1``
    where ``s >= d`` is the maximal design order); every trace on ``S`` is
    then realised an odd number of times.  ``T`` is the ``d+1`` lowest
    coordinates of ``S``, and ``U`` in ``T`` is realised by a member whose
    trace on ``S`` is ``U | (S - T)``.
    """
    family = support(f)
    if not family.members:
        raise PreconditionViolated("support must be non-empty")
    if d < 0 or d >= f.n:
        raise PreconditionViolated(f"order d={d} must satisfy 0 <= d <= n-1")
    report = null_design_check_containment(family, d)
    if not report.holds:
        raise PreconditionViolated(
            f"support is not a null {d}-design: set {report.violation} has odd count"
        )
    par = superset_parity(f.table)
    sizes = popcounts(f.n)
    odd = par == 1
    top = int(sizes[odd].min())
    s_mask = _first_by_size_lex(np.flatnonzero(odd & (sizes == top)))
    coords = lex_key(s_mask)
    t_mask = 0
    for i in coords[: d + 1]:
        t_mask |= 1 << i
    rest = s_mask ^ t_mask
    arr = family.array
    traces = arr & s_mask
    realizers = {}
    for u in submasks(t_mask):
        hits = arr[traces == (u | rest)]
        if hits.size == 0:
            raise WitnessNotFound(f"no member with trace {u | rest} on {s_mask}")
        realizers[u] = int(hits[0])
    witness = ShatterWitness(t_mask, realizers)
    if not witness.is_valid(family) or is_shattered(family, t_mask) is None:
        raise WitnessNotFound(f"extracted set {t_mask} failed re-validation")
    return witness


def sauer_bound(n: int, d: int) -> int:
    return sum(comb(n, i) for i in range(d + 1))


def sauer_check(family: SetFamily) -> bool:
    """``|F| <= sum_{i <= VC} C(n, i)``."""
    d, _ = vc_dimension(family)
    return len(family) <= sauer_bound(family.n, d)

