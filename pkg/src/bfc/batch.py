"""Vectorised measures for many small-``n`` functions at once.

A batch is a ``uint64`` array of truth tables packed as integers (bit ``x``
of the integer is ``f(x)``), so ``n <= 6``.  Every set-counting question
reduces to ``popcount(tables & mask)`` against a precomputed point mask.

This is the engine behind the census and exhaustive verification; the
per-function implementations in the other modules are the reference it is
tested against.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

import numpy as np

from .core import check_dimension, submasks, subcube_code, subcube_free_counts

BATCH_CAP = 6

ALL = ("weight", "deg", "degf2", "spec", "vc", "s", "c", "d", "orders", "graph")


def pack(table: np.ndarray) -> int:
    """Truth table (0/1 array) -> packed integer."""
    return int(sum(int(b) << i for i, b in enumerate(table)))


def unpack(packed: int, n: int) -> np.ndarray:
    return np.array([(packed >> i) & 1 for i in range(1 << n)], dtype=np.uint8)


def table_range(lo: int, hi: int) -> np.ndarray:
    return np.arange(lo, hi, dtype=np.uint64)


def _pc(a: np.ndarray) -> np.ndarray:
    return np.bitwise_count(a).astype(np.int64)


@lru_cache(maxsize=None)
def _tables(n: int) -> dict:
    points = np.arange(1 << n)
    pc = np.bitwise_count(points.astype(np.uint64)).astype(np.int64)
    hadamard = np.where(pc[(points[:, None] & points[None, :])] % 2, -1, 1)
    zeta = ((points[:, None] & ~points[None, :]) == 0).astype(np.int64)  # T in S

    def point_mask(sel) -> np.uint64:
        return np.uint64(sum(1 << int(x) for x in points[sel]))

    # trace masks: points x with x & s == t, for every s and t in s
    trace = {}
    for s in range(1 << n):
        for t in submasks(s):
            trace[s, t] = point_mask((points & s) == t)
    superset = np.array([point_mask((points & a) == a) for a in points], dtype=np.uint64)

    codes = 3**n
    free = subcube_free_counts(n)
    cube = np.zeros(codes, dtype=np.uint64)
    for fixed in range(1 << n):
        for values in submasks(fixed):
            cube[subcube_code(fixed, values, n)] = trace[fixed, values]
    # cert_codes[x, P] = code of the subcube fixing P to x's values
    cert_codes = subcube_code(points[None, :], points[:, None] & points[None, :], n)
    return {
        "points": points,
        "pc": pc,
        "hadamard": hadamard,
        "zeta": zeta,
        "trace": trace,
        "superset": superset,
        "cube": cube,
        "free": free,
        "cert_codes": cert_codes,
        "sauer": np.array([sum(comb(n, i) for i in range(d + 1)) for d in range(n + 1)]),
    }


def _bits(tables: np.ndarray, n: int) -> np.ndarray:
    shifts = np.arange(1 << n, dtype=np.uint64)
    return ((tables[:, None] >> shifts[None, :]) & np.uint64(1)).astype(np.int64)


def _max_popcount(nonzero: np.ndarray, pc: np.ndarray) -> np.ndarray:
    """Largest popcount among flagged masks per row; -1 if none."""
    return (nonzero * (pc[None, :] + 1)).max(axis=1) - 1


def _order(odd_sizes: np.ndarray, n: int) -> np.ndarray:
    return np.where(odd_sizes <= n, odd_sizes - 1, n)


def measure_batch(tables, n: int, which=ALL) -> dict:
    """Compute the requested measures for every packed table.

    Keys of the result: ``weight`` (|supp|), ``spec`` (|supp fhat|), ``deg``,
    ``degf2``, ``vc``, ``s``, ``c``, ``d``, ``order_i``, ``order_ii``,
    ``order_disjoint`` (largest design order under each parity condition, ``n``
    for the zero function), ``edges``, ``min_deg_supp``, ``min_deg_comp``
    (-1 / n+1 sentinels for empty sides).  Zero-function rows carry ``deg``
    and ``degf2`` equal to -1.
    """
    check_dimension(n, BATCH_CAP, "n (batch engine)")
    which = set(which)
    tables = np.asarray(tables, dtype=np.uint64)
    pre = _tables(n)
    pc = pre["pc"]
    size = 1 << n
    out = {"weight": _pc(tables)}
    need_bits = which & {"deg", "degf2", "spec", "s", "graph"}
    bits = _bits(tables, n) if need_bits else None

    if which & {"deg", "spec"}:
        coeffs = bits @ pre["hadamard"]
        out["deg"] = _max_popcount(coeffs != 0, pc)
        out["spec"] = np.count_nonzero(coeffs, axis=1)
    if "degf2" in which:
        coeffs = (bits @ pre["zeta"]) & 1
        out["degf2"] = _max_popcount(coeffs != 0, pc)

    if "vc" in which or "orders" in which:
        trace = pre["trace"]
        vc = np.zeros(tables.size, dtype=np.int64)
        odd_ii = np.full(tables.size, n + 1, dtype=np.int64)
        for s in range(size):
            shattered = np.ones(tables.size, dtype=bool)
            odd = np.zeros(tables.size, dtype=bool)
            for t in submasks(s):
                hits = _pc(tables & trace[s, t])
                shattered &= hits > 0
                odd |= (hits & 1) == 1
            vc = np.where(shattered, np.maximum(vc, pc[s]), vc)
            odd_ii = np.where(odd, np.minimum(odd_ii, pc[s]), odd_ii)
        # the empty family shatters nothing, not even the empty set
        out["vc"] = np.where(out["weight"] > 0, vc, -1)
        if "orders" in which:
            odd_i = np.full(tables.size, n + 1, dtype=np.int64)
            odd_dis = np.full(tables.size, n + 1, dtype=np.int64)
            for a in range(size):
                c = _pc(tables & pre["superset"][a]) & 1
                odd_i = np.where(c == 1, np.minimum(odd_i, pc[a]), odd_i)
                z = _pc(tables & trace[a, 0]) & 1
                odd_dis = np.where(z == 1, np.minimum(odd_dis, pc[a]), odd_dis)
            out["order_i"] = _order(odd_i, n)
            out["order_ii"] = _order(odd_ii, n)
            out["order_disjoint"] = _order(odd_dis, n)

    if "s" in which or "graph" in which:
        points = pre["points"]
        flips = np.zeros_like(bits)
        nbr = np.zeros_like(bits)
        for i in range(n):
            other = bits[:, points ^ (1 << i)]
            flips += bits != other
            nbr += other
        out["s"] = flips.max(axis=1)
        if "graph" in which:
            inside = bits == 1
            out["edges"] = (nbr * inside).sum(axis=1) // 2
            out["min_deg_supp"] = np.where(inside, nbr, n + 1).min(axis=1)
            out["min_deg_comp"] = np.where(~inside, n - nbr, n + 1).min(axis=1)

    if "c" in which or "d" in which:
        counts = _pc(tables[:, None] & pre["cube"][None, :])
        const = (counts == 0) | (counts == (1 << pre["free"])[None, :])
        if "c" in which:
            cert = np.where(const[:, pre["cert_codes"]], pc[None, None, :], n + 1)
            out["c"] = cert.min(axis=2).max(axis=1)
        if "d" in which:
            out["d"] = _depth(const, n)
    return out


def _depth(const: np.ndarray, n: int) -> np.ndarray:
    rows = const.shape[0]
    const = const.reshape((rows,) + (3,) * n)
    big = n + 1
    depth = np.where(const, 0, big)
    for _ in range(n):
        best = np.full(depth.shape, big)
        for axis in range(1, n + 1):
            split = 1 + np.maximum(
                np.take(depth, [0], axis=axis), np.take(depth, [1], axis=axis)
            )
            sl = [slice(None)] * (n + 1)
            sl[axis] = slice(2, 3)
            sl = tuple(sl)
            best[sl] = np.minimum(best[sl], split)
        depth = np.where(const, 0, best)
    return depth.reshape(rows, -1)[:, -1]
