"""Equality census and batch verification of the trade-off inequalities.

Exhaustive runs enumerate every truth table at ``n <= 4`` through the
vectorised engine in :mod:`bfc.batch`.  Sampled runs draw random and
low-F2-degree functions at larger ``n`` and use the per-function modules.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Optional

import numpy as np

from .algebraic import anf, f2_degree
from .batch import measure_batch, table_range, unpack
from .constructions import random_function, random_low_f2_degree
from .core import BooleanFunction, SetFamily, check_dimension, support
from .measures import (
    certificate_complexity,
    decision_tree_depth,
    one_inclusion_stats,
    sensitivity_profile,
)
from .spectral import fourier_degree, spectral_support_size, wht
from .vc import design_order, sauer_bound, vc_dimension

CENSUS_CAP = 4
SAMPLED_CERTIFICATE_CAP = 8
SAMPLED_DEPTH_CAP = 8
_CHUNK = 4096


@dataclass(frozen=True)
class Check:
    needs: tuple
    test: Callable  # (measures, n) -> bool array


def _sauer(m, n):
    bounds = np.array([sauer_bound(n, d) for d in range(n + 1)])
    return m["weight"] <= bounds[m["vc"]]


def _design_equivalence(m, n):
    cap = n - 1
    i = np.minimum(m["order_i"], cap)
    return (i == np.minimum(m["order_ii"], cap)) & (i == np.minimum(m["order_disjoint"], cap))


def _design_implies_vc(m, n):
    order = np.minimum(m["order_i"], n - 1)
    return (order < 0) | (m["vc"] >= order + 1)


def _min_degree(m, n):
    floor = n - m["s"]
    comp_ok = (m["min_deg_comp"] > n) | (m["min_deg_comp"] >= floor)
    return (m["min_deg_supp"] >= floor) & comp_ok


CHECKS = {
    "vc+deg>=n": Check(("vc", "deg"), lambda m, n: m["vc"] + m["deg"] >= n),
    "vc+degf2>=n": Check(("vc", "degf2"), lambda m, n: m["vc"] + m["degf2"] >= n),
    "uncertainty": Check(("weight", "spec"), lambda m, n: m["weight"] * m["spec"] >= 1 << n),
    "sauer_shelah": Check(("weight", "vc"), _sauer),
    "schwartz_zippel": Check(
        ("weight", "deg"), lambda m, n: m["weight"] << m["deg"] >= 1 << n
    ),
    "deg>=degf2": Check(("deg", "degf2"), lambda m, n: m["deg"] >= m["degf2"]),
    "degf2<=log2_spec": Check(("degf2", "spec"), lambda m, n: (1 << m["degf2"]) <= m["spec"]),
    "s^2>=deg": Check(("s", "deg"), lambda m, n: m["s"] ** 2 >= m["deg"]),
    "vc+D>=n": Check(("vc", "d"), lambda m, n: m["vc"] + m["d"] >= n),
    "vc+C>=n": Check(("vc", "c"), lambda m, n: m["vc"] + m["c"] >= n),
    "2vc+s>=n": Check(("vc", "s"), lambda m, n: 2 * m["vc"] + m["s"] >= n),
    "s<=C<=D": Check(("s", "c", "d"), lambda m, n: (m["s"] <= m["c"]) & (m["c"] <= m["d"])),
    "design_equivalence": Check(
        ("order_i", "order_ii", "order_disjoint"), _design_equivalence
    ),
    "design_implies_vc": Check(("order_i", "vc"), _design_implies_vc),
    "induced_min_degree": Check(("s", "min_deg_supp", "min_deg_comp"), _min_degree),
    "hlw_density": Check(("edges", "vc", "weight"), lambda m, n: m["edges"] <= m["vc"] * m["weight"]),
}


@dataclass
class CensusRow:
    n: int
    total_functions: int
    deg_equality_count: int
    f2_equality_count: int
    deg_equalities: Optional[list] = None
    f2_equalities: Optional[list] = None

    def to_dict(self) -> dict:
        d = asdict(self)
        if self.deg_equalities is None:
            d.pop("deg_equalities")
            d.pop("f2_equalities")
        return d


@dataclass
class SuiteReport:
    n: int
    mode: str
    trials: int = 0
    passes: dict = field(default_factory=dict)
    failures: dict = field(default_factory=dict)
    skipped: dict = field(default_factory=dict)
    first_failure: Optional[dict] = None

    @property
    def ok(self) -> bool:
        return not any(self.failures.values())

    def to_dict(self) -> dict:
        return asdict(self)

    def record(self, name: str, verdicts: np.ndarray, encode: Callable[[int], str]):
        verdicts = np.asarray(verdicts, dtype=bool)
        self.passes[name] = self.passes.get(name, 0) + int(verdicts.sum())
        bad = np.flatnonzero(~verdicts)
        self.failures[name] = self.failures.get(name, 0) + int(bad.size)
        if bad.size and self.first_failure is None:
            self.first_failure = {"check": name, "n": self.n, "table": encode(int(bad[0]))}


def resolve_threads(threads: Optional[int] = None) -> int:
    if threads is None:
        threads = int(os.environ.get("BFC_THREADS", "1"))
    if threads < 1:
        raise ValueError("thread count must be at least 1")
    return threads


def _chunks(lo: int, hi: int, size: int = _CHUNK):
    return [(a, min(a + size, hi)) for a in range(lo, hi, size)]


def _map_chunks(fn, lo: int, hi: int, threads: int):
    parts = _chunks(lo, hi)
    if threads == 1:
        return [fn(a, b) for a, b in parts]
    with ThreadPoolExecutor(threads) as pool:
        return list(pool.map(lambda p: fn(*p), parts))


def _bits_string(packed: int, n: int) -> str:
    return "".join(str(b) for b in unpack(packed, n))


def equality_census(n: int, threads: Optional[int] = None, keep: bool = False) -> CensusRow:
    """Count non-zero ``f`` with ``deg + VC = n`` and with ``deg_F2 + VC = n``.

    With ``keep`` the matching truth tables are returned as bit strings.
    """
    check_dimension(n, CENSUS_CAP, "n (census)")
    total = 1 << (1 << n)

    def work(a, b):
        tables = table_range(a, b)
        m = measure_batch(tables, n, ("vc", "deg", "degf2"))
        return tables[m["vc"] + m["deg"] == n], tables[m["vc"] + m["degf2"] == n]

    parts = _map_chunks(work, 1, total, resolve_threads(threads))
    deg_eq = np.concatenate([p[0] for p in parts])
    f2_eq = np.concatenate([p[1] for p in parts])
    row = CensusRow(n, total, int(deg_eq.size), int(f2_eq.size))
    if keep:
        row.deg_equalities = [_bits_string(int(t), n) for t in deg_eq]
        row.f2_equalities = [_bits_string(int(t), n) for t in f2_eq]
    return row


def verify_exhaustive(
    n: int, threads: Optional[int] = None, checks: Optional[dict] = None
) -> SuiteReport:
    """Run every check on every non-zero function of ``n`` variables."""
    check_dimension(n, CENSUS_CAP, "n (exhaustive verification)")
    checks = CHECKS if checks is None else checks
    total = 1 << (1 << n)

    def work(a, b):
        tables = table_range(a, b)
        m = measure_batch(tables, n)
        return tables, {name: np.asarray(c.test(m, n), dtype=bool) for name, c in checks.items()}

    report = SuiteReport(n, "exhaustive", trials=total - 1)
    for tables, verdicts in _map_chunks(work, 1, total, resolve_threads(threads)):
        for name, v in verdicts.items():
            report.record(name, v, lambda i: _bits_string(int(tables[i]), n))
    return report


def scalar_measures(
    f: BooleanFunction,
    certificate_cap: int = SAMPLED_CERTIFICATE_CAP,
    depth_cap: int = SAMPLED_DEPTH_CAP,
) -> dict:
    """Measures of one function in the batch-engine key convention."""
    spec = wht(f)
    family = support(f)
    graph = one_inclusion_stats(family)
    complement = SetFamily(f.n, tuple(int(i) for i in np.flatnonzero(f.table == 0)))
    m = {
        "weight": f.weight(),
        "spec": spectral_support_size(spec),
        "deg": fourier_degree(spec),
        "degf2": f2_degree(anf(f)),
        "vc": vc_dimension(family)[0],
        "s": int(sensitivity_profile(f).max()),
        "order_i": design_order(family),
        "edges": graph.edge_count,
        "min_deg_supp": graph.min_degree,
        "min_deg_comp": (
            one_inclusion_stats(complement).min_degree if complement.members else f.n + 1
        ),
    }
    if f.n <= certificate_cap:
        m["c"] = certificate_complexity(f, certificate_cap)
    if f.n <= depth_cap:
        m["d"] = decision_tree_depth(f, depth_cap)
    return {k: np.array([v], dtype=np.int64) for k, v in m.items()}


def sampled_functions(n: int, trials: int, seed: int):
    """``trials`` random functions followed by ``trials`` low-F2-degree ones."""
    rng = np.random.default_rng(seed)
    seeds = rng.integers(0, 2**63, size=2 * trials)
    degrees = rng.integers(0, n + 1, size=trials)
    for i in range(trials):
        f = random_function(n, 0.5, int(seeds[i]))
        if f.is_zero():
            continue
        yield f
    for i in range(trials):
        yield random_low_f2_degree(n, int(degrees[i]), int(seeds[trials + i]))


def verify_sampled(
    n: int,
    trials: int,
    seed: int,
    certificate_cap: int = SAMPLED_CERTIFICATE_CAP,
    depth_cap: int = SAMPLED_DEPTH_CAP,
    checks: Optional[dict] = None,
) -> SuiteReport:
    """Sampled version of :func:`verify_exhaustive` for larger ``n``.

    Checks whose measures are unavailable (over cap, or the trace and
    disjointness design orders, which only the exhaustive engine computes)
    are listed in ``skipped``.
    """
    check_dimension(n)
    checks = CHECKS if checks is None else checks
    report = SuiteReport(n, "sampled")
    for f in sampled_functions(n, trials, seed):
        report.trials += 1
        m = scalar_measures(f, certificate_cap, depth_cap)
        for name, c in checks.items():
            missing = [k for k in c.needs if k not in m]
            if missing:
                report.skipped.setdefault(name, f"measures unavailable: {', '.join(missing)}")
                continue
            report.record(name, c.test(m, n), lambda i: f.to_bits())
    return report
