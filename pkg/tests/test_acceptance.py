"""The eight acceptance criteria, one test (or parametrised group) each.

A pass/fail line per criterion is printed in the terminal summary.
"""

import io
import time

import numpy as np
import pytest

import oracles
from bfc.algebraic import anf, f2_degree
from bfc.census import verify_exhaustive, verify_sampled
from bfc.cli import run
from bfc.constructions import (
    SubcubeSpec,
    counterexample_n15,
    is_subcube,
    paper_example_n4,
    random_low_f2_degree,
    subcube,
)
from bfc.core import BooleanFunction, mask_from_point, support
from bfc.measures import certificate_complexity, decision_tree_depth, sensitivity
from bfc.spectral import degree, wht
from bfc.vc import extract_shattered_from_design, is_shattered, null_design_check_containment, vc_dimension

acceptance = pytest.mark.acceptance


@acceptance(1, "census reproduction for n = 1..4")
@pytest.mark.parametrize("threads", [1, 8])
def test_census_reproduction(threads):
    expected = {1: (3, 3), 2: (9, 11), 3: (55, 83), 4: (633, 2491)}
    start = time.perf_counter()
    for k, (deg_eq, f2_eq) in expected.items():
        out = io.StringIO()
        assert run(["census", "--n", str(k), "--threads", str(threads)], out, io.StringIO()) == 0
        assert out.getvalue().splitlines()[1] == f"{k} {1 << (1 << k)} {deg_eq} {f2_eq}"
    elapsed = time.perf_counter() - start
    assert elapsed < (60 if threads == 1 else 10)


@acceptance(2, "counterexample regression at n = 15")
def test_counterexample_regression():
    start = time.perf_counter()
    f = counterexample_n15()
    s = sensitivity(f)
    vc = vc_dimension(support(f))[0]
    assert f.weight() == 488
    assert (s, vc) == (7, 7)
    assert vc + s == 14 < 15
    assert 2 * vc + s == 21 >= 15
    assert time.perf_counter() - start < 10


@acceptance(3, "n = 4 equality example")
def test_example_n4():
    points = [
        (0, 0, 1, 1), (0, 1, 0, 0), (0, 1, 0, 1), (0, 1, 1, 1),
        (1, 0, 0, 0), (1, 0, 1, 0), (1, 0, 1, 1), (1, 1, 0, 0),
    ]
    f = paper_example_n4()
    assert support(f).members == tuple(sorted(mask_from_point(p) for p in points))
    assert degree(f) == 2
    assert vc_dimension(support(f))[0] == 2
    assert f2_degree(anf(f)) == 2
    assert not is_subcube(f)


@acceptance(4, "exhaustive invariant suite at n <= 4")
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_exhaustive_suite(n):
    report = verify_exhaustive(n)
    total = (1 << (1 << n)) - 1
    assert report.trials == total
    assert report.first_failure is None
    assert sum(report.failures.values()) == 0
    assert report.passes["design_equivalence"] == total
    assert all(v == total for v in report.passes.values())


@acceptance(5, "subcube equality for n <= 8")
def test_subcube_equality():
    rng = np.random.default_rng(5)
    for n in range(1, 9):
        for k in range(n + 1):
            for _ in range(50):
                coords = rng.choice(np.arange(1, n + 1), size=k, replace=False)
                values = rng.integers(0, 2, size=k)
                f = subcube(SubcubeSpec(n, tuple(zip(coords.tolist(), values.tolist()))))
                vc = vc_dimension(support(f))[0]
                deg, degf2 = degree(f), f2_degree(anf(f))
                assert (vc, deg, degf2) == (n - k, k, k)
                assert vc + deg == n and vc + degf2 == n


@acceptance(6, "extractor soundness on 1000 low-degree instances at n = 8")
def test_extractor_soundness():
    n = 8
    rng = np.random.default_rng(6)
    checked = 0
    for seed in range(1000):
        d = int(rng.integers(0, 4))
        f = random_low_f2_degree(n, n - d - 1, seed)
        fam = support(f)
        assert null_design_check_containment(fam, d).holds
        assert oracles.design_holds_containment(list(fam.members), n, d)
        witness = extract_shattered_from_design(f, d)
        assert bin(witness.t_mask).count("1") == d + 1
        assert is_shattered(fam, witness.t_mask) is not None
        assert oracles.shatters(list(fam.members), witness.t_mask)
        checked += 1
    assert checked == 1000


@acceptance(7, "oracle equivalence for transforms and query measures")
@pytest.mark.parametrize("n", [1, 2, 3])
def test_oracle_equivalence_exhaustive(n):
    for table in oracles.all_tables(n):
        f = BooleanFunction(n, table)
        assert wht(f).coeffs.tolist() == oracles.direct_wht(table, n)
        assert anf(f).coeffs.tolist() == oracles.direct_anf(table, n)
        assert certificate_complexity(f) == oracles.certificate(table, n)
        assert decision_tree_depth(f) == oracles.decision_tree(table, n)


@acceptance(7, "oracle equivalence for transforms and query measures")
def test_oracle_equivalence_sampled():
    rng = np.random.default_rng(7)
    for _ in range(200):
        table = rng.integers(0, 2, 64).tolist()
        f = BooleanFunction(6, table)
        assert wht(f).coeffs.tolist() == oracles.direct_wht(table, 6)
        assert anf(f).coeffs.tolist() == oracles.direct_anf(table, 6)
    for _ in range(200):
        table = rng.integers(0, 2, 32).tolist()
        f = BooleanFunction(5, table)
        assert certificate_complexity(f) == oracles.certificate(table, 5)
        assert decision_tree_depth(f) == oracles.decision_tree(table, 5)


@acceptance(8, "sampled theorem suite at n = 8 and n = 10")
def test_sampled_suite():
    start = time.perf_counter()
    names = ("vc+deg>=n", "vc+degf2>=n", "uncertainty", "sauer_shelah", "schwartz_zippel")
    for n in (8, 10):
        report = verify_sampled(n, 500, seed=7)
        # the all-zero random draw is skipped, so trials may dip below 1000
        assert report.trials >= 999
        for name in names:
            assert report.failures[name] == 0
            assert report.passes[name] == report.trials
        assert report.ok
    assert time.perf_counter() - start < 300
