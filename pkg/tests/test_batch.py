import numpy as np
import pytest

import oracles
from bfc.batch import measure_batch, pack, table_range, unpack
from bfc.census import scalar_measures
from bfc.core import BooleanFunction
from bfc.errors import DimensionCap
from bfc.vc import DESIGN_CHECKS, design_order
from bfc.core import support

KEYS = ("weight", "spec", "deg", "degf2", "vc", "s", "c", "d", "order_i", "edges",
        "min_deg_supp", "min_deg_comp")


def test_pack_roundtrip():
    rng = np.random.default_rng(0)
    for _ in range(20):
        table = rng.integers(0, 2, 32).astype(np.uint8)
        assert unpack(pack(table), 5).tolist() == table.tolist()


def compare(tables, n):
    batch = measure_batch(tables, n)
    for row, packed in enumerate(tables):
        f = BooleanFunction(n, unpack(int(packed), n))
        scalar = scalar_measures(f)
        for key in KEYS:
            assert batch[key][row] == scalar[key][0], (key, f.to_bits())
        fam = support(f)
        for cond, key in (("ii", "order_ii"), ("disjoint", "order_disjoint")):
            holds = [DESIGN_CHECKS[cond](fam, d).holds for d in range(n)]
            expect = max((d for d in range(n) if all(holds[: d + 1])), default=-1)
            assert min(batch[key][row], n - 1) == expect


@pytest.mark.parametrize("n", [1, 2, 3])
def test_matches_scalar_library_exhaustively(n):
    compare(table_range(1, 1 << (1 << n)), n)


def test_matches_scalar_library_random_n4():
    rng = np.random.default_rng(4)
    compare(rng.integers(1, 1 << 16, 300).astype(np.uint64), 4)


def test_matches_scalar_library_random_n5_n6():
    rng = np.random.default_rng(56)
    for n in (5, 6):
        tables = rng.integers(1, 2**63, 20, dtype=np.int64).astype(np.uint64)
        tables &= np.uint64((1 << (1 << n)) - 1) if n < 6 else np.uint64(2**64 - 1)
        tables = tables[tables > 0]
        compare(tables, n)


def test_zero_function_sentinels():
    m = measure_batch(np.array([0], dtype=np.uint64), 3)
    assert m["weight"][0] == 0
    assert m["vc"][0] == -1
    assert m["deg"][0] == m["degf2"][0] == -1
    assert m["order_i"][0] == 3


def test_oracle_spot_checks_n3():
    tables = table_range(1, 256)
    m = measure_batch(tables, 3)
    for row, packed in enumerate(tables):
        table = unpack(int(packed), 3).tolist()
        assert m["vc"][row] == oracles.vc_dim(oracles.family(table), 3)
        assert m["deg"][row] == oracles.fourier_degree(table, 3)
        assert m["c"][row] == oracles.certificate(table, 3)


def test_subset_of_measures():
    m = measure_batch(table_range(1, 16), 2, ("vc",))
    assert set(m) == {"weight", "vc"}


def test_cap():
    with pytest.raises(DimensionCap):
        measure_batch(np.array([1], dtype=np.uint64), 7)


def test_design_order_agrees():
    rng = np.random.default_rng(9)
    tables = rng.integers(1, 1 << 16, 100).astype(np.uint64)
    m = measure_batch(tables, 4, ("orders",))
    for row, packed in enumerate(tables):
        fam = support(BooleanFunction(4, unpack(int(packed), 4)))
        assert min(m["order_i"][row], 3) == min(design_order(fam), 3)
