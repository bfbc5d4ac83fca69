import io
import json

import pytest

from bfc.cli import run
from bfc.constructions import paper_example_n4
from bfc.core import BooleanFunction, dumps, dumps_support


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def example(tmp_path):
    path = tmp_path / "ex.bft"
    path.write_text(dumps(paper_example_n4()))
    return str(path)


@pytest.fixture
def zero(tmp_path):
    path = tmp_path / "zero.bft"
    path.write_text(dumps(BooleanFunction.constant(3, 0)))
    return str(path)


class TestCensus:
    def test_n4_row(self):
        code, out, _ = call("census", "--n", "4")
        assert code == 0
        assert out.splitlines()[1] == "4 65536 633 2491"

    def test_json(self):
        code, out, _ = call("census", "--n", "3", "--json")
        assert code == 0
        assert json.loads(out) == {
            "rows": [{"n": 3, "total_functions": 256, "deg_equality_count": 55, "f2_equality_count": 83}]
        }

    def test_all_rows_default(self):
        code, out, _ = call("census", "--json")
        rows = json.loads(out)["rows"]
        assert [(r["deg_equality_count"], r["f2_equality_count"]) for r in rows] == [
            (3, 3), (9, 11), (55, 83), (633, 2491)
        ]

    def test_list(self):
        code, out, _ = call("census", "--n", "1", "--list", "--json")
        row = json.loads(out)["rows"][0]
        assert sorted(row["deg_equalities"]) == ["01", "10", "11"]

    def test_over_cap(self):
        code, _, err = call("census", "--n", "5")
        assert code == 2 and "DimensionCap" in err

    def test_byte_identical_and_threads(self, monkeypatch):
        a = call("census", "--n", "4", "--json")[1]
        b = call("census", "--n", "4", "--json", "--threads", "2")[1]
        monkeypatch.setenv("BFC_THREADS", "3")
        c = call("census", "--n", "4", "--json")[1]
        assert a == b == c

    def test_bad_threads_env(self, monkeypatch):
        monkeypatch.setenv("BFC_THREADS", "0")
        assert call("census", "--n", "1")[0] == 2


class TestVerify:
    def test_exhaustive_n3(self):
        code, out, _ = call("verify", "--n", "3", "--mode", "exhaustive")
        assert code == 0 and out.splitlines()[-1] == "ok"

    def test_sampled_json_roundtrip(self):
        code, out, _ = call("verify", "--n", "6", "--mode", "sampled", "--trials", "5", "--seed", "7", "--json")
        assert code == 0
        report = json.loads(out)
        assert report["mode"] == "sampled" and report["trials"] == 10
        assert report["first_failure"] is None
        again = call("verify", "--n", "6", "--mode", "sampled", "--trials", "5", "--seed", "7", "--json")[1]
        assert again == out
        assert json.dumps(report, indent=2) + "\n" == out

    def test_sampled_n10_skips(self):
        code, out, _ = call("verify", "--n", "10", "--mode", "sampled", "--trials", "2", "--json")
        assert code == 0
        assert "vc+D>=n" in json.loads(out)["skipped"]

    def test_exhaustive_over_cap(self):
        assert call("verify", "--n", "5")[0] == 2


class TestFunctionCommands:
    def test_spectrum(self, example):
        code, out, _ = call("spectrum", "--input", example, "--nonzero", "--json")
        data = json.loads(out)
        assert code == 0 and data["scale"] == 16
        assert data["coeffs"][0] == [0, 8]

    def test_anf(self, example):
        code, out, _ = call("anf", "-i", example, "--degree-only")
        assert (code, out) == (0, "2\n")
        code, out, _ = call("anf", "-i", example, "--json")
        assert json.loads(out)["monomials"] == [1, 2, 3, 6, 9, 12]

    def test_vc_witness(self, example):
        code, out, _ = call("vc", "-i", example, "--witness", "--json")
        data = json.loads(out)
        assert data["vc"] == 2 and data["witness"]["t_mask"] == 3
        assert len(data["witness"]["realizers"]) == 4

    def test_design_check(self, tmp_path):
        path = tmp_path / "par.bft"
        path.write_text(dumps(BooleanFunction.from_callable(4, lambda p: sum(p) % 2)))
        assert call("design-check", "-i", str(path), "--d", "2")[0] == 0
        code, out, _ = call("design-check", "-i", str(path), "--d", "3", "--condition", "ii")
        assert code == 1 and out.startswith("fails S=")

    def test_extract(self, tmp_path):
        path = tmp_path / "par.bft"
        path.write_text(dumps(BooleanFunction.from_callable(4, lambda p: sum(p) % 2)))
        code, out, _ = call("extract-shattered", "-i", str(path), "--d", "2", "--json")
        assert code == 0 and json.loads(out)["t_mask"] == 7
        assert call("extract-shattered", "-i", str(path), "--d", "3")[0] == 2

    def test_measures(self, example):
        code, out, _ = call("measures", "-i", example)
        assert code == 0
        assert "vc+deg>=n 4 >= 4 holds" in out

    def test_measures_zero_function(self, zero):
        code, _, err = call("measures", "-i", zero)
        assert code == 2 and "ZeroFunction" in err

    def test_measures_unknown(self, example):
        assert call("measures", "-i", example, "--set", "vc,bogus")[0] == 2

    def test_measures_caps(self, example):
        code, out, _ = call("measures", "-i", example, "--cert-cap", "3", "--json")
        assert "c" in json.loads(out)["skipped"]

    def test_support_format_input(self, tmp_path):
        path = tmp_path / "ex.supp"
        path.write_text(dumps_support(paper_example_n4()))
        assert call("vc", "-i", str(path))[1] == "vc 2\n"


class TestConstruct:
    def test_subcube(self):
        code, out, _ = call("construct", "subcube", "--n", "3", "--fix", "1=1")
        assert (code, out) == (0, "3\n01010101\n")

    def test_roundtrip_through_file(self, tmp_path):
        path = tmp_path / "c.bft"
        assert call("construct", "counterexample15", "-o", str(path))[0] == 0
        code, out, _ = call("measures", "-i", str(path), "--set", "vc,s")
        assert "vc+s>=n 14 >= 15 FAILS (not a theorem)" in out
        assert code == 0

    def test_random_seeded(self):
        a = call("construct", "random", "--n", "5", "--seed", "3")[1]
        assert a == call("construct", "random", "--n", "5", "--seed", "3")[1]
        assert a != call("construct", "random", "--n", "5", "--seed", "4")[1]

    def test_low_degree_support_format(self):
        code, out, _ = call("construct", "low-degree", "--n", "4", "--d", "1", "--format", "supp")
        assert code == 0 and out.startswith("supp 4\n")

    @pytest.mark.parametrize(
        "argv",
        [
            ["construct", "subcube"],
            ["construct", "low-degree", "--n", "4"],
            ["construct", "subcube", "--n", "3", "--fix", "1:1"],
            ["construct", "subcube", "--n", "3", "--fix", "4=1"],
        ],
    )
    def test_usage_errors(self, argv):
        assert call(*argv)[0] == 2


class TestErrors:
    def test_unknown_flag(self):
        assert call("census", "--bogus")[0] == 2

    def test_no_command(self):
        assert call()[0] == 2

    def test_missing_file(self, tmp_path):
        code, _, err = call("vc", "-i", str(tmp_path / "nope.bft"))
        assert code == 2 and "cannot read" in err

    def test_malformed_reports_location(self, tmp_path):
        path = tmp_path / "bad.bft"
        path.write_text("2\n01x1\n")
        code, _, err = call("vc", "-i", str(path))
        assert code == 2 and f"{path}:2:3" in err

    def test_transform_cap(self, example):
        code, _, err = call("spectrum", "-i", example, "--transform-cap", "3")
        assert code == 2 and "DimensionCap" in err

    def test_help(self):
        assert call("--help")[0] == 0
