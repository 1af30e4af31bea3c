import json
from fractions import Fraction
import subprocess
import sys

import pytest

from geninv import GF, QI, SquareMatrix
from geninv.cli import COMPUTE_OPS, CHECK_OPS, EXIT_NO, EXIT_OK, EXIT_USAGE, run
from geninv.formats import dumps, matrix_from_dict
from geninv.monoid import full_matrix_monoid

from conftest import M

F2 = GF(2)
A = M([[1, 0], [1, 0]])
D = M([[1, 1], [0, 0]])
I2 = SquareMatrix.identity(QI, 2)


def machine(capsys, argv):
    code = run(argv + ["--format", "machine"])
    out = capsys.readouterr().out
    return code, json.loads(out), out


@pytest.fixture
def files(write_matrix):
    return {
        "a": write_matrix("a", A),
        "d": write_matrix("d", D),
        "I": write_matrix("I", I2),
        "g2": write_matrix("g2", M([[1, 1], [0, 0]], F2)),
        "nil": write_matrix("nil", M([[0, 1], [0, 0]])),
        "e": write_matrix("e", M([[1, 0], [0, 0]])),
    }


class TestCompute:
    def test_along(self, capsys, files):
        code, out, _ = machine(capsys, ["compute", "along", "--a", files["a"], "--d", files["d"]])
        assert code == EXIT_OK and out["status"] == "exists"
        assert matrix_from_dict(out["value"]) == M([[Fraction(1, 2), Fraction(1, 2)], [0, 0]])

    def test_mp_round_trip(self, capsys, files, tmp_path):
        code, out, raw = machine(capsys, ["compute", "mp", "--a", files["a"]])
        assert code == EXIT_OK
        path = tmp_path / "mp.json"
        path.write_text(raw)
        code, again, _ = machine(capsys, ["compute", "mp", "--a", str(path)])
        assert matrix_from_dict(again["value"]) == A

    def test_mp_absent_over_gf2(self, capsys, files):
        code, out, _ = machine(capsys, ["compute", "mp", "--a", files["g2"]])
        assert code == EXIT_NO and out["status"] == "not_exists" and out["value"] is None
        assert matrix_from_dict(out["witnesses"]["unit"]["u"]) == M([[0, 0], [0, 1]], F2)
        assert out["trace"]

    def test_group_nilpotent(self, capsys, files):
        code, out, _ = machine(capsys, ["compute", "group", "--a", files["nil"]])
        assert code == EXIT_NO and out["status"] == "not_exists"
        assert any("singular" in t for t in out["trace"])

    @pytest.mark.parametrize("op", COMPUTE_OPS)
    def test_every_op_runs(self, capsys, files, op):
        code = run(["compute", op, "--a", files["a"], "--b", files["I"], "--d", files["d"], "--format", "machine"])
        assert code in (EXIT_OK, EXIT_NO)
        json.loads(capsys.readouterr().out)

    def test_triple_routes(self, capsys, files):
        code, out, _ = machine(capsys, ["compute", "triple", "--a", files["a"], "--b", files["I"], "--d", files["d"]])
        assert code == EXIT_OK
        assert matrix_from_dict(out["value"]) == M([[Fraction(1, 2), Fraction(1, 2)], [0, 0]])

    def test_human_output(self, capsys, files):
        assert run(["compute", "along", "--a", files["a"], "--d", files["d"]]) == EXIT_OK
        assert "1/2" in capsys.readouterr().out

    def test_out_file(self, capsys, files, tmp_path):
        target = tmp_path / "r.json"
        assert run(["compute", "mp", "--a", files["a"], "--format", "machine", "--out", str(target)]) == EXIT_OK
        assert json.loads(target.read_text())["status"] == "exists"


class TestCheck:
    def test_gmp_left_witnesses(self, capsys, files):
        code, out, _ = machine(capsys, ["check", "gmp-left", "--a", files["a"]])
        assert code == EXIT_OK
        assert matrix_from_dict(out["witnesses"]["x"]) == I2
        assert matrix_from_dict(out["witnesses"]["y"]) == I2.scale(Fraction(1, 2))

    def test_ep(self, capsys, files):
        assert run(["check", "ep", "--a", files["a"]]) == EXIT_NO
        assert run(["check", "ep", "--a", files["e"]]) == EXIT_OK

    @pytest.mark.parametrize("op", CHECK_OPS)
    def test_every_op_runs(self, capsys, files, op):
        code = run(["check", op, "--a", files["a"], "--b", files["I"], "--d", files["d"], "--e", files["e"],
                    "--format", "machine"])
        assert code in (EXIT_OK, EXIT_NO)
        json.loads(capsys.readouterr().out)


class TestTables:
    @pytest.fixture
    def table(self, tmp_path):
        path = tmp_path / "m2.json"
        path.write_text(json.dumps(full_matrix_monoid(2, 2).to_dict()))
        return str(path)

    def test_compute_on_table(self, capsys, table):
        mon = full_matrix_monoid(2, 2)
        a = mon.index[M([[1, 0], [0, 0]], F2)]
        assert run(["compute", "group", "--table", table, "--a", str(a)]) == EXIT_OK
        assert run(["compute", "inner", "--table", table, "--a", str(a)]) == EXIT_USAGE

    def test_oracle(self, capsys, table):
        mon = full_matrix_monoid(2, 2)
        a = mon.index[M([[1, 1], [0, 0]], F2)]
        code, out, _ = machine(capsys, ["oracle", "--tag", "mp", "--universe", f"table:{table}",
                                        "--subjects", str(a)])
        assert code == EXIT_NO and out["count"] == 0
        code, out, _ = machine(capsys, ["oracle", "--tag", "inner", "--universe", "gf:2:2", "--subjects", str(a)])
        assert code == EXIT_OK and out["count"] > 0


class TestVerifyAndSearch:
    def test_verify_theorem(self, capsys):
        code, out, _ = machine(capsys, ["verify", "--theorem", "T2.19", "--universe", "gf:2:2"])
        assert code == EXIT_OK
        assert out["reports"][0]["instances_checked"] == 4096
        assert out["summary"]["counterexamples"] == 0

    def test_verify_list(self, capsys):
        code, out, _ = machine(capsys, ["verify", "--list"])
        assert code == EXIT_OK and len(out["registry"]) == 28

    def test_verify_jobs_byte_identical(self, capsys):
        argv = ["verify", "--theorem", "L2.18,C3.9", "--universe", "gf:2:2", "--format", "machine"]
        run(argv + ["--jobs", "1"])
        one = capsys.readouterr().out
        run(argv + ["--jobs", "2"])
        assert capsys.readouterr().out == one

    def test_properties(self, capsys):
        code, out, _ = machine(capsys, ["verify", "--properties", "--samples", "8", "--seed", "2"])
        assert code == EXIT_OK and out["properties"]["failures"] == []

    def test_cline_explicit(self, capsys, files):
        code, out, _ = machine(capsys, ["search", "--question", "cline", "--a", files["a"], "--b", files["I"],
                                        "--d", files["d"]])
        assert code == EXIT_OK and out["fails_count"] == 1

    def test_remark(self, capsys):
        code, out, _ = machine(capsys, ["search", "--question", "remark-420", "--universe", "gf:2:2"])
        assert code == EXIT_OK and out["pairs_scanned"] == 256 and out["instances"] == []


class TestErrors:
    @pytest.mark.parametrize("argv", [
        ["compute", "mp", "--a", "/nonexistent.json"],
        ["compute", "along", "--a", "A_FILE"],
        ["verify", "--theorem", "T9.9", "--universe", "gf:2:2"],
        ["verify", "--theorem", "R2.20", "--universe", "gf:2:2"],
        ["verify", "--theorem", "L3.1"],
        ["verify", "--theorem", "all", "--universe", "gf:4:2"],
        ["verify", "--theorem", "all", "--universe", "qi:3:random"],
        ["search", "--question", "cline"],
        ["compute", "frobnicate"],
        [],
    ])
    def test_usage_errors(self, capsys, files, argv):
        argv = [files["a"] if x == "A_FILE" else x for x in argv]
        assert run(argv) == EXIT_USAGE

    def test_malformed_matrix(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"ring": "Qi", "n": 2, "entries": [["1", "x"], ["0", "0"]]}')
        assert run(["compute", "mp", "--a", str(bad)]) == EXIT_USAGE
        assert "(0, 1)" in capsys.readouterr().err

    def test_mixed_domains(self, capsys, files):
        assert run(["compute", "along", "--a", files["a"], "--d", files["g2"]]) == EXIT_USAGE

    def test_tier_mismatch(self, capsys, tmp_path):
        path = tmp_path / "two.json"
        path.write_text('{"k": 2, "identity": 0, "mul": [[0, 1], [1, 1]]}')
        assert run(["verify", "--theorem", "L3.1", "--universe", f"table:{path}"]) == EXIT_USAGE


def test_console_entry_point(files):
    out = subprocess.run([sys.executable, "-m", "geninv", "compute", "along", "--a", files["a"], "--d", files["d"],
                          "--format", "machine"], capture_output=True, text=True)
    assert out.returncode == 0 and json.loads(out.stdout)["status"] == "exists"


