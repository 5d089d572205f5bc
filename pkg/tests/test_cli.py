"""Command-line surface: outputs, formats, refusals, exit codes."""

import json

import pytest

from palcomp import formulas
from palcomp.cli import main
from palcomp.formulas import formula_count
from palcomp.stats import Family, Sign, parse_modulus


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCount:
    def test_brute_fixture(self, capsys):
        code, out, _ = run(
            capsys, "count", "--family", "ac", "--sign", "plus", "--n", "6",
            "--k", "0", "--mod", "inf", "--method", "brute",
        )
        assert code == 0 and out == "11\n"

    def test_formula_fixture(self, capsys):
        code, out, _ = run(
            capsys, "count", "--family", "pc", "--sign", "total", "--n", "4",
            "--k", "1", "--mod", "inf", "--method", "formula",
        )
        assert code == 0 and out == "4\n"

    def test_gf_fixture(self, capsys):
        code, out, _ = run(
            capsys, "count", "--family", "ac", "--sign", "total", "--n", "6",
            "--k", "2", "--mod", "1", "--method", "gf",
        )
        assert code == 0 and out == "15\n"

    @pytest.mark.parametrize("sign", ["plus", "minus", "total"])
    def test_methods_agree_byte_for_byte(self, capsys, sign):
        outputs = set()
        for method in ("formula", "gf", "brute"):
            code, out, _ = run(
                capsys, "count", "--family", "ac", "--reduced", "--sign", sign,
                "--n", "9", "--k", "1", "--mod", "3", "--method", method,
            )
            assert code == 0
            outputs.add(out)
        assert len(outputs) == 1

    def test_variant_requires_formula_method(self, capsys):
        code, _, err = run(
            capsys, "count", "--family", "ac", "--sign", "plus", "--n", "6",
            "--k", "0", "--mod", "inf", "--method", "brute", "--variant", "2",
        )
        assert code == 2
        assert "--method formula" in err

    def test_variant_selects_a_formula(self, capsys):
        code, out, _ = run(
            capsys, "count", "--family", "ac", "--sign", "plus", "--n", "6",
            "--k", "0", "--mod", "inf", "--method", "formula", "--variant", "3",
        )
        assert code == 0 and out == "11\n"

    def test_brute_needs_force_above_limit(self, capsys):
        args = ["count", "--family", "pc", "--sign", "total", "--n", "21",
                "--k", "0", "--mod", "inf", "--method", "brute"]
        code, _, err = run(capsys, *args)
        assert code == 2 and "--force" in err
        code, out, _ = run(capsys, *args, "--force", "--cap", "21")
        assert code == 0 and out == f"{1 << 10}\n"

    def test_cap_refusal_is_explicit(self, capsys):
        code, _, err = run(
            capsys, "count", "--family", "pc", "--sign", "total", "--n", "22",
            "--k", "0", "--mod", "inf", "--method", "brute", "--force", "--cap", "21",
        )
        assert code == 2 and "cap is 21" in err

    def test_unknown_flag_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["count", "--family", "pc", "--sign", "total", "--n", "4",
                  "--k", "0", "--mod", "inf", "--bogus"])
        assert exc.value.code == 2


class TestTable:
    def test_known_column(self, capsys):
        code, out, _ = run(
            capsys, "table", "--family", "ac", "--sign", "total", "--mod", "2",
            "--n-max", "15", "--k-max", "0",
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n\tk=0"
        column = [int(line.split("\t")[1]) for line in lines[1:]]
        assert column == [1, 1, 1, 3, 3, 7, 11, 17, 33, 49, 89, 147, 243, 423, 691, 1185]

    def test_cells_match_count(self, capsys):
        code, out, _ = run(
            capsys, "table", "--family", "pc", "--reduced", "--sign", "plus",
            "--mod", "inf", "--n-max", "6", "--k-max", "2", "--method", "gf",
        )
        assert code == 0
        for line in out.splitlines()[1:]:
            fields = line.split("\t")
            n = int(fields[0])
            for k, value in enumerate(fields[1:]):
                expected = formula_count(Family.PC, True, Sign.PLUS, parse_modulus("inf"), n, k)
                assert int(value) == expected

    def test_n0_k0_cell(self, capsys):
        for family in ("pc", "ac"):
            code, out, _ = run(
                capsys, "table", "--family", family, "--sign", "total",
                "--mod", "inf", "--n-max", "0", "--k-max", "0",
            )
            assert code == 0
            assert out.splitlines()[1] == "0\t1"


class TestSequence:
    def test_bfile_fixture(self, capsys):
        code, out, _ = run(
            capsys, "sequence", "--family", "ac", "--reduced", "--sign", "total",
            "--mod", "inf", "--k", "0", "--n-max", "7",
        )
        assert code == 0
        assert out == "0 1\n1 1\n2 1\n3 2\n4 3\n5 5\n6 8\n7 13\n"

    def test_bfile_round_trip(self, capsys):
        code, out, _ = run(
            capsys, "sequence", "--family", "ac", "--sign", "plus", "--mod", "inf",
            "--k", "0", "--n-max", "12",
        )
        assert code == 0
        for line in out.splitlines():
            idx_text, value_text = line.split(" ")
            value = formula_count(Family.AC, False, Sign.PLUS, parse_modulus("inf"),
                                  int(idx_text), 0)
            assert int(value_text) == value

    def test_csv_format(self, capsys):
        code, out, _ = run(
            capsys, "sequence", "--family", "pc", "--sign", "total", "--mod", "inf",
            "--k", "0", "--n-max", "4", "--format", "csv",
        )
        assert code == 0
        assert out == "0,1\n1,1\n2,2\n3,2\n4,4\n"

    def test_empty_range_is_fine(self, capsys):
        code, out, _ = run(
            capsys, "sequence", "--family", "pc", "--sign", "total", "--mod", "inf",
            "--k", "0", "--n-max", "2", "--offset", "5",
        )
        assert code == 0 and out == ""

    def test_offset_starts_the_index(self, capsys):
        code, out, _ = run(
            capsys, "sequence", "--family", "pc", "--sign", "total", "--mod", "inf",
            "--k", "0", "--n-max", "6", "--offset", "4",
        )
        assert code == 0
        assert out == "4 4\n5 4\n6 8\n"

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "seq.txt"
        code, out, _ = run(
            capsys, "sequence", "--family", "pc", "--sign", "total", "--mod", "inf",
            "--k", "0", "--n-max", "3", "--out", str(target),
        )
        assert code == 0 and out == ""
        assert target.read_text() == "0 1\n1 1\n2 2\n3 2\n"

    def test_unwritable_out_path(self, capsys, tmp_path):
        code, _, err = run(
            capsys, "sequence", "--family", "pc", "--sign", "total", "--mod", "inf",
            "--k", "0", "--n-max", "3", "--out", str(tmp_path / "no" / "dir" / "f"),
        )
        assert code == 2 and "cannot write" in err

    def test_concordance_record(self, capsys):
        code, out, _ = run(capsys, "sequence", "--concordance", "A025192", "--n-max", "5")
        assert code == 0
        assert out == "0 1\n1 2\n2 6\n3 18\n4 54\n5 162\n"

    def test_concordance_triangle_needs_k(self, capsys):
        code, _, err = run(capsys, "sequence", "--concordance", "A105422", "--n-max", "4")
        assert code == 2 and "--k" in err
        code, out, _ = run(
            capsys, "sequence", "--concordance", "A105422", "--k", "0", "--n-max", "5"
        )
        assert code == 0
        assert out == "0 1\n1 0\n2 1\n3 1\n4 2\n5 3\n"

    def test_concordance_with_divisor(self, capsys):
        # this record halves the mapped count; division must stay exact
        code, out, _ = run(capsys, "sequence", "--concordance", "A008346", "--n-max", "6")
        assert code == 0
        assert out == "0 1\n1 0\n2 2\n3 1\n4 4\n5 4\n6 9\n"

    def test_concordance_unknown_id(self, capsys):
        code, _, err = run(capsys, "sequence", "--concordance", "A999999", "--n-max", "3")
        assert code == 2 and "no concordance record" in err

    def test_concordance_conflicting_flags(self, capsys):
        code, _, err = run(
            capsys, "sequence", "--concordance", "A025192", "--family", "pc", "--n-max", "3"
        )
        assert code == 2 and "conflicts" in err
        code, _, err = run(
            capsys, "sequence", "--concordance", "A025192", "--k", "2", "--n-max", "3"
        )
        assert code == 2 and "pins k=0" in err

    def test_family_required_without_concordance(self, capsys):
        code, _, err = run(capsys, "sequence", "--n-max", "3")
        assert code == 2 and "--family" in err


class TestVerifyCommand:
    def test_passes_and_exits_zero(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--n-max", "6", "--k-max", "2", "--mods", "1,2,inf",
        )
        assert code == 0
        assert all(line.startswith("PASS") for line in out.splitlines())

    def test_json_report_shape(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--n-max", "4", "--k-max", "1", "--mods", "2,inf",
            "--report", "json",
        )
        assert code == 0
        report = json.loads(out)
        assert isinstance(report, list)
        for item in report:
            assert set(item) == {"check", "params", "status", "expected", "actual"}
            assert item["status"] == "pass"

    def test_trivial_grid(self, capsys):
        code, out, _ = run(capsys, "verify", "--n-max", "0", "--k-max", "0")
        assert code == 0

    def test_mutation_turns_exit_nonzero(self, capsys, monkeypatch):
        honest = formulas.pc_plus_k

        def corrupted(n, k):
            value = honest(n, k)
            return value + 1 if (n, k) == (6, 1) else value

        monkeypatch.setattr(formulas, "pc_plus_k", corrupted)
        code, out, _ = run(
            capsys, "verify", "--n-max", "8", "--k-max", "2", "--mods", "inf",
            "--report", "json",
        )
        assert code == 1
        report = json.loads(out)
        failing = [item for item in report if item["status"] == "fail"]
        assert failing
        grid = next(item for item in failing if item["check"] == "three_path_grid")
        assert grid["params"]["family"] == "pc"
        assert grid["params"]["n"] == 6
        assert grid["params"]["k"] == 1

    def test_bad_modulus_list(self, capsys):
        code, _, err = run(capsys, "verify", "--mods", "1,zero")
        assert code == 2 and "modulus" in err


class TestBijectionCommand:
    def test_encode_decode_fixture(self, capsys):
        code, out, _ = run(capsys, "bijection", "encode", "2,1,3,4,1,1,5")
        assert code == 0 and out == "0,1,1,3,0,0;0,4,1,1,0,0\n"
        code, out, _ = run(capsys, "bijection", "decode", "0,1,1,3,0,0;0,4,1,1,0,0")
        assert code == 0 and out == "2,1,3,4,1,1,5\n"

    def test_encode_rejects_odd_middle(self, capsys):
        code, _, err = run(capsys, "bijection", "encode", "1,1,1")
        assert code == 2 and "middle part 1 is odd" in err

    def test_decode_rejects_invalid_pair(self, capsys):
        code, _, err = run(capsys, "bijection", "decode", "2,0;2,1")
        assert code == 2 and "position" in err

    def test_parse_errors(self, capsys):
        code, _, err = run(capsys, "bijection", "encode", "2,x,1")
        assert code == 2
        code, _, err = run(capsys, "bijection", "decode", "1,2,3")
        assert code == 2 and ";" in err

    def test_empty_composition_round_trip(self, capsys):
        code, out, _ = run(capsys, "bijection", "encode", "")
        assert code == 0 and out == ";\n"
        code, out, _ = run(capsys, "bijection", "decode", ";")
        assert code == 0 and out == "\n"
