import json
from fractions import Fraction

import jsonschema
import pytest

from zetali import load_table, rational_from_str
from zetali.cli import build_parser, main, output_schema


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def validate(obj, def_name):
    schema = dict(output_schema())
    schema["oneOf"] = [{"$ref": f"#/$defs/{def_name}"}]
    jsonschema.validate(obj, schema)


class TestStieltjesCommand:
    def test_csv_table(self, capsys):
        code, out, _ = run_cli(capsys, "stieltjes", "--n-max", "8", "--prec", "192")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[2] == "n,value"
        rows = lines[3:]
        assert len(rows) == 9
        assert rows[0].startswith("0,0.5772156649")

    def test_single_row(self, capsys):
        code, out, _ = run_cli(capsys, "stieltjes", "--n-max", "0")
        assert code == 0
        assert len(out.strip().splitlines()) == 4

    def test_bad_prec_exits_1_with_usage(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["stieltjes", "--n-max", "2", "--prec", "0"])
        assert err.value.code == 1
        assert "usage" in capsys.readouterr().err

    def test_json_validates(self, capsys):
        code, out, _ = run_cli(capsys, "stieltjes", "--n-max", "3",
                               "--format", "json")
        assert code == 0
        validate(json.loads(out), "gamma_table")

    def test_out_file_is_loadable_full_precision(self, capsys, tmp_path):
        path = tmp_path / "table.json"
        code, out, _ = run_cli(capsys, "stieltjes", "--n-max", "4",
                               "--format", "json", "--out", str(path))
        assert code == 0
        table = load_table(path)
        assert table.n_max == 4
        # file carries working-precision digits, stdout target-precision
        file_digits = json.loads(path.read_text())["values"][0]
        stdout_digits = json.loads(out)["values"][0]
        assert len(file_digits) > len(stdout_digits)

    def test_table_flag_roundtrip(self, capsys, tmp_path):
        path = tmp_path / "table.json"
        run_cli(capsys, "stieltjes", "--n-max", "4", "--out", str(path))
        code, out, _ = run_cli(capsys, "stieltjes", "--n-max", "3",
                               "--table", str(path))
        assert code == 0
        assert out.strip().splitlines()[3].startswith("0,0.5772156649")

    def test_classic_table_input_is_converted(self, capsys, tmp_path):
        # a classic-normalization table on --table is converted on the fly
        import mpmath as mp
        from zetali import CONVENTION_CLASSIC, GammaTable, save_table
        with mp.workprec(150):
            values = tuple(mp.stieltjes(n) for n in range(4))
        path = tmp_path / "classic.json"
        save_table(GammaTable(CONVENTION_CLASSIC, 3, values, 150), path)
        code, out, _ = run_cli(capsys, "eta", "--n-max", "3",
                               "--table", str(path), "--prec", "96")
        assert code == 0
        assert out.strip().splitlines()[3].split(",")[1].startswith("-0.5772156649")

    def test_limit_method(self, capsys):
        code, out, _ = run_cli(capsys, "stieltjes", "--method", "limit",
                               "--x-max", "2000", "--n-max", "0", "--prec", "64")
        assert code == 0
        value = float(out.strip().splitlines()[-1].split(",")[1])
        assert abs(value - 0.5772156649) < 3e-4

    def test_limit_requires_x_max(self, capsys):
        code, _, err = run_cli(capsys, "stieltjes", "--method", "limit",
                               "--n-max", "0")
        assert code == 1
        assert "x-max" in err

    def test_guard_too_small_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "stieltjes", "--n-max", "2",
                               "--guard", "4")
        assert code == 2
        assert "precision infeasible" in err


class TestEtaCommand:
    def test_methods_agree(self, capsys):
        rows = {}
        for method in ("recurrence", "explicit", "series"):
            code, out, _ = run_cli(capsys, "eta", "--n-max", "5",
                                   "--method", method, "--prec", "96")
            assert code == 0
            rows[method] = out.strip().splitlines()[3:]
            assert len(rows[method]) == 6
            assert rows[method][0].split(",")[1].startswith("-0.57721566")
        for ra, rb, rc in zip(rows["recurrence"], rows["explicit"], rows["series"]):
            va, vb, vc = (float(r.split(",")[1]) for r in (ra, rb, rc))
            assert abs(va - vb) < 1e-20
            assert abs(va - vc) < 1e-20

    def test_limit_method(self, capsys):
        code, out, _ = run_cli(capsys, "eta", "--method", "limit", "--n-max", "0",
                               "--x-max", "100000", "--prec", "64")
        assert code == 0
        value = float(out.strip().splitlines()[-1].split(",")[1])
        assert abs(value + 0.5772156649) < 1e-2

    def test_json_validates(self, capsys):
        code, out, _ = run_cli(capsys, "eta", "--n-max", "3", "--format", "json")
        assert code == 0
        obj = json.loads(out)
        validate(obj, "eta_table")
        assert obj["provenance"] == "recurrence"


class TestGammaInvertCommand:
    def test_roundtrip_matches_direct_table(self, capsys):
        code, direct, _ = run_cli(capsys, "stieltjes", "--n-max", "5")
        assert code == 0
        code, inverted, _ = run_cli(capsys, "gamma-invert", "--n-max", "5")
        assert code == 0
        d_rows = direct.strip().splitlines()[3:]
        i_rows = inverted.strip().splitlines()[3:]
        for dr, ir in zip(d_rows, i_rows):
            assert abs(float(dr.split(",")[1]) - float(ir.split(",")[1])) < 1e-25

    def test_json_validates(self, capsys):
        code, out, _ = run_cli(capsys, "gamma-invert", "--n-max", "2",
                               "--format", "json")
        assert code == 0
        validate(json.loads(out), "gamma_table")


class TestLiCommand:
    def test_lambda_column(self, capsys):
        code, out, _ = run_cli(capsys, "li", "--n-max", "6")
        assert code == 0
        rows = out.strip().splitlines()
        assert rows[2] == "n,lambda_tilde"
        assert rows[3].startswith("1,0.5772156649")

    def test_with_trend_identity(self, capsys):
        code, out, _ = run_cli(capsys, "li", "--n-max", "4", "--with-trend")
        assert code == 0
        rows = out.strip().splitlines()
        assert rows[2] == "n,lambda_tilde,trend,estimate"
        for row in rows[3:]:
            _, lam, trend, est = row.split(",")
            assert abs((float(trend) + float(lam)) - float(est)) < 1e-12

    def test_methods_agree(self, capsys):
        _, a, _ = run_cli(capsys, "li", "--n-max", "6", "--method", "binomial")
        _, b, _ = run_cli(capsys, "li", "--n-max", "6", "--method", "explicit")
        for ra, rb in zip(a.strip().splitlines()[3:], b.strip().splitlines()[3:]):
            assert abs(float(ra.split(",")[1]) - float(rb.split(",")[1])) < 1e-22

    def test_json_validates(self, capsys):
        code, out, _ = run_cli(capsys, "li", "--n-max", "3", "--with-trend",
                               "--format", "json")
        assert code == 0
        validate(json.loads(out), "li_records")


class TestHistogramCommand:
    def test_binned_counts(self, capsys):
        code, out, _ = run_cli(capsys, "histogram", "--n", "10", "--bins", "40")
        assert code == 0
        rows = out.strip().splitlines()
        assert rows[2] == "bin_lower,bin_upper,count"
        bins = rows[3:]
        assert len(bins) == 40
        assert sum(int(r.split(",")[2]) for r in bins) == 138

    def test_raw_values(self, capsys):
        code, out, _ = run_cli(capsys, "histogram", "--n", "10", "--raw")
        assert code == 0
        rows = out.strip().splitlines()
        assert rows[2] == "term_index,value"
        assert len(rows[3:]) == 138

    def test_json_validates(self, capsys):
        code, out, _ = run_cli(capsys, "histogram", "--n", "5", "--bins", "7",
                               "--format", "json")
        assert code == 0
        validate(json.loads(out), "histogram_binned")
        code, out, _ = run_cli(capsys, "histogram", "--n", "5", "--raw",
                               "--format", "json")
        assert code == 0
        validate(json.loads(out), "histogram_raw")

    def test_n_required(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["histogram", "--bins", "5"])
        assert err.value.code == 1


class TestExpandCommand:
    def test_lambda_n2_exact(self, capsys):
        code, out, _ = run_cli(capsys, "expand", "--target", "lambda",
                               "--n", "2", "--format", "json")
        assert code == 0
        obj = json.loads(out)
        validate(obj, "expansion")
        assert obj["target"] == "lambda_tilde"
        got = {tuple(t["k"]): rational_from_str(t["coeff"]) for t in obj["terms"]}
        assert got == {(1, 0, 0): Fraction(2), (0, 1, 0): Fraction(2),
                       (2, 0, 0): Fraction(-1)}

    def test_eta_csv(self, capsys):
        code, out, _ = run_cli(capsys, "expand", "--target", "eta", "--n", "2")
        assert code == 0
        rows = out.strip().splitlines()
        assert rows[2] == "k,coeff"
        assert rows[3] == "0 1 0,-2/1"
        assert rows[4] == "2 0 0,1/1"

    def test_gamma_expansion(self, capsys):
        code, out, _ = run_cli(capsys, "expand", "--target", "gamma",
                               "--n", "3", "--format", "json")
        assert code == 0
        obj = json.loads(out)
        got = {tuple(t["k"]): rational_from_str(t["coeff"]) for t in obj["terms"]}
        assert got == {(0, 0, 1, 0): Fraction(-1, 3), (1, 1, 0, 0): Fraction(1, 2),
                       (3, 0, 0, 0): Fraction(-1, 6)}


class TestVerifyCommand:
    def test_passes_and_is_deterministic(self, capsys):
        code1, out1, _ = run_cli(capsys, "verify", "--n-max", "6")
        code2, out2, _ = run_cli(capsys, "verify", "--n-max", "6")
        assert code1 == code2 == 0
        assert out1 == out2
        for line in out1.strip().splitlines()[3:]:
            assert line.endswith(",pass")

    def test_json_validates(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--n-max", "5",
                               "--format", "json")
        assert code == 0
        obj = json.loads(out)
        validate(obj, "verify_report")
        assert obj["passed"] is True

    def test_prec_floor(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--n-max", "4", "--prec", "64")
        assert code == 1
        assert "target_bits" in err


class TestParser:
    def test_unknown_command_exits_1(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["transmogrify"])
        assert err.value.code == 1

    def test_out_mirrors_stdout(self, capsys, tmp_path):
        path = tmp_path / "eta.csv"
        code, out, _ = run_cli(capsys, "eta", "--n-max", "2",
                               "--out", str(path))
        assert code == 0
        assert path.read_text() == out

    def test_parser_builds(self):
        parser = build_parser()
        args = parser.parse_args(["stieltjes", "--n-max", "3"])
        assert args.n_max == 3 and args.prec == 192 and args.guard == "auto"
