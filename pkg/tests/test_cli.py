import json

import pytest

from eisenstein.cli import run
from eisenstein.core import EInt, parse
from eisenstein.render import PlotKind, PlotSpec, render_svg


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBasicCommands:
    def test_phi(self, capsys):
        code, out, _ = invoke(capsys, "phi", "48-72p")
        assert code == 0 and out.strip() == "5184"

    def test_phi_json_breakdown(self, capsys):
        code, out, _ = invoke(capsys, "phi", "48-72p", "--json")
        data = json.loads(out)
        assert data["value"] == 5184
        assert ["2+p", 2, 6] in data["breakdown"]

    def test_reduce(self, capsys):
        code, out, _ = invoke(capsys, "reduce", "17-3p", "--mod", "8+5p")
        assert code == 0 and out.strip() == "12"

    def test_group_json(self, capsys):
        code, out, _ = invoke(capsys, "group", "0-6p", "--json")
        assert code == 0
        assert out.strip() == '{"order":18,"invariant_factors":[3,6],"cyclic":false}'

    def test_group_text(self, capsys):
        code, out, _ = invoke(capsys, "group", "0-6p")
        assert code == 0 and out.strip() == "Z_3 x Z_6"

    def test_add_mul_conj_norm(self, capsys):
        assert invoke(capsys, "add", "1+2p", "2+p")[1].strip() == "3+3p"
        assert invoke(capsys, "mul", "1-p", "1+p")[1].strip() == "2+p"
        assert invoke(capsys, "conj", "2+p")[1].strip() == "1-p"
        assert invoke(capsys, "norm", "5+2p")[1].strip() == "19"

    def test_parity(self, capsys):
        assert invoke(capsys, "parity", "48-72p")[1].strip() == "Even"
        assert invoke(capsys, "parity", "40+16p")[1].strip() == "Odd2"

    def test_divrem(self, capsys):
        code, out, _ = invoke(capsys, "divrem", "48-72p", "1-p")
        assert out.split() == ["56-8p", "0"]

    def test_gcd_and_extgcd(self, capsys):
        assert invoke(capsys, "gcd", "48-72p", "3")[1].strip() == "3"
        code, out, _ = invoke(capsys, "extgcd", "2+2p", "0-3p")
        g, s, t = (parse(tok) for tok in out.split())
        assert g == EInt(1, 0)
        assert s * EInt(2, 2) + t * EInt(0, -3) == EInt(1, 0)

    def test_factor_styles(self, capsys):
        _, canonical, _ = invoke(capsys, "factor", "48-72p")
        assert canonical.strip() == "(-1-p) * (2+p)^2 * 2^3 * (5+2p)"
        _, beta, _ = invoke(capsys, "factor", "48-72p", "--unit-style", "beta")
        assert beta.strip() == "(1-p)^2 * 2^3 * (5+2p)"

    def test_factor_json_recomposes(self, capsys):
        for style in ("canonical", "beta"):
            _, out, _ = invoke(
                capsys, "factor", "48-72p", "--unit-style", style, "--json"
            )
            data = json.loads(out)
            value = parse(data["unit"])
            for lit, e in data["factors"]:
                value = value * parse(lit) ** e
            assert value == EInt(48, -72)

    def test_is_prime(self, capsys):
        assert invoke(capsys, "is-prime", "5+2p")[1].strip() == "true"
        assert invoke(capsys, "is-prime", "4")[1].strip() == "false"

    def test_split_prime(self, capsys):
        code, out, _ = invoke(capsys, "split-prime", "7", "--json")
        data = json.loads(out)
        assert data["psi"] == "3+p" and data["q"] == 7
        assert parse(data["psi_bar"]).norm() == 7

    def test_residues(self, capsys):
        code, out, _ = invoke(capsys, "residues", "1-p", "2", "--json")
        assert json.loads(out) == ["0", "1", "2", "p", "1+p", "2+p",
                                   "2p", "1+2p", "2+2p"]

    def test_units(self, capsys):
        code, out, _ = invoke(capsys, "units", "0-3p")
        assert sorted(out.split()) == sorted(["1", "2", "p", "1+p", "2p", "2+2p"])

    def test_inverse_and_powmod(self, capsys):
        assert invoke(capsys, "inverse", "2+2p", "--mod", "0-3p")[1].strip() == "p"
        assert invoke(capsys, "powmod", "2-p", "6", "--mod", "3")[1].strip() == "1"

    def test_euler_fermat(self, capsys):
        code, out, _ = invoke(capsys, "euler-fermat", "2-p", "--mod", "0-3p")
        assert code == 0 and out.strip() == "true"

    def test_order(self, capsys):
        code, out, _ = invoke(capsys, "order", "2", "--mod=-3-6p")
        assert code == 0 and out.strip() == "6"

    def test_primitive_roots(self, capsys):
        code, out, _ = invoke(capsys, "primitive-roots", "0-3p")
        assert sorted(out.split()) == ["1+p", "2p"]

    def test_cyclicity(self, capsys):
        code, out, _ = invoke(capsys, "cyclicity", "3+p", "2")
        assert code == 0 and out.strip() == "true"

    def test_coprime_parts(self, capsys):
        code, out, _ = invoke(capsys, "coprime-parts", "3+p", "2")
        assert code == 0 and out.strip() == "true"

    def test_scan_phi(self, capsys):
        code, out, _ = invoke(capsys, "scan-phi", "--max-norm", "9")
        data = json.loads(out)
        assert data["attained"]["6"] == ["3+p", "3+2p", "3"]
        assert data["missing_even"] == [4]


class TestPlot:
    def test_writes_deterministic_file(self, capsys, tmp_path):
        out_file = tmp_path / "parity.svg"
        code, out, _ = invoke(
            capsys, "plot", "--kind", "parity", "--max-norm", "16",
            "--out", str(out_file),
        )
        assert code == 0
        document = out_file.read_text(encoding="utf-8")
        assert document == render_svg(PlotSpec(PlotKind.PARITY, 16))

    def test_json_reports_path(self, capsys, tmp_path):
        out_file = tmp_path / "primes.svg"
        code, out, _ = invoke(
            capsys, "plot", "--kind", "primes", "--max-norm", "19",
            "--out", str(out_file), "--json",
        )
        data = json.loads(out)
        assert data["out"] == str(out_file)
        assert data["bytes"] == len(out_file.read_bytes())


class TestErrorsAndEscapes:
    def test_bad_literal_is_usage_error(self, capsys):
        code, _, err = invoke(capsys, "norm", "xyz")
        assert code == 2 and "position" in err

    def test_wrong_arity_is_usage_error(self, capsys):
        code, _, err = invoke(capsys, "add", "1")
        assert code == 2

    def test_domain_error_is_exit_one(self, capsys):
        code, _, err = invoke(capsys, "inverse", "3", "--mod", "0-3p")
        assert code == 1 and "not invertible" in err

    def test_factor_zero_is_exit_one(self, capsys):
        code, _, err = invoke(capsys, "factor", "0")
        assert code == 1

    def test_unknown_command_is_exit_two(self, capsys):
        assert invoke(capsys, "frobnicate")[0] == 2

    def test_lit_escape(self, capsys):
        code, out, _ = invoke(capsys, "norm", "--lit=-5p")
        assert code == 0 and out.strip() == "25"

    def test_quoted_negative_literal(self, capsys):
        code, out, _ = invoke(capsys, "phi", "0-6p")
        assert code == 0 and out.strip() == "18"

    def test_text_outputs_reparse(self, capsys):
        for argv in (["conj", "2+p"], ["gcd", "48-72p", "3"],
                     ["inverse", "2+2p", "--mod", "0-3p"]):
            _, out, _ = invoke(capsys, *argv)
            parse(out.strip())  # must not raise
