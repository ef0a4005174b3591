import json

import pytest

from palwidth.cli import main, recheck_certificate
from palwidth.palindromes import check_in_group
from palwidth.words import AB, AT, parse
from palwidth import baumslag, wreath


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDecompose:
    def test_wreath_word(self, capsys):
        code, out, _ = run(capsys, "decompose", "--group", "wreath", "ab")
        assert code == 0
        doc = json.loads(out)
        assert doc["group"] == "wreath" and doc["verified"] is True
        assert doc["length"] <= 3 and doc["tool_version"]
        factors = [parse(f, AB) for f in doc["factors"]]
        product = wreath.WreathElement.identity()
        for f in factors:
            assert f.is_palindrome()
            product = product * wreath.evaluate(f)
        assert product == wreath.evaluate(parse("ab", AB))

    def test_wreath_single_factor(self, capsys):
        code, out, _ = run(capsys, "decompose", "--group", "wreath", "b")
        assert code == 0
        assert json.loads(out)["factors"] == ["b"]

    def test_wreath_element_literal(self, capsys):
        code, out, _ = run(
            capsys, "decompose", "--group", "wreath",
            '{"support": {"-1": 2, "0": -2}, "shift": 3}',
        )
        assert code == 0
        assert json.loads(out)["length"] <= 3

    def test_bs_word(self, capsys):
        code, out, _ = run(capsys, "decompose", "--group", "bs:2", "ta")
        assert code == 0
        doc = json.loads(out)
        assert doc["length"] == 2 and doc["verified"] is True
        factors = [parse(f, AT) for f in doc["factors"]]
        product = baumslag.BSElement.identity(2)
        for f in factors:
            assert f.is_palindrome()
            product = product * baumslag.evaluate(f, 2)
        assert product == baumslag.evaluate(parse("ta", AT), 2)

    def test_bs_element_literal(self, capsys):
        code, out, _ = run(
            capsys, "decompose", "--group", "bs:2",
            '{"num": 3, "den_exp": 1, "dil": 1, "n": 2}',
        )
        assert code == 0
        assert json.loads(out)["factors"] == ["t^2 a^3 t^2", "t^-3"]

    def test_recheck_path(self, capsys):
        code, _, _ = run(capsys, "decompose", "--group", "wreath", "ab", "--recheck")
        assert code == 0

    def test_heis_unsupported(self, capsys):
        code, _, err = run(capsys, "decompose", "--group", "heis", "ab")
        assert code == 2 and "no decomposition" in err

    def test_parse_error(self, capsys):
        code, _, err = run(capsys, "decompose", "--group", "wreath", "a c")
        assert code == 2 and "unknown generator" in err

    def test_bad_group(self, capsys):
        code, _, _ = run(capsys, "decompose", "--group", "nope", "a")
        assert code == 2

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "cert.json"
        code, out, _ = run(capsys, "decompose", "--group", "wreath", "ab", "--out", str(path))
        assert code == 0
        assert json.loads(path.read_text()) == json.loads(out)


class TestWitness:
    def test_commutator(self, capsys):
        code, out, _ = run(capsys, "witness", '{"support": {"0": -1, "1": 1}, "shift": 0}')
        assert code == 0
        doc = json.loads(out)
        assert doc["witness"]["support"] == {"0": 1}
        assert doc["matches"] is True

    def test_identity(self, capsys):
        code, out, _ = run(capsys, "witness", '{"support": {}, "shift": 0}')
        assert code == 0
        assert json.loads(out)["witness"]["support"] == {}

    def test_not_in_derived_subgroup(self, capsys):
        code, _, err = run(capsys, "witness", '{"support": {}, "shift": 1}')
        assert code == 1 and "derived" in err

    def test_malformed_json_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "witness", '{"support": ')
        assert code == 2


class TestVerify:
    def test_pass(self, capsys):
        code, out, _ = run(capsys, "verify", "wreath-hom", "--seed", "7", "--cases", "300")
        assert code == 0
        doc = json.loads(out)
        assert doc["passed"] is True and doc["seed"] == 7 and doc["cases"] == 300

    def test_other_documented_suites(self, capsys):
        for name in ("heis-matrix-oracle", "bs-roundtrip"):
            code, out, _ = run(capsys, "verify", name, "--cases", "200")
            assert code == 0 and json.loads(out)["passed"] is True

    def test_unknown_suite(self, capsys):
        code, _, err = run(capsys, "verify", "bogus")
        assert code == 2 and "unknown suite" in err

    def test_deterministic_output(self, capsys):
        _, out1, _ = run(capsys, "verify", "heis-quotient", "--seed", "5", "--cases", "150")
        _, out2, _ = run(capsys, "verify", "heis-quotient", "--seed", "5", "--cases", "150")
        assert out1 == out2  # identical seeds give byte-identical reports


class TestExplore:
    def test_radius_zero_csv(self, capsys, tmp_path):
        path = tmp_path / "ball.csv"
        code, _, _ = run(capsys, "explore", "--group", "heis", "--radius", "0", "--out", str(path))
        assert code == 0
        lines = path.read_text().strip().splitlines()
        assert lines[0] == "normal_form,min_length,witness"
        assert len(lines) == 2

    def test_ball_csv_matches_library(self, capsys, tmp_path):
        from palwidth.search import ball_table
        from palwidth import heisenberg

        path = tmp_path / "ball.csv"
        code, _, _ = run(capsys, "explore", "--group", "heis", "--radius", "2", "--out", str(path))
        assert code == 0
        rows = path.read_text().strip().splitlines()
        assert len(rows) - 1 == len(ball_table(heisenberg.evaluator(), 2))

    def test_histogram(self, capsys):
        code, out, _ = run(
            capsys, "explore", "--group", "heis", "--max-len", "4", "--max-factors", "2",
            "--radius", "3",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["histogram"]["0"] == 1
        assert sum(doc["histogram"].values()) > 1

    def test_usage_error_without_mode(self, capsys):
        code, _, _ = run(capsys, "explore", "--group", "heis")
        assert code == 2

    def test_budget_exit_code(self, capsys):
        code, _, err = run(capsys, "explore", "--group", "heis", "--radius", "6", "--budget", "5")
        assert code == 3 and "state cap" in err

    def test_deterministic_stdout(self, capsys):
        _, out1, _ = run(capsys, "explore", "--group", "wreath", "--radius", "3")
        _, out2, _ = run(capsys, "explore", "--group", "wreath", "--radius", "3")
        assert out1 == out2


class TestRecheck:
    def test_recheck_accepts_valid(self, capsys):
        _, out, _ = run(capsys, "decompose", "--group", "bs:3", "t^-1 a t a")
        assert recheck_certificate(json.loads(out))

    def test_recheck_rejects_tampered_factors(self, capsys):
        _, out, _ = run(capsys, "decompose", "--group", "wreath", "ab")
        doc = json.loads(out)
        doc["factors"] = ["a b"]  # not a palindrome
        assert not recheck_certificate(doc)

    def test_recheck_rejects_wrong_product(self, capsys):
        _, out, _ = run(capsys, "decompose", "--group", "wreath", "ab")
        doc = json.loads(out)
        doc["factors"] = ["aba"]
        assert not recheck_certificate(doc)

    def test_recheck_rejects_tampered_element(self, capsys):
        _, out, _ = run(capsys, "decompose", "--group", "wreath", "ab")
        doc = json.loads(out)
        doc["target"]["element"] = {"support": {"5": 1}, "shift": 0}
        assert not recheck_certificate(doc)

    def test_verified_flag_not_trusted(self, capsys):
        _, out, _ = run(capsys, "decompose", "--group", "wreath", "ab")
        doc = json.loads(out)
        doc["verified"] = True
        doc["factors"] = ["a"]
        assert not recheck_certificate(doc)
