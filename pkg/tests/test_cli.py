"""End-to-end command tests, run in process through main()."""

from __future__ import annotations

import json

import pytest

from feqlab import cyclic_group, semigroup_to_json, write_fixtures
from feqlab.cli import main


@pytest.fixture(scope="module")
def fxdir(tmp_path_factory):
    d = tmp_path_factory.mktemp("fixtures")
    write_fixtures(d)
    return d


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv: str) -> tuple[int, dict]:
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


class TestValidate:
    def test_good_table(self, capsys, fxdir):
        code, payload = run_json(capsys, "validate", "--sg", str(fxdir / "c4.sg.json"))
        assert code == 0
        assert payload == {"valid": True, "n": 4, "identity": 0, "name": "C4"}

    def test_structural_error_exit_2(self, capsys, tmp_path):
        bad = tmp_path / "bad.sg.json"
        bad.write_text(json.dumps({"n": 2, "table": [[0, 1], [1, 2]]}))
        code, out, err = run(capsys, "validate", "--sg", str(bad))
        assert code == 2 and out == ""
        assert "structural error" in err

    def test_nonassociative_exit_2(self, capsys, tmp_path):
        bad = tmp_path / "bad.sg.json"
        bad.write_text(json.dumps({"n": 2, "table": [[0, 1], [0, 0]]}))
        code, _, err = run(capsys, "validate", "--sg", str(bad))
        assert code == 2 and "associat" in err

    def test_parse_error_exit_3(self, capsys, tmp_path):
        bad = tmp_path / "broken.json"
        bad.write_text("{not json")
        code, _, err = run(capsys, "validate", "--sg", str(bad))
        assert code == 3 and "parse error" in err

    def test_missing_file_exit_3(self, capsys, tmp_path):
        code, _, err = run(capsys, "validate", "--sg", str(tmp_path / "nope.json"))
        assert code == 3 and "parse error" in err


class TestAnalyze:
    def test_c4(self, capsys, fxdir):
        code, payload = run_json(capsys, "analyze", "--sg", str(fxdir / "c4.sg.json"))
        assert code == 0
        assert payload["n"] == 4
        assert payload["center"] == [0, 1, 2, 3]
        assert payload["character_count"] == 4
        maps = [m["map"] for m in payload["automorphisms"]]
        assert maps == [[0, 1, 2, 3], [0, 3, 2, 1]]

    def test_s3(self, capsys, fxdir):
        code, payload = run_json(capsys, "analyze", "--sg", str(fxdir / "s3.sg.json"))
        assert code == 0
        assert payload["center"] == [0]
        assert payload["character_count"] == 2
        assert len(payload["anti_automorphisms"]) == 4
        assert [0, 1, 2, 4, 3, 5] in [m["map"] for m in payload["anti_automorphisms"]]

    def test_null2(self, capsys, fxdir):
        code, payload = run_json(capsys, "analyze", "--sg", str(fxdir / "null2.sg.json"))
        assert code == 0
        assert payload["identity"] is None
        assert payload["character_count"] == 1


class TestSolve:
    def test_vanvleck_fixture(self, capsys, fxdir):
        code, payload = run_json(
            capsys, "solve", "--eq", "vanvleck",
            "--sg", str(fxdir / "c4.sg.json"),
            "--sigma", str(fxdir / "c4_negation.sigma.json"),
            "--mu", str(fxdir / "c4_delta1.mu.json"))
        assert code == 0
        assert payload["equation"] == "vanvleck"
        assert len(payload["solutions"]) == 1
        values = payload["solutions"][0]["values"]
        assert values == [[0.0, 0.0], [1.0, 0.0], [0.0, 0.0], [-1.0, 0.0]]

    def test_empty_set_still_exit_0(self, capsys, fxdir):
        code, payload = run_json(
            capsys, "solve", "--eq", "vanvleck",
            "--sg", str(fxdir / "c4.sg.json"),
            "--sigma", str(fxdir / "c4_identity.sigma.json"),
            "--mu", str(fxdir / "c4_delta1.mu.json"))
        assert code == 0
        assert payload["solutions"] == []

    def test_noncentral_exit_4(self, capsys, fxdir):
        code, _, err = run(
            capsys, "solve", "--eq", "vanvleck",
            "--sg", str(fxdir / "s3.sg.json"),
            "--sigma", str(fxdir / "s3_inversion.sigma.json"),
            "--mu", str(fxdir / "s3_transposition.mu.json"))
        assert code == 4
        assert "hypothesis violation" in err and "center" in err

    def test_corollary_two_solutions(self, capsys, fxdir):
        code, payload = run_json(
            capsys, "solve", "--eq", "corollary33",
            "--sg", str(fxdir / "c4.sg.json"),
            "--sigma", str(fxdir / "c4_negation.sigma.json"),
            "--mu", str(fxdir / "c4_halfpair.mu.json"))
        assert code == 0
        assert len(payload["solutions"]) == 2

    def test_dalembert_needs_no_measure(self, capsys, fxdir):
        code, payload = run_json(
            capsys, "solve", "--eq", "dalembert_variant",
            "--sg", str(fxdir / "c4.sg.json"),
            "--sigma", str(fxdir / "c4_negation.sigma.json"))
        assert code == 0
        assert len(payload["solutions"]) == 3

    def test_vanvleck_requires_measure(self, capsys, fxdir):
        code, _, err = run(
            capsys, "solve", "--eq", "vanvleck",
            "--sg", str(fxdir / "c4.sg.json"),
            "--sigma", str(fxdir / "c4_negation.sigma.json"))
        assert code == 64 and "usage error" in err


class TestVerify:
    def test_exact_solution_passes(self, capsys, fxdir):
        code, payload = run_json(
            capsys, "verify", "--eq", "vanvleck",
            "--sg", str(fxdir / "c4.sg.json"),
            "--sigma", str(fxdir / "c4_negation.sigma.json"),
            "--mu", str(fxdir / "c4_delta1.mu.json"),
            "--f", str(fxdir / "c4_sine.fn.json"))
        assert code == 0
        assert payload["max_abs"] == 0.0

    def test_bad_candidate_exit_1(self, capsys, fxdir, tmp_path):
        fn = tmp_path / "const.fn.json"
        fn.write_text(json.dumps({"values": [[0.1, 0.0]] * 4}))
        code, payload = run_json(
            capsys, "verify", "--eq", "vanvleck",
            "--sg", str(fxdir / "c4.sg.json"),
            "--sigma", str(fxdir / "c4_negation.sigma.json"),
            "--mu", str(fxdir / "c4_delta1.mu.json"),
            "--f", str(fn))
        assert code == 1
        assert payload["max_abs"] == pytest.approx(0.02)

    def test_battery_attached(self, capsys, fxdir):
        code, payload = run_json(
            capsys, "verify", "--eq", "vanvleck", "--battery",
            "--sg", str(fxdir / "c4.sg.json"),
            "--sigma", str(fxdir / "c4_negation.sigma.json"),
            "--mu", str(fxdir / "c4_delta1.mu.json"),
            "--f", str(fxdir / "c4_sine.fn.json"))
        assert code == 0
        names = [item["name"] for item in payload["per_item"]]
        assert len(names) == 8 and names == sorted(names)

    def test_wilson_pair(self, capsys, fxdir):
        code, payload = run_json(
            capsys, "verify", "--eq", "wilson_variant",
            "--sg", str(fxdir / "c4.sg.json"),
            "--sigma", str(fxdir / "c4_negation.sigma.json"),
            "--mu", str(fxdir / "c4_delta1.mu.json"),
            "--f", str(fxdir / "c4_sine.fn.json"))
        assert code == 0 and payload["max_abs"] <= 1e-12

    def test_tolerance_override(self, capsys, fxdir, tmp_path):
        fn = tmp_path / "const.fn.json"
        fn.write_text(json.dumps({"values": [[0.1, 0.0]] * 4}))
        code, _ = run_json(
            capsys, "verify", "--eq", "vanvleck", "--tol", "0.5",
            "--sg", str(fxdir / "c4.sg.json"),
            "--sigma", str(fxdir / "c4_negation.sigma.json"),
            "--mu", str(fxdir / "c4_delta1.mu.json"),
            "--f", str(fn))
        assert code == 0  # 0.02 <= 0.5


class TestStability:
    def test_small_campaign(self, capsys, fxdir):
        code, payload = run_json(
            capsys, "stability", "--trials", "25", "--seed", "3",
            "--sg", str(fxdir / "c4.sg.json"),
            "--sigma", str(fxdir / "c4_negation.sigma.json"),
            "--mu", str(fxdir / "c4_delta1.mu.json"))
        assert code == 0
        assert payload["trials"] == 25 and payload["violations"] == 0
        assert list(payload) == ["trials", "violations", "exact", "within_bound",
                                 "max_ratio", "seed"]

    def test_byte_identical_reruns(self, capsys, fxdir):
        argv = ("stability", "--trials", "40", "--seed", "11",
                "--sg", str(fxdir / "c4.sg.json"),
                "--sigma", str(fxdir / "c4_negation.sigma.json"),
                "--mu", str(fxdir / "c4_delta1.mu.json"))
        _, out1, _ = run(capsys, *argv)
        _, out2, _ = run(capsys, *argv)
        assert out1 == out2

    def test_zero_trials_usage_error(self, capsys, fxdir):
        code, _, err = run(
            capsys, "stability", "--trials", "0",
            "--sg", str(fxdir / "c4.sg.json"),
            "--sigma", str(fxdir / "c4_negation.sigma.json"),
            "--mu", str(fxdir / "c4_delta1.mu.json"))
        assert code == 64 and "usage error" in err


class TestOracle:
    def test_vanvleck_cross_check(self, capsys, fxdir):
        code, payload = run_json(
            capsys, "oracle", "--eq", "vanvleck", "--starts", "120",
            "--sg", str(fxdir / "c4.sg.json"),
            "--sigma", str(fxdir / "c4_negation.sigma.json"),
            "--mu", str(fxdir / "c4_delta1.mu.json"))
        assert code == 0
        assert payload["matched"] == 1
        assert payload["oracle_only"] == [] and payload["closed_only"] == []

    def test_order_cap(self, capsys, tmp_path):
        big = tmp_path / "c5.sg.json"
        big.write_text(json.dumps(semigroup_to_json(cyclic_group(5))))
        code, _, err = run(capsys, "oracle", "--eq", "vanvleck",
                           "--sg", str(big))
        assert code == 64 and "order" in err

    def test_missing_sigma(self, capsys, fxdir):
        code, _, err = run(
            capsys, "oracle", "--eq", "vanvleck",
            "--sg", str(fxdir / "c4.sg.json"),
            "--mu", str(fxdir / "c4_delta1.mu.json"))
        assert code == 64 and "sigma" in err


class TestUsageAndFormats:
    def test_unknown_equation_tag(self, capsys, fxdir):
        code, _, err = run(capsys, "solve", "--eq", "heat",
                           "--sg", str(fxdir / "c4.sg.json"))
        assert code == 64 and "usage error" in err

    def test_missing_required_flag(self, capsys):
        code, _, err = run(capsys, "validate")
        assert code == 64

    def test_no_command(self, capsys):
        assert run(capsys, )[0] == 64

    def test_table_format_smoke(self, capsys, fxdir):
        code, out, _ = run(capsys, "validate", "--format", "table",
                           "--sg", str(fxdir / "c4.sg.json"))
        assert code == 0
        assert "valid" in out and "{" not in out.splitlines()[0]

    def test_negative_tol(self, capsys, fxdir):
        code, _, err = run(
            capsys, "solve", "--eq", "vanvleck", "--tol", "-1",
            "--sg", str(fxdir / "c4.sg.json"),
            "--sigma", str(fxdir / "c4_negation.sigma.json"),
            "--mu", str(fxdir / "c4_delta1.mu.json"))
        assert code == 64


class TestFixturesCommand:
    def test_writes_bundle(self, capsys, tmp_path):
        out = tmp_path / "bundle"
        code, payload = run_json(capsys, "fixtures", "--out", str(out))
        assert code == 0
        assert sorted(payload["written"]) == payload["written"]
        for name in payload["written"]:
            assert (out / name).exists()
        assert "c4.sg.json" in payload["written"]
