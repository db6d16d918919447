"""End-to-end CLI behavior: output documents, exit codes, determinism."""

import json

import pytest

from toricfutaki import cli
from toricfutaki.polytope import DelzantPolytope, HalfSpace
from toricfutaki.verify import CheckResult


def run(capsys, *argv):
    rc = cli.main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def run_json(capsys, *argv):
    rc, out, err = run(capsys, *argv)
    assert rc == 0, f"exit {rc}, stderr: {err}"
    return json.loads(out)


class TestCharacter:
    def test_report_json(self, capsys):
        doc = run_json(capsys, "character", "--n", "2", "--a", "11", "--b", "3", "--json")
        rep = doc["report"]
        assert rep["required_ratio"] == "-1/8"
        assert rep["boundary_term"] == "1/3"
        assert rep["bulk_term"] == "4/3"
        assert rep["closed_form_match"] is True
        assert "twice the assembled ratio" in rep["closed_form_discrepancy"]
        assert rep["verdict"] is None
        assert doc["manifest"]["command"] == "character"

    def test_weights_and_negative_rational_option(self, capsys):
        doc = run_json(
            capsys, "character", "--n", "2", "--a", "11", "--b", "3",
            "--alpha0", "1", "--alpha1", "-1/8", "--json",
        )
        rep = doc["report"]
        assert rep["character"] == "0"
        assert rep["verdict"] == "VanishesAtRatio"

    def test_n3_report(self, capsys):
        doc = run_json(capsys, "character", "--n", "3", "--a", "3", "--b", "2", "--json")
        assert doc["report"]["required_ratio"] == "-49/18"
        assert "-49/18, not -49/66" in doc["report"]["closed_form_discrepancy"]

    def test_n4_has_no_closed_form(self, capsys):
        doc = run_json(capsys, "character", "--n", "4", "--a", "3", "--b", "2", "--json")
        assert doc["report"]["closed_form_match"] is None
        assert doc["report"]["closed_form_discrepancy"] is None

    def test_text_mode(self, capsys):
        rc, out, _ = run(capsys, "character", "--n", "2", "--a", "11", "--b", "3",
                         "--alpha0", "1", "--alpha1", "1")
        assert rc == 0
        assert "required ratio alpha1/alpha0 = -1/8" in out
        assert "verdict: ObstructedForPositiveAlpha" in out

    def test_unsolvable_exits_two(self, capsys):
        rc, _, err = run(capsys, "character", "--n", "2", "--a", "5/3", "--b", "3")
        assert rc == 2
        assert "error:" in err and "slope constant" in err

    def test_force_overrides(self, capsys):
        doc = run_json(
            capsys, "character", "--n", "2", "--a", "5/3", "--b", "3", "--force", "--json"
        )
        assert doc["report"]["hypothesis_violated"] is True
        assert doc["report"]["solvable"] is False

    def test_float_parameter_rejected(self, capsys):
        rc, _, err = run(capsys, "character", "--n", "2", "--a", "1.5", "--b", "3")
        assert rc == 1

    def test_half_weight_pair_rejected(self, capsys):
        rc, _, err = run(capsys, "character", "--n", "2", "--a", "11", "--b", "3",
                         "--alpha0", "1")
        assert rc == 1
        assert "together" in err

    def test_two_parameter_classes(self, capsys):
        doc = run_json(
            capsys, "character", "--n", "2",
            "--kahler", "6,2", "--bundle", "11,1", "--json",
        )
        two = doc["two_parameter"]
        assert two["required_ratio"] == "-1/4"
        assert two["reduced_a"] == "11" and two["reduced_b"] == "3"
        assert two["experimental"] is True

    def test_two_parameter_conflicts_with_ab(self, capsys):
        rc, _, err = run(capsys, "character", "--n", "2", "--a", "11", "--b", "3",
                         "--kahler", "6,2", "--bundle", "11,1")
        assert rc == 1

    def test_missing_parameters(self, capsys):
        rc, _, err = run(capsys, "character", "--n", "2")
        assert rc == 1


class TestScan:
    ARGS = ("scan", "--n", "2", "--a-from", "2", "--a-to", "12",
            "--b-from", "2", "--b-to", "5")

    def test_grid_rows(self, capsys):
        doc = run_json(capsys, *self.ARGS, "--json")
        rows = doc["rows"]
        assert len(rows) == 44
        keys = [(r["a"], r["b"]) for r in rows]
        assert keys == sorted(keys, key=lambda ab: (int(ab[0]), int(ab[1])))

        by_key = {(r["a"], r["b"]): r for r in rows}
        # Equal sizes: solvable, bulk term zero, no ratio can vanish.
        r = by_key[("3", "3")]
        assert r["solvable"] is True
        assert r["required_ratio"] == "undefined"
        assert r["verdict"] == "NoVanishingPossible"
        # Slope bound fails: empty computed fields.
        r = by_key[("2", "5")]
        assert r["solvable"] is False
        assert r["required_ratio"] == "" and r["verdict"] == ""
        r = by_key[("2", "4")]
        assert r["solvable"] is False
        # Generic solvable rows: negative ratio, positive-weight obstruction.
        r = by_key[("11", "3")]
        assert r["required_ratio"] == "-1/8"
        assert r["verdict"] == "ObstructedForPositiveAlpha"

    def test_text_mode(self, capsys):
        rc, out, _ = run(capsys, *self.ARGS)
        lines = out.strip().splitlines()
        assert lines[0].split() == [
            "n", "a", "b", "solvable", "boundary_term", "bulk_term",
            "required_ratio", "verdict",
        ]
        assert lines[-1] == "44 rows"

    def test_csv_output(self, capsys, tmp_path):
        path = tmp_path / "scan.csv"
        rc, out, _ = run(capsys, *self.ARGS, "--csv", str(path))
        assert rc == 0
        assert f"wrote 44 rows to {path}" in out
        lines = path.read_text().splitlines()
        assert lines[0] == "n,a,b,solvable,boundary_term,bulk_term,required_ratio,verdict"
        assert len(lines) == 45
        assert "2,11,3,True,1/3,4/3,-1/8,ObstructedForPositiveAlpha" in lines

    def test_json_output_is_deterministic(self, capsys):
        rc1, out1, _ = run(capsys, *self.ARGS, "--json")
        rc2, out2, _ = run(capsys, *self.ARGS, "--json")
        assert rc1 == rc2 == 0
        assert out1 == out2

    def test_fractional_step(self, capsys):
        doc = run_json(
            capsys, "scan", "--n", "2", "--a-from", "2", "--a-to", "3",
            "--b-from", "2", "--b-to", "2", "--step", "1/2", "--json",
        )
        assert [r["a"] for r in doc["rows"]] == ["2", "5/2", "3"]

    def test_empty_range_rejected(self, capsys):
        rc, _, err = run(capsys, "scan", "--n", "2", "--a-from", "3", "--a-to", "2",
                         "--b-from", "2", "--b-to", "2")
        assert rc == 1 and "empty range" in err

    def test_bad_step_rejected(self, capsys):
        rc, _, err = run(capsys, "scan", "--n", "2", "--a-from", "2", "--a-to", "3",
                         "--b-from", "2", "--b-to", "2", "--step", "0")
        assert rc == 1 and "step" in err


class TestVerifyPaper:
    def test_subset_passes(self, capsys):
        rc, out, _ = run(capsys, "verify-paper", "--only", "n2-integrals,n2-ratio")
        assert rc == 0
        assert "PASS  n2-integrals" in out
        assert "RESULT: 2/2 checks passed (seed 42)" in out

    def test_subset_json(self, capsys):
        doc = run_json(capsys, "verify-paper", "--only", "kf-cross-check", "--json")
        assert doc["ok"] is True
        assert doc["total"] == 1
        assert doc["checks"][0]["name"] == "kf-cross-check"
        assert doc["checks"][0]["passed"] is True

    def test_unknown_check_name(self, capsys):
        rc, _, err = run(capsys, "verify-paper", "--only", "nonsense")
        assert rc == 1
        assert "nonsense" in err

    def test_failure_exits_three(self, capsys, monkeypatch):
        fake = [CheckResult(name="n2-ratio", passed=False, anchor="x", detail="boom")]
        monkeypatch.setattr(cli, "run_checks", lambda names, seed: fake)
        rc, out, _ = run(capsys, "verify-paper", "--only", "n2-ratio")
        assert rc == 3
        assert "FAIL" in out and "boom" in out


class TestPolytope:
    def test_standard_json(self, capsys):
        doc = run_json(capsys, "polytope", "--standard", "2,3", "--json")
        assert doc["volume"] == "4"
        assert doc["is_delzant"] is True
        assert doc["facet_sigma"] == ["2", "2", "1", "3"]
        assert ["0", "1"] in doc["vertices"]

    def test_file_round_trip(self, capsys, tmp_path):
        hs = [
            HalfSpace((1, 0), 0),
            HalfSpace((0, 1), 0),
            HalfSpace((-1, -1), 2),
        ]
        P = DelzantPolytope(2, hs)
        path = tmp_path / "poly.json"
        path.write_text(json.dumps(P.to_json_dict()))
        doc = run_json(capsys, "polytope", "--file", str(path), "--json")
        assert doc["volume"] == "2"
        assert doc["polytope"] == P.to_json_dict()

    def test_missing_file(self, capsys, tmp_path):
        rc, _, err = run(capsys, "polytope", "--file", str(tmp_path / "nope.json"))
        assert rc == 1

    def test_source_exclusivity(self, capsys, tmp_path):
        rc, _, _ = run(capsys, "polytope")
        assert rc == 1
        path = tmp_path / "p.json"
        path.write_text("{}")
        rc, _, _ = run(capsys, "polytope", "--standard", "2,3", "--file", str(path))
        assert rc == 1

    def test_malformed_standard(self, capsys):
        rc, _, _ = run(capsys, "polytope", "--standard", "2")
        assert rc == 1
        rc, _, _ = run(capsys, "polytope", "--standard", "2,1.5")
        assert rc == 1

    def test_text_mode(self, capsys):
        rc, out, _ = run(capsys, "polytope", "--standard", "2,3")
        assert rc == 0
        assert "volume = 4" in out
        assert "delzant: yes" in out


class TestFamily:
    def test_family_json(self, capsys):
        doc = run_json(capsys, "family", "--n", "2", "--a", "11", "--b", "3", "--json")
        assert doc["A"] == "4" and doc["B"] == "-3" and doc["lambda"] == "8"
        assert doc["solvable"] is True
        images = {tuple(e["vertex"]): tuple(e["image"]) for e in doc["vertex_images"]}
        assert images[("0", "1")] == ("0", "1")
        assert images[("3", "0")] == ("11", "0")
        assert len(images) == 4

    def test_unsolvable_exits_two(self, capsys):
        rc, _, _ = run(capsys, "family", "--n", "2", "--a", "1", "--b", "3")
        assert rc == 2

    def test_text_mode(self, capsys):
        rc, out, _ = run(capsys, "family", "--n", "2", "--a", "11", "--b", "3")
        assert rc == 0
        assert "(3, 0) -> (11, 0)" in out


class TestIntegrate:
    def test_body(self, capsys):
        doc = run_json(capsys, "integrate", "--standard", "2,3", "--poly", "x1", "--json")
        assert doc["exact"] == "13/3"
        assert doc["domain"] == "body"
        assert doc["log_coeff"] == "0"

    def test_facet(self, capsys):
        doc = run_json(capsys, "integrate", "--standard", "2,3", "--poly", "x1",
                       "--facet", "3", "--json")
        assert doc["exact"] == "9/2"
        assert doc["domain"] == "facet 3"

    def test_boundary(self, capsys):
        doc = run_json(capsys, "integrate", "--standard", "2,3", "--poly", "x1",
                       "--boundary", "--json")
        assert doc["exact"] == "9"

    def test_radial_power(self, capsys):
        doc = run_json(capsys, "integrate", "--standard", "2,3", "--poly", "x1",
                       "--radial-power", "-4", "--json")
        assert doc["exact"] == "1/3"
        assert doc["log_coeff"] == "0"
        assert doc["log_base"] == "3"

    def test_radial_log_term(self, capsys):
        import math

        doc = run_json(capsys, "integrate", "--standard", "2,3", "--poly", "1",
                       "--radial-power", "-2", "--json")
        assert doc["exact"] == "0"
        assert doc["log_coeff"] == "1"
        assert doc["float"] == pytest.approx(math.log(3))

    def test_radial_needs_slab(self, capsys, tmp_path):
        box = DelzantPolytope(
            2,
            [
                HalfSpace((1, 0), 0),
                HalfSpace((0, 1), 0),
                HalfSpace((-1, 0), 1),
                HalfSpace((0, -1), 1),
            ],
        )
        path = tmp_path / "box.json"
        path.write_text(json.dumps(box.to_json_dict()))
        rc, _, err = run(capsys, "integrate", "--file", str(path), "--poly", "1",
                         "--radial-power", "-2")
        assert rc == 1 and "slab" in err

    def test_mode_exclusivity(self, capsys):
        rc, _, err = run(capsys, "integrate", "--standard", "2,3", "--poly", "1",
                         "--facet", "0", "--boundary")
        assert rc == 1

    def test_poly_parse_error(self, capsys):
        rc, _, err = run(capsys, "integrate", "--standard", "2,3", "--poly", "x9")
        assert rc == 1 and "x9" in err

    def test_facet_out_of_range(self, capsys):
        rc, _, err = run(capsys, "integrate", "--standard", "2,3", "--poly", "1",
                         "--facet", "7")
        assert rc == 1

    def test_text_log_rendering(self, capsys):
        rc, out, _ = run(capsys, "integrate", "--standard", "2,3", "--poly", "1",
                         "--radial-power", "-2")
        assert rc == 0
        assert "exact = 0 + 1*log(3)" in out


class TestKfCheck:
    def test_cross_check_match(self, capsys):
        doc = run_json(capsys, "kf-check", "--k1", "4", "--k2", "-1",
                       "--cross-check", "--json")
        assert doc["ratio"] == "-1/8"
        assert doc["blowup_class"] == "11*H - 1*E"
        assert doc["cross_check"]["match"] is True
        assert doc["cross_check"]["pipeline_ratio"] == "-1/8"

    def test_higher_genus(self, capsys):
        doc = run_json(capsys, "kf-check", "--genus", "2", "--k", "2", "--kprime", "1",
                       "--k1", "5", "--k2", "1", "--json")
        assert doc["ratio"] == "-1/3"
        assert doc["blowup_class"] is None

    def test_cross_check_requires_blowup_case(self, capsys):
        rc, _, err = run(capsys, "kf-check", "--genus", "1", "--k1", "4", "--k2", "-1",
                         "--cross-check")
        assert rc == 1 and "cross-check" in err

    def test_invalid_k2(self, capsys):
        rc, _, _ = run(capsys, "kf-check", "--k1", "4", "--k2", "0")
        assert rc == 1

    def test_text_mode(self, capsys):
        rc, out, _ = run(capsys, "kf-check", "--k1", "4", "--k2", "-1", "--cross-check")
        assert rc == 0
        assert "[MATCH]" in out


class TestAmpleCheck:
    def test_single_pair(self, capsys):
        doc = run_json(capsys, "ample-check", "--m1", "1", "--m2", "0", "--json")
        assert doc["check"]["feasible"] is False
        assert doc["check"]["m1"] == "1"
        assert len(doc["check"]["inequalities"]) == 3

    def test_scan(self, capsys):
        doc = run_json(capsys, "ample-check", "--scan", "--grid-bound", "5",
                       "--samples", "100", "--json")
        assert doc["scan"]["all_infeasible"] is True
        assert doc["scan"]["checked"] == 11 * 11 - 1 + 100

    def test_requires_pair_or_scan(self, capsys):
        rc, _, err = run(capsys, "ample-check")
        assert rc == 1

    def test_text_mode(self, capsys):
        rc, out, _ = run(capsys, "ample-check", "--m1", "0", "--m2", "1")
        assert rc == 0
        assert "[marginal]" in out
        assert "feasible: no" in out


class TestTopLevel:
    def test_version(self, capsys):
        rc, out, _ = run(capsys, "--version")
        assert rc == 0
        assert "toricfutaki" in out

    def test_unknown_command(self, capsys):
        assert cli.main(["frobnicate"]) == 1
        capsys.readouterr()

    def test_no_command(self, capsys):
        assert cli.main([]) == 1
        capsys.readouterr()
