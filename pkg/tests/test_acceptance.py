"""Acceptance gate: one test per verification criterion.

Each test runs exactly one named check from the verification registry at the
fixed seed, emits a single ``PASS``/``FAIL`` line carrying the check's detail
string (which states the comparison and its tolerance), and asserts the check
passed.  The criteria and their tolerances:

  01 n2-integrals        exact equality of the n=2 volume, boundary measure,
                         moments, centering constant, and bulk closed forms
  02 n2-ratio            exact required-ratio closed form on an (a, b) grid,
                         plus the factor-2 discrepancy flag
  03 kf-cross-check      exact agreement with the ruled-surface subfamily
  04 n3-integrals        exact n=3 closed forms and the assembled -49/18
  05 trace-invariant     Jacobian trace equals n*A exactly at random points
  06 minor-closed-form   radial minor sum equals the matrix minor sum exactly
  07 vertex-mapping      transition map carries vertices to vertices exactly
  08 mc-oracle           Monte Carlo estimate within 4 standard errors of the
                         exact value at 10^6 samples, fixed seed
  09 log-cancellation    bulk log coefficient is exactly zero on random specs
  10 axis-symmetry       per-axis terms agree exactly across all axes
  11 nakai-infeasibility no feasible pair on the integer grid or the random
                         sample; the knife-edge case flagged as marginal
  12 delzant-validation  Delzant test true on the family, false on the
                         documented counterexample
  13 determinism         byte-identical JSON from two runs at the same seed

Lines are also replayed in the terminal summary by ``conftest.py``.
"""

from toricfutaki import cli, verify

RESULT_LINES: list[str] = []


def _criterion(number: int, name: str) -> verify.CheckResult:
    (result,) = verify.run_checks([name], seed=42)
    status = "PASS" if result.passed else "FAIL"
    line = f"{status}  criterion {number:02d}  {name}: {result.detail}"
    RESULT_LINES.append(line)
    print(line)
    assert result.passed, line
    return result


def test_criterion_01_n2_integrals():
    _criterion(1, "n2-integrals")


def test_criterion_02_n2_ratio():
    _criterion(2, "n2-ratio")


def test_criterion_03_kf_cross_check():
    _criterion(3, "kf-cross-check")


def test_criterion_04_n3_integrals():
    _criterion(4, "n3-integrals")


def test_criterion_05_trace_invariant():
    _criterion(5, "trace-invariant")


def test_criterion_06_minor_closed_form():
    _criterion(6, "minor-closed-form")


def test_criterion_07_vertex_mapping():
    _criterion(7, "vertex-mapping")


def test_criterion_08_mc_oracle():
    _criterion(8, "mc-oracle")


def test_criterion_09_log_cancellation():
    _criterion(9, "log-cancellation")


def test_criterion_10_axis_symmetry():
    _criterion(10, "axis-symmetry")


def test_criterion_11_nakai_infeasibility():
    _criterion(11, "nakai-infeasibility")


def test_criterion_12_delzant_validation():
    _criterion(12, "delzant-validation")


def test_criterion_13_determinism(capsys):
    _criterion(13, "determinism")
    capsys.readouterr()
    assert cli.main(["verify-paper", "--json"]) == 0
    first = capsys.readouterr().out
    assert cli.main(["verify-paper", "--json"]) == 0
    second = capsys.readouterr().out
    assert first.encode("utf-8") == second.encode("utf-8")
