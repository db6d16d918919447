"""Obstruction characters, required ratios, verdicts, and cross-checks."""

from fractions import Fraction
from itertools import product

import pytest

from toricfutaki.character import (
    InconsistencyError,
    Verdict,
    alpha_futaki_axis,
    assembled_ratio_closed_form,
    build_report,
    bulk_axis,
    classical_futaki_axis,
    closed_form_discrepancy,
    kf_ruled_ratio,
    normalized_affine,
    required_ratio,
    two_parameter_ratio,
    verdict,
)
from toricfutaki.exactnum import MultiPoly, RadialSum
from toricfutaki.family import make_spec
from toricfutaki.integrate import integrate_poly, integrate_radial_slab, volume
from toricfutaki.polytope import DelzantPolytope, HalfSpace, standard_blowup_polytope


def F(x, y=1):
    return Fraction(x, y)


def unit_box(n: int) -> DelzantPolytope:
    hs = []
    for i in range(n):
        e = tuple(1 if j == i else 0 for j in range(n))
        hs.append(HalfSpace(e, Fraction(0)))
        hs.append(HalfSpace(tuple(-c for c in e), Fraction(1)))
    return DelzantPolytope(n, hs)


class TestBoundaryTerm:
    def test_blowup_values(self):
        assert classical_futaki_axis(standard_blowup_polytope(2, 3), 0) == F(1, 3)
        assert classical_futaki_axis(standard_blowup_polytope(3, 2), 0) == F(1, 12)

    def test_vanishes_on_symmetric_polytopes(self):
        cube = unit_box(3)
        assert classical_futaki_axis(cube, 0) == 0
        simplex = DelzantPolytope(
            2,
            [
                HalfSpace((1, 0), Fraction(0)),
                HalfSpace((0, 1), Fraction(0)),
                HalfSpace((-1, -1), Fraction(1)),
            ],
        )
        assert classical_futaki_axis(simplex, 0) == 0

    def test_translation_invariance(self):
        p = standard_blowup_polytope(2, 3)
        q = p.translate((F(5, 2), F(-1)))
        assert classical_futaki_axis(q, 0) == classical_futaki_axis(p, 0)

    def test_normalized_affine_has_zero_mean(self):
        p = standard_blowup_polytope(3, 2)
        for i in range(3):
            assert integrate_poly(p, normalized_affine(p, i)) == 0


class TestBulkTerm:
    def test_blowup_values(self):
        assert bulk_axis(make_spec(2, 11, 3), 0) == F(4, 3)
        assert bulk_axis(make_spec(3, 3, 2), 0) == F(3, 196)

    def test_vanishes_when_classes_coincide(self):
        # a == b makes the transition affine (B = 0), so the minor sum is
        # constant and the zero-mean factor kills the integral.
        assert bulk_axis(make_spec(2, 3, 3), 0) == 0


class TestCharacterAndRatio:
    def test_character_values(self):
        s = make_spec(2, 11, 3)
        assert alpha_futaki_axis(s, 0, 1, F(-1, 8)) == 0
        assert alpha_futaki_axis(s, 0, 1, 1) == F(3, 2)

    def test_linearity_in_weights(self):
        s = make_spec(2, 11, 3)
        v1 = alpha_futaki_axis(s, 0, 1, 0)
        v2 = alpha_futaki_axis(s, 0, 2, 3)
        assert alpha_futaki_axis(s, 0, 3, 3) == v1 + v2

    def test_headline_ratios(self):
        assert required_ratio(make_spec(2, 11, 3)) == F(-1, 8)
        assert required_ratio(make_spec(3, 3, 2)) == F(-49, 18)

    def test_ratio_none_when_bulk_vanishes(self):
        assert required_ratio(make_spec(2, 3, 3)) is None

    def test_ratio_matches_closed_form_on_grid(self):
        for a, b in product([2, 3, 4, 7, F(5, 2)], [2, 3, F(7, 3)]):
            if a == b:
                continue
            s = make_spec(2, a, b, force=True)
            assert required_ratio(s) == assembled_ratio_closed_form(2, s.a, s.b)
        for a, b in product([2, 3, 5, F(7, 2)], [2, F(5, 2)]):
            if a == b:
                continue
            s = make_spec(3, a, b, force=True)
            assert required_ratio(s) == assembled_ratio_closed_form(3, s.a, s.b)

    def test_closed_form_none_cases(self):
        assert assembled_ratio_closed_form(2, F(3), F(3)) is None
        assert assembled_ratio_closed_form(4, F(3), F(2)) is None


class TestVerdicts:
    def test_vanishes_at_ratio(self):
        s = make_spec(2, 11, 3)
        assert verdict(s, 8, -1) is Verdict.VANISHES_AT_RATIO
        assert verdict(s, -8, 1) is Verdict.VANISHES_AT_RATIO

    def test_obstructed_for_positive_weights(self):
        s = make_spec(2, 11, 3)
        assert verdict(s, 1, 1) is Verdict.OBSTRUCTED_FOR_POSITIVE_ALPHA

    def test_plain_obstruction(self):
        s = make_spec(2, 11, 3)
        assert verdict(s, 1, -1) is Verdict.OBSTRUCTED

    def test_no_vanishing_possible(self):
        s = make_spec(2, 3, 3)
        assert verdict(s, 1, 1) is Verdict.NO_VANISHING_POSSIBLE

    def test_zero_alpha0_rejected(self):
        s = make_spec(2, 11, 3)
        with pytest.raises(ValueError):
            verdict(s, 0, 1)
        with pytest.raises(ValueError):
            build_report(s, 0, 1)

    def test_verdict_wire_values(self):
        assert Verdict.VANISHES_AT_RATIO.value == "VanishesAtRatio"
        assert Verdict.OBSTRUCTED_FOR_POSITIVE_ALPHA.value == "ObstructedForPositiveAlpha"
        assert Verdict.OBSTRUCTED.value == "Obstructed"
        assert Verdict.NO_VANISHING_POSSIBLE.value == "NoVanishingPossible"


class TestRuledCrossCheck:
    def test_blowup_subfamily(self):
        for k in (1, 2, 3):
            r = kf_ruled_ratio(0, 1, 1, 1 + 3 * k, -k)
            assert r.ratio == F(-1, 8 * k * k)
            assert r.blowup_class == (8 * k + 3, 1)
            pipeline = required_ratio(make_spec(2, 8 * k + 3, 3))
            assert pipeline == r.ratio

    def test_blowup_class_string(self):
        r = kf_ruled_ratio(0, 1, 1, 4, -1)
        assert r.blowup_class_str == "11*H - 1*E"

    def test_higher_genus(self):
        r = kf_ruled_ratio(2, 2, 1, 5, 1)
        assert r.ratio == F(-1, 3)
        assert r.blowup_class is None

    def test_no_blowup_class_off_subfamily(self):
        assert kf_ruled_ratio(1, 1, 1, 4, -1).blowup_class is None
        assert kf_ruled_ratio(0, 2, 1, 4, -1).blowup_class is None

    def test_validation(self):
        with pytest.raises(ValueError):
            kf_ruled_ratio(-1, 1, 1, 1, 1)
        with pytest.raises(ValueError):
            kf_ruled_ratio(0, 0, 1, 1, 1)
        with pytest.raises(ValueError):
            kf_ruled_ratio(0, 1, 1, 1, 0)
        with pytest.raises(ValueError):
            kf_ruled_ratio(0, 1, 1, F(1, 2), 1)


class TestReport:
    def test_headline_report(self):
        rep = build_report(make_spec(2, 11, 3), alpha0=1, alpha1=1)
        assert rep.boundary_term == F(1, 3)
        assert rep.bulk_term == F(4, 3)
        assert rep.required_ratio == F(-1, 8)
        assert rep.closed_form_match is True
        assert rep.character == F(3, 2)
        assert rep.verdict is Verdict.OBSTRUCTED_FOR_POSITIVE_ALPHA
        assert not rep.hypothesis_violated

    def test_report_without_weights(self):
        rep = build_report(make_spec(3, 3, 2))
        assert rep.required_ratio == F(-49, 18)
        assert rep.closed_form_match is True
        assert rep.character is None and rep.verdict is None

    def test_no_closed_form_above_three(self):
        rep = build_report(make_spec(4, 3, 2))
        assert rep.closed_form_match is None
        assert rep.closed_form_discrepancy is None
        assert rep.bulk_term != 0

    def test_discrepancy_notes(self):
        n2 = closed_form_discrepancy(2)
        assert "twice the assembled ratio" in n2
        assert "-1/(8*k^2)" in n2
        n3 = closed_form_discrepancy(3)
        assert "(b^3-b^2-b+1)" in n3
        assert "-49/18, not -49/66" in n3
        assert closed_form_discrepancy(4) is None

    def test_forced_report_flags_hypothesis(self):
        rep = build_report(make_spec(2, 1, 3, force=True))
        assert rep.hypothesis_violated and not rep.solvable
        assert rep.required_ratio == -2

    def test_json_dict(self):
        d = build_report(make_spec(2, 11, 3), alpha0=2, alpha1=F(-1, 4)).to_json_dict()
        assert d["required_ratio"] == "-1/8"
        assert d["required_ratio_float"] == -0.125
        assert d["verdict"] == "VanishesAtRatio"
        assert d["lambda"] == "8"
        assert d["character"] == "0"

    def test_json_dict_nullable_fields(self):
        d = build_report(make_spec(2, 3, 3)).to_json_dict()
        assert d["required_ratio"] is None
        assert d["alpha0"] is None and d["verdict"] is None


class TestAxisSymmetryGuard:
    def test_all_axes_agree(self):
        p2 = standard_blowup_polytope(2, 3)
        s2 = make_spec(2, 11, 3)
        vals_bd = {classical_futaki_axis(p2, i) for i in range(2)}
        vals_bk = {bulk_axis(s2, i, p2) for i in range(2)}
        assert vals_bd == {F(1, 3)} and vals_bk == {F(4, 3)}
        p3 = standard_blowup_polytope(3, 2)
        s3 = make_spec(3, 3, 2)
        assert {classical_futaki_axis(p3, i) for i in range(3)} == {F(1, 12)}
        assert {bulk_axis(s3, i, p3) for i in range(3)} == {F(3, 196)}


class TestTwoParameterClasses:
    def test_reduces_to_normalized_family(self):
        out = two_parameter_ratio(2, kahler=(3, 1), bundle=(11, 1))
        assert out["experimental"] is True
        assert out["reduced_a"] == "11" and out["reduced_b"] == "3"
        assert out["scale"] == "1"
        assert out["required_ratio"] == "-1/8"

    def test_scaling_covariance_against_independent_slab(self):
        # Same rays, doubled polarization: reduce (6,2) to b=3 and rescale.
        out = two_parameter_ratio(2, kahler=(6, 2), bundle=(11, 1))
        assert out["scale"] == "2"
        assert out["required_ratio"] == "-1/4"

        # Independent recomputation on the unreduced slab {x>=0, 2<=X<=6}:
        # the profile fixing f(2)=1, f(6)=11 has slopes Abar=2, Bbar=-6.
        hs = [
            HalfSpace((1, 0), Fraction(0)),
            HalfSpace((0, 1), Fraction(0)),
            HalfSpace((1, 1), Fraction(-2)),
            HalfSpace((-1, -1), Fraction(6)),
        ]
        Q = DelzantPolytope(2, hs)
        Abar, Bbar = F(2), F(-6)
        assert Abar * 2 + Bbar / 2 == 1
        assert Abar * 6 + Bbar / 6 == 11

        bd = classical_futaki_axis(Q, 0)
        assert bd == F(4, 3)

        minor = RadialSum(
            2,
            [
                (MultiPoly.constant(2, Abar**2), 0),
                (MultiPoly.constant(2, -(Bbar**2)), -4),
            ],
        )
        c = -integrate_poly(Q, MultiPoly.variable(2, 0)) / volume(Q)
        integrand = minor.mul_poly(MultiPoly.variable(2, 0) + c)
        bulk = integrate_radial_slab(2, 2, 6, integrand)
        assert bulk.is_rational and bulk.q0 == F(8, 3)

        assert -bd / (2 * bulk.q0) == F(-1, 4)

    def test_class_validation(self):
        with pytest.raises(ValueError):
            two_parameter_ratio(2, kahler=(1, 1), bundle=(11, 1))
        with pytest.raises(ValueError):
            two_parameter_ratio(2, kahler=(3, 1), bundle=(3, -1))
        with pytest.raises(ValueError):
            two_parameter_ratio(2, kahler=(2, 3), bundle=(11, 1))

    def test_unsolvable_reduction_propagates(self):
        # Reduced parameters (a, b) = (3/2, 3) fail the slope bound.
        from toricfutaki.family import UnsolvableClassError

        with pytest.raises(UnsolvableClassError):
            two_parameter_ratio(2, kahler=(3, 1), bundle=(3, 2))


class TestInconsistencyGuard:
    def test_is_assertion_subclass(self):
        assert issubclass(InconsistencyError, AssertionError)
