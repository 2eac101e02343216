"""Closed-form solvability of the model first-order ODEs."""

from fractions import Fraction

import pytest

from crsing import (
    GaussRational,
    ODEParams,
    Verdict,
    brute_force_ode,
    decide,
    decide_case_a,
    decide_case_b,
    decide_case_c,
    format_poly,
    ode_residual,
)


def g(re, im=0):
    return GaussRational(Fraction(re), Fraction(im))


def assert_witness(case, params, decision):
    assert decision.witness is not None
    assert ode_residual(case, params, decision.witness).is_zero
    assert decision.witness.total_degree() >= 1


class TestCaseA:
    def test_positive_integer_ratio_solves(self):
        # (p + q eta) zeta = (r + s eta) zeta' with q = 0 and p/s = 2
        params = ODEParams(p=g(2), q=g(0), r=g(1), s=g(1))
        decision = decide_case_a(params.p, params.q, params.r, params.s)
        assert decision.verdict is Verdict.NONCONSTANT_POLY
        assert_witness("a", params, decision)
        assert format_poly(decision.witness) == "1 + 2*z1 + z1^2"

    def test_negative_ratio_has_no_solution(self):
        for p, s in ((1, -2), (1, -3)):
            decision = decide_case_a(g(p), g(0), g(3), g(s))
            assert decision.verdict is Verdict.NO_NONZERO

    def test_nonzero_q_blocks_polynomials(self):
        decision = decide_case_a(g(1), g(1), g(0), g(1))
        assert decision.verdict is Verdict.NO_NONZERO

    def test_constant_only(self):
        decision = decide_case_a(g(0), g(0), g(5), g(1))
        assert decision.verdict is Verdict.CONSTANT_ONLY
        assert decision.witness is None

    def test_requires_nonzero_s(self):
        with pytest.raises(ValueError):
            decide_case_a(g(1), g(0), g(1), g(0))


class TestCaseB:
    def test_rational_roots_with_integer_exponents(self):
        # roots 0 and 1, exponents 1 and 2: R = t eta (eta - 1)
        params = ODEParams(p=g(-1), q=g(3), r=g(0), s=g(-1), t=g(1))
        decision = decide_case_b(params.p, params.q, params.r, params.s, params.t)
        assert decision.verdict is Verdict.NONCONSTANT_POLY
        assert_witness("b", params, decision)

    def test_irrational_roots_equal_exponents(self):
        # eta^2 - 2 is irreducible over the rationals yet a solution exists
        params = ODEParams(p=g(0), q=g(2), r=g(-2), s=g(0), t=g(1))
        decision = decide_case_b(params.p, params.q, params.r, params.s, params.t)
        assert decision.verdict is Verdict.NONCONSTANT_POLY
        assert format_poly(decision.witness) == "-2 + z1^2"

    def test_irrational_roots_usually_fail(self):
        params = ODEParams(p=g(1), q=g(2), r=g(-2), s=g(0), t=g(1))
        decision = decide_case_b(params.p, params.q, params.r, params.s, params.t)
        assert decision.verdict is Verdict.NO_NONZERO

    def test_negative_exponents_fail(self):
        # roots 0, 1 but the induced exponents are not both nonnegative
        params = ODEParams(p=g(1), q=g(-3), r=g(0), s=g(-1), t=g(1))
        decision = decide_case_b(params.p, params.q, params.r, params.s, params.t)
        assert decision.verdict is Verdict.NO_NONZERO

    def test_gaussian_roots(self):
        # roots +-i with exponent one each: zeta = eta^2 + 1
        params = ODEParams(p=g(0), q=g(2), r=g(1), s=g(0), t=g(1))
        decision = decide_case_b(params.p, params.q, params.r, params.s, params.t)
        assert decision.verdict is Verdict.NONCONSTANT_POLY
        assert format_poly(decision.witness) == "1 + z1^2"

    def test_rejects_double_root(self):
        with pytest.raises(ValueError):
            decide_case_b(g(1), g(1), g(1), g(-2), g(1))

    def test_requires_nonzero_t(self):
        with pytest.raises(ValueError):
            decide_case_b(g(1), g(1), g(1), g(1), g(0))


class TestCaseC:
    def test_integer_multiplicity_with_matching_p(self):
        # R = t (eta - xi)^2; solvable when q/t is a positive integer and
        # p + q xi = 0
        params = ODEParams(p=g(-2), q=g(2), t=g(1), xi=g(1))
        decision = decide_case_c(params.p, params.q, params.t, params.xi)
        assert decision.verdict is Verdict.NONCONSTANT_POLY
        assert format_poly(decision.witness) == "1 - 2*z1 + z1^2"

    def test_mismatched_p_fails(self):
        decision = decide_case_c(g(1), g(2), g(1), g(1))
        assert decision.verdict is Verdict.NO_NONZERO

    def test_constant_only(self):
        decision = decide_case_c(g(0), g(0), g(1), g(1))
        assert decision.verdict is Verdict.CONSTANT_ONLY


class TestBruteForce:
    def test_agrees_on_known_instances(self):
        cases = [
            ("a", ODEParams(p=g(2), q=g(0), r=g(1), s=g(1))),
            ("a", ODEParams(p=g(1), q=g(0), r=g(3), s=g(-2))),
            ("b", ODEParams(p=g(0), q=g(2), r=g(-2), s=g(0), t=g(1))),
            ("c", ODEParams(p=g(-2), q=g(2), t=g(1), xi=g(1))),
        ]
        for case, params in cases:
            decision = decide(case, params)
            brute = brute_force_ode(case, params, 12)
            assert brute.verdict == decision.verdict
            if brute.witness is not None:
                assert ode_residual(case, params, brute.witness).is_zero

    def test_dispatcher_validates_case(self):
        with pytest.raises(ValueError):
            decide("d", ODEParams(p=g(1), q=g(1)))
