"""Degree-by-degree CR matrices, kernels, and polynomial extension."""

import io
from fractions import Fraction

import pytest

from crsing import (
    GaussRational,
    I,
    ONE,
    Poly,
    Quadric,
    ZERO,
    block_rank,
    block_rank_sum,
    counterexample_linear,
    cr_equation_matrix,
    cr_homogeneous_basis,
    dump_matrix_csv,
    extend_homogeneous,
    extend_polynomial,
    format_poly,
    is_cr,
    kernel_dimension_formula,
    parse_poly,
    quadric_model,
    rank_formula,
)
from crsing.errors import (
    DegenerateQuadric,
    NoExtension,
    NotCR,
    RankTooLow,
    RequiresNGe2,
)


def g(re, im=0):
    return GaussRational(Fraction(re), Fraction(im))


def quadric_a12() -> Quadric:
    return Quadric(2, A=[[ZERO, ONE], [ZERO, ZERO]])


def quadric_diag() -> Quadric:
    return Quadric(2, A=[[ONE, ZERO], [ZERO, ONE]])


def triangular_family(beta, delta) -> Quadric:
    return Quadric(2, A=[[ONE, beta], [ZERO, delta]])


class TestClosedForms:
    def test_rank_formula_small_values(self):
        assert [rank_formula(d) for d in range(1, 5)] == [2, 6, 14, 26]

    def test_kernel_dimension_small_values(self):
        assert [kernel_dimension_formula(d) for d in range(1, 5)] == [2, 4, 6, 9]

    def test_block_rank_case_split(self):
        assert block_rank(1, 3) == 4
        assert block_rank(2, 3) == 6
        assert block_rank(3, 3) == 4
        assert block_rank_sum(3) == 14

    def test_matrix_matches_formula(self):
        q = triangular_family(g("1/2"), g(1, 1))
        for d in (1, 2, 3):
            mat = cr_equation_matrix(q, d)
            assert mat.rank() == rank_formula(d)
            assert len(mat.columns) - mat.rank() == kernel_dimension_formula(d)


class TestCRMatrix:
    def test_shape_and_labels(self):
        mat = cr_equation_matrix(quadric_a12(), 2)
        assert len(mat.columns) == 10
        assert len(mat.rows) == 10  # one block for the single pair (1,2)
        assert mat.pairs == [(1, 2)]
        assert len(mat.row_labels) == len(mat.rows)

    def test_degree_validation(self):
        with pytest.raises(ValueError):
            cr_equation_matrix(quadric_a12(), 0)
        with pytest.raises(RequiresNGe2):
            cr_equation_matrix(Quadric(1, A=[[ONE]]), 1)

    def test_kernel_elements_are_cr(self):
        q = quadric_diag()
        model = quadric_model(q)
        space = cr_homogeneous_basis(q, 3)
        assert space.degree == 3
        for b in space.basis:
            assert is_cr(model, b)

    def test_three_variables(self):
        q = Quadric(
            3,
            A=[[ZERO, ONE, ZERO], [ZERO, ZERO, ONE], [ZERO, ZERO, ZERO]],
        )
        mat = cr_equation_matrix(q, 1)
        assert len(mat.columns) == 6
        assert len(mat.pairs) == 3


class TestExtendHomogeneous:
    def test_quadratic_part_extends_to_w(self):
        q = quadric_diag()
        res = extend_homogeneous(q, q.q_poly())
        assert format_poly(res.F) == "w"
        assert res.residual.is_zero
        assert res.unique

    def test_holomorphic_passthrough(self):
        q = quadric_diag()
        f = parse_poly("z1^2*z2", 2)
        res = extend_homogeneous(q, f)
        assert res.F == f
        assert res.residual.is_zero

    def test_rejects_inhomogeneous(self):
        with pytest.raises(ValueError):
            extend_homogeneous(quadric_diag(), parse_poly("z1 + z1^2", 2))

    def test_rejects_non_cr(self):
        with pytest.raises(NotCR) as exc:
            extend_homogeneous(quadric_diag(), parse_poly("zb1", 2))
        assert exc.value.degree == 1

    def test_no_extension_on_rank_one(self):
        with pytest.raises(NoExtension):
            extend_homogeneous(quadric_a12(), parse_poly("zb1", 2))

    def test_mixed_degree_four(self):
        q = quadric_diag()
        f = q.q_poly() ** 2
        res = extend_homogeneous(q, f)
        assert res.F == parse_poly("w^2", 2)


class TestExtendPolynomial:
    def test_inhomogeneous_input(self):
        q = quadric_diag()
        f = 3 + q.q_poly() + parse_poly("z1^3", 2)
        res = extend_polynomial(q, f)
        assert res.F == parse_poly("3 + w + z1^3", 2)
        assert res.residual.is_zero

    def test_failure_reports_degree(self):
        q = quadric_a12()
        f = parse_poly("z1 + zb1^2", 2)
        with pytest.raises(NoExtension) as exc:
            extend_polynomial(q, f)
        assert exc.value.degree == 2


class TestCounterexample:
    def test_rank_one(self):
        v = counterexample_linear(quadric_a12())
        assert v == [ONE, ZERO]

    def test_rank_two_returns_none(self):
        assert counterexample_linear(quadric_diag()) is None

    def test_degenerate_quadric(self):
        with pytest.raises(DegenerateQuadric):
            counterexample_linear(Quadric(2, C=[[ONE, ZERO], [ZERO, ZERO]]))


class TestMatrixDump:
    def test_csv_layout(self):
        import csv

        buf = io.StringIO()
        dump_matrix_csv(quadric_a12(), 1, buf)
        buf.seek(0)
        rows = list(csv.reader(buf))
        assert rows[0] == ["row", "zb2", "zb1", "z2", "z1"]
        assert len(rows) == 5
        # L_{1,2} = -z2 d/dzb2 here, so only the zb2 column produces output
        body = {row[0]: row[1:] for row in rows[1:]}
        assert body["L(1,2):z2"] == ["-1", "0", "0", "0"]
        assert body["L(1,2):z1"] == ["0", "0", "0", "0"]
