"""Exact decisions about holomorphic extension of CR functions on
codimension-two CR singular models w = Q(z, zbar) + E(z, zbar).

Everything is computed over the Gaussian rationals with exact arithmetic:
ranks of CR equation matrices, bases of CR polynomials, polynomial and
order-by-order formal extensions, the classification of the exceptional
rank-one quadrics, polynomial solvability of the associated model ODEs,
and randomized verification suites tying the pieces together.
"""

from .algebra import (
    GaussRational,
    I,
    Monomial,
    ONE,
    Poly,
    ZERO,
    as_gauss,
    gauss_sqrt,
    rational_sqrt,
    weierstrass_divide,
)
from .classify import (
    ClassLabel,
    CRImage,
    CRImageForm,
    FirstIntegralReport,
    LabelKind,
    LeviFlatParam,
    check_first_integral,
    classify_cr_image,
    classify_quadric,
    flatten_from_first_integral,
    levi_flat_image_param,
    normal_form_quadric,
    normalize_rank1,
)
from .errors import (
    AsymmetricMatrix,
    ConstantTermInSubstitution,
    CrsingError,
    DegenerateQuadric,
    DimensionMismatch,
    EOrderTooLow,
    FirstIntegralError,
    IndexOutOfRange,
    ManifoldSpecError,
    NoExtension,
    NonConstantLeading,
    NotCR,
    PolyParseError,
    RankNotOne,
    RankTooLow,
    RequiresNGe2,
    SingularTransform,
    UnknownVariable,
    WVariablePresent,
)
from .extend import (
    CRMatrix,
    CRSpace,
    ExtensionResult,
    block_rank,
    block_rank_sum,
    counterexample_linear,
    cr_equation_matrix,
    cr_homogeneous_basis,
    dump_matrix_csv,
    extend_homogeneous,
    extend_polynomial,
    kernel_dimension_formula,
    rank_formula,
)
from .formal import FormalExtension, check_formal_uniqueness, formal_extend
from .manifold import (
    CRCheck,
    CRField,
    Manifold,
    Quadric,
    cr_field,
    cr_fields,
    cr_linear_space,
    is_cr,
    quadric_model,
    rank_condition,
    transform,
)
from .odecrit import (
    ODEDecision,
    ODEParams,
    Verdict,
    brute_force_ode,
    decide,
    decide_case_a,
    decide_case_b,
    decide_case_c,
    ode_residual,
)
from .polyio import (
    format_coeff,
    format_poly,
    load_manifold,
    load_manifold_path,
    manifold_to_dict,
    parse_coeff,
    parse_poly,
)
from .verify import SUITES, SuiteResult, SuiteRow, run_all, run_suite

__version__ = "1.0.0"

__all__ = [
    "AsymmetricMatrix",
    "CRCheck",
    "CRField",
    "CRImage",
    "CRImageForm",
    "CRMatrix",
    "CRSpace",
    "ClassLabel",
    "ConstantTermInSubstitution",
    "CrsingError",
    "DegenerateQuadric",
    "DimensionMismatch",
    "EOrderTooLow",
    "ExtensionResult",
    "FirstIntegralError",
    "FirstIntegralReport",
    "FormalExtension",
    "GaussRational",
    "I",
    "IndexOutOfRange",
    "LabelKind",
    "LeviFlatParam",
    "Manifold",
    "ManifoldSpecError",
    "Monomial",
    "NoExtension",
    "NonConstantLeading",
    "NotCR",
    "ODEDecision",
    "ODEParams",
    "ONE",
    "Poly",
    "PolyParseError",
    "Quadric",
    "RankNotOne",
    "RankTooLow",
    "RequiresNGe2",
    "SUITES",
    "SingularTransform",
    "SuiteResult",
    "SuiteRow",
    "UnknownVariable",
    "Verdict",
    "WVariablePresent",
    "ZERO",
    "as_gauss",
    "block_rank",
    "block_rank_sum",
    "check_first_integral",
    "check_formal_uniqueness",
    "classify_cr_image",
    "classify_quadric",
    "counterexample_linear",
    "cr_equation_matrix",
    "cr_field",
    "cr_fields",
    "cr_homogeneous_basis",
    "cr_linear_space",
    "decide",
    "decide_case_a",
    "decide_case_b",
    "decide_case_c",
    "dump_matrix_csv",
    "extend_homogeneous",
    "extend_polynomial",
    "flatten_from_first_integral",
    "format_coeff",
    "format_poly",
    "gauss_sqrt",
    "is_cr",
    "kernel_dimension_formula",
    "levi_flat_image_param",
    "load_manifold",
    "load_manifold_path",
    "manifold_to_dict",
    "normal_form_quadric",
    "normalize_rank1",
    "ode_residual",
    "parse_coeff",
    "parse_poly",
    "quadric_model",
    "rank_condition",
    "rank_formula",
    "rational_sqrt",
    "run_all",
    "run_suite",
    "transform",
    "weierstrass_divide",
]
