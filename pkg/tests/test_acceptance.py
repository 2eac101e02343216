"""Acceptance suite: one test per headline guarantee of the library.

Each test runs the matching randomized verification suite at its full
advertised sample count and prints a single PASS/FAIL line, so the
output of `pytest -s tests/test_acceptance.py` doubles as a checklist.
Every check inside a suite is exact; the only tolerances here are the
runtime budgets on the three largest suites.
"""

from crsing.verify import run_suite


def _report(capsys, number, title, result, budget=None):
    status = "PASS" if result.passed else "FAIL"
    # step outside capture so the checklist survives into piped pytest output
    with capsys.disabled():
        print(
            "%s criterion %d: %s (%.1fs)" % (status, number, title, result.elapsed),
            flush=True,
        )
    for row in result.rows:
        assert row.ok, "%s: %s  [%s]" % (title, row.label, row.detail)
    if budget is not None:
        assert result.elapsed < budget, (
            "%s took %.1fs, budget is %ds" % (title, result.elapsed, budget)
        )


def test_criterion_1_rank_and_kernel_formulas(capsys):
    _report(
        capsys,
        1,
        "closed-form rank and kernel dimension of the CR equation matrix",
        run_suite("rank-formula"),
        budget=30,
    )


def test_criterion_2_block_rank_case_split(capsys):
    _report(
        capsys,
        2,
        "per-block ranks match the case split and sum to the total",
        run_suite("block-ranks"),
    )


def test_criterion_3_extension_equivalence_sweep(capsys):
    _report(
        capsys,
        3,
        "rank at least two, kernel extension, and trivial linear space agree",
        run_suite("equivalence"),
        budget=60,
    )


def test_criterion_4_uniqueness_of_extensions(capsys):
    _report(
        capsys,
        4,
        "matching matrix has full column rank when the rank condition holds",
        run_suite("uniqueness"),
    )


def test_criterion_5_model_manifolds(capsys):
    _report(
        capsys,
        5,
        "worked model manifolds: degenerate, non-extending, and roundtrip",
        run_suite("examples"),
        budget=30,
    )


def test_criterion_6_classification_invariance(capsys):
    _report(
        capsys,
        6,
        "exceptional normal forms survive invertible changes of variables",
        run_suite("classification"),
    )


def test_criterion_7_ode_criteria(capsys):
    _report(
        capsys,
        7,
        "ODE solvability criteria agree with brute-force search",
        run_suite("ode"),
    )


def test_criterion_8_restriction_is_cr(capsys):
    _report(
        capsys,
        8,
        "restrictions of holomorphic polynomials satisfy the CR equations",
        run_suite("restriction-cr"),
    )


def test_criterion_9_image_parametrizations(capsys):
    _report(
        capsys,
        9,
        "CR image parametrizations verify exactly; two-square quadric extends",
        run_suite("parametrization"),
    )
