"""Holomorphic extension of CR functions on quadric models.

Two linear-algebra objects drive everything here.  First, the CR equations
restricted to homogeneous polynomials of degree d form a matrix: columns are
indexed by degree-d monomials in z and zbar, rows by output monomials of
each tangential operator L_{k,l}, and the kernel is exactly the space of
degree-d CR polynomials.  Second, a candidate extension is an ansatz

    sum over |alpha| + 2j = d  of  c_{alpha,j} z^alpha Q^j

and matching monomial coefficients against a target f gives an exact linear
system whose solvability decides extendability degree by degree.

Monomial columns are ordered by total z-degree, then lexicographically by
the z exponents, then by the zbar exponents, all ascending.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .algebra import GaussRational, Monomial, ONE, Poly, ZERO
from .errors import (
    DegenerateQuadric,
    DimensionMismatch,
    NoExtension,
    NotCR,
    RankTooLow,
    RequiresNGe2,
    WVariablePresent,
)
from .manifold import Quadric, cr_linear_space, is_cr, quadric_model, rank_condition


def _compositions(total: int, parts: int):
    """All tuples of `parts` nonnegative integers with the given sum, in
    ascending lexicographic order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def homogeneous_monomial_key(mono: Monomial):
    return (sum(mono.z), mono.z, mono.zb)


def homogeneous_monomials(n: int, d: int) -> List[Monomial]:
    """All w-free monomials of total degree d, in column order."""
    out = []
    for zdeg in range(d + 1):
        for a in _compositions(zdeg, n):
            for b in _compositions(d - zdeg, n):
                out.append(Monomial(a, b, 0))
    out.sort(key=homogeneous_monomial_key)
    return out


@dataclass
class CRMatrix:
    """The CR equations on degree-d homogeneous polynomials, as a sparse
    matrix together with its labelling."""

    n: int
    degree: int
    columns: List[Monomial]
    pairs: List[Tuple[int, int]]
    rows: List[Dict[int, GaussRational]]
    row_labels: List[Tuple[int, int, Monomial]]

    def rank(self) -> int:
        return linalg.rank_sparse(self.rows, len(self.columns))

    def kernel(self) -> List[List[GaussRational]]:
        return linalg.nullspace_sparse(self.rows, len(self.columns))


def cr_equation_matrix(q: Quadric, d: int) -> CRMatrix:
    """Assemble the matrix of all L_{k,l} acting on degree-d monomials.

    The operators preserve total degree, so rows are indexed by degree-d
    monomials as well, one block per pair (k, l)."""
    if q.n < 2:
        raise RequiresNGe2("the CR equations need n >= 2")
    if d < 1:
        raise ValueError("degree must be at least 1")
    n = q.n
    monos = homogeneous_monomials(n, d)
    col_of = {m: i for i, m in enumerate(monos)}
    row_of = {m: i for i, m in enumerate(monos)}
    qp = q.q_poly()
    partials = [qp.differentiate("zb%d" % j) for j in range(1, n + 1)]
    pairs = [(k, l) for k in range(1, n + 1) for l in range(k + 1, n + 1)]
    rows: List[Dict[int, GaussRational]] = []
    row_labels: List[Tuple[int, int, Monomial]] = []
    for (k, l) in pairs:
        block: List[Dict[int, GaussRational]] = [dict() for _ in monos]
        ck, cl = partials[l - 1], -partials[k - 1]
        for ci, mono in enumerate(monos):
            f = Poly.from_monomial(mono, ONE, n)
            image = ck * f.differentiate("zb%d" % k) + cl * f.differentiate(
                "zb%d" % l
            )
            for om, c in image.terms.items():
                block[row_of[om]][ci] = block[row_of[om]].get(ci, ZERO) + c
        rows.extend(block)
        row_labels.extend((k, l, m) for m in monos)
    rows = [{j: a for j, a in r.items() if a} for r in rows]
    return CRMatrix(
        n=n, degree=d, columns=monos, pairs=pairs, rows=rows, row_labels=row_labels
    )


def rank_formula(d: int) -> int:
    """Closed form for the rank of the degree-d CR matrix of the normalized
    n = 2 family Q = |z1|^2 + beta z2 zb1 + delta |z2|^2 with delta != 0."""
    return sum(2 * ((j + 1) // 2) * (d - j + 1) for j in range(1, d + 1))


def block_rank(j: int, d: int) -> int:
    """Predicted rank of the zbar-degree-j block of that matrix: columns of
    zbar-degree j map to rows of zbar-degree j - 1."""
    if not 1 <= j <= d:
        raise ValueError("need 1 <= j <= d")
    if d - j + 1 <= j:
        return (j + 1) * (d - j + 1)
    return j * (d - j + 2)


def block_rank_sum(d: int) -> int:
    return sum(block_rank(j, d) for j in range(1, d + 1))


def kernel_dimension_formula(d: int) -> int:
    """Dimension of degree-d CR polynomials for n = 2 quadrics of stacked
    rank two: the number of weighted-homogeneous monomials z^alpha w^j."""
    return ((d + 2) * (d + 2)) // 4


@dataclass
class CRSpace:
    """A basis of the CR polynomials of one fixed degree on a quadric."""

    degree: int
    basis: List[Poly]

    @property
    def dim(self) -> int:
        return len(self.basis)


def cr_homogeneous_basis(q: Quadric, d: int) -> CRSpace:
    mat = cr_equation_matrix(q, d)
    basis = []
    for vec in mat.kernel():
        terms = {m: c for m, c in zip(mat.columns, vec) if c}
        basis.append(Poly(q.n, terms))
    return CRSpace(degree=d, basis=basis)


def weighted_monomial_index(n: int, d: int) -> List[Tuple[Tuple[int, ...], int]]:
    """All (alpha, j) with |alpha| + 2j = d: the unknowns of the matching
    system, ordered by j then alpha."""
    out = []
    for j in range(d // 2 + 1):
        for alpha in _compositions(d - 2 * j, n):
            out.append((alpha, j))
    return out


@dataclass
class ExtensionResult:
    """A holomorphic polynomial F(z, w) matching f on the quadric."""

    F: Poly
    residual: Poly  # f - F(z, Q), identically zero on success
    unique: bool


def extend_homogeneous(q: Quadric, f: Poly, check_cr: bool = True) -> ExtensionResult:
    """Extend one homogeneous CR polynomial across the quadric.

    Solves the exact linear system matching f against the z^alpha Q^j ansatz
    of the same weighted degree.  Inconsistency raises NoExtension; that can
    only happen when the stacked rank is at most one."""
    if q.n < 2:
        raise RequiresNGe2("extension needs n >= 2")
    if not f.is_w_free:
        raise WVariablePresent("f must be a function of z and zbar only")
    if f.n != q.n:
        raise DimensionMismatch("f has dimension %d, quadric %d" % (f.n, q.n))
    if f.is_zero:
        return ExtensionResult(F=Poly.zero(q.n), residual=Poly.zero(q.n), unique=True)
    d = f.total_degree()
    if f.order() != d:
        raise ValueError("f must be homogeneous")
    if check_cr:
        chk = is_cr(quadric_model(q), f)
        if not chk.holds:
            raise NotCR("f fails the CR equations at degree %d" % d, degree=d)
    n = q.n
    monos = homogeneous_monomials(n, d)
    row_of = {m: i for i, m in enumerate(monos)}
    unknowns = weighted_monomial_index(n, d)
    qp = q.q_poly()
    qpowers = [Poly.constant(1, n)]
    for _ in range(d // 2):
        qpowers.append(qpowers[-1] * qp)
    columns: List[Dict[int, GaussRational]] = []
    for alpha, j in unknowns:
        base = Poly.from_monomial(Monomial(alpha, (0,) * n, 0), ONE, n)
        image = base * qpowers[j]
        columns.append({row_of[m]: c for m, c in image.terms.items()})
    # assemble rows from columns
    rows: List[Dict[int, GaussRational]] = [dict() for _ in monos]
    for ci, col in enumerate(columns):
        for ri, c in col.items():
            rows[ri][ci] = c
    rhs = [ZERO] * len(monos)
    for m, c in f.terms.items():
        rhs[row_of[m]] = c
    sols, unique = linalg.solve_many_sparse(rows, len(unknowns), [rhs])
    if sols[0] is None:
        raise NoExtension(
            "no holomorphic polynomial matches f at degree %d" % d, degree=d
        )
    fterms = {}
    for (alpha, j), c in zip(unknowns, sols[0]):
        if c:
            fterms[Monomial(alpha, (0,) * n, j)] = c
    F = Poly(n, fterms)
    residual = f - F.substitute_w(qp)
    return ExtensionResult(F=F, residual=residual, unique=unique)


def extend_polynomial(
    q: Quadric, f: Poly, require_rank: bool = False
) -> ExtensionResult:
    """Extend a CR polynomial degree by degree.

    Each homogeneous part must itself be CR (on a quadric the CR equations
    preserve degree), and each part is extended separately.  With
    require_rank set, quadrics of stacked rank below two are rejected up
    front instead of being attempted."""
    if q.n < 2:
        raise RequiresNGe2("extension needs n >= 2")
    if require_rank and rank_condition(q) < 2:
        raise RankTooLow("stacked matrix [A*; B] has rank below two")
    if not f.is_w_free:
        raise WVariablePresent("f must be a function of z and zbar only")
    model = quadric_model(q)
    F = Poly.zero(q.n)
    unique = True
    for d, part in f.homogeneous_parts():
        if d == 0:
            F = F + part
            continue
        chk = is_cr(model, part)
        if not chk.holds:
            raise NotCR("degree-%d part of f fails the CR equations" % d, degree=d)
        res = extend_homogeneous(q, part, check_cr=False)
        F = F + res.F
        unique = unique and res.unique
    residual = f - F.substitute_w(q.q_poly())
    return ExtensionResult(F=F, residual=residual, unique=unique)


def counterexample_linear(q: Quadric) -> Optional[List[GaussRational]]:
    """A nonzero vector v with v . zbar CR but not holomorphically
    extendable, certified by construction; None when the stacked rank is at
    least two.  Quadrics with no antiholomorphic part are rejected since
    every function is then vacuously CR."""
    if q.n < 2:
        raise RequiresNGe2("needs n >= 2")
    if not q.has_antiholomorphic_part:
        raise DegenerateQuadric("Q has no zbar part; the CR condition is vacuous")
    if rank_condition(q) >= 2:
        return None
    basis = cr_linear_space(q)
    if not basis:
        raise RuntimeError("rank <= 1 quadric with trivial CR linear space")
    v = basis[0]
    f = Poly(
        q.n,
        {
            Monomial.of_var("zb", j + 1, q.n): c
            for j, c in enumerate(v)
            if c
        },
    )
    chk = is_cr(quadric_model(q), f)
    if not chk.holds:
        raise RuntimeError("certification failed: v . zbar is not CR")
    return v


def dump_matrix_csv(q: Quadric, d: int, fileobj) -> None:
    """Write the degree-d CR matrix as CSV.

    The first row holds the column labels (input monomials).  Every other
    row starts with "L(k,l):<output monomial>" followed by the exact
    coefficient strings."""
    from .polyio import format_poly

    mat = cr_equation_matrix(q, d)
    writer = csv.writer(fileobj, lineterminator="\n")
    header = ["row"] + [
        format_poly(Poly.from_monomial(m, ONE, q.n)) for m in mat.columns
    ]
    writer.writerow(header)
    for (k, l, mono), row in zip(mat.row_labels, mat.rows):
        label = "L(%d,%d):%s" % (k, l, format_poly(Poly.from_monomial(mono, ONE, q.n)))
        cells = [str(row.get(j, ZERO)) for j in range(len(mat.columns))]
        writer.writerow([label] + cells)
