"""Graded pieces of symmetric algebras on rational subspaces.

For a subspace V of Q^r this module works with the degree-d piece of the
polynomial algebra S(V*), in the basis of monomials in the coordinates
dual to the canonical (RREF) basis of V.  The central operation is the
restriction map S(W*)_d -> S(V*)_d induced by an inclusion V <= W: write
the canonical basis of V in the canonical basis of W and substitute the
resulting linear forms into each monomial.

Grading convention: the generators of S(V*) sit in cohomological degree 2,
so polynomial degree d contributes to cohomological degree 2d.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import InputShapeError, SubspaceContainmentError
from .exactlin import MatrixQ, SubspaceQ, subspace_relations


def sym_dim(var_count: int, degree: int) -> int:
    """Dimension of the degree-``degree`` piece of a polynomial ring.

    >>> sym_dim(2, 3)
    4
    >>> sym_dim(0, 0), sym_dim(0, 2)
    (1, 0)
    """
    if var_count < 0 or degree < 0:
        raise InputShapeError("sym_dim arguments must be nonnegative")
    if var_count == 0:
        return 1 if degree == 0 else 0
    return comb(degree + var_count - 1, var_count - 1)


@dataclass(frozen=True)
class MonomialBasis:
    """Ordered monomial basis of S(V*)_d for a ``var_count``-dimensional V.

    Monomials are exponent tuples in graded-lexicographic order (all of one
    total degree, lexicographically decreasing), which fixes the row and
    column conventions of every matrix built on top.
    """

    var_count: int
    degree: int
    monomials: tuple[tuple[int, ...], ...]

    def index(self, exponents: tuple[int, ...]) -> int:
        return self._index_map()[exponents]

    def _index_map(self):
        # tiny and immutable; rebuilt on demand rather than cached per instance
        return {m: i for i, m in enumerate(self.monomials)}

    def __len__(self):
        return len(self.monomials)


@lru_cache(maxsize=None)
def monomial_basis(var_count: int, degree: int) -> MonomialBasis:
    if var_count < 0 or degree < 0:
        raise InputShapeError("monomial_basis arguments must be nonnegative")
    monomials: list[tuple[int, ...]] = []

    def emit(prefix: tuple[int, ...], remaining: int, slots: int):
        if slots == 0:
            if remaining == 0:
                monomials.append(prefix)
            return
        if slots == 1:
            monomials.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            emit(prefix + (e,), remaining - e, slots - 1)

    emit((), degree, var_count)
    basis = MonomialBasis(var_count, degree, tuple(monomials))
    assert len(basis) == sym_dim(var_count, degree)
    return basis


@dataclass(frozen=True)
class RestrictionMap:
    """Matrix of S(ambient*)_d -> S(sub*)_d in the canonical monomial bases.

    Columns are indexed by the ambient monomials, rows by the sub
    monomials.
    """

    ambient: SubspaceQ
    sub: SubspaceQ
    degree: int
    matrix: MatrixQ


def _inclusion_coordinates(ambient: SubspaceQ, sub: SubspaceQ) -> list[list[Fraction]]:
    """Rows: canonical basis of sub expressed in the canonical basis of ambient.

    Because the ambient basis is in RREF, coordinates are read off its pivot
    columns directly.
    """
    piv = ambient.pivot_columns()
    return [[sub.basis.entry(i, p) for p in piv] for i in range(sub.dim)]


def _expand_monomial(alpha, linear_forms, nvars_sub):
    """Expand prod_j (linear_forms[j]) ** alpha[j] into {exponent: coeff}."""
    poly = {(0,) * nvars_sub: Fraction(1)}
    for j, power in enumerate(alpha):
        form = linear_forms[j]
        for _ in range(power):
            if not form:
                return {}
            out: dict[tuple[int, ...], Fraction] = {}
            for mono, coeff in poly.items():
                for i, c in form:
                    key = mono[:i] + (mono[i] + 1,) + mono[i + 1 :]
                    prev = out.get(key)
                    out[key] = coeff * c if prev is None else prev + coeff * c
            poly = {k: v for k, v in out.items() if v}
            if not poly:
                return {}
    return poly


@lru_cache(maxsize=None)
def restriction_matrix(ambient: SubspaceQ, sub: SubspaceQ, degree: int) -> RestrictionMap:
    """Restriction of degree-``degree`` polynomials along sub <= ambient.

    Functorial: for c <= b <= a the matrix along (a, c) equals the product
    of the matrices along (b, c) and (a, b).  Raises
    :class:`SubspaceContainmentError` when sub is not contained in ambient.
    """
    if degree < 0:
        raise InputShapeError("negative polynomial degree")
    rel = subspace_relations(ambient, sub)
    if not rel.a_contains_b:
        raise SubspaceContainmentError(
            f"subspace of dim {sub.dim} is not contained in the ambient of dim {ambient.dim}"
        )
    amb_basis = monomial_basis(ambient.dim, degree)
    sub_basis = monomial_basis(sub.dim, degree)
    coords = _inclusion_coordinates(ambient, sub)
    # linear form substituted for the j-th ambient coordinate function
    linear_forms = [
        [(i, coords[i][j]) for i in range(sub.dim) if coords[i][j]]
        for j in range(ambient.dim)
    ]
    index = {m: i for i, m in enumerate(sub_basis.monomials)}
    entries = [Fraction(0)] * (len(sub_basis) * len(amb_basis))
    ncols = len(amb_basis)
    for col, alpha in enumerate(amb_basis.monomials):
        for mono, coeff in _expand_monomial(alpha, linear_forms, sub.dim).items():
            entries[index[mono] * ncols + col] = coeff
    matrix = MatrixQ(len(sub_basis), ncols, entries)
    return RestrictionMap(ambient, sub, degree, matrix)
