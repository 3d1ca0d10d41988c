"""(Skew) dual immaculate functions and the immaculate bases dual to them.

The dual immaculate side is built from tableaux.  The NSym side is built by
duality: if 𝔖*_a = sum_g K[a][g] M_g then I_b = sum_g (K^-1)[g][b] H_g, so
that <𝔖*_a, I_b> = delta_ab.  No creation operators are needed.
"""

from __future__ import annotations

from collections import Counter
from functools import cache

from . import nsym, qsym
from .algebra import Basis, Element, exact_inverse, from_dict
from .compositions import (
    Composition,
    SkewShape,
    comp_of,
    complement,
    compositions_of,
    skew,
)
from .tableaux import descent_distribution


def _as_shape(shape) -> SkewShape:
    if isinstance(shape, SkewShape):
        return shape
    return skew(tuple(shape))


@cache
def _dual_immaculate(shape: SkewShape, row_strict: bool) -> dict:
    n = shape.size
    out: Counter = Counter()
    for des, count in descent_distribution(shape).items():
        S = complement(des, n) if row_strict else des
        out[comp_of(S, n)] += count
    return dict(out)


def dual_immaculate_f(shape) -> Element:
    """𝔖*_{alpha/beta} = sum over standard skew immaculate tableaux T of F_comp(Des T)."""
    return from_dict(Basis.F, _dual_immaculate(_as_shape(shape), False))


def rs_dual_immaculate_f(shape) -> Element:
    """Row-strict version: complemented descent sets."""
    return from_dict(Basis.F, _dual_immaculate(_as_shape(shape), True))


def S(*parts: int) -> Element:
    return Element.basis_element(Basis.S, tuple(parts))


def RS(*parts: int) -> Element:
    return Element.basis_element(Basis.RS, tuple(parts))


def I(*parts: int) -> Element:  # noqa: E743
    return Element.basis_element(Basis.I, tuple(parts))


def RI(*parts: int) -> Element:
    return Element.basis_element(Basis.RI, tuple(parts))


def skew_term(shape: SkewShape, row_strict: bool = False, coeff: int = 1) -> Element:
    """Basis term for a skew shape; an empty inner shape gives the straight tag."""
    if shape.is_straight:
        basis = Basis.RS if row_strict else Basis.S
        return Element.basis_element(basis, shape.outer, coeff)
    basis = Basis.SKEW_RS if row_strict else Basis.SKEW_S
    return Element.basis_element(basis, shape, coeff)


# per-degree matrices


@cache
def _dual_immaculate_matrix(n: int, basis: Basis, row_strict: bool) -> tuple[tuple[Composition, ...], tuple]:
    """Rows: 𝔖*_a (or RS*_a) for a |= n, columns: the M or F basis, both in compositions_of order."""
    comps = tuple(compositions_of(n))
    pos = {c: i for i, c in enumerate(comps)}
    rows = []
    for a in comps:
        row = [0] * len(comps)
        e = from_dict(Basis.F, _dual_immaculate(skew(a), row_strict))
        if basis is Basis.M:
            e = qsym.to_monomial(e)
        for (_, g), c in e.items():
            row[pos[g]] = c
        rows.append(tuple(row))
    return comps, tuple(rows)


@cache
def _inverse(n: int, basis: Basis, row_strict: bool) -> tuple:
    _, rows = _dual_immaculate_matrix(n, basis, row_strict)
    inv = exact_inverse([list(r) for r in rows])
    if not all(isinstance(x, int) for row in inv for x in row):
        raise ArithmeticError(f"dual immaculate matrix at degree {n} is not unimodular")
    return tuple(tuple(r) for r in inv)


@cache
def _immaculate_table(n: int) -> dict:
    comps, _ = _dual_immaculate_matrix(n, Basis.M, False)
    inv = _inverse(n, Basis.M, False)
    return {b: {g: inv[i][j] for i, g in enumerate(comps) if inv[i][j]} for j, b in enumerate(comps)}


def immaculate_h(n: int) -> dict[Composition, Element]:
    """{beta: I_beta written in H} for every beta |= n."""
    return {b: from_dict(Basis.H, t) for b, t in _immaculate_table(n).items()}


@cache
def _rs_immaculate_table(n: int) -> dict:
    out = {}
    for b, e in immaculate_h(n).items():
        out[b] = dict(nsym.to_complete(nsym.psi_n(e)).items())
    return out


def rs_immaculate_h(n: int) -> dict[Composition, Element]:
    """{beta: RI_beta = psi(I_beta) written in H}."""
    return {b: Element(t) for b, t in _rs_immaculate_table(n).items()}


# conversions


def to_fundamental(e: Element) -> Element:
    """Any QSym element (M, F, S, RS and their skew versions) in the F basis."""

    def f(basis, idx):
        if basis is Basis.F:
            return Element({(Basis.F, idx): 1})
        if basis is Basis.M:
            return qsym.m_to_f(idx)
        if basis in (Basis.S, Basis.SKEW_S):
            return dual_immaculate_f(idx)
        if basis in (Basis.RS, Basis.SKEW_RS):
            return rs_dual_immaculate_f(idx)
        raise TypeError(f"{basis.value} is not a QSym basis")

    return e.linear(f)


def to_monomial(e: Element) -> Element:
    if e.bases() <= {Basis.M}:
        return e
    return qsym.to_monomial(to_fundamental(e))


def to_complete(e: Element) -> Element:
    """Any NSym element (H, E, I, RI) in the H basis."""

    def f(basis, idx):
        if basis is Basis.H:
            return Element({(Basis.H, idx): 1})
        if basis is Basis.E:
            return nsym.e_to_h(idx)
        if basis is Basis.I:
            return from_dict(Basis.H, _immaculate_table(sum(idx))[idx])
        if basis is Basis.RI:
            return Element(_rs_immaculate_table(sum(idx))[idx])
        raise TypeError(f"{basis.value} is not an NSym basis")

    return e.linear(f)


def _expand(e: Element, target: Basis, row_strict: bool) -> Element:
    e = to_fundamental(e)
    terms = {}
    for n in sorted(e.degrees()):
        comps, _ = _dual_immaculate_matrix(n, Basis.F, row_strict)
        inv = _inverse(n, Basis.F, row_strict)
        pos = {c: i for i, c in enumerate(comps)}
        vec = [0] * len(comps)
        for (_, g), c in e.homogeneous_component(n).items():
            vec[pos[g]] = c
        for j, a in enumerate(comps):
            c = sum(vec[i] * inv[i][j] for i in range(len(comps)) if vec[i])
            if c:
                terms[(target, a)] = c
    return Element(terms)


def expand_in_dual_immaculate(e: Element) -> Element:
    """Rewrite a QSym element in the 𝔖* basis (exact, integral)."""
    return _expand(e, Basis.S, False)


def expand_in_rs_dual_immaculate(e: Element) -> Element:
    return _expand(e, Basis.RS, True)


def expand_in_immaculate(e: Element) -> Element:
    """Rewrite an NSym element in the I basis: the coefficient of I_a is <e, 𝔖*_a>."""
    e = to_complete(e)
    terms = {}
    for n in sorted(e.degrees()):
        comps, rows = _dual_immaculate_matrix(n, Basis.M, False)
        pos = {c: i for i, c in enumerate(comps)}
        comp = e.homogeneous_component(n)
        for i, a in enumerate(comps):
            c = sum(coeff * rows[i][pos[g]] for (_, g), coeff in comp.items())
            if c:
                terms[(Basis.I, a)] = c
    return Element(terms)


def expand_in_rs_immaculate(e: Element) -> Element:
    e = to_complete(e)
    terms = {}
    for n in sorted(e.degrees()):
        comps, rows = _dual_immaculate_matrix(n, Basis.M, True)
        pos = {c: i for i, c in enumerate(comps)}
        comp = e.homogeneous_component(n)
        for i, a in enumerate(comps):
            c = sum(coeff * rows[i][pos[g]] for (_, g), coeff in comp.items())
            if c:
                terms[(Basis.RI, a)] = c
    return Element(terms)
