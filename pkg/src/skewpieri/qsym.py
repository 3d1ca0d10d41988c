"""QSym on the monomial (M) and fundamental (F) bases.

Kernels work on composition tuples and return ``{composition: coeff}``
dicts; the public functions wrap them as :class:`Element` values.
"""

from __future__ import annotations

from collections import Counter
from functools import cache
from itertools import combinations, combinations_with_replacement

from .algebra import Basis, Element, Tensor, from_dict
from .compositions import Composition, comp_of, complement_composition, set_of


def M(*parts: int) -> Element:
    return Element.basis_element(Basis.M, tuple(parts))


def F(*parts: int) -> Element:
    return Element.basis_element(Basis.F, tuple(parts))


@cache
def _quasi_shuffle(alpha: Composition, beta: Composition) -> dict:
    if not alpha:
        return {beta: 1}
    if not beta:
        return {alpha: 1}
    a, b = alpha[0], beta[0]
    out: Counter = Counter()
    for head, rest in (
        ((a,), _quasi_shuffle(alpha[1:], beta)),
        ((b,), _quasi_shuffle(alpha, beta[1:])),
        ((a + b,), _quasi_shuffle(alpha[1:], beta[1:])),
    ):
        for gamma, c in rest.items():
            out[head + gamma] += c
    return dict(out)


def monomial_product(alpha: Composition, beta: Composition) -> Element:
    """M_alpha * M_beta as a sum over overlapping shuffles."""
    return from_dict(Basis.M, _quasi_shuffle(tuple(alpha), tuple(beta)))


def _supersets(alpha: Composition):
    n = sum(alpha)
    base = set_of(alpha)
    free = sorted(set(range(1, n)) - base)
    for r in range(len(free) + 1):
        for extra in combinations(free, r):
            yield comp_of(base | set(extra), n), r


@cache
def _f_to_m(alpha: Composition) -> dict:
    return {beta: 1 for beta, _ in _supersets(alpha)}


@cache
def _m_to_f(alpha: Composition) -> dict:
    return {beta: (-1) ** r for beta, r in _supersets(alpha)}


def f_to_m(alpha: Composition) -> Element:
    """F_alpha as the sum of M_beta over refinements beta of alpha."""
    return from_dict(Basis.M, _f_to_m(tuple(alpha)))


def m_to_f(alpha: Composition) -> Element:
    return from_dict(Basis.F, _m_to_f(tuple(alpha)))


def to_monomial(e: Element) -> Element:
    """Rewrite an element on the M and F bases entirely in M."""

    def f(basis, idx):
        if basis is Basis.M:
            return Element({(Basis.M, idx): 1})
        if basis is Basis.F:
            return f_to_m(idx)
        raise TypeError(f"qsym cannot convert {basis.value} terms; use skewpieri.immaculate")

    return e.linear(f)


def to_fundamental(e: Element) -> Element:
    def f(basis, idx):
        if basis is Basis.F:
            return Element({(Basis.F, idx): 1})
        if basis is Basis.M:
            return m_to_f(idx)
        raise TypeError(f"qsym cannot convert {basis.value} terms; use skewpieri.immaculate")

    return e.linear(f)


@cache
def _f_product(alpha: Composition, beta: Composition) -> dict:
    out: Counter = Counter()
    for a, ca in _f_to_m(alpha).items():
        for b, cb in _f_to_m(beta).items():
            for g, cg in _quasi_shuffle(a, b).items():
                out[g] += ca * cb * cg
    res: Counter = Counter()
    for g, c in out.items():
        for h, ch in _m_to_f(g).items():
            res[h] += c * ch
    return {k: v for k, v in res.items() if v}


def fundamental_product(alpha: Composition, beta: Composition) -> Element:
    """F_alpha * F_beta, routed through the monomial basis."""
    return from_dict(Basis.F, _f_product(tuple(alpha), tuple(beta)))


def product(a: Element, b: Element) -> Element:
    """Product of two elements written on M and F.

    Stays in M when both factors are purely monomial, otherwise answers in F.
    """
    if a.bases() <= {Basis.M} and b.bases() <= {Basis.M}:
        terms: Counter = Counter()
        for (_, x), cx in a.items():
            for (_, y), cy in b.items():
                for g, c in _quasi_shuffle(x, y).items():
                    terms[(Basis.M, g)] += cx * cy * c
        return Element(terms)
    a, b = to_fundamental(a), to_fundamental(b)
    terms = Counter()
    for (_, x), cx in a.items():
        for (_, y), cy in b.items():
            for g, c in _f_product(x, y).items():
                terms[(Basis.F, g)] += cx * cy * c
    return Element(terms)


def _deconcatenations(alpha: Composition):
    for i in range(len(alpha) + 1):
        yield alpha[:i], alpha[i:]


def _f_splits(alpha: Composition):
    """(beta, gamma) with alpha = beta . gamma or alpha = beta (.) gamma."""
    n = sum(alpha)
    S = set_of(alpha)
    for i in range(n + 1):
        left = comp_of({s for s in S if s < i}, i)
        right = comp_of({s - i for s in S if s > i}, n - i)
        yield left, right


def coproduct_m(alpha: Composition) -> Tensor:
    return Tensor({((Basis.M, b), (Basis.M, g)): 1 for b, g in _deconcatenations(tuple(alpha))})


def coproduct_f(alpha: Composition) -> Tensor:
    return Tensor({((Basis.F, b), (Basis.F, g)): 1 for b, g in _f_splits(tuple(alpha))})


def coproduct(e: Element) -> Tensor:
    """Coproduct of an element on M and F (answers in M iff e is purely monomial)."""
    if e.bases() <= {Basis.M}:
        parts = [coproduct_m(idx).scale(c) for (_, idx), c in e.items()]
    else:
        parts = [coproduct_f(idx).scale(c) for (_, idx), c in to_fundamental(e).items()]
    return sum(parts, Tensor())


def antipode_f(alpha: Composition) -> Element:
    """S(F_alpha) = (-1)^|alpha| F_{rev(comp(set(alpha)^c))}.

    The reversal matters only when alpha is not a palindrome; without it the
    antipode identity already fails at F_(1,2).
    """
    alpha = tuple(alpha)
    return Element({(Basis.F, antipode_index(alpha)): (-1) ** sum(alpha)})


def antipode_index(alpha: Composition) -> Composition:
    return complement_composition(alpha)[::-1]


def antipode(e: Element) -> Element:
    return to_fundamental(e).linear(lambda _, idx: antipode_f(idx))


def psi_f(alpha: Composition) -> Element:
    return Element({(Basis.F, complement_composition(tuple(alpha))): 1})


def psi(e: Element) -> Element:
    """The involution F_alpha -> F_comp(set(alpha)^c), extended linearly."""
    return to_fundamental(e).linear(lambda _, idx: psi_f(idx))


def counit(e: Element):
    return sum(c for (_, idx), c in e.items() if not idx)


# truncated evaluation: the independent oracle for everything above


def _evaluate_m(alpha: Composition, m: int) -> Counter:
    out: Counter = Counter()
    for idx in combinations(range(m), len(alpha)):
        exps = [0] * m
        for i, a in zip(idx, alpha):
            exps[i] = a
        out[tuple(exps)] += 1
    return out


def _evaluate_f(alpha: Composition, m: int) -> Counter:
    n = sum(alpha)
    S = set_of(alpha)
    out: Counter = Counter()
    for idx in combinations_with_replacement(range(m), n):
        if any(idx[j - 1] == idx[j] for j in S):
            continue
        exps = [0] * m
        for i in idx:
            exps[i] += 1
        out[tuple(exps)] += 1
    return out


def evaluate_truncated(e: Element, m: int) -> dict:
    """Polynomial of ``e`` in x_1..x_m (later variables set to 0).

    Returned as ``{exponent tuple: coeff}``.  M and F terms are evaluated
    straight from their defining sums.
    """
    out: Counter = Counter()
    for (basis, idx), c in e.items():
        if basis is Basis.M:
            table = _evaluate_m(idx, m)
        elif basis is Basis.F:
            table = _evaluate_f(idx, m)
        else:
            raise TypeError(f"cannot evaluate {basis.value} terms")
        for k, v in table.items():
            out[k] += c * v
    return {k: v for k, v in out.items() if v}


def poly_mul(p: dict, q: dict) -> dict:
    out: Counter = Counter()
    for a, ca in p.items():
        for b, cb in q.items():
            out[tuple(x + y for x, y in zip(a, b))] += ca * cb
    return {k: v for k, v in out.items() if v}
