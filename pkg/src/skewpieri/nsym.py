"""NSym on the complete homogeneous (H) and elementary (E) bases."""

from __future__ import annotations

from collections import Counter
from functools import cache
from itertools import product as cartesian

from .algebra import Basis, Element, Tensor, from_dict
from .compositions import Composition, compositions_of


def H(*parts: int) -> Element:
    return Element.basis_element(Basis.H, tuple(parts))


def E(*parts: int) -> Element:
    return Element.basis_element(Basis.E, tuple(parts))


def h_product(alpha: Composition, beta: Composition) -> Element:
    return H(*alpha, *beta)


def e_product(alpha: Composition, beta: Composition) -> Element:
    return E(*alpha, *beta)


def _concat_products(factors: list[dict]) -> dict:
    out: Counter = Counter({(): 1})
    for f in factors:
        nxt: Counter = Counter()
        for a, ca in out.items():
            for b, cb in f.items():
                nxt[a + b] += ca * cb
        out = nxt
    return {k: v for k, v in out.items() if v}


@cache
def _swap_generator(n: int) -> dict:
    # E_n = sum (-1)^(n - len(beta)) H_beta, and symmetrically H_n in E
    return {beta: (-1) ** (n - len(beta)) for beta in compositions_of(n)}


@cache
def _swap(alpha: Composition) -> dict:
    return _concat_products([_swap_generator(a) for a in alpha])


def e_to_h(alpha: Composition) -> Element:
    return from_dict(Basis.H, _swap(tuple(alpha)))


def h_to_e(alpha: Composition) -> Element:
    return from_dict(Basis.E, _swap(tuple(alpha)))


def to_complete(e: Element) -> Element:
    def f(basis, idx):
        if basis is Basis.H:
            return Element({(Basis.H, idx): 1})
        if basis is Basis.E:
            return e_to_h(idx)
        raise TypeError(f"nsym cannot convert {basis.value} terms; use skewpieri.immaculate")

    return e.linear(f)


def to_elementary(e: Element) -> Element:
    def f(basis, idx):
        if basis is Basis.E:
            return Element({(Basis.E, idx): 1})
        if basis is Basis.H:
            return h_to_e(idx)
        raise TypeError(f"nsym cannot convert {basis.value} terms; use skewpieri.immaculate")

    return e.linear(f)


def product(a: Element, b: Element) -> Element:
    """Concatenation product; stays in E iff both factors are purely elementary."""
    basis = Basis.E if a.bases() <= {Basis.E} and b.bases() <= {Basis.E} else Basis.H
    if basis is Basis.H:
        a, b = to_complete(a), to_complete(b)
    terms: Counter = Counter()
    for (_, x), cx in a.items():
        for (_, y), cy in b.items():
            terms[(basis, x + y)] += cx * cy
    return Element(terms)


def _coproduct_generic(alpha: Composition, basis: Basis) -> Tensor:
    # Delta X_n = sum_{i + j = n} X_i (x) X_j, extended multiplicatively
    terms: Counter = Counter()
    for cut in cartesian(*(range(a + 1) for a in alpha)):
        left = tuple(i for i in cut if i)
        right = tuple(a - i for a, i in zip(alpha, cut) if a - i)
        terms[((basis, left), (basis, right))] += 1
    return Tensor(terms)


def coproduct_h(alpha: Composition) -> Tensor:
    return _coproduct_generic(tuple(alpha), Basis.H)


def coproduct_e(alpha: Composition) -> Tensor:
    return _coproduct_generic(tuple(alpha), Basis.E)


def coproduct(e: Element) -> Tensor:
    if e.bases() <= {Basis.E}:
        parts = [coproduct_e(idx).scale(c) for (_, idx), c in e.items()]
    else:
        parts = [coproduct_h(idx).scale(c) for (_, idx), c in to_complete(e).items()]
    return sum(parts, Tensor())


@cache
def _antipode_generator(n: int) -> dict:
    # sum_{i=0}^n S(H_i) H_{n-i} = 0 for n > 0, solved for S(H_n)
    if n == 0:
        return {(): 1}
    out: Counter = Counter()
    for i in range(n):
        for idx, c in _antipode_generator(i).items():
            out[idx + (n - i,)] -= c
    return {k: v for k, v in out.items() if v}


def antipode_h(alpha: Composition) -> Element:
    """S(H_alpha) = S(H_{alpha_k}) ... S(H_{alpha_1}) (S reverses products)."""
    factors = [_antipode_generator(a) for a in reversed(tuple(alpha))]
    return from_dict(Basis.H, _concat_products(factors))


def antipode(e: Element) -> Element:
    return to_complete(e).linear(lambda _, idx: antipode_h(idx))


def psi_n(e: Element) -> Element:
    """The involution exchanging E_alpha and H_alpha."""

    def f(basis, idx):
        if basis is Basis.E:
            return Element({(Basis.H, idx): 1})
        if basis is Basis.H:
            return Element({(Basis.E, idx): 1})
        raise TypeError(f"psi_n is defined on H and E terms, not {basis.value}")

    return e.linear(f)


def counit(e: Element):
    return sum(c for (_, idx), c in e.items() if not idx)
