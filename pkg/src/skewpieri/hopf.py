"""The QSym/NSym duality pairing, the harpoon actions, and checks of the
right-action identities they satisfy.

Both algebras play either role.  For x in one algebra and y in the other::

    right_harpoon(x, y) = sum <x, y_1> y_2      (x ↽ y)
    left_harpoon(x, y)  = sum <x, y_2> y_1      (x ⇀ y)

Pairings are computed with x in H (or M) and the coproduct of y taken in
M (or H), so every result comes back in the M or H basis.
"""

from __future__ import annotations

from collections import Counter
from functools import cache

from . import nsym, qsym
from .algebra import Basis, Element, Family, Tensor, degree, from_dict
from .compositions import Composition, compositions_of
from .immaculate import to_complete, to_fundamental, to_monomial


def _family(e: Element, default: Family | None = None) -> Family:
    if e.family is None:
        if default is None:
            raise ValueError("cannot infer the algebra of the zero element")
        return default
    return e.family


def _pairing_basis(e: Element) -> Element:
    return to_complete(e) if e.family is Family.NSYM else to_monomial(e)


def unit(family: Family) -> Element:
    basis = Basis.H if family is Family.NSYM else Basis.F
    return Element.basis_element(basis, ())


def product(a: Element, b: Element) -> Element:
    if not a or not b:
        return Element()
    if a.family is not b.family:
        raise TypeError("product of a QSym and an NSym element")
    if a.family is Family.NSYM:
        if not a.bases() <= {Basis.H, Basis.E} or not b.bases() <= {Basis.H, Basis.E}:
            a, b = to_complete(a), to_complete(b)
        return nsym.product(a, b)
    if not a.bases() <= {Basis.M, Basis.F} or not b.bases() <= {Basis.M, Basis.F}:
        a, b = to_fundamental(a), to_fundamental(b)
    return qsym.product(a, b)


def coproduct(e: Element) -> Tensor:
    """Coproduct in the pairing basis (M for QSym, H for NSym)."""
    if not e:
        return Tensor()
    if e.family is Family.NSYM:
        return nsym.coproduct(to_complete(e))
    return qsym.coproduct(to_monomial(e))


def antipode(e: Element) -> Element:
    if not e:
        return e
    if e.family is Family.NSYM:
        return nsym.antipode(to_complete(e))
    return qsym.antipode(to_fundamental(e))


def counit(e: Element):
    """Coefficient of the unit; every basis has its degree-0 element equal to 1."""
    return sum(c for (_, idx), c in e.items() if degree(idx) == 0)


def pair(x: Element, y: Element):
    """<x, y> for one NSym and one QSym element (either order)."""
    if not x or not y:
        return 0
    if x.family is y.family:
        raise TypeError("pairing needs one QSym and one NSym element")
    h, m = (x, y) if x.family is Family.NSYM else (y, x)
    h, m = to_complete(h), to_monomial(m)
    return sum(c * m.coefficient(Basis.M, idx) for (_, idx), c in h.items())


def _contract(x: Element, y: Element, leg: int) -> Element:
    if not x or not y:
        return Element()
    if x.family is y.family:
        raise TypeError("harpoon actions need one QSym and one NSym argument")
    xp = _pairing_basis(x)
    weights = {idx: c for (_, idx), c in xp.items()}
    terms: Counter = Counter()
    for (k1, k2), c in coproduct(y).items():
        paired, kept = (k1, k2) if leg == 0 else (k2, k1)
        w = weights.get(paired[1])
        if w:
            terms[kept] += c * w
    return Element(terms)


def right_harpoon(x: Element, y: Element) -> Element:
    """x ↽ y = sum <x, y_1> y_2."""
    return _contract(x, y, 0)


def left_harpoon(x: Element, y: Element) -> Element:
    """x ⇀ y = sum <x, y_2> y_1."""
    return _contract(x, y, 1)


def left_harpoon_on_a(h: Element, a: Element) -> Element:
    """h ⇀ a for h in NSym, a in QSym."""
    _require(h, Family.NSYM, a, Family.QSYM)
    return left_harpoon(h, a)


def right_harpoon_on_a(h: Element, a: Element) -> Element:
    """h ↽ a for h in NSym, a in QSym."""
    _require(h, Family.NSYM, a, Family.QSYM)
    return right_harpoon(h, a)


def right_harpoon_on_h(a: Element, h: Element) -> Element:
    """a ↽ h = sum <h_1, a> h_2 for a in QSym, h in NSym."""
    _require(a, Family.QSYM, h, Family.NSYM)
    return right_harpoon(a, h)


def left_harpoon_on_h(a: Element, h: Element) -> Element:
    """a ⇀ h = sum <h_2, a> h_1 for a in QSym, h in NSym."""
    _require(a, Family.QSYM, h, Family.NSYM)
    return left_harpoon(a, h)


def _require(x: Element, fx: Family, y: Element, fy: Family) -> None:
    if (x and x.family is not fx) or (y and y.family is not fy):
        raise TypeError(f"expected a {fx.value} element and a {fy.value} element")


def sweedler(e: Element) -> list[tuple[Element, Element]]:
    """Coproduct of e as a list of (e_1, e_2) pairs of scaled basis elements."""
    return [(Element({k1: c}), Element({k2: 1})) for (k1, k2), c in coproduct(e).items()]


def same(a: Element, b: Element) -> bool:
    """Equality after rewriting both sides in the pairing basis."""
    return _pairing_basis(a) == _pairing_basis(b)


# identity checks; every argument may be any element of the stated algebra


def check_adjoint_right(f: Element, g: Element, a: Element) -> bool:
    """<g, f ↽ a> == <fg, a>."""
    return pair(g, right_harpoon(f, a)) == pair(f * g, a)


def check_adjoint_left(f: Element, g: Element, a: Element) -> bool:
    """<g, f ⇀ a> == <gf, a>."""
    return pair(g, left_harpoon(f, a)) == pair(g * f, a)


def check_antipode(h: Element) -> bool:
    """sum S(h_1) h_2 == eps(h) 1 == sum h_1 S(h_2)."""
    fam = _family(h)
    target = unit(fam).scale(counit(h))
    left = sum((antipode(x) * y for x, y in sweedler(h)), Element())
    right = sum((x * antipode(y) for x, y in sweedler(h)), Element())
    return same(left, target) and same(right, target)


def check_lemma_rightactprod(f: Element, a: Element, b: Element) -> bool:
    """f ↽ (a b) == sum (f_1 ↽ a)(f_2 ↽ b)."""
    lhs = right_harpoon(f, a * b)
    rhs = sum((right_harpoon(f1, a) * right_harpoon(f2, b) for f1, f2 in sweedler(f)), Element())
    return same(lhs, rhs)


def check_lemma_id(h: Element, a: Element) -> bool:
    """(eps(h) 1_H) ↽ a == eps(h) a."""
    eps = counit(h)
    return same(right_harpoon(unit(_family(h)).scale(eps), a), a.scale(eps))


def _legs(h: Element, opposite: bool) -> list[tuple[Element, Element]]:
    return [(y, x) for x, y in sweedler(h)] if opposite else sweedler(h)


def check_lemma_product(h: Element, a: Element, b: Element, opposite: bool = False) -> bool:
    """a (h ↽ b) == sum h_1 ↽ ((S(h_2) ↽ a) b).

    Holds for h in NSym.  For h in QSym it needs ``opposite=True`` (the two
    Sweedler legs exchanged) unless Delta h is symmetric, as for F_(s).
    """
    lhs = a * right_harpoon(h, b)
    rhs = sum(
        (right_harpoon(h1, right_harpoon(antipode(h2), a) * b) for h1, h2 in _legs(h, opposite)),
        Element(),
    )
    return same(lhs, rhs)


def check_lemma_raction(h: Element, a: Element, g: Element, opposite: bool = False) -> bool:
    """h (a ↽ g) == sum (S(h_2) ↽ a) ↽ (h_1 g); ``opposite`` as for check_lemma_product."""
    lhs = h * right_harpoon(a, g)
    rhs = sum(
        (right_harpoon(right_harpoon(antipode(h2), a), h1 * g) for h1, h2 in _legs(h, opposite)),
        Element(),
    )
    return same(lhs, rhs)


# the right-action skew Littlewood-Richardson formula, on L = F (QSym) and
# R = its dual basis in NSym.  Everything is computed inside QSym.


@cache
def skew_fundamental(alpha: Composition, beta: Composition) -> dict:
    """F_{alpha/beta} = R_beta ↽ F_alpha = sum of F_g over the F_beta (x) F_g terms of Delta F_alpha."""
    return {g: 1 for b, g in qsym._f_splits(alpha) if b == beta}


def _f_coproduct_of(e: dict) -> Counter:
    out: Counter = Counter()
    for idx, c in e.items():
        for b, g in qsym._f_splits(idx):
            out[(b, g)] += c
    return out


def generic_skew_lr(
    alpha: Composition, beta: Composition, gamma: Composition, delta: Composition, opposite: bool = True
) -> Element:
    """Right-hand side of the skew LR formula for F_{alpha/beta} F_{gamma/delta}, in F.

    sum over pi, rho, nu, mu of (-1)^|rho| c^alpha_{pi,rho,beta} b^nu_{pi,gamma}
    b^delta_{mu,rho*} F_{nu/mu}, where S(F_rho) = (-1)^|rho| F_rho* and
    c^alpha_{pi,rho,beta} is the coefficient of F_pi (x) F_rho in Delta F_{alpha/beta}.

    QSym plays the part of the algebra carrying the coproduct here, and (as
    with check_lemma_product) the formula only holds with the two legs of
    Delta F_{alpha/beta} exchanged; that is the default.  ``opposite=False``
    uses them as written, which already fails for F_(1,2) F_{(1)/(1)} = F_(1,2).
    """
    alpha, beta, gamma, delta = map(tuple, (alpha, beta, gamma, delta))
    out: Counter = Counter()
    for (left, right), c in _f_coproduct_of(skew_fundamental(alpha, beta)).items():
        pi, rho = (right, left) if opposite else (left, right)
        rho_star = qsym.antipode_index(rho)
        sign = (-1) ** sum(rho)
        mu_size = sum(delta) - sum(rho)
        if mu_size < 0:
            continue
        mus = []
        for mu in compositions_of(mu_size):
            b2 = qsym._f_product(mu, rho_star).get(delta, 0)
            if b2:
                mus.append((mu, b2))
        if not mus:
            continue
        for nu, b1 in qsym._f_product(pi, gamma).items():
            for mu, b2 in mus:
                for g, c3 in skew_fundamental(nu, mu).items():
                    out[g] += sign * c * b1 * b2 * c3
    return from_dict(Basis.F, {k: v for k, v in out.items() if v})


def skew_fundamental_product(alpha, beta, gamma, delta) -> Element:
    """F_{alpha/beta} F_{gamma/delta} computed directly."""
    left = from_dict(Basis.F, skew_fundamental(tuple(alpha), tuple(beta)))
    right = from_dict(Basis.F, skew_fundamental(tuple(gamma), tuple(delta)))
    return qsym.product(left, right)
