"""Pieri rules for (row-strict, skew) dual immaculate and immaculate functions.

Everything is driven by one signed coefficient, :func:`pieri_coeff`, which
returns the coefficient of 𝔖*_alpha in F_(s) 𝔖*_gamma.  The oracles here
recompute the same numbers by linear algebra, independently of it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .algebra import Basis, Element
from .compositions import (
    Composition,
    IntVector,
    SkewShape,
    compositions_of,
    contains,
    sgn,
    subtract,
    tail,
    vertical_strip_removals,
)
from .immaculate import (
    dual_immaculate_f,
    expand_in_dual_immaculate,
    rs_dual_immaculate_f,
    skew_term,
    to_fundamental,
)
from .qsym import F


def z_membership(beta: IntVector, s: int, alpha: Composition) -> bool:
    """Whether the integer vector beta lies in Z_{s,alpha}."""
    k = len(alpha)
    if len(beta) != k:
        raise ValueError(f"vector {beta} and composition {alpha} differ in length")
    # (1) total s, proper partial sums at most s
    if sum(beta) != s:
        return False
    partial = 0
    for b in beta[:-1]:
        partial += b
        if partial > s:
            return False
    # (2) alpha - beta nonnegative with at most one zero
    diffs = [a - b for a, b in zip(alpha, beta)]
    if any(d < 0 for d in diffs) or diffs.count(0) > 1:
        return False
    # (3) compare each part with what is left of s
    partial = 0
    for i, (a, b) in enumerate(zip(alpha, beta)):
        rest = s - partial
        if a > rest:
            if not 0 <= b <= rest:
                return False
        elif a < rest:
            if b >= 0:
                return False
        elif not (b < 0 or (b == a and not any(beta[i + 1 :]))):
            return False
        partial += b
    return True


@dataclass(frozen=True)
class PieriCoeffCase:
    value: int
    case: str  # "equal-length", "length-drop" or "zero"
    j: int | None = None
    r: int | None = None
    vector: IntVector | None = None


def _descent_window(gamma: Composition, alpha: Composition) -> tuple[int, int]:
    """(j, r) for the length-drop case, 1-indexed."""
    k = len(alpha)
    j = k
    while j > 1 and alpha[j - 1] == gamma[j - 2]:
        j -= 1
    r = j
    while r < k and alpha[r - 1] < alpha[r]:
        r += 1
    return j, r


def pieri_coeff_case(gamma: Composition, s: int, alpha: Composition) -> PieriCoeffCase:
    """The coefficient c^gamma_{s,alpha} together with the branch that produced it."""
    gamma, alpha = tuple(gamma), tuple(alpha)
    if sum(alpha) - sum(gamma) != s or s < 0:
        raise ValueError(f"|{alpha}| - |{gamma}| != {s}")
    k = len(alpha)
    if len(gamma) == k:
        v = subtract(alpha, gamma)
        if z_membership(v, s, alpha):
            return PieriCoeffCase(sgn(v), "equal-length", vector=v)
        return PieriCoeffCase(0, "zero", vector=v)
    if len(gamma) == k - 1:
        j, r = _descent_window(gamma, alpha)
        head = subtract(alpha[: j - 1], gamma[: j - 1])
        v = head + (alpha[j - 1],) + (0,) * (k - j)
        if (r - j) % 2 == 0 and z_membership(v, s, alpha):
            return PieriCoeffCase(sgn(head), "length-drop", j, r, v)
        return PieriCoeffCase(0, "zero", j, r, v)
    return PieriCoeffCase(0, "zero")


@cache
def pieri_coeff(gamma: Composition, s: int, alpha: Composition) -> int:
    return pieri_coeff_case(tuple(gamma), s, tuple(alpha)).value


@cache
def _product_in_dual_immaculate(s: int, gamma: Composition) -> Element:
    return expand_in_dual_immaculate(F(s) * dual_immaculate_f(gamma) if s else dual_immaculate_f(gamma))


def pieri_coeff_oracle(gamma: Composition, s: int, alpha: Composition) -> int:
    """Coefficient of 𝔖*_alpha in F_(s) 𝔖*_gamma, by expanding the product."""
    gamma, alpha = tuple(gamma), tuple(alpha)
    if sum(alpha) - sum(gamma) != s or s < 0:
        raise ValueError(f"|{alpha}| - |{gamma}| != {s}")
    return _product_in_dual_immaculate(s, gamma).coefficient(Basis.S, alpha)


def _length_ok(beta: Composition, alpha: Composition) -> bool:
    return 0 <= len(beta) - len(alpha) <= 1


def left_pieri_h_immaculate(m: int, alpha: Composition) -> Element:
    """H_m I_alpha in the immaculate basis."""
    if m <= 0:
        raise ValueError("m must be positive")
    alpha = tuple(alpha)
    terms = {}
    for beta in compositions_of(sum(alpha) + m):
        if beta[0] >= m and _length_ok(beta, alpha):
            c = pieri_coeff(tail(beta), beta[0] - m, alpha)
            if c:
                terms[(Basis.I, beta)] = c
    return Element(terms)


def left_pieri_e_rs_immaculate(m: int, alpha: Composition) -> Element:
    """E_m RI_alpha in the row-strict immaculate basis (same coefficients)."""
    return _retag(left_pieri_h_immaculate(m, alpha), Basis.RI)


def left_pieri_f_dual_immaculate(s: int, alpha: Composition) -> Element:
    """F_(s) 𝔖*_alpha in the dual immaculate basis."""
    if s <= 0:
        raise ValueError("s must be positive")
    alpha = tuple(alpha)
    terms = {}
    for beta in compositions_of(sum(alpha) + s):
        if _length_ok(beta, alpha):
            c = pieri_coeff(alpha, s, beta)
            if c:
                terms[(Basis.S, beta)] = c
    return Element(terms)


def left_pieri_f1s_rs_dual_immaculate(s: int, alpha: Composition) -> Element:
    """F_(1^s) RS*_alpha in the row-strict dual immaculate basis."""
    return _retag(left_pieri_f_dual_immaculate(s, alpha), Basis.RS)


def _retag(e: Element, basis: Basis) -> Element:
    return Element({(basis, idx): c for (_, idx), c in e.items()})


@cache
def _pieri_chain(steps: Composition, tau: Composition) -> dict:
    """F_(steps[0]) ... F_(steps[-1]) 𝔖*_tau in the 𝔖* basis, by repeated left Pieri."""
    current = {tau: 1}
    for step in steps:
        nxt: dict = {}
        for t, c in current.items():
            for g in compositions_of(sum(t) + step):
                if _length_ok(g, t):
                    v = pieri_coeff(t, step, g)
                    if v:
                        nxt[g] = nxt.get(g, 0) + c * v
        current = {g: c for g, c in nxt.items() if c}
    return current


@cache
def strip_coefficients(gamma: Composition, r: int, rule: str = "elementary") -> dict[Composition, int]:
    """{tau: <I_gamma, F_(1^r) 𝔖*_tau>} for the inner shapes of the skew Pieri sum.

    ``rule="elementary"`` computes the pairing exactly, writing
    F_(1^r) = e_r = sum over beta |= r of (-1)^(r - len beta) F_(beta_1)...F_(beta_k)
    and applying the left Pieri rule once per factor.  ``rule="strip"`` puts
    coefficient 1 on every tau with gamma/tau a vertical strip of r boxes; that
    shortcut drops the removals that would leave an empty row below a nonempty
    one, and is wrong for shapes such as gamma = (1, 2).
    """
    gamma = tuple(gamma)
    if r > sum(gamma):
        return {}
    if rule == "strip":
        return {tau: 1 for tau in vertical_strip_removals(gamma, r)}
    if rule != "elementary":
        raise ValueError(f"unknown rule {rule!r}")
    out = {}
    for tau in compositions_of(sum(gamma) - r):
        total = sum((-1) ** (r - len(beta)) * _pieri_chain(beta, tau).get(gamma, 0) for beta in compositions_of(r))
        if total:
            out[tau] = total
    return out


@dataclass(frozen=True)
class SkewPieriTerm:
    beta: Composition
    tau: Composition
    i: int  # |beta| - |alpha|
    sign: int  # (-1)^(|gamma| - |tau|)
    strip: int  # <I_gamma, F_(1^(s-i)) 𝔖*_tau>
    coeff: int  # c^alpha_{i, beta}

    @property
    def value(self) -> int:
        return self.sign * self.strip * self.coeff


def pieri_candidates(alpha: Composition, s: int) -> list[Composition]:
    """Outer shapes beta of the skew Pieri sum: |beta| - |alpha| in 0..s, length grows by 0 or 1."""
    alpha = tuple(alpha)
    return [
        beta
        for i in range(s + 1)
        for beta in compositions_of(sum(alpha) + i)
        if _length_ok(beta, alpha)
    ]


def skew_pieri_terms(s: int, shape: SkewShape, rule: str = "elementary") -> list[SkewPieriTerm]:
    """Every candidate (beta, tau) of the skew Pieri sum, zero Pieri coefficients included.

    Pairs with tau not inside beta are dropped: that skew function is zero.
    """
    alpha, gamma = shape.outer, shape.inner
    out = []
    for beta in pieri_candidates(alpha, s):
        i = sum(beta) - sum(alpha)
        c = pieri_coeff(alpha, i, beta)
        for tau, b in strip_coefficients(gamma, s - i, rule).items():
            if contains(beta, tau):
                out.append(SkewPieriTerm(beta, tau, i, (-1) ** (s - i), b, c))
    return out


def skew_pieri(s: int, shape: SkewShape, row_strict: bool = False, rule: str = "elementary") -> Element:
    """𝔖*_(s) 𝔖*_{alpha/gamma} as a signed sum of skew dual immaculate functions.

    The sum runs over beta/tau with |beta/tau| = |alpha/gamma| + s and
    len(beta) - len(alpha) in {0, 1}; the term for beta/tau has coefficient
    (-1)^(|gamma| - |tau|) * <I_gamma, F_(1^(|gamma|-|tau|)) 𝔖*_tau> * c^alpha_{|beta|-|alpha|, beta}.
    See :func:`strip_coefficients` for ``rule``.  With ``row_strict`` the same
    coefficients multiply RS*_{beta/tau}, giving RS*_(s) RS*_{alpha/gamma}.
    """
    if s <= 0:
        raise ValueError("s must be positive")
    terms: dict = {}
    for t in skew_pieri_terms(s, shape, rule):
        if t.value:
            for key, c in skew_term(SkewShape(t.beta, t.tau), row_strict, t.value).items():
                terms[key] = terms.get(key, 0) + c
    return Element(terms)


def skew_pieri_rs(s: int, shape: SkewShape, rule: str = "elementary") -> Element:
    return skew_pieri(s, shape, row_strict=True, rule=rule)


def skew_pieri_oracle(s: int, shape: SkewShape, row_strict: bool = False) -> Element:
    """The product computed directly in QSym, in the F basis."""
    if row_strict:
        return F(*[1] * s) * rs_dual_immaculate_f(shape)
    return F(s) * dual_immaculate_f(shape)


def verify_skew_pieri(s: int, shape: SkewShape, row_strict: bool = False, rule: str = "elementary") -> bool:
    """Compare the rule with the product computed directly, in the F basis."""
    return to_fundamental(skew_pieri(s, shape, row_strict, rule)) == skew_pieri_oracle(s, shape, row_strict)


def multiplicity_check(e: Element) -> bool:
    """True iff every coefficient is -1, 0 or 1."""
    return all(c in (-1, 0, 1) for _, c in e.items())
