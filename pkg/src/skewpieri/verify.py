"""Brute-force sweeps shared by the test suite and ``skewpieri verify``.

Each sweep returns a :class:`SweepResult`; a sweep passes when its
``failures`` list is empty.  Notes carry observations that do not gate the
result.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product

from . import hopf, nsym, qsym
from .algebra import Basis, Element, Family
from .compositions import SkewShape, compositions_of, contains
from .immaculate import (
    dual_immaculate_f,
    rs_dual_immaculate_f,
    to_complete,
    to_fundamental,
    to_monomial,
)
from .pieri import (
    multiplicity_check,
    pieri_coeff,
    pieri_coeff_oracle,
    skew_pieri,
    skew_pieri_oracle,
)


@dataclass
class SweepResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, ok: bool, case) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(case)


def skew_shapes(max_size: int, min_size: int = 0):
    """Every alpha/gamma with gamma inside alpha and min_size <= |alpha| <= max_size."""
    for n in range(min_size, max_size + 1):
        for alpha in compositions_of(n):
            for m in range(n + 1):
                for gamma in compositions_of(m):
                    if contains(alpha, gamma):
                        yield SkewShape(alpha, gamma)


# duality


def _row(e: Element) -> dict:
    return {idx: c for (_, idx), c in e.items()}


def duality(max_degree: int = 7) -> SweepResult:
    """<S*_a, I_b> = delta_ab and <RS*_a, RI_b> = delta_ab for a, b |= n <= max_degree."""
    res = SweepResult("duality")
    for n in range(1, max_degree + 1):
        comps = compositions_of(n)
        for q_basis, n_basis in ((Basis.S, Basis.I), (Basis.RS, Basis.RI)):
            qs = {a: _row(to_monomial(Element.basis_element(q_basis, a))) for a in comps}
            hs = {b: _row(to_complete(Element.basis_element(n_basis, b))) for b in comps}
            for a, b in product(comps, comps):
                value = sum(c * qs[a].get(g, 0) for g, c in hs[b].items())
                res.record(value == (a == b), (q_basis.value, a, n_basis.value, b, value))
    return res


# psi


def psi(max_degree: int = 5, max_skew: int = 6) -> SweepResult:
    res = SweepResult("psi")
    comps = [a for n in range(max_degree + 1) for a in compositions_of(n)]
    for a in comps:
        fa = qsym.F(*a)
        res.record(qsym.psi(qsym.psi(fa)) == fa, ("involution", a))
        ea = nsym.E(*a)
        res.record(nsym.psi_n(ea) == nsym.H(*a) and nsym.psi_n(nsym.psi_n(ea)) == ea, ("E<->H", a))
    for a, b in product(comps, comps):
        if sum(a) + sum(b) <= max_degree:
            fa, fb = qsym.F(*a), qsym.F(*b)
            res.record(qsym.psi(fa * fb) == qsym.psi(fa) * qsym.psi(fb), ("algebra map", a, b))
        if sum(a) == sum(b):
            # psi on QSym and on NSym are adjoint to each other
            lhs = hopf.pair(nsym.H(*a), qsym.psi(qsym.F(*b)))
            rhs = hopf.pair(nsym.E(*a), qsym.F(*b))
            res.record(lhs == rhs, ("pairing", a, b))
    for shape in skew_shapes(max_skew):
        res.record(qsym.psi(dual_immaculate_f(shape)) == rs_dual_immaculate_f(shape), ("skew", shape))
    return res


# Hopf identities


_QSYM_BASES = (Basis.M, Basis.F, Basis.S)
_NSYM_BASES = (Basis.H, Basis.E, Basis.I)


def random_element(rng: random.Random, family: Family, max_degree: int, terms: int = 3) -> Element:
    """A nonzero element with up to ``terms`` random basis terms of degree <= max_degree."""
    bases = _QSYM_BASES if family is Family.QSYM else _NSYM_BASES
    while True:
        out = Element()
        for _ in range(rng.randint(1, terms)):
            n = rng.randint(0, max_degree)
            idx = rng.choice(compositions_of(n))
            basis = rng.choice(bases)
            if n == 0:
                basis = bases[1]
            out = out + Element.basis_element(basis, idx, rng.choice((-2, -1, 1, 1, 2, 3)))
        if out:
            return out


def lemmas(max_degree: int = 4, triples: int = 100, seed: int = 20240601, antipode_degree: int = 6) -> SweepResult:
    """Antipode on both algebras, adjointness, and the right-action lemmas on random triples."""
    res = SweepResult("lemmas")
    for n in range(antipode_degree + 1):
        for a in compositions_of(n):
            res.record(hopf.check_antipode(qsym.F(*a)), ("antipode", "F", a))
            res.record(hopf.check_antipode(nsym.H(*a)), ("antipode", "H", a))
    rng = random.Random(seed)
    Q, N = Family.QSYM, Family.NSYM
    for t in range(triples):

        def pick(fam):
            return random_element(rng, fam, max_degree)

        f, g, a = pick(N), pick(N), pick(Q)
        res.record(hopf.check_adjoint_right(f, g, a), ("adjoint right", t))
        res.record(hopf.check_adjoint_left(f, g, a), ("adjoint left", t))
        p, q, x = pick(Q), pick(Q), pick(N)
        res.record(hopf.check_adjoint_right(p, q, x), ("adjoint right, QSym acting", t))
        res.record(hopf.check_adjoint_left(p, q, x), ("adjoint left, QSym acting", t))
        f, a, b = pick(N), pick(Q), pick(Q)
        res.record(hopf.check_lemma_rightactprod(f, a, b), ("rightactprod", t))
        res.record(hopf.check_lemma_id(f, a), ("id", t))
        res.record(hopf.check_lemma_product(f, a, b), ("product", t))
        h, a, g = pick(N), pick(Q), pick(N)
        res.record(hopf.check_lemma_raction(h, a, g), ("raction", t))
    return res


# Pieri


def coefficients(max_degree: int = 7, max_s: int = 3) -> SweepResult:
    """pieri_coeff against the linear-algebra oracle for |alpha| <= max_degree, s <= max_s."""
    res = SweepResult("coefficients")
    for n in range(max_degree + 1):
        for s in range(min(max_s, n) + 1):
            for gamma in compositions_of(n - s):
                for alpha in compositions_of(n):
                    v, w = pieri_coeff(gamma, s, alpha), pieri_coeff_oracle(gamma, s, alpha)
                    res.record(v == w, (gamma, s, alpha, v, w))
    return res


def skew_pieri_sweep(max_degree: int = 6, max_s: int = 3, rule: str = "elementary") -> SweepResult:
    """F-expansion of the skew Pieri rule against the direct product, both versions.

    Outputs that are not multiplicity-free are listed in ``notes``.
    """
    res = SweepResult("skew-pieri")
    for shape in skew_shapes(max_degree):
        for s in range(1, max_s + 1):
            for row_strict in (False, True):
                out = skew_pieri(s, shape, row_strict, rule)
                ok = to_fundamental(out) == skew_pieri_oracle(s, shape, row_strict)
                res.record(ok, (s, shape, row_strict))
                if not multiplicity_check(out) and not row_strict:
                    res.notes.append(f"not multiplicity-free: s={s}, {shape}: {out}")
    return res


SUITES = {
    "duality": duality,
    "psi": lambda n: psi(min(n, 5), n),
    "lemmas": lambda n: lemmas(min(n, 4), antipode_degree=n),
    "skew-pieri": skew_pieri_sweep,
    "coefficients": coefficients,
}


def run_suite(name: str, max_degree: int) -> SweepResult:
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](max_degree)
