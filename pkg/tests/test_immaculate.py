from collections import Counter

import pytest

from skewpieri import nsym, qsym
from skewpieri.algebra import Basis, Element
from skewpieri.compositions import comp_of, compositions_of, skew
from skewpieri.hopf import pair
from skewpieri.immaculate import (
    RI,
    RS,
    I,
    S,
    dual_immaculate_f,
    expand_in_dual_immaculate,
    expand_in_immaculate,
    expand_in_rs_dual_immaculate,
    expand_in_rs_immaculate,
    immaculate_h,
    rs_dual_immaculate_f,
    rs_immaculate_h,
    skew_term,
    to_complete,
    to_fundamental,
)
from skewpieri.nsym import E, H
from skewpieri.qsym import F, M
from skewpieri.verify import skew_shapes


def test_dual_immaculate_examples():
    assert dual_immaculate_f((1, 2)) == F(1, 2)
    assert dual_immaculate_f((4,)) == F(4)
    assert dual_immaculate_f(()) == F()
    assert dual_immaculate_f((2, 1)) == F(2, 1) + F(1, 2)
    big = dual_immaculate_f(skew((3, 4, 1), (1,)))
    assert big.coefficient(Basis.F, comp_of({1, 5, 6}, 7)) >= 1
    assert comp_of({1, 5, 6}, 7) == (1, 4, 1, 1)


def test_rs_dual_immaculate_examples():
    assert rs_dual_immaculate_f((3,)) == F(1, 1, 1)
    assert rs_dual_immaculate_f((1,)) == F(1)


def test_immaculate_examples():
    assert immaculate_h(1) == {(1,): H(1)}
    for n in range(1, 6):
        assert immaculate_h(n)[(n,)] == H(n)
    assert to_complete(I(1, 2)) == H(1, 2) - H(2, 1)
    assert rs_immaculate_h(1) == {(1,): H(1)}


@pytest.mark.parametrize("n", range(1, 8))
def test_basis_property(n):
    from skewpieri.immaculate import _inverse

    for row_strict in (False, True):
        assert _inverse(n, Basis.F, row_strict)


def test_orthonormality_degree_four():
    comps = compositions_of(4)
    table = [[pair(S(*a), I(*b)) for b in comps] for a in comps]
    assert table == [[int(i == j) for j in range(8)] for i in range(8)]
    table = [[pair(RS(*a), RI(*b)) for b in comps] for a in comps]
    assert table == [[int(i == j) for j in range(8)] for i in range(8)]


@pytest.mark.parametrize("n", range(0, 6))
def test_psi_relations(n):
    for a in compositions_of(n):
        assert to_complete(nsym.psi_n(to_complete(I(*a)))) == to_complete(RI(*a))
        assert to_complete(nsym.psi_n(nsym.psi_n(to_complete(I(*a))))) == to_complete(I(*a))
        assert qsym.psi(dual_immaculate_f(a)) == rs_dual_immaculate_f(a)


@pytest.mark.parametrize("shape", list(skew_shapes(6)))
def test_psi_intertwines_skew(shape):
    assert qsym.psi(dual_immaculate_f(shape)) == rs_dual_immaculate_f(shape)


@pytest.mark.parametrize("n", range(0, 7))
def test_coproduct_compatibility(n):
    # Delta S*_alpha = sum_beta S*_beta (x) S*_{alpha/beta}, compared in F (x) F
    for alpha in compositions_of(n):
        lhs = Counter()
        for idx, c in dual_immaculate_f(alpha).items():
            for ((_, x), (_, y)), d in qsym.coproduct_f(idx[1]).items():
                lhs[(x, y)] += c * d
        rhs = Counter()
        for m in range(n + 1):
            for beta in compositions_of(m):
                if all(b <= a for a, b in zip(alpha, beta)) and len(beta) <= len(alpha):
                    for (_, x), c in dual_immaculate_f(beta).items():
                        for (_, y), d in dual_immaculate_f(skew(alpha, beta)).items():
                            rhs[(x, y)] += c * d
        assert +lhs == +rhs


def test_expansions_round_trip():
    assert expand_in_dual_immaculate(S(2, 1)) == S(2, 1)
    assert expand_in_dual_immaculate(Element()) == Element()
    e = expand_in_dual_immaculate(F(1, 2))
    assert e.is_integral()
    assert to_fundamental(e) == F(1, 2)
    for n in range(1, 6):
        for a in compositions_of(n):
            for x in (F(*a), M(*a) - F(*a)):
                assert to_fundamental(expand_in_dual_immaculate(x)) == to_fundamental(x)
                assert to_fundamental(expand_in_rs_dual_immaculate(x)) == to_fundamental(x)
            for y in (H(*a), E(*a)):
                assert to_complete(expand_in_immaculate(y)) == to_complete(y)
                assert to_complete(expand_in_rs_immaculate(y)) == to_complete(y)


def test_skew_terms():
    assert skew_term(skew((2, 1))) == S(2, 1)
    assert skew_term(skew((2, 1)), row_strict=True) == RS(2, 1)
    t = skew_term(skew((2, 1), (1,)), coeff=-1)
    assert t.bases() == {Basis.SKEW_S}
    assert to_fundamental(t) == -dual_immaculate_f(skew((2, 1), (1,)))


def test_conversion_errors():
    with pytest.raises(TypeError):
        to_fundamental(Element.basis_element(Basis.H, (1,)))
    with pytest.raises(TypeError):
        to_complete(Element.basis_element(Basis.F, (1,)))
