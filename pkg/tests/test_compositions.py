import pytest
from hypothesis import given
from hypothesis import strategies as st

from skewpieri.compositions import (
    comp_of,
    complement,
    complement_composition,
    composition,
    compositions_of,
    concat,
    contains,
    diagram,
    format_skew,
    is_vertical_strip,
    near_concat,
    negc,
    parse_composition,
    parse_skew,
    sgn,
    set_of,
    skew,
    subtract,
    tail,
    vertical_strip_removals,
)

from strategies import compositions


def test_compositions_of_three():
    assert compositions_of(3) == [(3,), (1, 2), (2, 1), (1, 1, 1)]
    assert compositions_of(0) == [()]


@pytest.mark.parametrize("n", range(1, 11))
def test_compositions_count(n):
    comps = compositions_of(n)
    assert len(comps) == 2 ** (n - 1) == len(set(comps))
    assert all(sum(a) == n for a in comps)


def test_set_of_examples():
    assert set_of((3, 4, 1)) == {3, 7}
    assert set_of((1, 1, 1)) == {1, 2}
    assert set_of((5,)) == set()
    assert comp_of({3, 7}, 8) == (3, 4, 1)
    assert comp_of({1, 2}, 3) == (1, 1, 1)


def test_comp_of_rejects_out_of_range():
    with pytest.raises(ValueError):
        comp_of({3}, 3)
    with pytest.raises(ValueError):
        comp_of({1}, 0)


@pytest.mark.parametrize("n", range(0, 11))
def test_bijection_round_trips(n):
    for alpha in compositions_of(n):
        assert comp_of(set_of(alpha), n) == alpha
    for mask in range(1 << max(n - 1, 0)):
        S = {i + 1 for i in range(n - 1) if mask >> i & 1}
        assert set_of(comp_of(S, n)) == S


def test_complement():
    assert complement({3, 7}, 8) == {1, 2, 4, 5, 6}
    assert complement(set(), 5) == {1, 2, 3, 4}
    assert complement({1, 2, 3, 4}, 5) == set()
    assert complement_composition((1, 2)) == (2, 1)
    assert complement_composition((1, 1, 1)) == (3,)


@given(st.integers(1, 9).flatmap(lambda n: st.tuples(st.just(n), st.sets(st.integers(1, n - 1) if n > 1 else st.nothing()))))
def test_complement_involution(case):
    n, S = case
    assert complement(complement(S, n), n) == S


def test_contains():
    assert contains((3, 4, 1), (2, 4))
    assert contains((1, 2), (1, 2))
    assert not contains((1, 2), (2,))
    assert not contains((2,), (1, 1))


def test_vertical_strip_examples():
    assert is_vertical_strip((3, 4, 1), (2, 4))
    assert is_vertical_strip((1, 1), ())
    assert not is_vertical_strip((2, 1), ())
    assert not is_vertical_strip((3, 4, 1), (1, 4))


@given(compositions(3, 4), compositions(3, 4))
def test_vertical_strip_bounds(gamma, tau):
    if is_vertical_strip(gamma, tau):
        assert contains(gamma, tau)
        assert sum(gamma) - sum(tau) <= len(gamma)


def test_vertical_strip_removals_skip_interior_zero_rows():
    # removing the box of the bottom row of (1,2) would leave (0,1)
    assert vertical_strip_removals((1, 2), 1) == [(1, 1)]
    assert vertical_strip_removals((1, 2, 1), 2) == [(1, 1)]
    assert vertical_strip_removals((1, 1), 2) == [()]


@given(compositions(3, 4), st.integers(0, 4))
def test_vertical_strip_removals_are_strips(gamma, r):
    for tau in vertical_strip_removals(gamma, r):
        assert is_vertical_strip(gamma, tau)
        assert sum(gamma) - sum(tau) == r


def test_concatenations():
    assert concat((1, 2), (3,)) == (1, 2, 3)
    assert near_concat((1, 2), (3,)) == (1, 5)
    assert concat((), (2, 1)) == (2, 1)
    assert concat((2,), (1,)) == (2, 1)
    assert near_concat((2,), (1,)) == (3,)
    assert near_concat((), (2, 1)) == (2, 1)
    assert near_concat((2, 1), ()) == (2, 1)


def test_vectors():
    assert tail((1, 2, 1)) == (2, 1)
    assert negc((1, -2, 0)) == 1
    assert sgn((1, -2, 0)) == -1
    assert sgn((0, 0, 0)) == 1
    assert subtract((3, 2, 1), (1, 2)) == (2, 0, 1)
    with pytest.raises(ValueError):
        tail(())


def test_parsing():
    assert parse_composition("1,2,1") == (1, 2, 1)
    assert parse_composition("") == ()
    assert parse_composition("(3, 1)") == (3, 1)
    assert parse_skew("1,2,1/1,1") == ((1, 2, 1), (1, 1))
    assert parse_skew("2/") == ((2,), ())
    assert parse_skew("2") == ((2,), ())
    for bad in ("0", "1,0", "1,x", "-1"):
        with pytest.raises(ValueError):
            parse_composition(bad)
    with pytest.raises(ValueError):
        parse_skew("1,2/2")
    with pytest.raises(ValueError):
        composition([2, 0])


def test_skew_shape_helpers():
    shape = skew((3, 4, 1), (1,))
    assert shape.size == 7
    assert shape.row_lengths() == [2, 4, 1]
    assert format_skew(shape) == "3,4,1/1"
    assert diagram(shape) == "#\n# # # #\n. # #"
