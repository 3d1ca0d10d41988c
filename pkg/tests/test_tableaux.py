from collections import Counter
from itertools import permutations

import pytest
from hypothesis import given, settings

from skewpieri.compositions import SkewShape, skew
from skewpieri.tableaux import Tableau, descent_distribution, descent_set, enumerate_sit, is_valid_sit
from skewpieri.verify import skew_shapes

from strategies import skew_shapes as skew_shape_strategy

EXAMPLE = Tableau(skew((3, 4, 1), (1,)), ((1, 5), (2, 3, 4, 6), (7,)))


def brute_force(shape: SkewShape) -> set:
    lengths = shape.row_lengths()
    out = set()
    for perm in permutations(range(1, shape.size + 1)):
        rows, i = [], 0
        for n in lengths:
            rows.append(tuple(perm[i : i + n]))
            i += n
        T = Tableau(shape, tuple(rows))
        if is_valid_sit(T):
            out.add(T)
    return out


def test_example_tableau():
    assert is_valid_sit(EXAMPLE)
    assert descent_set(EXAMPLE) == {1, 5, 6}
    assert EXAMPLE in enumerate_sit(EXAMPLE.shape)


def test_invalid_tableaux():
    decreasing = Tableau(skew((2,)), ((2, 1),))
    assert not is_valid_sit(decreasing)
    # swapping 2 and 7 puts 7 below 2 in the first column
    swapped = Tableau(EXAMPLE.shape, ((1, 5), (7, 3, 4, 6), (2,)))
    assert not is_valid_sit(swapped)
    wrong_shape = Tableau(skew((2, 1)), ((1,), (2, 3)))
    assert not is_valid_sit(wrong_shape)


def test_small_counts():
    assert len(enumerate_sit(skew((2, 1)))) == 2
    assert len(enumerate_sit(skew((1, 2)))) == 1
    assert len(enumerate_sit(skew((3,)))) == 1
    assert enumerate_sit(skew(())) == [Tableau(skew(()), ())]


@pytest.mark.parametrize("shape", [s for s in skew_shapes(5) if s.size <= 6])
def test_enumeration_matches_brute_force(shape):
    found = enumerate_sit(shape)
    assert len(found) == len(set(found))
    assert set(found) == brute_force(shape)


@pytest.mark.parametrize("shape", [skew((3, 4)), skew((2, 2, 4), (1,)), skew((1, 3, 2, 1)), skew((4, 3, 2), (2,))])
def test_enumeration_matches_brute_force_size_seven(shape):
    assert shape.size == 7
    assert set(enumerate_sit(shape)) == brute_force(shape)


@settings(max_examples=60, deadline=None)
@given(skew_shape_strategy())
def test_descent_distribution_matches_enumeration(shape):
    shape = skew(*shape)
    tabs = enumerate_sit(shape)
    assert descent_distribution(shape) == Counter(descent_set(T) for T in tabs)
    for T in tabs:
        assert is_valid_sit(T)
        assert descent_set(T) <= set(range(1, shape.size))


def test_rendering():
    assert str(EXAMPLE) == "7\n2 3 4 6\n. 1 5"
    assert EXAMPLE.to_json() == [[1, 5], [2, 3, 4, 6], [7]]
