"""Compositions, the subset bijection, skew shapes and vertical strips.

A composition is stored as a plain ``tuple`` of positive ints; the empty
tuple is the empty composition.  Rows are numbered from the bottom, so
``alpha[0]`` is the bottom row of the diagram.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, NamedTuple

Composition = tuple[int, ...]
IntVector = tuple[int, ...]


def is_composition(alpha) -> bool:
    return isinstance(alpha, tuple) and all(isinstance(a, int) and a >= 1 for a in alpha)


def composition(parts: Iterable[int]) -> Composition:
    """Validate ``parts`` and return it as a composition tuple."""
    alpha = tuple(int(p) for p in parts)
    if any(p < 1 for p in alpha):
        raise ValueError(f"composition parts must be positive: {alpha}")
    return alpha


def compositions_of(n: int) -> list[Composition]:
    """All compositions of ``n``.

    Ordered by the bitmask of ``set_of``: bit ``i - 1`` set means ``i`` is a
    partial sum.  So for n = 3 the order is (3), (1,2), (2,1), (1,1,1).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return [()]
    out = []
    for mask in range(1 << (n - 1)):
        parts = []
        last = 0
        for i in range(1, n):
            if mask >> (i - 1) & 1:
                parts.append(i - last)
                last = i
        parts.append(n - last)
        out.append(tuple(parts))
    return out


def set_of(alpha: Composition) -> frozenset[int]:
    out = []
    total = 0
    for a in alpha[:-1]:
        total += a
        out.append(total)
    return frozenset(out)


def comp_of(S: Iterable[int], n: int) -> Composition:
    """Inverse of :func:`set_of` on compositions of ``n``."""
    S = sorted(set(S))
    if n == 0:
        if S:
            raise ValueError("the empty composition has no partial sums")
        return ()
    if S and (S[0] < 1 or S[-1] > n - 1):
        raise ValueError(f"subset {S} is not contained in [1, {n - 1}]")
    points = [0, *S, n]
    return tuple(b - a for a, b in zip(points, points[1:]))


def complement(S: Iterable[int], n: int) -> frozenset[int]:
    S = frozenset(S)
    if any(s < 1 or s > n - 1 for s in S):
        raise ValueError(f"subset {sorted(S)} is not contained in [1, {n - 1}]")
    return frozenset(range(1, n)) - S


def complement_composition(alpha: Composition) -> Composition:
    """comp(set(alpha)^c): the composition with complementary partial sums."""
    n = sum(alpha)
    return comp_of(complement(set_of(alpha), n), n)


def contains(alpha: Composition, beta: Composition) -> bool:
    """True iff beta fits inside alpha, rows aligned at the bottom-left."""
    return len(beta) <= len(alpha) and all(b <= a for a, b in zip(alpha, beta))


class SkewShape(NamedTuple):
    outer: Composition
    inner: Composition

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    @property
    def is_straight(self) -> bool:
        return not self.inner

    def row_lengths(self) -> list[int]:
        inner = pad(self.inner, len(self.outer))
        return [a - b for a, b in zip(self.outer, inner)]

    def __str__(self) -> str:
        return format_skew(self)


def skew(alpha: Composition, beta: Composition = ()) -> SkewShape:
    alpha, beta = composition(alpha), composition(beta)
    if not contains(alpha, beta):
        raise ValueError(f"{beta} is not contained in {alpha}")
    return SkewShape(alpha, beta)


def pad(v: Iterable[int], length: int) -> IntVector:
    v = tuple(v)
    if len(v) > length:
        raise ValueError(f"{v} is longer than {length}")
    return v + (0,) * (length - len(v))


def is_vertical_strip(gamma: Composition, tau: Composition) -> bool:
    """Whether gamma/tau has at most one box in every row.

    ``tau`` is zero-padded to the length of ``gamma``, so rows of gamma above
    ``len(tau)`` must themselves have size at most one.
    """
    if len(tau) > len(gamma):
        return False
    return all(g - t in (0, 1) for g, t in zip(gamma, pad(tau, len(gamma))))


def vertical_strip_removals(gamma: Composition, r: int) -> list[Composition]:
    """Compositions tau with gamma/tau a vertical strip of r boxes.

    Removing a box may empty a row only if every row above it is emptied
    too; an interior zero row is not a composition and is skipped.
    """
    k = len(gamma)
    out = []
    for rows in combinations(range(k), r):
        v = list(gamma)
        for j in rows:
            v[j] -= 1
        while v and v[-1] == 0:
            v.pop()
        if 0 in v:
            continue
        out.append(tuple(v))
    return sorted(out, key=lambda c: (sum(c), c))


def concat(beta: Composition, gamma: Composition) -> Composition:
    return tuple(beta) + tuple(gamma)


def near_concat(beta: Composition, gamma: Composition) -> Composition:
    """(b_1, ..., b_k + g_1, g_2, ...); an empty argument returns the other."""
    if not beta:
        return tuple(gamma)
    if not gamma:
        return tuple(beta)
    return (*beta[:-1], beta[-1] + gamma[0], *gamma[1:])


def tail(alpha: Composition) -> Composition:
    if not alpha:
        raise ValueError("tail of the empty composition")
    return tuple(alpha[1:])


def negc(v: IntVector) -> int:
    return sum(1 for x in v if x < 0)


def sgn(v: IntVector) -> int:
    return -1 if negc(v) % 2 else 1


def subtract(alpha: Composition, gamma: Composition) -> IntVector:
    """Entrywise alpha - gamma with gamma zero-padded to len(alpha)."""
    return tuple(a - g for a, g in zip(alpha, pad(gamma, len(alpha))))


def parse_composition(text: str) -> Composition:
    """Parse ``"1,2,1"``; the empty string is the empty composition."""
    text = text.strip().strip("()[]")
    if not text:
        return ()
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError:
        raise ValueError(f"not a composition: {text!r}") from None
    return composition(parts)


def parse_skew(text: str) -> SkewShape:
    """Parse ``"1,2,1/1,1"``; a missing or empty right side is the empty inner shape."""
    outer, _, inner = text.partition("/")
    return skew(parse_composition(outer), parse_composition(inner))


def format_composition(alpha: Composition) -> str:
    return ",".join(map(str, alpha))


def format_skew(shape: SkewShape) -> str:
    return f"{format_composition(shape.outer)}/{format_composition(shape.inner)}"


def diagram(shape: SkewShape | Composition) -> str:
    """ASCII picture with the bottom row printed last; removed boxes are dots."""
    if not isinstance(shape, SkewShape):
        shape = SkewShape(tuple(shape), ())
    inner = pad(shape.inner, len(shape.outer))
    lines = [". " * b + "# " * (a - b) for a, b in zip(shape.outer, inner)]
    return "\n".join(line.rstrip() for line in reversed(lines))
