"""Standard (skew) immaculate tableaux and their descent sets."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cache

from .compositions import SkewShape, pad


@dataclass(frozen=True)
class Tableau:
    """A filling of a skew diagram; ``rows[0]`` is the bottom row."""

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return self.shape.size

    def row_of(self) -> dict[int, int]:
        return {x: j for j, row in enumerate(self.rows) for x in row}

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self) -> str:
        inner = pad(self.shape.inner, len(self.shape.outer))
        width = len(str(self.size)) if self.size else 1
        lines = []
        for b, row in zip(inner, self.rows):
            cells = ["." * width] * b + [str(x).rjust(width) for x in row]
            lines.append(" ".join(cells))
        return "\n".join(reversed(lines))


def _first_column_rows(shape: SkewShape) -> list[int]:
    return list(range(len(shape.inner), len(shape.outer)))


def is_valid_sit(T: Tableau) -> bool:
    shape = T.shape
    lengths = shape.row_lengths()
    if len(T.rows) != len(lengths) or any(len(r) != n for r, n in zip(T.rows, lengths)):
        return False
    entries = sorted(x for row in T.rows for x in row)
    if entries != list(range(1, shape.size + 1)):
        return False
    for row in T.rows:
        if any(a >= b for a, b in zip(row, row[1:])):
            return False
    column = [T.rows[j][0] for j in _first_column_rows(shape)]
    return all(a < b for a, b in zip(column, column[1:]))


def enumerate_sit(shape: SkewShape) -> list[Tableau]:
    """All standard skew immaculate tableaux of ``shape``.

    Values 1..n are placed in turn; at each step the candidate rows are
    tried bottom to top, which fixes the output order.
    """
    lengths = shape.row_lengths()
    first_col = set(_first_column_rows(shape))
    n = shape.size
    rows: list[list[int]] = [[] for _ in lengths]
    out = []

    def place(value: int) -> None:
        if value > n:
            out.append(Tableau(shape, tuple(tuple(r) for r in rows)))
            return
        for j, length in enumerate(lengths):
            if len(rows[j]) == length:
                continue
            if j in first_col and not rows[j]:
                # first-column cell: every lower first-column cell must be filled
                if any(not rows[i] for i in first_col if i < j):
                    continue
            rows[j].append(value)
            place(value + 1)
            rows[j].pop()

    place(1)
    return out


def descent_set(T: Tableau) -> frozenset[int]:
    """{i : i + 1 lies in a strictly higher row than i}."""
    row = T.row_of()
    return frozenset(i for i in range(1, T.size) if row[i + 1] > row[i])


@cache
def descent_distribution(shape: SkewShape) -> Counter:
    """Counter mapping descent set -> number of tableaux of ``shape``.

    Same multiset as ``Counter(map(descent_set, enumerate_sit(shape)))``, but
    computed by dynamic programming over row fill levels, so it stays fast
    for shapes with many tableaux.
    """
    lengths = tuple(shape.row_lengths())
    first_col = _first_column_rows(shape)
    n = shape.size
    # state: (fill level per row, row of the last value placed) -> Counter of descent bitmasks
    states: dict[tuple[tuple[int, ...], int], Counter] = {(tuple(0 for _ in lengths), -1): Counter({0: 1})}
    for value in range(1, n + 1):
        nxt: dict[tuple[tuple[int, ...], int], Counter] = {}
        for (fill, last), masks in states.items():
            for j, length in enumerate(lengths):
                if fill[j] == length:
                    continue
                if fill[j] == 0 and j in first_col and any(fill[i] == 0 for i in first_col if i < j):
                    continue
                new_fill = fill[:j] + (fill[j] + 1,) + fill[j + 1 :]
                bit = 1 << (value - 2) if last >= 0 and j > last else 0
                bucket = nxt.setdefault((new_fill, j), Counter())
                for mask, count in masks.items():
                    bucket[mask | bit] += count
        states = nxt
    total: Counter = Counter()
    for masks in states.values():
        total.update(masks)
    return Counter({frozenset(i + 1 for i in range(max(n - 1, 0)) if mask >> i & 1): c for mask, c in total.items()})
