"""Sparse exact linear combinations over the graded bases of QSym and NSym.

An :class:`Element` maps ``(Basis, index)`` keys to nonzero integer (or,
inside solves, rational) coefficients.  Indices are composition tuples, or
:class:`~skewpieri.compositions.SkewShape` for the skew tags.
"""

from __future__ import annotations

import enum
import json
from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Iterator

from .compositions import SkewShape


class Family(enum.Enum):
    QSYM = "QSym"
    NSYM = "NSym"


class Basis(enum.Enum):
    M = "M"
    F = "F"
    S = "S"  # dual immaculate
    RS = "RS"  # row-strict dual immaculate
    SKEW_S = "SkewS"
    SKEW_RS = "SkewRS"
    H = "H"
    E = "E"
    I = "I"  # immaculate  # noqa: E741
    RI = "RI"  # row-strict immaculate

    @property
    def family(self) -> Family:
        return Family.NSYM if self in _NSYM else Family.QSYM

    @property
    def is_skew(self) -> bool:
        return self in (Basis.SKEW_S, Basis.SKEW_RS)


_NSYM = {Basis.H, Basis.E, Basis.I, Basis.RI}
_ORDER = {b: i for i, b in enumerate(Basis)}

_LATEX = {
    Basis.M: "M",
    Basis.F: "F",
    Basis.S: r"\mathfrak{S}^*",
    Basis.RS: r"\mathcal{R}\mathfrak{S}^*",
    Basis.SKEW_S: r"\mathfrak{S}^*",
    Basis.SKEW_RS: r"\mathcal{R}\mathfrak{S}^*",
    Basis.H: "H",
    Basis.E: "E",
    Basis.I: r"\mathfrak{I}",
    Basis.RI: r"\mathcal{R}\mathfrak{I}",
}

# short names used in plain-text output
_TEXT = {Basis.SKEW_S: "S", Basis.SKEW_RS: "RS"}


def degree(index) -> int:
    if isinstance(index, SkewShape):
        return index.size
    return sum(index)


def _index_key(index):
    if isinstance(index, SkewShape):
        return (index.outer, index.inner)
    return (index, ())


def sort_key(key):
    basis, index = key
    return (degree(index), _ORDER[basis], _index_key(index))


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Element:
    """Immutable sparse linear combination of basis elements."""

    __slots__ = ("_terms", "_family")

    def __init__(self, terms: dict | Iterable = ()):
        clean = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for key, c in items:
            if c:
                clean[key] = clean.get(key, 0) + c
        self._terms = {k: _normalize(v) for k, v in clean.items() if v}
        families = {k[0].family for k in self._terms}
        if len(families) > 1:
            raise TypeError("cannot mix QSym and NSym basis elements")
        self._family = families.pop() if families else None

    @classmethod
    def basis_element(cls, basis: Basis, index, coeff=1) -> "Element":
        if basis.is_skew != isinstance(index, SkewShape):
            raise TypeError(f"basis {basis.value} does not take index {index!r}")
        return cls({(basis, index): coeff})

    @classmethod
    def zero(cls) -> "Element":
        return cls()

    @property
    def family(self) -> Family | None:
        return self._family

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __getitem__(self, key):
        return self._terms.get(key, 0)

    def coefficient(self, basis: Basis, index):
        return self._terms.get((basis, index), 0)

    def bases(self) -> set[Basis]:
        return {k[0] for k in self._terms}

    def degrees(self) -> set[int]:
        return {degree(k[1]) for k in self._terms}

    def homogeneous_component(self, n: int) -> "Element":
        return Element({k: v for k, v in self._terms.items() if degree(k[1]) == n})

    def sorted_items(self) -> list:
        return sorted(self._terms.items(), key=lambda kv: sort_key(kv[0]))

    # arithmetic

    def _check(self, other: "Element") -> None:
        if self._family and other._family and self._family is not other._family:
            raise TypeError("cannot combine QSym and NSym elements")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        terms = dict(self._terms)
        for k, v in other._terms.items():
            terms[k] = terms.get(k, 0) + v
        return Element(terms)

    __radd__ = __add__

    def __neg__(self):
        return Element({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Element":
        if not c:
            return Element()
        return Element({k: v * c for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Rational):
            return self.scale(other)
        if isinstance(other, Element):
            from .hopf import product

            return product(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, Element):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def linear(self, f: Callable[[Basis, object], "Element"]) -> "Element":
        """Extend ``f`` (defined on basis keys) linearly over this element."""
        return extend_linear(f, self)

    def is_integral(self) -> bool:
        return all(isinstance(v, int) for v in self._terms.values())

    # rendering

    def __repr__(self) -> str:
        return f"Element({self})"

    def __str__(self) -> str:
        return render_plain(self)

    def to_records(self) -> list[dict]:
        records = []
        for (basis, index), c in self.sorted_items():
            if isinstance(index, SkewShape):
                idx = {"outer": list(index.outer), "inner": list(index.inner)}
            else:
                idx = list(index)
            coeff = c if isinstance(c, int) else str(c)
            records.append({"basis": basis.value, "index": idx, "coeff": coeff})
        return records

    def to_json(self) -> str:
        return json.dumps(self.to_records(), separators=(",", ":"))

    def to_latex(self) -> str:
        return render_latex(self)


def extend_linear(f: Callable[[Basis, object], Element], e: Element) -> Element:
    terms: dict = {}
    for (basis, index), c in e.items():
        for k, v in f(basis, index).items():
            terms[k] = terms.get(k, 0) + c * v
    return Element(terms)


def extend_bilinear(f: Callable, a: Element, b: Element) -> Element:
    """Sum of c_a c_b f(key_a, key_b) over all term pairs; f returns an Element."""
    terms: dict = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            for k, v in f(ka, kb).items():
                terms[k] = terms.get(k, 0) + ca * cb * v
    return Element(terms)


def from_dict(basis: Basis, coeffs: dict) -> Element:
    """Element with ``coeffs`` mapping indices of a single basis to coefficients."""
    return Element({(basis, idx): c for idx, c in coeffs.items()})


def to_dict(e: Element, basis: Basis) -> dict:
    """Inverse of :func:`from_dict`; every term must carry ``basis``."""
    out = {}
    for (b, idx), c in e.items():
        if b is not basis:
            raise ValueError(f"expected only {basis.value} terms, found {b.value}")
        out[idx] = c
    return out


def _fmt_index_plain(index) -> str:
    if isinstance(index, SkewShape):
        return f"[{','.join(map(str, index.outer))}/{','.join(map(str, index.inner))}]"
    return f"[{','.join(map(str, index))}]"


def _join_terms(pieces: list[tuple[object, str]], times: str) -> str:
    if not pieces:
        return "0"
    out = []
    for i, (c, body) in enumerate(pieces):
        neg = c < 0
        mag = -c if neg else c
        term = body if mag == 1 else f"{mag}{times}{body}"
        if i == 0:
            out.append(f"-{term}" if neg else term)
        else:
            out.append(f" - {term}" if neg else f" + {term}")
    return "".join(out)


def render_plain(e: Element) -> str:
    pieces = [(c, f"{_TEXT.get(b, b.value)}{_fmt_index_plain(idx)}") for (b, idx), c in e.sorted_items()]
    return _join_terms(pieces, "*")


def _fmt_index_latex(index) -> str:
    def comp(a):
        return r"\emptyset" if not a else "(" + ",".join(map(str, a)) + ")"

    if isinstance(index, SkewShape):
        return f"{comp(index.outer)}/{comp(index.inner)}"
    return comp(index)


def render_latex(e: Element) -> str:
    pieces = []
    for (b, idx), c in e.sorted_items():
        pieces.append((c, f"{_LATEX[b]}_{{{_fmt_index_latex(idx)}}}"))
    return _join_terms(pieces, r"\,")


class Tensor:
    """Sparse element of a tensor square, keyed by pairs of basis keys."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict | Iterable = ()):
        clean: dict = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for key, c in items:
            if c:
                clean[key] = clean.get(key, 0) + c
        self._terms = {k: _normalize(v) for k, v in clean.items() if v}

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Element, Element]]) -> "Tensor":
        """Sum of a (x) b over the given pairs, expanded bilinearly."""
        terms: dict = {}
        for a, b in pairs:
            for ka, ca in a.items():
                for kb, cb in b.items():
                    terms[(ka, kb)] = terms.get((ka, kb), 0) + ca * cb
        return cls(terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other: "Tensor") -> "Tensor":
        terms = dict(self._terms)
        for k, v in other._terms.items():
            terms[k] = terms.get(k, 0) + v
        return Tensor(terms)

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self + other.scale(-1)

    def scale(self, c) -> "Tensor":
        return Tensor({k: v * c for k, v in self._terms.items()})

    def map(self, f: Callable[[Basis, object], Element], g: Callable[[Basis, object], Element]) -> "Tensor":
        """Apply the linear maps f (x) g."""
        terms: dict = {}
        for (ka, kb), c in self._terms.items():
            for k1, v1 in f(*ka).items():
                for k2, v2 in g(*kb).items():
                    terms[(k1, k2)] = terms.get((k1, k2), 0) + c * v1 * v2
        return Tensor(terms)

    def __repr__(self) -> str:
        pieces = sorted(self._terms.items(), key=lambda kv: (sort_key(kv[0][0]), sort_key(kv[0][1])))
        body = [
            (c, f"{_TEXT.get(a[0], a[0].value)}{_fmt_index_plain(a[1])} (x) {_TEXT.get(b[0], b[0].value)}{_fmt_index_plain(b[1])}")
            for (a, b), c in pieces
        ]
        return f"Tensor({_join_terms(body, '*')})"


# exact linear algebra


def exact_inverse(matrix: list[list]) -> list[list]:
    """Inverse of a square matrix by Gauss-Jordan elimination over Fraction."""
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        if p != 1:
            aug[col] = [x / p for x in aug[col]]
        prow = aug[col]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], prow)]
    return [[_normalize(x) for x in row[n:]] for row in aug]


def solve_against_basis(targets: list[Element], e: Element, integral: bool = False) -> list:
    """Coefficients c with sum(c[i] * targets[i]) == e, computed exactly.

    The targets must be linearly independent; raises ``ValueError`` if e is
    not in their span, or (with ``integral=True``) if a coefficient is not
    an integer.
    """
    keys = sorted({k for t in targets for k in t.keys()} | set(e.keys()), key=sort_key)
    m = len(targets)
    # rows: one per key, columns: targets | rhs
    rows = [[Fraction(t[k]) for t in targets] + [Fraction(e[k])] for k in keys]
    pivots = []
    r = 0
    for col in range(m):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            raise ValueError("targets are linearly dependent")
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][col]
        rows[r] = [x / p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    if any(row[m] != 0 for row in rows[r:]):
        raise ValueError("element is not in the span of the targets")
    coeffs = [_normalize(rows[i][m]) for i in range(m)]
    if integral and not all(isinstance(c, int) for c in coeffs):
        raise ValueError(f"non-integral coefficients: {coeffs}")
    return coeffs
