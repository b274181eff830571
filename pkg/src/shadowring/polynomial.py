"""Sparse polynomials in the n x n variable grid ``x[i,j]`` under the Toeplitz order.

Variables are ranked by antidiagonal: ``x[a,b] > x[c,d]`` when ``a+b < c+d``,
and within an antidiagonal the larger first index wins, giving the chain
``x[1,1] > x[2,1] > x[1,2] > x[3,1] > x[2,2] > x[1,3] > ...``.  Monomials are
compared lexicographically with respect to that chain.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping

from .errors import DomainError, ParseError
from .field import QQ, Field
from .schensted_core import Cell, Permutation, RookPlacement


def variable_weight(cell: Cell) -> tuple[int, int]:
    """Sort key for variables; larger weight means Toeplitz-larger variable."""
    i, j = cell
    return (-(i + j), i)


def variable_order(n: int) -> list[Cell]:
    """All n^2 variables from Toeplitz-largest to smallest."""
    cells = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    return sorted(cells, key=variable_weight, reverse=True)


class GridMonomial:
    """A monomial ``prod x[i,j]^e``; ``exps`` is sorted from the largest variable down."""

    __slots__ = ("n", "exps", "key", "_hash")

    def __init__(self, n: int, exps: Mapping[Cell, int] | Iterable[tuple[Cell, int]] = ()):
        items = exps.items() if isinstance(exps, Mapping) else exps
        merged: dict[Cell, int] = {}
        for (i, j), e in items:
            if not (1 <= i <= n and 1 <= j <= n):
                raise DomainError(f"variable x[{i},{j}] is outside the {n}x{n} grid")
            if e < 0:
                raise DomainError("negative exponent")
            if e:
                merged[(i, j)] = merged.get((i, j), 0) + e
        self.n = n
        self.exps = tuple(sorted(merged.items(), key=lambda t: variable_weight(t[0]), reverse=True))
        self.key = tuple((variable_weight(c), e) for c, e in self.exps)
        self._hash = hash((n, self.exps))

    @classmethod
    def one(cls, n: int) -> GridMonomial:
        return cls(n)

    @classmethod
    def from_cells(cls, n: int, cells: Iterable[Cell]) -> GridMonomial:
        return cls(n, [(c, 1) for c in cells])

    @classmethod
    def of_placement(cls, placement: RookPlacement) -> GridMonomial:
        return cls.from_cells(placement.n, placement.cells)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    @property
    def cells(self) -> tuple[Cell, ...]:
        return tuple(c for c, _ in self.exps)

    def is_rook(self) -> bool:
        """Squarefree with at most one variable per row and per column."""
        if any(e > 1 for _, e in self.exps):
            return False
        cells = self.cells
        return len({i for i, _ in cells}) == len(cells) == len({j for _, j in cells})

    def placement(self) -> RookPlacement:
        if not self.is_rook():
            raise DomainError(f"{self} is not a rook monomial")
        return RookPlacement(self.n, frozenset(self.cells))

    def map_cells(self, fn: Callable[[Cell], Cell]) -> GridMonomial:
        return GridMonomial(self.n, [(fn(c), e) for c, e in self.exps])

    def transpose(self) -> GridMonomial:
        return self.map_cells(lambda c: (c[1], c[0]))

    def __mul__(self, other: GridMonomial) -> GridMonomial:
        _check_n(self.n, other.n)
        return GridMonomial(self.n, self.exps + other.exps)

    def __eq__(self, other):
        return isinstance(other, GridMonomial) and self.n == other.n and self.exps == other.exps

    def __hash__(self):
        return self._hash

    def __lt__(self, other: GridMonomial) -> bool:
        _check_n(self.n, other.n)
        return self.key < other.key

    def __le__(self, other: GridMonomial) -> bool:
        _check_n(self.n, other.n)
        return self.key <= other.key

    def __gt__(self, other: GridMonomial) -> bool:
        _check_n(self.n, other.n)
        return self.key > other.key

    def __ge__(self, other: GridMonomial) -> bool:
        _check_n(self.n, other.n)
        return self.key >= other.key

    def __repr__(self):
        return f"GridMonomial({self.n}, {self})"

    def __str__(self):
        if not self.exps:
            return "1"
        return "*".join(f"x[{i},{j}]" + (f"^{e}" if e > 1 else "") for (i, j), e in self.exps)


def _check_n(a: int, b: int) -> None:
    if a != b:
        raise DomainError(f"grid size mismatch: {a} vs {b}")


def toeplitz_compare(m1: GridMonomial, m2: GridMonomial) -> int:
    """-1, 0 or 1 as ``m1`` is Toeplitz-smaller, equal or larger than ``m2``."""
    _check_n(m1.n, m2.n)
    return (m1.key > m2.key) - (m1.key < m2.key)


class Polynomial:
    """Exact polynomial; ``terms`` maps monomials to nonzero coefficients."""

    __slots__ = ("n", "field", "terms")

    def __init__(self, n: int, terms: Mapping[GridMonomial, object] | None = None, field: Field = QQ):
        self.n = n
        self.field = field
        self.terms: dict[GridMonomial, object] = {}
        for m, c in (terms or {}).items():
            _check_n(n, m.n)
            c = field(c)
            if c != 0:
                self.terms[m] = c

    # -- constructors --

    @classmethod
    def zero(cls, n: int, field: Field = QQ) -> Polynomial:
        return cls(n, {}, field)

    @classmethod
    def constant(cls, n: int, c, field: Field = QQ) -> Polynomial:
        return cls(n, {GridMonomial.one(n): c}, field)

    @classmethod
    def variable(cls, n: int, i: int, j: int, field: Field = QQ) -> Polynomial:
        return cls(n, {GridMonomial(n, {(i, j): 1}): 1}, field)

    @classmethod
    def monomial(cls, m: GridMonomial, c=1, field: Field = QQ) -> Polynomial:
        return cls(m.n, {m: c}, field)

    @classmethod
    def linear_form(cls, n: int, cells: Iterable[Cell], field: Field = QQ) -> Polynomial:
        return cls(n, {GridMonomial(n, {c: 1}): 1 for c in cells}, field)

    # -- arithmetic --

    def _same(self, other: Polynomial) -> None:
        _check_n(self.n, other.n)
        if self.field != other.field:
            raise DomainError(f"field mismatch: {self.field} vs {other.field}")

    def _lift(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            self._same(other)
            return other
        return Polynomial.constant(self.n, other, self.field)

    def copy(self) -> Polynomial:
        out = Polynomial(self.n, field=self.field)
        out.terms = dict(self.terms)
        return out

    def add_term(self, m: GridMonomial, c) -> None:
        """In-place ``self += c*m``."""
        new = self.terms.get(m, 0) + c
        if new == 0:
            self.terms.pop(m, None)
        else:
            self.terms[m] = new

    def __add__(self, other) -> Polynomial:
        other = self._lift(other)
        out = self.copy()
        for m, c in other.terms.items():
            out.add_term(m, c)
        return out

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        out = Polynomial(self.n, field=self.field)
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other) -> Polynomial:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> Polynomial:
        return self._lift(other) - self

    def __mul__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            c = self.field(other)
            out = Polynomial(self.n, field=self.field)
            if c != 0:
                out.terms = {m: a * c for m, a in self.terms.items()}
            return out
        self._same(other)
        out = Polynomial(self.n, field=self.field)
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                out.add_term(m1 * m2, c1 * c2)
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        out = Polynomial.constant(self.n, 1, self.field)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.n == other.n and self.field == other.field and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.n, other, self.field)
        return NotImplemented

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[GridMonomial, object]]:
        return iter(self.sorted_terms())

    def __repr__(self):
        return f"Polynomial(n={self.n}, {self}, field={self.field})"

    def __str__(self):
        return format_polynomial(self)

    # -- structure --

    def sorted_terms(self) -> list[tuple[GridMonomial, object]]:
        """Terms from Toeplitz-largest monomial down."""
        return sorted(self.terms.items(), key=lambda t: t[0].key, reverse=True)

    @property
    def degree(self) -> int:
        if not self.terms:
            raise DomainError("the zero polynomial has no degree")
        return max(m.degree for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({m.degree for m in self.terms}) <= 1

    def homogeneous_component(self, d: int) -> Polynomial:
        return Polynomial(self.n, {m: c for m, c in self.terms.items() if m.degree == d}, self.field)

    def coefficient(self, m: GridMonomial):
        return self.terms.get(m, self.field.zero)

    def change_field(self, field: Field) -> Polynomial:
        return Polynomial(self.n, self.terms, field)

    def map_cells(self, fn: Callable[[Cell], Cell]) -> Polynomial:
        out = Polynomial(self.n, field=self.field)
        for m, c in self.terms.items():
            out.add_term(m.map_cells(fn), c)
        return out

    def transpose(self) -> Polynomial:
        return self.map_cells(lambda c: (c[1], c[0]))

    def act(self, row_perm: Permutation, col_perm: Permutation) -> Polynomial:
        """``(u, v)`` sends ``x[i,j]`` to ``x[u(i), v(j)]``."""
        _check_n(self.n, row_perm.n)
        _check_n(self.n, col_perm.n)
        return self.map_cells(lambda c: (row_perm(c[0]), col_perm(c[1])))


def leading_term(f: Polynomial) -> tuple[GridMonomial, object]:
    """Toeplitz-largest monomial of ``f`` and its coefficient."""
    if not f.terms:
        raise DomainError("the zero polynomial has no leading term")
    m = max(f.terms, key=lambda t: t.key)
    return m, f.terms[m]


leading_monomial = leading_term


def top_component(f: Polynomial) -> Polynomial:
    """Highest-degree homogeneous component."""
    if not f.terms:
        raise DomainError("the zero polynomial has no top component")
    return f.homogeneous_component(f.degree)


def evaluate(f: Polynomial, w: Permutation):
    """Value of ``f`` at the permutation matrix of ``w`` (``x[i,j] = 1`` iff ``w(i) = j``)."""
    _check_n(f.n, w.n)
    total = f.field.zero
    for m, c in f.terms.items():
        if all(w(i) == j for (i, j), _ in m.exps):
            total = total + c
    return total


# -- text and JSON forms --------------------------------------------------------


def format_polynomial(f: Polynomial) -> str:
    """Signed sum of terms, largest first: ``3*x[2,4]*x[5,5] - x[1,1]^2``."""
    if not f.terms:
        return "0"
    parts = []
    for k, (m, c) in enumerate(f.sorted_terms()):
        text = f.field.format(c)
        negative = text.startswith("-")
        if negative:
            text = text[1:]
        body = str(m)
        if m.exps:
            body = body if text == "1" else f"{text}*{body}"
        else:
            body = text
        if k == 0:
            parts.append(("-" if negative else "") + body)
        else:
            parts.append((" - " if negative else " + ") + body)
    return "".join(parts)


_TOKEN = re.compile(
    r"\s*(?:(?P<var>x\[\s*(?P<i>\d+)\s*,\s*(?P<j>\d+)\s*\])|(?P<num>\d+)|(?P<op>[-+*/^]))"
)
_PARTIAL_VAR = re.compile(r"x(?:\[\s*(?:\d+\s*(?:,\s*(?:\d+\s*)?)?)?)?")


def parse_polynomial(text: str, n: int, field: Field = QQ) -> Polynomial:
    """Inverse of :func:`format_polynomial`; also accepts unsimplified input."""
    tokens = []
    pos = 0
    while pos < len(text):
        if not text[pos:].strip():
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            partial = _PARTIAL_VAR.match(text, bad)
            if partial:
                raise ParseError("incomplete variable, expected x[i,j]", text, partial.end())
            raise ParseError("unexpected character", text, bad)
        start = m.start() + len(m.group()) - len(m.group().lstrip())
        tokens.append((m, start))
        pos = m.end()
    if not tokens:
        raise ParseError("empty polynomial", text, 0)

    out = Polynomial.zero(n, field)
    k = 0

    def peek_op():
        return tokens[k][0].group("op") if k < len(tokens) else None

    def factor():
        nonlocal k
        if k >= len(tokens):
            raise ParseError("expected a factor", text, len(text))
        tok, start = tokens[k]
        if tok.group("num"):
            k += 1
            value = Fraction(int(tok.group("num")))
            if peek_op() == "/":
                k += 1
                if k >= len(tokens) or not tokens[k][0].group("num"):
                    raise ParseError("expected a denominator", text, tokens[k - 1][1] + 1)
                den = int(tokens[k][0].group("num"))
                if den == 0:
                    raise ParseError("zero denominator", text, tokens[k][1])
                value /= den
                k += 1
            return field(value), GridMonomial.one(n)
        if tok.group("var"):
            i, j = int(tok.group("i")), int(tok.group("j"))
            if not (1 <= i <= n and 1 <= j <= n):
                raise ParseError(f"x[{i},{j}] is outside the {n}x{n} grid", text, start)
            k += 1
            e = 1
            if peek_op() == "^":
                k += 1
                if k >= len(tokens) or not tokens[k][0].group("num"):
                    raise ParseError("expected an exponent", text, tokens[k - 1][1] + 1)
                e = int(tokens[k][0].group("num"))
                k += 1
            return field.one, GridMonomial(n, {(i, j): e})
        raise ParseError(f"unexpected {tok.group('op')!r}", text, start)

    expect_term = True
    sign = 1
    while k < len(tokens):
        op = peek_op()
        if op in ("+", "-"):
            sign = -sign if op == "-" else sign
            k += 1
            expect_term = True
            continue
        if not expect_term:
            raise ParseError("expected '+' or '-' between terms", text, tokens[k][1])
        coeff, mono = factor()
        while peek_op() == "*":
            k += 1
            c2, m2 = factor()
            coeff, mono = coeff * c2, mono * m2
        out.add_term(mono, coeff * sign)
        sign = 1
        expect_term = False
    if expect_term:
        raise ParseError("dangling operator", text, len(text))
    return out


def polynomial_to_json(f: Polynomial) -> list[dict]:
    return [
        {"coeff": f.field.format(c), "monomial": [[i, j, e] for (i, j), e in m.exps]}
        for m, c in f.sorted_terms()
    ]


def polynomial_from_json(data: list[dict], n: int, field: Field = QQ) -> Polynomial:
    out = Polynomial.zero(n, field)
    for entry in data:
        if not isinstance(entry.get("coeff"), str):
            raise DomainError("coefficients must be exact rational strings")
        mono = GridMonomial(n, [((int(i), int(j)), int(e)) for i, j, e in entry["monomial"]])
        out.add_term(mono, field.parse(entry["coeff"]))
    return out
