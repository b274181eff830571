"""k-local permutation statistics and the shadow-junta bases of Loc_k(S_n).

Statistics are value vectors indexed by the lexicographic rank of S_n.  The
indicator ``1_R`` of a rook placement detects whether ``w`` extends ``R``.  The
shadow juntas ``{1_{S(w)} : lis(w) >= n - k}`` form a basis of the k-local
statistics, nested in k.
"""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Sequence

from .errors import DomainError, ParseError
from .field import QQ, Field
from .guards import check_enumeration
from .linalg import rank, solve
from .polynomial import GridMonomial
from .schensted_core import (
    Permutation,
    RookPlacement,
    format_permutation,
    format_rook_placement,
    lis,
    parse_permutation,
    permutation_rank,
    permutation_shadow_set,
    permutations,
)


@dataclass(frozen=True)
class PermutationStatistic:
    n: int
    values: tuple  # indexed by lexicographic rank
    field: Field = QQ

    def __post_init__(self):
        if len(self.values) != factorial(self.n):
            raise DomainError(f"a statistic on S_{self.n} needs {factorial(self.n)} values, got {len(self.values)}")
        object.__setattr__(self, "values", tuple(self.field(v) for v in self.values))

    def __call__(self, w: Permutation):
        return self.values[permutation_rank(w)]

    def __add__(self, other: PermutationStatistic) -> PermutationStatistic:
        return PermutationStatistic(self.n, tuple(a + b for a, b in zip(self.values, other.values)), self.field)

    def __sub__(self, other: PermutationStatistic) -> PermutationStatistic:
        return PermutationStatistic(self.n, tuple(a - b for a, b in zip(self.values, other.values)), self.field)

    def scale(self, c) -> PermutationStatistic:
        c = self.field(c)
        return PermutationStatistic(self.n, tuple(c * v for v in self.values), self.field)

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)

    @classmethod
    def from_function(cls, n: int, fn: Callable[[Permutation], object], field: Field = QQ) -> PermutationStatistic:
        check_enumeration(n, "permutation statistic")
        return cls(n, tuple(fn(w) for w in permutations(n)), field)


def indicator(placement: RookPlacement, field: Field = QQ) -> PermutationStatistic:
    """``1_R``: 1 on permutations extending R, 0 elsewhere."""
    return PermutationStatistic.from_function(placement.n, lambda w: int(w.extends(placement)), field)


def exc(w: Permutation) -> int:
    return sum(1 for i, v in enumerate(w.word, 1) if v > i)


def inv(w: Permutation) -> int:
    word = w.word
    return sum(1 for a in range(len(word)) for b in range(a + 1, len(word)) if word[a] > word[b])


def peak(w: Permutation) -> int:
    word = w.word
    return sum(1 for i in range(1, len(word) - 1) if word[i - 1] < word[i] > word[i + 1])


BUILTIN_STATISTICS: dict[str, Callable[[Permutation], int]] = {
    "exc": exc,
    "inv": inv,
    "peak": peak,
    "lis": lis,
    "constant": lambda w: 1,
}


def builtin_statistic(name: str, n: int, field: Field = QQ) -> PermutationStatistic:
    try:
        fn = BUILTIN_STATISTICS[name]
    except KeyError:
        raise DomainError(f"unknown statistic {name!r}; choose from {sorted(BUILTIN_STATISTICS)}") from None
    return PermutationStatistic.from_function(n, fn, field)


# -- shadow junta bases ----------------------------------------------------------


@dataclass(frozen=True)
class JuntaBasis:
    n: int
    k: int
    elements: tuple[RookPlacement, ...]
    permutations: tuple[Permutation, ...]  # elements[t] is the shadow set of permutations[t]

    def __len__(self) -> int:
        return len(self.elements)

    def monomials(self) -> list[GridMonomial]:
        return [GridMonomial.of_placement(r) for r in self.elements]


@lru_cache(maxsize=16)
def _ordered_shadows(n: int) -> tuple[tuple[Permutation, RookPlacement], ...]:
    """All (w, S(w)) ordered by |S(w)|, then Toeplitz-descending m(S(w))."""
    check_enumeration(n, "shadow junta basis")
    pairs = [(w, permutation_shadow_set(w)) for w in permutations(n)]
    pairs.sort(key=lambda t: GridMonomial.of_placement(t[1]).key, reverse=True)
    pairs.sort(key=lambda t: len(t[1]))
    return tuple(pairs)


def junta_basis(n: int, k: int) -> JuntaBasis:
    """Shadow juntas of permutations with lis >= n - k."""
    if n < 1 or not 0 <= k <= n - 1:
        raise DomainError(f"k must satisfy 0 <= k <= n-1 (got n={n}, k={k})")
    chosen = [(w, s) for w, s in _ordered_shadows(n) if len(s) <= k]
    return JuntaBasis(n, k, tuple(s for _, s in chosen), tuple(w for w, _ in chosen))


def indicator_rows(basis: JuntaBasis, field: Field = QQ) -> list[list]:
    perms = list(permutations(basis.n))
    return [[field(int(v.extends(r))) for v in perms] for r in basis.elements]


def junta_rank(n: int, k: int, field: Field = QQ) -> int:
    """Exact rank of the junta indicator vectors over ``field``."""
    basis = junta_basis(n, k)
    return rank(indicator_rows(basis, field), field, factorial(n))


# -- decomposition ----------------------------------------------------------------


@dataclass(frozen=True)
class Decomposition:
    k: int
    coefficients: dict[RookPlacement, object]  # over junta_basis(n, k), zero entries kept

    def nonzero(self) -> dict[RookPlacement, object]:
        return {r: c for r, c in self.coefficients.items() if c != 0}


@dataclass(frozen=True)
class NotKLocal:
    k: int
    residual: PermutationStatistic  # part of f outside Loc_k in the shadow-junta basis
    minimal_locality: int


@lru_cache(maxsize=8)
def _full_system(n: int, field: Field) -> tuple[tuple[tuple, ...], JuntaBasis]:
    """Transpose of the indicator matrix of the full basis (rows = permutations)."""
    basis = junta_basis(n, n - 1)
    rows = indicator_rows(basis, field)
    return tuple(zip(*rows)), basis


def shadow_coordinates(f: PermutationStatistic) -> dict[RookPlacement, object]:
    """Coordinates of ``f`` in the full shadow-junta basis of Loc_{n-1} = all statistics."""
    matrix, basis = _full_system(f.n, f.field)
    coeffs = solve(matrix, list(f.values), f.field)
    return dict(zip(basis.elements, coeffs))


def reconstruct(n: int, coefficients: dict[RookPlacement, object], field: Field = QQ) -> PermutationStatistic:
    values = [field.zero] * factorial(n)
    for r, c in coefficients.items():
        if c == 0:
            continue
        for idx, v in enumerate(permutations(n)):
            if v.extends(r):
                values[idx] += c
    return PermutationStatistic(n, tuple(values), field)


def decompose(f: PermutationStatistic, k: int) -> Decomposition | NotKLocal:
    """Exact expansion of ``f`` in the shadow-junta basis of Loc_k, or NotKLocal.

    Solves once against the full (square, unimodular) junta basis; ``f`` is
    k-local exactly when its coordinates vanish off the juntas of size <= k.
    """
    n = f.n
    if not 0 <= k <= n - 1:
        raise DomainError(f"k must satisfy 0 <= k <= n-1 (got {k})")
    coords = shadow_coordinates(f)
    outside = {r: c for r, c in coords.items() if len(r) > k and c != 0}
    if outside:
        residual = reconstruct(n, outside, f.field)
        return NotKLocal(k, residual, max(len(r) for r in outside))
    basis = junta_basis(n, k)
    return Decomposition(k, {r: coords[r] for r in basis.elements})


def minimal_locality(f: PermutationStatistic) -> int:
    """Least k with f in Loc_k: the largest junta size in f's shadow coordinates."""
    coords = shadow_coordinates(f)
    return max((len(r) for r, c in coords.items() if c != 0), default=0)


# -- file formats ------------------------------------------------------------------

_FLOATISH = re.compile(r"[.eE]|inf|nan", re.IGNORECASE)


def read_statistic_csv(text: str, n: int, field: Field = QQ) -> PermutationStatistic:
    """CSV with header ``permutation,value``; the permutation field is quoted one-line notation."""
    reader = csv.reader(io.StringIO(text))
    rows = list(reader)
    if not rows or [c.strip() for c in rows[0]] != ["permutation", "value"]:
        raise ParseError("expected header 'permutation,value'", text, 0)
    values: dict[int, object] = {}
    for lineno, row in enumerate(rows[1:], 2):
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != 2:
            raise ParseError(f"line {lineno}: expected 2 fields (quote the permutation), got {len(row)}", text, 0)
        perm_text, value_text = row
        w = parse_permutation(perm_text.strip())
        if w.n != n:
            raise DomainError(f"line {lineno}: {perm_text} is not in S_{n}")
        if _FLOATISH.search(value_text):
            raise ParseError(f"line {lineno}: floating-point value {value_text!r} rejected", value_text, 0)
        idx = permutation_rank(w)
        if idx in values:
            raise DomainError(f"line {lineno}: duplicate permutation {perm_text}")
        values[idx] = field.parse(value_text)
    if len(values) != factorial(n):
        raise DomainError(f"statistic file lists {len(values)} permutations; S_{n} has {factorial(n)}")
    return PermutationStatistic(n, tuple(values[i] for i in range(factorial(n))), field)


def write_statistic_csv(f: PermutationStatistic) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["permutation", "value"])
    for w, v in zip(permutations(f.n), f.values):
        writer.writerow([format_permutation(w), f.field.format(v)])
    return out.getvalue()


def write_decomposition_csv(coefficients: dict[RookPlacement, object], field: Field = QQ) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["rook_placement", "coefficient"])
    for r, c in coefficients.items():
        if c != 0:
            writer.writerow([format_rook_placement(r), field.format(c)])
    return out.getvalue()


def statistic_from_values(n: int, values: Sequence, field: Field = QQ) -> PermutationStatistic:
    return PermutationStatistic(n, tuple(Fraction(v) if field is QQ else v for v in values), field)
