"""The quotient ring F[x_{n x n}]/I_n and its shadow-monomial basis.

``I_n`` is generated by products of two variables sharing a row or a column
(squares included) together with all row sums and column sums.  Normal forms
are computed by the marching rewrite: every rook monomial that is not a shadow
monomial is the Toeplitz-leading term of an explicit element
``m(R') * b_{S,T}`` of ``I_n``, so subtracting it strictly lowers the term.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Iterable

from .errors import DomainError
from .field import QQ, Field
from .guards import check_enumeration, check_limit
from .linalg import integer_determinant, rank
from .polynomial import GridMonomial, Polynomial, evaluate, top_component
from .schensted_core import (
    Cell,
    Permutation,
    RookPlacement,
    ballot_sequences,
    first_positive_prefix,
    is_shadow_set,
    permutation_shadow_set,
    permutations,
    rook_placements,
    shadow_lines,
)


def _check_n(n: int) -> None:
    if n < 1:
        raise DomainError("n must be positive")


# -- generators -----------------------------------------------------------------


def _dedupe(polys: Iterable[Polynomial]) -> list[Polynomial]:
    seen, out = set(), []
    for f in polys:
        key = frozenset(f.terms.items())
        if key not in seen:
            seen.add(key)
            out.append(f)
    return out


def ideal_generators(n: int, field: Field = QQ) -> list[Polynomial]:
    """Row quadratics, column quadratics, row sums, column sums (duplicates dropped)."""
    _check_n(n)
    gens = []
    for i in range(1, n + 1):
        for j, j2 in itertools.combinations_with_replacement(range(1, n + 1), 2):
            gens.append(Polynomial.monomial(GridMonomial(n, [((i, j), 1), ((i, j2), 1)]), 1, field))
    for j in range(1, n + 1):
        for i, i2 in itertools.combinations_with_replacement(range(1, n + 1), 2):
            gens.append(Polynomial.monomial(GridMonomial(n, [((i, j), 1), ((i2, j), 1)]), 1, field))
    for i in range(1, n + 1):
        gens.append(Polynomial.linear_form(n, [(i, j) for j in range(1, n + 1)], field))
    for j in range(1, n + 1):
        gens.append(Polynomial.linear_form(n, [(i, j) for i in range(1, n + 1)], field))
    return _dedupe(gens)


def ideal_generator_count(n: int) -> int:
    """Size of :func:`ideal_generators` for n >= 2 (n = 1 collapses to 2)."""
    if n == 1:
        return 2
    return 2 * n * comb(n + 1, 2) - n * n + 2 * n


def point_ideal_generators(n: int, field: Field = QQ) -> list[Polynomial]:
    """Generators of the vanishing ideal of the n! permutation matrices."""
    _check_n(n)
    gens = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            gens.append(Polynomial.monomial(GridMonomial(n, {(i, j): 2}), 1, field) - Polynomial.variable(n, i, j, field))
    for j in range(1, n + 1):
        for i, i2 in itertools.combinations(range(1, n + 1), 2):
            gens.append(Polynomial.monomial(GridMonomial.from_cells(n, [(i, j), (i2, j)]), 1, field))
    for i in range(1, n + 1):
        for j, j2 in itertools.combinations(range(1, n + 1), 2):
            gens.append(Polynomial.monomial(GridMonomial.from_cells(n, [(i, j), (i, j2)]), 1, field))
    for i in range(1, n + 1):
        gens.append(Polynomial.linear_form(n, [(i, j) for j in range(1, n + 1)], field) - 1)
    for j in range(1, n + 1):
        gens.append(Polynomial.linear_form(n, [(i, j) for i in range(1, n + 1)], field) - 1)
    return gens


def injection_sum_a(S: Iterable[int], T: Iterable[int], n: int, field: Field = QQ) -> Polynomial:
    """Sum over injections f: S -> T of prod_{i in S} x[i, f(i)]."""
    S, T = sorted(set(S)), sorted(set(T))
    if any(not 1 <= v <= n for v in S + T):
        raise DomainError(f"S and T must be subsets of 1..{n}")
    out = Polynomial.zero(n, field)
    for image in itertools.permutations(T, len(S)):
        out.add_term(GridMonomial.from_cells(n, zip(S, image)), field.one)
    return out


def injection_sum_b(S: Iterable[int], T: Iterable[int], n: int, field: Field = QQ) -> Polynomial:
    """Transpose of :func:`injection_sum_a`: prod_{i in S} x[f(i), i]."""
    return injection_sum_a(S, T, n, field).transpose()


# -- marching rewrite -----------------------------------------------------------


@dataclass(frozen=True)
class MarchingRewrite:
    """An element ``m(R') * b_{S,T}`` of I_n whose leading monomial is ``m(R)``.

    When only the y-sequence fails, the construction runs on the transposed
    placement and is transposed back, so ``polynomial`` is ``m(R') * a_{S,T}``.
    Cells are always reported in the original coordinates.
    """

    placement: RookPlacement
    polynomial: Polynomial
    transposed: bool
    a: int  # shortest positive prefix
    line_index: int  # 1-based index p of the line with vertical ray at x = a
    collected: tuple[Cell, ...]  # (i_1, j_1), ..., (i_p, j_p)
    remainder: RookPlacement  # R'
    S: tuple[int, ...]
    T: tuple[int, ...]


def _march(placement: RookPlacement, field: Field) -> MarchingRewrite | None:
    """x-sequence case; None if every x-prefix sum is nonpositive."""
    x_seq, _ = ballot_sequences(placement)
    a = first_positive_prefix(x_seq)
    if a is None:
        return None
    n = placement.n
    lines = shadow_lines(placement).lines
    p = next(k for k, line in enumerate(lines, 1) if line.ray_x == a)
    collected = [lines[p - 1].points[0]]
    for q in range(p - 1, 0, -1):
        j_above = collected[-1][1]
        collected.append(next(c for c in lines[q - 1].points if c[1] < j_above))
    collected.reverse()
    remainder = placement.without(collected)
    blocked = remainder.xs
    T = tuple(sorted(({i for i, _ in collected} | set(range(a + 1, n + 1))) - blocked))
    S = tuple(j for _, j in collected)
    reduced_n = n - len(remainder)
    if len(S) + len(T) <= reduced_n:
        raise AssertionError(f"|S|+|T| = {len(S) + len(T)} does not exceed {reduced_n}")
    g = injection_sum_b(S, T, n, field) * Polynomial.monomial(GridMonomial.of_placement(remainder), 1, field)
    return MarchingRewrite(placement, g, False, a, p, tuple(collected), remainder, S, T)


def marching_rewrite(placement: RookPlacement, field: Field = QQ) -> MarchingRewrite:
    """Ideal element with leading term ``m(placement)`` for a non-shadow rook placement."""
    result = _march(placement, field)
    if result is None:
        flipped = _march(placement.transpose(), field)
        if flipped is None:
            raise DomainError(f"{placement} passes the ballot criterion; it is a shadow set")
        result = MarchingRewrite(
            placement,
            flipped.polynomial.transpose(),
            True,
            flipped.a,
            flipped.line_index,
            tuple((j, i) for i, j in flipped.collected),
            flipped.remainder.transpose(),
            flipped.S,
            flipped.T,
        )
    lead = max(result.polynomial.terms, key=lambda m: m.key)
    if lead != GridMonomial.of_placement(placement) or result.polynomial.terms[lead] != 1:
        raise AssertionError(f"rewrite of {placement} has leading term {lead}")
    return result


@lru_cache(maxsize=65536)
def _rewrite_tail(placement: RookPlacement, field: Field) -> tuple[tuple[GridMonomial, object], ...]:
    """Non-leading terms of the marching rewrite, negated: m(R) == sum of these mod I_n."""
    g = marching_rewrite(placement, field).polynomial
    lead = GridMonomial.of_placement(placement)
    return tuple((m, -c) for m, c in g.terms.items() if m != lead)


@lru_cache(maxsize=65536)
def _is_standard(m: GridMonomial) -> bool:
    return m.is_rook() and is_shadow_set(m.placement())


class _MaxKey:
    __slots__ = ("m",)

    def __init__(self, m: GridMonomial):
        self.m = m

    def __lt__(self, other: _MaxKey) -> bool:
        return self.m.key > other.m.key


def normal_form(f: Polynomial) -> Polynomial:
    """Unique representative of ``f`` mod I_n supported on shadow monomials."""
    field = f.field
    terms = {m: c for m, c in f.terms.items() if m.is_rook()}
    heap = [_MaxKey(m) for m in terms if not _is_standard(m)]
    heapq.heapify(heap)
    while heap:
        m = heapq.heappop(heap).m
        c = terms.pop(m, None)
        if c is None:
            continue
        for m2, c2 in _rewrite_tail(m.placement(), field):
            old = terms.get(m2)
            new = c * c2 if old is None else old + c * c2
            if new == 0:
                del terms[m2]
            else:
                terms[m2] = new
                if old is None and not _is_standard(m2):
                    heapq.heappush(heap, _MaxKey(m2))
    out = Polynomial(f.n, field=field)
    out.terms = terms
    return out


def is_standard_monomial(m: GridMonomial) -> bool:
    """True exactly for shadow monomials s(w)."""
    return _is_standard(m)


def groebner_elements(n: int, field: Field = QQ) -> list[Polynomial]:
    """The (far from minimal) Groebner set: same-line quadratics plus one rewrite per non-shadow rook placement."""
    gens = [g for g in ideal_generators(n, field) if len(g) == 1]
    for placement in rook_placements(n):
        if not is_shadow_set(placement):
            gens.append(marching_rewrite(placement, field).polynomial)
    return gens


# -- basis, Hilbert series, evaluation -------------------------------------------


def shadow_monomial(w: Permutation) -> GridMonomial:
    return GridMonomial.of_placement(permutation_shadow_set(w))


def standard_monomial_basis(n: int) -> list[tuple[Permutation, GridMonomial]]:
    """``(w, s(w))`` for every w in S_n, lexicographic in w."""
    _check_n(n)
    check_enumeration(n, "standard monomial basis")
    return [(w, shadow_monomial(w)) for w in permutations(n)]


def hilbert_series(n: int) -> tuple[int, ...]:
    """Graded dimensions of F[x]/I_n, read from the degrees of the shadow monomials."""
    _check_n(n)
    check_enumeration(n, "Hilbert series")
    coeffs = [0] * n
    for w in permutations(n):
        coeffs[len(permutation_shadow_set(w))] += 1
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def evaluation_matrix(n: int) -> list[list[int]]:
    """``E[w][v] = s(w)`` evaluated at the permutation matrix of v, both lexicographic."""
    _check_n(n)
    check_enumeration(n, "evaluation matrix")
    perms = list(permutations(n))
    shadows = [permutation_shadow_set(w) for w in perms]
    return [[int(v.extends(s)) for v in perms] for s in shadows]


def evaluation_determinant(n: int) -> int:
    return integer_determinant(evaluation_matrix(n))


def evaluate_polynomial(f: Polynomial, w: Permutation):
    return evaluate(f, w)


# -- membership oracle ----------------------------------------------------------


def rook_monomials(n: int, d: int) -> list[GridMonomial]:
    return [GridMonomial.of_placement(r) for r in rook_placements(n, d)] if d <= n else []


@lru_cache(maxsize=64)
def _slice_relations(n: int, d: int, field: Field) -> tuple[tuple[GridMonomial, ...], tuple[tuple, ...], int]:
    """Linear-generator multiples spanning the degree-d slice of I_n modulo non-rook monomials.

    Every non-rook monomial is a multiple of a quadratic generator, so the slice
    is ``span(non-rook monomials) + span(l * m)`` with l a row or column sum and
    m a rook monomial of degree d-1; projecting away the non-rook monomials
    leaves a small exact system on rook monomials.
    """
    columns = tuple(rook_monomials(n, d))
    check_limit(len(columns), "max_slice_dim", f"degree-{d} slice for n={n}")
    index = {m: k for k, m in enumerate(columns)}
    linear = [g for g in ideal_generators(n, field) if g.degree == 1]
    rows = []
    for m in rook_monomials(n, d - 1) if d >= 1 else []:
        for g in linear:
            row = [0] * len(columns)
            for mg, c in g.terms.items():
                k = index.get(mg * m)
                if k is not None:
                    row[k] += c
            if any(row):
                rows.append(tuple(row))
    return columns, tuple(rows), rank(rows, field, len(columns)) if rows else 0


def ideal_membership(f: Polynomial, n: int | None = None) -> bool:
    """Does ``f`` lie in I_n?  I_n is homogeneous, so each degree slice is tested by exact rank."""
    n = f.n if n is None else n
    if n != f.n:
        raise DomainError(f"grid size mismatch: {n} vs {f.n}")
    if not f.terms:
        return True
    if not f.is_homogeneous():
        degrees = sorted({m.degree for m in f.terms})
        return all(ideal_membership(f.homogeneous_component(d)) for d in degrees)
    d = f.degree
    if d == 0:
        return False
    columns, rows, base = _slice_relations(n, d, f.field)
    index = {m: k for k, m in enumerate(columns)}
    vec = [f.field.zero] * len(columns)
    for m, c in f.terms.items():
        if m.is_rook():
            vec[index[m]] = c
    if all(v == 0 for v in vec):
        return True
    return rank(list(rows) + [vec], f.field, len(columns)) == base


def quotient_dimension(n: int, d: int, field: Field = QQ) -> int:
    """dim (F[x]/I_n)_d from the membership oracle's linear algebra alone."""
    if d == 0:
        return 1
    columns, _, base = _slice_relations(n, d, field)
    return len(columns) - base


def rook_monomial_count(n: int, d: int) -> int:
    return comb(n, d) ** 2 * factorial(d) if 0 <= d <= n else 0


def membership_oracle_relations(n: int, d: int, field: Field = QQ):
    """Columns and relation rows used by :func:`ideal_membership` (exposed for tests)."""
    return _slice_relations(n, d, field)


__all__ = [
    "MarchingRewrite",
    "evaluate",
    "evaluate_polynomial",
    "evaluation_determinant",
    "evaluation_matrix",
    "groebner_elements",
    "hilbert_series",
    "ideal_generator_count",
    "ideal_generators",
    "ideal_membership",
    "injection_sum_a",
    "injection_sum_b",
    "is_standard_monomial",
    "marching_rewrite",
    "normal_form",
    "point_ideal_generators",
    "quotient_dimension",
    "rook_monomial_count",
    "rook_monomials",
    "shadow_monomial",
    "standard_monomial_basis",
    "top_component",
]
