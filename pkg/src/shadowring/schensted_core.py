"""Permutations, rook placements, Viennot shadow lines and the Schensted correspondence.

Coordinates: a cell ``(i, j)`` is drawn at ``x = i``, ``y = j``.  The graph of a
permutation ``w`` is ``{(i, w(i))}``, and the same pair ``(i, j)`` names the
variable ``x[i,j]`` in :mod:`shadowring.ring`.  Nothing else in the package
reinterprets coordinates.
"""

from __future__ import annotations

import bisect
import itertools
import re
from dataclasses import dataclass, field
from math import factorial
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, ParseError
from .guards import check_enumeration

Cell = tuple[int, int]


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``[n]`` in one-line notation ``w(1), ..., w(n)``."""

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(v) for v in self.word)
        object.__setattr__(self, "word", word)
        if not word:
            raise DomainError("a permutation needs n >= 1")
        if sorted(word) != list(range(1, len(word) + 1)):
            raise DomainError(f"{list(word)} is not a permutation of 1..{len(word)}")

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return format_permutation(self)

    def graph(self) -> RookPlacement:
        return RookPlacement(self.n, frozenset((i, v) for i, v in enumerate(self.word, 1)))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, v in enumerate(self.word, 1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def extends(self, placement: RookPlacement) -> bool:
        return all(self.word[i - 1] == j for i, j in placement.cells)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))


def permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order of one-line words (the canonical index)."""
    for word in itertools.permutations(range(1, n + 1)):
        yield Permutation(word)


def permutation_rank(w: Permutation) -> int:
    """Position of ``w`` in the lexicographic enumeration of S_n (Lehmer code)."""
    n = w.n
    remaining = list(range(1, n + 1))
    rank = 0
    for pos, v in enumerate(w.word):
        idx = remaining.index(v)
        rank += idx * factorial(n - 1 - pos)
        remaining.pop(idx)
    return rank


@dataclass(frozen=True)
class RookPlacement:
    """At most one cell in each column ``x = i`` and each row ``y = j`` of the n x n grid."""

    n: int
    cells: frozenset[Cell] = field(default_factory=frozenset)

    def __post_init__(self):
        cells = frozenset((int(i), int(j)) for i, j in self.cells)
        object.__setattr__(self, "cells", cells)
        if self.n < 0:
            raise DomainError("grid size must be nonnegative")
        for i, j in cells:
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise DomainError(f"cell {(i, j)} lies outside the {self.n}x{self.n} grid")
        if len({i for i, _ in cells}) != len(cells) or len({j for _, j in cells}) != len(cells):
            raise DomainError("two cells share a row or column; not a rook placement")

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self) -> Iterator[Cell]:
        return iter(sorted(self.cells))

    def __contains__(self, cell) -> bool:
        return cell in self.cells

    def __str__(self) -> str:
        return format_rook_placement(self)

    @property
    def xs(self) -> set[int]:
        return {i for i, _ in self.cells}

    @property
    def ys(self) -> set[int]:
        return {j for _, j in self.cells}

    def transpose(self) -> RookPlacement:
        return RookPlacement(self.n, frozenset((j, i) for i, j in self.cells))

    def without(self, cells: Iterable[Cell]) -> RookPlacement:
        return RookPlacement(self.n, self.cells - frozenset(cells))


def rook_placements(n: int, size: int | None = None) -> Iterator[RookPlacement]:
    """Every rook placement on the n x n grid (optionally of one size), by size then cells."""
    sizes = range(n + 1) if size is None else [size]
    for k in sizes:
        for xs in itertools.combinations(range(1, n + 1), k):
            for ys in itertools.permutations(range(1, n + 1), k):
                yield RookPlacement(n, frozenset(zip(xs, ys)))


# -- shadow lines ---------------------------------------------------------------


@dataclass(frozen=True)
class ShadowLine:
    points: tuple[Cell, ...]  # cells on the line, west to east (so north to south)
    ray_x: int  # x-coordinate of the infinite vertical ray
    ray_y: int  # y-coordinate of the infinite horizontal ray
    path: tuple[Cell, ...]  # staircase vertices; n+1 stands in for infinity

    @property
    def corners(self) -> tuple[Cell, ...]:
        return tuple(
            (self.points[k + 1][0], self.points[k][1]) for k in range(len(self.points) - 1)
        )


@dataclass(frozen=True)
class ShadowDiagram:
    n: int
    lines: tuple[ShadowLine, ...]

    @property
    def corners(self) -> frozenset[Cell]:
        return frozenset(c for line in self.lines for c in line.corners)

    @property
    def ray_xs(self) -> tuple[int, ...]:
        return tuple(line.ray_x for line in self.lines)

    @property
    def ray_ys(self) -> tuple[int, ...]:
        return tuple(line.ray_y for line in self.lines)


def shadow_lines(placement: RookPlacement) -> ShadowDiagram:
    """Shadow lines of a rook placement, ordered southwest to northeast.

    A cell lies on line k exactly when the longest southwest chain ending at it
    has length k, so one patience-sorting sweep in x finds every line at once.
    """
    lines: list[list[Cell]] = []
    lasts: list[int] = []  # current southernmost y of each line; increasing in k
    for i, j in sorted(placement.cells):
        k = bisect.bisect_right(lasts, j)
        if k == len(lines):
            lines.append([(i, j)])
            lasts.append(j)
        else:
            lines[k].append((i, j))
            lasts[k] = j
    top = placement.n + 1
    out = []
    for pts in lines:
        path = [(pts[0][0], top)]
        for k, (i, j) in enumerate(pts):
            if k:
                path.append((i, pts[k - 1][1]))
            path.append((i, j))
        path.append((top, pts[-1][1]))
        out.append(ShadowLine(tuple(pts), pts[0][0], pts[-1][1], tuple(path)))
    return ShadowDiagram(placement.n, tuple(out))


def shadow_set(placement: RookPlacement) -> RookPlacement:
    """Northeast corners of the shadow lines of ``placement``."""
    return RookPlacement(placement.n, shadow_lines(placement).corners)


def permutation_shadow_set(w: Permutation) -> RookPlacement:
    return shadow_set(w.graph())


def iterated_shadow_sets(w: Permutation) -> list[RookPlacement]:
    """``[S(w), S(S(w)), ..., empty]``."""
    out = [permutation_shadow_set(w)]
    while out[-1].cells:
        out.append(shadow_set(out[-1]))
    return out


# -- tableaux -------------------------------------------------------------------


@dataclass(frozen=True)
class Tableau:
    """Partial standard tableau stored as rows (English notation)."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows if len(r))
        object.__setattr__(self, "rows", rows)
        for r, row in enumerate(rows):
            if any(a >= b for a, b in zip(row, row[1:])):
                raise DomainError(f"row {r + 1} of {rows} is not strictly increasing")
            if r and len(row) > len(rows[r - 1]):
                raise DomainError(f"row lengths of {rows} do not form a partition")
            if r and any(rows[r - 1][c] >= row[c] for c in range(len(row))):
                raise DomainError(f"a column of {rows} is not strictly increasing")
        entries = [v for row in rows for v in row]
        if len(set(entries)) != len(entries) or any(v < 1 for v in entries):
            raise DomainError("tableau entries must be distinct positive integers")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    @property
    def is_standard(self) -> bool:
        return sorted(v for row in self.rows for v in row) == list(range(1, self.size + 1))

    def __str__(self) -> str:
        return "/".join(",".join(map(str, r)) for r in self.rows)


@dataclass(frozen=True)
class TableauPair:
    P: Tableau
    Q: Tableau

    def __post_init__(self):
        if self.P.shape != self.Q.shape:
            raise DomainError(f"P has shape {self.P.shape} but Q has shape {self.Q.shape}")

    @property
    def shape(self) -> tuple[int, ...]:
        return self.P.shape


def viennot_schensted(w: Permutation) -> TableauPair:
    """Schensted pair read off the iterated shadow diagrams of the graph of ``w``."""
    p_rows, q_rows = [], []
    placement = w.graph()
    while placement.cells:
        diagram = shadow_lines(placement)
        p_rows.append(tuple(sorted(diagram.ray_ys)))
        q_rows.append(tuple(sorted(diagram.ray_xs)))
        placement = RookPlacement(placement.n, diagram.corners)
    return TableauPair(Tableau(tuple(p_rows)), Tableau(tuple(q_rows)))


def insertion_schensted(w: Permutation) -> TableauPair:
    """Classical row insertion with a recording tableau."""
    p: list[list[int]] = []
    q: list[list[int]] = []
    for step, value in enumerate(w.word, 1):
        r = 0
        while True:
            if r == len(p):
                p.append([value])
                q.append([step])
                break
            row = p[r]
            k = bisect.bisect_right(row, value)
            if k == len(row):
                row.append(value)
                q[r].append(step)
                break
            row[k], value = value, row[k]
            r += 1
    return TableauPair(Tableau(tuple(map(tuple, p))), Tableau(tuple(map(tuple, q))))


def inverse_schensted(pair: TableauPair) -> Permutation:
    """The unique permutation whose insertion pair is ``pair``."""
    if not (pair.P.is_standard and pair.Q.is_standard):
        raise DomainError("inverse_schensted needs standard tableaux with entries 1..n")
    p = [list(r) for r in pair.P.rows]
    q = [list(r) for r in pair.Q.rows]
    n = pair.P.size
    word = [0] * n
    for step in range(n, 0, -1):
        r = next(k for k, row in enumerate(q) if row and row[-1] == step)
        q[r].pop()
        value = p[r].pop()
        for rr in range(r - 1, -1, -1):
            row = p[rr]
            k = bisect.bisect_left(row, value) - 1
            row[k], value = value, row[k]
        word[step - 1] = value
        if not q[r]:
            q.pop(r)
            p.pop(r)
    return Permutation(tuple(word))


# -- longest increasing subsequences -------------------------------------------


def lis_length(word: Sequence[int]) -> int:
    """Longest strictly increasing subsequence by patience sorting."""
    tails: list[int] = []
    for v in word:
        k = bisect.bisect_left(tails, v)
        if k == len(tails):
            tails.append(v)
        else:
            tails[k] = v
    return len(tails)


def lis(w: Permutation) -> int:
    """First-row length of the Schensted shape, cross-checked against patience sorting."""
    shape = viennot_schensted(w).shape
    direct = lis_length(w.word)
    if shape[0] != direct:
        raise AssertionError(f"lis mismatch for {w}: shape gives {shape[0]}, direct gives {direct}")
    return direct


def lis_histogram(n: int) -> tuple[int, ...]:
    """``(a_{n,1}, ..., a_{n,n})``: permutations of [n] counted by lis, by brute force."""
    if n < 1:
        raise DomainError("n must be positive")
    check_enumeration(n, "lis histogram")
    counts = [0] * n
    for word in itertools.permutations(range(1, n + 1)):
        counts[lis_length(word) - 1] += 1
    return tuple(counts)


# -- ballot criterion ------------------------------------------------------------


def ballot_sequences(placement: RookPlacement) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The x- and y-sequences over {+1, 0, -1} attached to a rook placement."""
    diagram = shadow_lines(placement)
    ray_xs, ray_ys = set(diagram.ray_xs), set(diagram.ray_ys)
    xs, ys = placement.xs, placement.ys

    def entry(c: int, rays: set[int], used: set[int]) -> int:
        if c in rays:
            return 1
        return 0 if c in used else -1

    n = placement.n
    x_seq = tuple(entry(c, ray_xs, xs) for c in range(1, n + 1))
    y_seq = tuple(entry(c, ray_ys, ys) for c in range(1, n + 1))
    return x_seq, y_seq


def first_positive_prefix(seq: Sequence[int]) -> int | None:
    """1-based length of the shortest prefix with positive sum, if any."""
    total = 0
    for pos, v in enumerate(seq, 1):
        total += v
        if total > 0:
            return pos
    return None


def ballot_check(placement: RookPlacement) -> tuple[bool, tuple[int, ...], tuple[int, ...]]:
    """Is ``placement`` the shadow set of a permutation?  Returns the verdict and both sequences."""
    x_seq, y_seq = ballot_sequences(placement)
    ok = first_positive_prefix(x_seq) is None and first_positive_prefix(y_seq) is None
    return ok, x_seq, y_seq


def is_shadow_set(placement: RookPlacement) -> bool:
    return ballot_check(placement)[0]


def shadow_set_to_permutation(placement: RookPlacement) -> Permutation:
    """The permutation whose shadow set is ``placement``."""
    if not is_shadow_set(placement):
        raise DomainError(f"{format_rook_placement(placement)} fails the ballot criterion")
    n = placement.n
    p_rows = [tuple(sorted(set(range(1, n + 1)) - placement.ys))]
    q_rows = [tuple(sorted(set(range(1, n + 1)) - placement.xs))]
    current = placement
    while current.cells:
        diagram = shadow_lines(current)
        p_rows.append(tuple(sorted(diagram.ray_ys)))
        q_rows.append(tuple(sorted(diagram.ray_xs)))
        current = RookPlacement(n, diagram.corners)
    return inverse_schensted(TableauPair(Tableau(tuple(p_rows)), Tableau(tuple(q_rows))))


# -- text forms -----------------------------------------------------------------


def format_permutation(w: Permutation) -> str:
    return ",".join(map(str, w.word))


def parse_permutation(text: str) -> Permutation:
    """Parse ``"4,1,8,5,3,6,2,7"``."""
    values = []
    pos = 0
    for token in text.split(","):
        if not token.strip().isdigit():
            raise ParseError(f"expected a positive integer, got {token!r}", text, pos)
        values.append(int(token))
        pos += len(token) + 1
    try:
        return Permutation(tuple(values))
    except DomainError as exc:
        raise ParseError(str(exc), text, 0) from None


def format_rook_placement(placement: RookPlacement) -> str:
    cells = " ".join(f"({i},{j})" for i, j in sorted(placement.cells))
    return f"{placement.n};" + (f" {cells}" if cells else "")


_CELL = re.compile(r"\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def parse_rook_placement(text: str) -> RookPlacement:
    """Parse ``"8; (2,8) (3,7) (5,3)"``."""
    head, sep, rest = text.partition(";")
    if not sep:
        raise ParseError("expected 'n;' before the cell list", text, len(text))
    if not head.strip().isdigit():
        raise ParseError(f"grid size {head.strip()!r} is not a nonnegative integer", text, 0)
    n = int(head)
    cells = []
    pos = len(head) + 1
    while pos < len(text):
        if not text[pos:].strip():
            break
        m = _CELL.match(text, pos)
        if not m:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError("expected a cell '(i,j)'", text, bad)
        cells.append((int(m.group(1)), int(m.group(2))))
        pos = m.end()
    if len(set(cells)) != len(cells):
        raise ParseError("repeated cell", text, len(head) + 1)
    try:
        return RookPlacement(n, frozenset(cells))
    except DomainError as exc:
        raise ParseError(str(exc), text, len(head) + 1) from None
