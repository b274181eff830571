"""Exact character theory of S_n and checks of the graded module structure.

Partitions are weakly decreasing tuples of positive integers.  Class functions
live on cycle types.  Characters come from the Murnaghan-Nakayama rule on
beta-sets; Kronecker coefficients come from exact inner products, batched
through FLINT integer matrices so the conjecture checkers stay fast.
"""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator

import flint

from .errors import DomainError, ParseError
from .guards import check_limit
from .local_stats import PermutationStatistic
from .matrix_ring import normal_form, standard_monomial_basis
from .polynomial import Polynomial
from .schensted_core import Permutation, permutations

Partition = tuple[int, ...]


# -- partitions ---------------------------------------------------------------------


def partitions(n: int) -> list[Partition]:
    """Partitions of n in reverse lexicographic order: (n) first, (1^n) last."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    return list(_partition_tuple(n))


@lru_cache(maxsize=None)
def _partition_tuple(n: int) -> tuple[Partition, ...]:
    return tuple(_partitions(n, n))


def _partitions(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def validate_partition(parts: Iterable[int], n: int | None = None) -> Partition:
    lam = tuple(int(p) for p in parts)
    if any(p <= 0 for p in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise DomainError(f"{lam} is not a partition (parts must be positive and weakly decreasing)")
    if n is not None and sum(lam) != n:
        raise DomainError(f"{lam} is not a partition of {n}")
    return lam


def conjugate(lam: Partition) -> Partition:
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0])) if lam else ()


def format_partition(lam: Partition) -> str:
    return ",".join(map(str, lam))


def parse_partition(text: str) -> Partition:
    pieces = text.split(",")
    pos = 0
    parts = []
    for piece in pieces:
        stripped = piece.strip()
        if not stripped.isdigit():
            raise ParseError("expected a positive integer part", text, pos + len(piece) - len(piece.lstrip()))
        parts.append(int(stripped))
        pos += len(piece) + 1
    return validate_partition(parts)


def hook_dimension(lam: Partition) -> int:
    """f^lambda by the hook length formula."""
    lam = validate_partition(lam)
    conj = conjugate(lam)
    hooks = prod(lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i]))
    return factorial(sum(lam)) // hooks


def count_standard_tableaux(lam: Partition) -> int:
    """f^lambda by removing corners recursively (independent oracle)."""
    return _count_syt(validate_partition(lam))


@lru_cache(maxsize=None)
def _count_syt(lam: Partition) -> int:
    if sum(lam) <= 1:
        return 1
    total = 0
    for i, p in enumerate(lam):
        if i + 1 == len(lam) or lam[i + 1] < p:
            smaller = lam[:i] + (p - 1,) + lam[i + 1 :]
            total += _count_syt(tuple(q for q in smaller if q))
    return total


def class_size(mu: Partition) -> int:
    """Number of permutations with cycle type mu."""
    mu = validate_partition(mu)
    z = prod(k**m * factorial(m) for k, m in Counter(mu).items())
    return factorial(sum(mu)) // z


def cycle_type(w: Permutation) -> Partition:
    seen = [False] * (w.n + 1)
    lengths = []
    for start in range(1, w.n + 1):
        if not seen[start]:
            length, i = 0, start
            while not seen[i]:
                seen[i] = True
                i = w(i)
                length += 1
            lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def class_representative(mu: Partition) -> Permutation:
    """Cycles in decreasing length, each on consecutive integers: (1 2 .. m1)(m1+1 ..)..."""
    mu = validate_partition(mu)
    word = []
    start = 1
    for m in mu:
        word.extend(range(start + 1, start + m))
        word.append(start)
        start += m
    return Permutation(tuple(word))


def sign(mu: Partition) -> int:
    return (-1) ** (sum(mu) - len(mu))


# -- characters -----------------------------------------------------------------------


def _beta_set(lam: Partition) -> tuple[int, ...]:
    length = len(lam)
    return tuple(lam[i] + length - 1 - i for i in range(length))


@lru_cache(maxsize=None)
def _mn(beta: frozenset, mu: Partition) -> int:
    """Murnaghan-Nakayama on a beta-set: strip a rim hook of length mu[0] per step."""
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    total = 0
    for b in beta:
        c = b - r
        if c < 0 or c in beta:
            continue
        height = sum(1 for x in beta if c < x < b)
        total += (-1) ** height * _mn((beta - {b}) | {c}, rest)
    return total


def character_value(lam: Partition, mu: Partition) -> int:
    lam, mu = validate_partition(lam), validate_partition(mu)
    if sum(lam) != sum(mu):
        raise DomainError(f"{lam} and {mu} have different sizes")
    return _mn(frozenset(_beta_set(lam)), mu)


@lru_cache(maxsize=None)
def _partition_set(n: int) -> frozenset:
    return frozenset(_partition_tuple(n))


@dataclass(frozen=True)
class ClassFunction:
    n: int
    values: dict  # cycle type -> Fraction, on all of partitions(n)

    def __post_init__(self):
        if set(self.values) != _partition_set(self.n):
            raise DomainError(f"a class function on S_{self.n} needs a value on each of the {len(partitions(self.n))} cycle types")
        object.__setattr__(self, "values", {mu: Fraction(self.values[mu]) for mu in _partition_tuple(self.n)})

    def __call__(self, mu: Partition):
        return self.values[tuple(mu)]

    def _check(self, other: ClassFunction) -> None:
        if other.n != self.n:
            raise DomainError(f"class functions on S_{self.n} and S_{other.n} cannot be combined")

    def __add__(self, other: ClassFunction) -> ClassFunction:
        self._check(other)
        return ClassFunction(self.n, {mu: v + other.values[mu] for mu, v in self.values.items()})

    def __sub__(self, other: ClassFunction) -> ClassFunction:
        self._check(other)
        return ClassFunction(self.n, {mu: v - other.values[mu] for mu, v in self.values.items()})

    def scale(self, c) -> ClassFunction:
        return ClassFunction(self.n, {mu: Fraction(c) * v for mu, v in self.values.items()})

    def identity_value(self):
        return self.values[(1,) * self.n]

    @classmethod
    def zero(cls, n: int) -> ClassFunction:
        return cls(n, {mu: 0 for mu in partitions(n)})

    @classmethod
    def trivial(cls, n: int) -> ClassFunction:
        return cls(n, {mu: 1 for mu in partitions(n)})


def inner_product(phi: ClassFunction, psi: ClassFunction) -> Fraction:
    """(1/n!) sum over S_n of phi(w) psi(w); characters are real so no conjugation."""
    phi._check(psi)
    total = sum(class_size(mu) * phi.values[mu] * psi.values[mu] for mu in phi.values)
    return Fraction(total, factorial(phi.n))


def kronecker(phi: ClassFunction, psi: ClassFunction) -> ClassFunction:
    """Pointwise product."""
    phi._check(psi)
    return ClassFunction(phi.n, {mu: v * psi.values[mu] for mu, v in phi.values.items()})


@dataclass(frozen=True)
class CharacterTable:
    n: int
    shapes: tuple[Partition, ...]
    classes: tuple[Partition, ...]
    rows: dict = dc_field(repr=False)  # shape -> ClassFunction
    class_sizes: dict = dc_field(repr=False)

    def __getitem__(self, lam: Partition) -> ClassFunction:
        return self.rows[tuple(lam)]

    def matrix(self) -> list[list[int]]:
        return [[int(self.rows[lam].values[mu]) for mu in self.classes] for lam in self.shapes]

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["shape"] + [format_partition(mu) for mu in self.classes])
        for lam, row in zip(self.shapes, self.matrix()):
            writer.writerow([format_partition(lam)] + row)
        return out.getvalue()


@lru_cache(maxsize=32)
def character_table(n: int) -> CharacterTable:
    """Full table; orthogonality and the dimension column are verified before returning."""
    if n < 1:
        raise DomainError("n must be at least 1")
    check_limit(n, "max_character_n", f"character table of S_{n}")
    parts = tuple(partitions(n))
    rows = {lam: ClassFunction(n, {mu: character_value(lam, mu) for mu in parts}) for lam in parts}
    sizes = {mu: class_size(mu) for mu in parts}
    table = CharacterTable(n, parts, parts, rows, sizes)
    _verify_table(table)
    return table


def _verify_table(table: CharacterTable) -> None:
    n, parts = table.n, table.shapes
    x = flint.fmpz_mat(table.matrix())
    w = flint.fmpz_mat(len(parts), len(parts), [table.class_sizes[mu] if i == j else 0 for i, mu in enumerate(parts) for j in range(len(parts))])
    gram = x * w * x.transpose()
    for i in range(len(parts)):
        for j in range(len(parts)):
            expected = factorial(n) if i == j else 0
            if gram[i, j] != expected:
                raise AssertionError(f"row orthogonality fails at {parts[i]}, {parts[j]}")
    for lam in parts:
        if table.rows[lam].identity_value() != hook_dimension(lam):
            raise AssertionError(f"identity column disagrees with the hook formula at {lam}")


def column_orthogonality_holds(table: CharacterTable) -> bool:
    x = flint.fmpz_mat(table.matrix())
    col = x.transpose() * x
    k = len(table.classes)
    return all(
        col[i, j] == (factorial(table.n) // table.class_sizes[table.classes[i]] if i == j else 0)
        for i in range(k)
        for j in range(k)
    )


def irreducible(lam: Partition) -> ClassFunction:
    lam = validate_partition(lam)
    return character_table(sum(lam))[lam]


def decompose_class_function(phi: ClassFunction) -> dict[Partition, Fraction]:
    """Multiplicity of each irreducible character, exactly."""
    table = character_table(phi.n)
    return {lam: inner_product(phi, table[lam]) for lam in table.shapes}


def recombine(n: int, multiplicities: dict[Partition, object]) -> ClassFunction:
    table = character_table(n)
    out = ClassFunction.zero(n)
    for lam, c in multiplicities.items():
        if c:
            out = out + table[lam].scale(c)
    return out


def alpha(n: int, k: int) -> ClassFunction:
    """Sum of f^lambda chi^lambda over shapes with first row k."""
    if not 1 <= k <= n:
        raise DomainError(f"alpha(n, k) needs 1 <= k <= n (got n={n}, k={k})")
    table = character_table(n)
    out = ClassFunction.zero(n)
    for lam in table.shapes:
        if lam[0] == k:
            out = out + table[lam].scale(hook_dimension(lam))
    return out


def sign_character(n: int) -> ClassFunction:
    return ClassFunction(n, {mu: sign(mu) for mu in partitions(n)})


def class_function_from_statistic(f: PermutationStatistic) -> ClassFunction:
    """Convert a conjugation-invariant statistic; raises if it is not constant on classes."""
    if f.field.characteristic != 0:
        raise DomainError("class functions are rational-valued only")
    values: dict[Partition, Fraction] = {}
    for w, v in zip(permutations(f.n), f.values):
        mu = cycle_type(w)
        if mu in values and values[mu] != v:
            raise DomainError(f"statistic is not a class function: two values on cycle type {format_partition(mu)}")
        values[mu] = v
    return ClassFunction(f.n, values)


def class_function_to_statistic(phi: ClassFunction) -> PermutationStatistic:
    return PermutationStatistic.from_function(phi.n, lambda w: phi.values[cycle_type(w)])


# -- Kronecker coefficients ---------------------------------------------------------


@lru_cache(maxsize=16)
def kronecker_tensor(n: int) -> dict[Partition, flint.fmpz_mat]:
    """For each lambda, the matrix g(lambda, mu, nu) indexed by (mu, nu) in partitions(n) order."""
    table = character_table(n)
    parts = table.shapes
    k = len(parts)
    x = flint.fmpz_mat(table.matrix())
    xt = x.transpose()
    nf = factorial(n)
    out = {}
    for a, lam in enumerate(parts):
        d = flint.fmpz_mat(k, k, [table.class_sizes[parts[i]] * x[a, i] if i == j else 0 for i in range(k) for j in range(k)])
        g = x * d * xt
        entries = []
        for i in range(k):
            for j in range(k):
                q, r = divmod(int(g[i, j]), nf)
                if r:
                    raise AssertionError(f"non-integral Kronecker coefficient at {lam}")
                entries.append(q)
        out[lam] = flint.fmpz_mat(k, k, entries)
    return out


def kronecker_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    lam, mu, nu = (validate_partition(p) for p in (lam, mu, nu))
    n = sum(lam)
    if sum(mu) != n or sum(nu) != n:
        raise DomainError("Kronecker coefficients need three partitions of the same n")
    index = {p: i for i, p in enumerate(partitions(n))}
    return int(kronecker_tensor(n)[lam][index[mu], index[nu]])


# -- graded module structure -----------------------------------------------------------


@lru_cache(maxsize=16)
def _degree_slice(n: int, k: int) -> tuple:
    return tuple(m for _, m in standard_monomial_basis(n) if m.degree == k)


def graded_trace(n: int, k: int, u: Permutation, v: Permutation) -> Fraction:
    """Trace of (u, v) on the degree-k slice, via normal forms of the permuted basis."""
    trace = Fraction(0)
    for m in _degree_slice(n, k):
        image = normal_form(Polynomial.monomial(m).act(u, v))
        trace += image.coefficient(m)
    return trace


def expected_graded_value(n: int, k: int, mu: Partition, nu: Partition) -> int:
    """Sum over shapes with first row n-k of chi(mu) chi(nu)."""
    table = character_table(n)
    return sum(int(table[lam](mu) * table[lam](nu)) for lam in table.shapes if lam[0] == n - k)


def graded_character(n: int, k: int, pairs: str = "all") -> dict[tuple[Partition, Partition], Fraction]:
    """Trace-computed character on pairs of cycle types (``pairs`` = "all" or "identity")."""
    if not 0 <= k <= n - 1:
        raise DomainError(f"degree must satisfy 0 <= k <= n-1 (got {k})")
    check_limit(n, "max_trace_n", f"graded character trace of S_{n} x S_{n}")
    if pairs == "all":
        classes = partitions(n)
        todo = [(mu, nu) for mu in classes for nu in classes]
    elif pairs == "identity":
        e = (1,) * n
        todo = [(e, e)]
    else:
        raise DomainError("pairs must be 'all' or 'identity'")
    return {(mu, nu): graded_trace(n, k, class_representative(mu), class_representative(nu)) for mu, nu in todo}


# -- conjecture checks -------------------------------------------------------------


def check_novak_rhoades(n: int) -> list[dict]:
    """Decompose alpha_k^2 - alpha_{k-1} alpha_{k+1} for 1 < k < n; report negative multiplicities."""
    check_limit(n, "max_conjecture_n", f"log-concavity character check for n={n}")
    reports = []
    for k in range(2, n):
        diff = kronecker(alpha(n, k), alpha(n, k)) - kronecker(alpha(n, k - 1), alpha(n, k + 1))
        mult = decompose_class_function(diff)
        negative = {format_partition(lam): str(c) for lam, c in mult.items() if c < 0}
        reports.append(
            {
                "n": n,
                "k": k,
                "verdict": "ok" if not negative else "counterexample",
                "identity_value": str(diff.identity_value()),
                "negative_multiplicities": negative,
                "multiplicities": {format_partition(lam): str(c) for lam, c in mult.items()},
            }
        )
    return reports


def _pair_multiplicities(n: int, a: int, b: int) -> flint.fmpz_mat:
    """Multiplicity of V^nu (x) V^rho in (deg with first row a) (x) (deg with first row b), diagonal action."""
    parts = partitions(n)
    tensor = kronecker_tensor(n)
    index = {p: i for i, p in enumerate(parts)}
    k = len(parts)
    rows = []
    for lam in parts:
        if lam[0] != a:
            continue
        g = tensor[lam]
        for mu in parts:
            if mu[0] == b:
                rows.append([g[index[mu], j] for j in range(k)])
    if not rows:
        return flint.fmpz_mat(k, k)
    m = flint.fmpz_mat(rows)
    return m.transpose() * m


def check_equivariant_conjecture(n: int, include_tables: bool = False) -> list[dict]:
    """For 0 < d < n-1, compare deg(d-1) x deg(d+1) against deg(d) x deg(d) irreducible by irreducible."""
    check_limit(n, "max_conjecture_n", f"equivariant injection check for n={n}")
    parts = partitions(n)
    k = len(parts)
    reports = []
    for d in range(1, n - 1):
        source = _pair_multiplicities(n, n - d + 1, n - d - 1)
        target = _pair_multiplicities(n, n - d, n - d)
        violation = None
        for i in range(k):
            for j in range(k):
                if source[i, j] > target[i, j]:
                    violation = {
                        "nu": format_partition(parts[i]),
                        "rho": format_partition(parts[j]),
                        "source": int(source[i, j]),
                        "target": int(target[i, j]),
                    }
                    break
            if violation:
                break
        report = {"n": n, "d": d, "verdict": "injection-exists" if violation is None else "counterexample"}
        if violation is not None:
            report["violating_pair"] = violation
        report["source_dimension"] = _dimension(source, parts)
        report["target_dimension"] = _dimension(target, parts)
        if include_tables:
            report["multiplicity_tables"] = {
                "source": [[int(source[i, j]) for j in range(k)] for i in range(k)],
                "target": [[int(target[i, j]) for j in range(k)] for i in range(k)],
            }
        reports.append(report)
    return reports


def _dimension(mult: flint.fmpz_mat, parts: list[Partition]) -> int:
    dims = [hook_dimension(p) for p in parts]
    return sum(int(mult[i, j]) * dims[i] * dims[j] for i in range(len(parts)) for j in range(len(parts)))


def schur_weyl_check(n: int, d: int) -> tuple[ClassFunction, ClassFunction]:
    """sign * (alpha_{n,1} + ... + alpha_{n,d}) and the sum of f^lambda chi^lambda over shapes with at most d rows.

    The two agree; evaluated at the identity this is the dimension count for
    the commutant of GL(V) on V^{(x)n} with dim V = d.
    """
    lhs = ClassFunction.zero(n)
    for k in range(1, min(d, n) + 1):
        lhs = lhs + alpha(n, k)
    lhs = kronecker(sign_character(n), lhs)
    table = character_table(n)
    rhs = ClassFunction.zero(n)
    for lam in table.shapes:
        if len(lam) <= d:
            rhs = rhs + table[lam].scale(hook_dimension(lam))
    return lhs, rhs
