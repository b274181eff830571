"""Self-contained verification routines shared by the CLI and the test suites.

Each routine returns a :class:`CheckReport`; none of them raise on a failed
check, so callers decide whether a failure is a bug or a discovery.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field
from math import factorial

from .field import QQ, Field
from .guards import check_enumeration
from .matrix_ring import (
    hilbert_series,
    ideal_generators,
    ideal_membership,
    injection_sum_a,
    injection_sum_b,
    is_standard_monomial,
    normal_form,
    rook_monomials,
    standard_monomial_basis,
)
from .polynomial import GridMonomial, Polynomial
from .rep_theory import (
    check_equivariant_conjecture,
    check_novak_rhoades,
    expected_graded_value,
    graded_character,
)
from .schensted_core import (
    inverse_schensted,
    insertion_schensted,
    lis_histogram,
    permutations,
    viennot_schensted,
)


@dataclass
class CheckReport:
    name: str
    n: int
    passed: bool
    checked: int = 0
    failures: list = dc_field(default_factory=list)
    details: dict = dc_field(default_factory=dict)
    counterexample: bool = False  # a conjecture check found a violation

    def to_json(self) -> dict:
        out = {"check": self.name, "n": self.n, "passed": self.passed, "checked": self.checked}
        if self.failures:
            out["failures"] = self.failures[:20]
        if self.details:
            out["details"] = self.details
        return out


def verify_rsk(n: int) -> CheckReport:
    """Shadow-line and insertion Schensted agree, and inverse insertion recovers w."""
    check_enumeration(n, "RSK verification")
    report = CheckReport("rsk", n, True)
    for w in permutations(n):
        pair = viennot_schensted(w)
        report.checked += 1
        if pair != insertion_schensted(w) or inverse_schensted(pair) != w:
            report.passed = False
            report.failures.append(str(w))
    return report


def verify_hilbert(n: int) -> CheckReport:
    hs = hilbert_series(n)
    hist = lis_histogram(n)
    ok = hs == tuple(reversed(hist)) and sum(hs) == factorial(n)
    return CheckReport("hilbert", n, ok, 1, [] if ok else [{"hilbert": hs, "lis": hist}], {"hilbert_series": list(hs)})


def verify_basis(n: int, field: Field = QQ) -> CheckReport:
    """Generators reduce to zero and the irreducible rook monomials are exactly the shadow monomials."""
    report = CheckReport("basis", n, True, details={"field": field.name})
    for g in ideal_generators(n, field):
        report.checked += 1
        if normal_form(g).terms:
            report.passed = False
            report.failures.append({"generator_not_reduced": str(g)})
    shadows = {m for _, m in standard_monomial_basis(n)}
    irreducible = set()
    for d in range(n + 1):
        for m in rook_monomials(n, d):
            report.checked += 1
            nf = normal_form(Polynomial.monomial(m, field=field))
            if is_standard_monomial(m):
                irreducible.add(m)
                if nf != Polynomial.monomial(m, field=field):
                    report.passed = False
                    report.failures.append({"standard_monomial_moved": str(m.cells)})
            elif any(not is_standard_monomial(t) for t in nf.terms):
                report.passed = False
                report.failures.append({"nonstandard_output": str(m.cells)})
    if irreducible != shadows or len(shadows) != factorial(n):
        report.passed = False
        report.failures.append({"irreducible_count": len(irreducible), "shadow_count": len(shadows)})
    report.details["basis_size"] = len(shadows)
    return report


def verify_injection_relations(n: int, field: Field = QQ) -> CheckReport:
    """a_{S,T} and b_{S,T} reduce to zero whenever |S| + |T| > n."""
    report = CheckReport("injection-relations", n, True)
    subsets = [frozenset(c) for r in range(n + 1) for c in itertools.combinations(range(1, n + 1), r)]
    for S in subsets:
        for T in subsets:
            if len(S) + len(T) <= n:
                continue
            for poly in (injection_sum_a(S, T, n, field), injection_sum_b(S, T, n, field)):
                report.checked += 1
                if normal_form(poly).terms:
                    report.passed = False
                    report.failures.append({"S": sorted(S), "T": sorted(T)})
    return report


def random_polynomial(n: int, rng: random.Random, field: Field = QQ, terms: int = 6, max_degree: int = 4) -> Polynomial:
    """Random integer combination of random monomials (not necessarily squarefree or rook)."""
    f = Polynomial.zero(n, field)
    cells = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    for _ in range(terms):
        degree = rng.randint(0, max_degree)
        exps: dict = {}
        for cell in (rng.choice(cells) for _ in range(degree)):
            exps[cell] = exps.get(cell, 0) + 1
        f.add_term(GridMonomial(n, exps), rng.randint(-9, 9))
    return f


def verify_membership(n: int, samples: int = 200, seed: int = 0, field: Field = QQ) -> CheckReport:
    """f - normal_form(f) lies in I_n according to the independent slice oracle."""
    rng = random.Random(seed)
    report = CheckReport("membership", n, True, details={"seed": seed, "samples": samples})
    for _ in range(samples):
        f = random_polynomial(n, rng, field, max_degree=min(n, 4))
        report.checked += 1
        if not ideal_membership(f - normal_form(f)):
            report.passed = False
            report.failures.append(str(f))
    return report


def verify_graded(n: int, pairs: str = "all") -> CheckReport:
    """Trace-computed graded characters against sums of chi x chi."""
    report = CheckReport("graded", n, True, details={"pairs": pairs, "identity_values": []})
    for k in range(n):
        values = graded_character(n, k, pairs)
        e = (1,) * n
        report.details["identity_values"].append(int(values[(e, e)]))
        for (mu, nu), v in values.items():
            report.checked += 1
            if v != expected_graded_value(n, k, mu, nu):
                report.passed = False
                report.failures.append({"k": k, "mu": list(mu), "nu": list(nu), "trace": str(v)})
    return report


def verify_novak_rhoades(n: int) -> CheckReport:
    reports = check_novak_rhoades(n)
    bad = [r for r in reports if r["verdict"] != "ok"]
    return CheckReport(
        "novak-rhoades", n, not bad, len(reports), [{"k": r["k"], "negative": r["negative_multiplicities"]} for r in bad],
        {"per_k": [{"k": r["k"], "verdict": r["verdict"]} for r in reports]}, counterexample=bool(bad),
    )


def verify_equivariant(n: int) -> CheckReport:
    reports = check_equivariant_conjecture(n)
    bad = [r for r in reports if r["verdict"] != "injection-exists"]
    return CheckReport(
        "equivariant", n, not bad, len(reports), [{"d": r["d"], "violating_pair": r["violating_pair"]} for r in bad],
        {"per_d": [{"d": r["d"], "verdict": r["verdict"]} for r in reports]}, counterexample=bool(bad),
    )


VERIFIERS = {
    "rsk": verify_rsk,
    "basis": verify_basis,
    "hilbert": verify_hilbert,
    "graded": verify_graded,
    "membership": verify_membership,
    "novak-rhoades": verify_novak_rhoades,
    "equivariant": verify_equivariant,
}
