import itertools
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shadowring.errors import DomainError, ParseError, ResourceGuardError
from shadowring.guards import resource_limits
from shadowring.local_stats import builtin_statistic
from shadowring.matrix_ring import hilbert_series
from shadowring.rep_theory import (
    ClassFunction,
    alpha,
    character_table,
    check_equivariant_conjecture,
    check_novak_rhoades,
    class_function_from_statistic,
    class_function_to_statistic,
    class_representative,
    class_size,
    column_orthogonality_holds,
    count_standard_tableaux,
    cycle_type,
    decompose_class_function,
    expected_graded_value,
    format_partition,
    graded_character,
    hook_dimension,
    inner_product,
    irreducible,
    kronecker,
    kronecker_coefficient,
    parse_partition,
    partitions,
    recombine,
    schur_weyl_check,
    sign_character,
)
from shadowring.schensted_core import Permutation, lis_histogram, permutations


class TestPartitions:
    def test_counts(self):
        assert [len(partitions(n)) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]
        assert partitions(3) == [(3,), (2, 1), (1, 1, 1)]

    def test_hook(self):
        assert hook_dimension((4, 2, 2)) == 56 == count_standard_tableaux((4, 2, 2))
        assert hook_dimension((5,)) == 1 == hook_dimension((1,) * 5)
        for n in range(1, 7):
            for lam in partitions(n):
                assert hook_dimension(lam) == count_standard_tableaux(lam)

    def test_sum_of_squares(self):
        for n in range(1, 9):
            assert sum(hook_dimension(lam) ** 2 for lam in partitions(n)) == factorial(n)

    def test_class_sizes(self):
        for n in range(1, 8):
            assert sum(class_size(mu) for mu in partitions(n)) == factorial(n)

    def test_cycle_types(self):
        for n in range(1, 6):
            counts = {}
            for w in permutations(n):
                counts[cycle_type(w)] = counts.get(cycle_type(w), 0) + 1
            assert counts == {mu: class_size(mu) for mu in partitions(n)}
            for mu in partitions(n):
                assert cycle_type(class_representative(mu)) == mu
        assert class_representative((3, 1)).word == (2, 3, 1, 4)

    def test_text(self):
        assert parse_partition("4,2,2") == (4, 2, 2)
        assert format_partition((4, 2, 2)) == "4,2,2"
        with pytest.raises(DomainError):
            parse_partition("2,4")
        with pytest.raises(ParseError):
            parse_partition("4,,2")


class TestCharacters:
    def test_trivial_and_sign(self):
        for n in range(1, 7):
            assert irreducible((n,)) == ClassFunction.trivial(n)
            assert irreducible((1,) * n) == sign_character(n)

    def test_s3_table(self):
        t = character_table(3)
        assert t.matrix() == [[1, 1, 1], [-1, 0, 2], [1, -1, 1]]

    def test_orthogonality(self):
        for n in range(1, 11):
            assert column_orthogonality_holds(character_table(n))

    def test_guard(self):
        with resource_limits(max_character_n=5):
            with pytest.raises(ResourceGuardError):
                character_table.__wrapped__(6)

    def test_brute_force_s4(self):
        # chi^{(3,1)} = (fixed points) - 1
        chi = irreducible((3, 1))
        for w in permutations(4):
            fixed = sum(1 for i in range(1, 5) if w(i) == i)
            assert chi(cycle_type(w)) == fixed - 1

    def test_csv(self):
        text = character_table(3).to_csv().splitlines()
        assert text[0] == 'shape,3,"2,1","1,1,1"'
        assert text[2] == '"2,1",-1,0,2'


class TestClassFunctions:
    def test_alpha_identity_values(self):
        for n in range(1, 8):
            assert [alpha(n, k).identity_value() for k in range(1, n + 1)] == list(lis_histogram(n))

    def test_alpha_top_is_trivial(self):
        assert alpha(5, 5) == ClassFunction.trivial(5)

    def test_alpha_sum_is_regular(self):
        n = 5
        total = ClassFunction.zero(n)
        for k in range(1, n + 1):
            total = total + alpha(n, k)
        assert total.identity_value() == factorial(n)
        assert all(v == 0 for mu, v in total.values.items() if mu != (1,) * n)

    def test_alpha_decomposition(self):
        mult = decompose_class_function(alpha(5, 3))
        assert mult == {lam: (hook_dimension(lam) if lam[0] == 3 else 0) for lam in partitions(5)}

    def test_kronecker(self):
        phi = irreducible((2, 1))
        assert kronecker(phi, ClassFunction.trivial(3)) == phi
        assert kronecker(sign_character(4), sign_character(4)) == ClassFunction.trivial(4)
        assert decompose_class_function(kronecker(phi, phi)) == {(3,): 1, (2, 1): 1, (1, 1, 1): 1}
        with pytest.raises(DomainError):
            kronecker(phi, ClassFunction.trivial(4))

    def test_irreducible_decomposes_to_indicator(self):
        for lam in partitions(5):
            mult = decompose_class_function(irreducible(lam))
            assert mult == {mu: int(mu == lam) for mu in partitions(5)}

    @given(st.lists(st.integers(-4, 4), min_size=7, max_size=7))
    def test_round_trip(self, coeffs):
        mult = dict(zip(partitions(5), coeffs))
        assert decompose_class_function(recombine(5, mult)) == mult

    def test_statistic_bridge(self):
        const = class_function_from_statistic(builtin_statistic("constant", 4))
        assert const == ClassFunction.trivial(4)
        with pytest.raises(DomainError):
            class_function_from_statistic(builtin_statistic("inv", 3))
        phi = irreducible((2, 2))
        assert class_function_from_statistic(class_function_to_statistic(phi)) == phi

    def test_inner_product_is_brute_force(self):
        phi, psi = irreducible((2, 1, 1)), irreducible((3, 1))
        brute = Fraction(sum(phi(cycle_type(w)) * psi(cycle_type(w)) for w in permutations(4)), 24)
        assert inner_product(phi, psi) == brute


class TestKroneckerCoefficients:
    def test_units(self):
        for lam in partitions(5):
            for nu in partitions(5):
                assert kronecker_coefficient(lam, (5,), nu) == int(lam == nu)
        assert kronecker_coefficient((1,) * 5, (1,) * 5, (5,)) == 1

    def test_s3_brute_force(self):
        for lam, mu, nu in itertools.product(partitions(3), repeat=3):
            brute = sum(
                irreducible(lam)(cycle_type(w)) * irreducible(mu)(cycle_type(w)) * irreducible(nu)(cycle_type(w))
                for w in permutations(3)
            )
            assert kronecker_coefficient(lam, mu, nu) * 6 == brute

    def test_symmetric_nonnegative(self):
        for n in range(1, 7):
            parts = partitions(n)
            for lam, mu, nu in itertools.product(parts, repeat=3):
                g = kronecker_coefficient(lam, mu, nu)
                assert g >= 0
                assert g == kronecker_coefficient(mu, lam, nu) == kronecker_coefficient(nu, mu, lam)

    def test_size_mismatch(self):
        with pytest.raises(DomainError):
            kronecker_coefficient((2,), (3,), (2,))


class TestGradedCharacter:
    def test_n4_all_pairs(self):
        for k in range(4):
            values = graded_character(4, k)
            assert len(values) == 25
            for (mu, nu), v in values.items():
                assert v == expected_graded_value(4, k, mu, nu)

    def test_identity_values(self):
        for n in range(1, 6):
            e = (1,) * n
            values = [graded_character(n, k, "identity")[(e, e)] for k in range(n)]
            assert tuple(values) == hilbert_series(n)

    def test_degree_zero_trivial(self):
        assert set(graded_character(3, 0).values()) == {1}

    def test_restriction_is_alpha(self):
        n = 4
        e = (1,) * n
        for k in range(n):
            values = graded_character(n, k)
            a = alpha(n, n - k)
            for mu in partitions(n):
                assert values[(mu, e)] == a(mu) == values[(e, mu)]

    def test_guard(self):
        with pytest.raises(ResourceGuardError):
            graded_character(7, 1, "identity")

    def test_bad_degree(self):
        with pytest.raises(DomainError):
            graded_character(3, 3)


class TestConjectures:
    def test_novak_rhoades_small(self):
        r4 = {r["k"]: r for r in check_novak_rhoades(4)}
        assert r4[2]["identity_value"] == "160"
        r3 = check_novak_rhoades(3)
        assert r3[0]["identity_value"] == "15"
        for n in range(2, 9):
            assert all(r["verdict"] == "ok" for r in check_novak_rhoades(n))

    def test_equivariant_n4(self):
        reports = check_equivariant_conjecture(4)
        assert [r["d"] for r in reports] == [1, 2]
        assert all(r["verdict"] == "injection-exists" for r in reports)
        assert reports[0]["source_dimension"] == 13 and reports[0]["target_dimension"] == 81

    def test_equivariant_up_to_8(self):
        for n in range(2, 9):
            assert all(r["verdict"] == "injection-exists" for r in check_equivariant_conjecture(n))

    def test_dimensions_match_hilbert(self):
        n = 6
        h = hilbert_series(n)
        for r in check_equivariant_conjecture(n, include_tables=True):
            d = r["d"]
            assert r["source_dimension"] == h[d - 1] * h[d + 1]
            assert r["target_dimension"] == h[d] ** 2
            assert len(r["multiplicity_tables"]["source"]) == len(partitions(n))

    def test_guard(self):
        with pytest.raises(ResourceGuardError):
            check_equivariant_conjecture(11)

    def test_schur_weyl(self):
        for n in range(1, 7):
            for d in range(1, n + 1):
                lhs, rhs = schur_weyl_check(n, d)
                assert lhs == rhs
                assert lhs.identity_value() == sum(hook_dimension(lam) ** 2 for lam in partitions(n) if len(lam) <= d)

    @pytest.mark.longrun
    def test_up_to_15(self):
        with resource_limits(max_conjecture_n=15, max_character_n=15):
            for n in range(9, 16):
                assert all(r["verdict"] == "injection-exists" for r in check_equivariant_conjecture(n))
                assert all(r["verdict"] == "ok" for r in check_novak_rhoades(n))
