from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from shadowring.errors import DomainError, ParseError
from shadowring.field import GF, QQ, ModP, field_from_name, format_rational
from shadowring.linalg import (
    bareiss_determinant,
    fraction_rank,
    in_row_span,
    integer_determinant,
    rank,
    solve,
)

small_ints = st.integers(-5, 5)


def matrices(rows=4, cols=4):
    return st.lists(st.lists(small_ints, min_size=cols, max_size=cols), min_size=1, max_size=rows)


class TestFields:
    def test_modp_arithmetic(self):
        F = GF(7)
        a, b = F(3), F(5)
        assert a + b == 1
        assert a * b == 1
        assert a / b == F(3) * F(3)
        assert -a == 4
        assert F(Fraction(1, 2)) * 2 == 1
        assert 2 - a == F(6)

    def test_mixing_primes_fails(self):
        with pytest.raises(DomainError):
            GF(3)(1) + GF(5)(1)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            GF(5)(1) / GF(5)(0)

    def test_non_prime(self):
        with pytest.raises(DomainError):
            GF(4)

    def test_floats_rejected(self):
        with pytest.raises(DomainError):
            QQ(0.5)
        with pytest.raises(DomainError):
            GF(3)(0.5)

    def test_denominator_divisible_by_p(self):
        with pytest.raises(DomainError):
            GF(3)(Fraction(1, 3))

    def test_parse(self):
        assert QQ.parse("-6/4") == Fraction(-3, 2)
        assert GF(5).parse("1/2") == 3
        with pytest.raises(ParseError):
            QQ.parse("0.5")
        with pytest.raises(ParseError):
            QQ.parse("1/0")

    @pytest.mark.parametrize("name,char", [("QQ", 0), ("Q", 0), ("2", 2), ("GF(5)", 5), ("F3", 3)])
    def test_field_from_name(self, name, char):
        assert field_from_name(name).characteristic == char

    def test_field_from_name_rejects(self):
        with pytest.raises(DomainError):
            field_from_name("RR")

    def test_format_rational(self):
        assert format_rational(Fraction(6, -4)) == "-3/2"
        assert format_rational(Fraction(4, 2)) == "2"

    @given(st.integers(), st.integers(), st.sampled_from([2, 3, 5, 7, 101]))
    def test_modp_is_a_ring_map(self, a, b, p):
        F = GF(p)
        assert F(a) + F(b) == F(a + b)
        assert F(a) * F(b) == F(a * b)
        assert isinstance(F(a), ModP)


class TestLinalg:
    def test_rank_examples(self):
        assert rank([[1, 2], [2, 4]]) == 1
        assert rank([[1, 1], [1, -1]], GF(2)) == 1
        assert rank([[1, 1], [1, -1]], QQ) == 2
        assert rank([], QQ, 3) == 0

    def test_ragged(self):
        with pytest.raises(DomainError):
            rank([[1, 2], [3]])

    def test_determinant(self):
        assert integer_determinant([[2, 1], [1, 1]]) == 1
        assert integer_determinant([]) == 1

    def test_solve(self):
        x = solve([[2, 1], [1, 1]], [3, 2])
        assert x == [1, 1]
        assert solve([[1, 1], [0, 1]], [1, 1], GF(2)) == [0, 1]
        with pytest.raises(DomainError):
            solve([[1, 1], [1, 1]], [1, 2])

    def test_in_row_span(self):
        assert in_row_span([[1, 0, 1], [0, 1, 1]], [1, 1, 2])
        assert not in_row_span([[1, 0, 1], [0, 1, 1]], [1, 1, 1])

    @given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=n, max_size=n)))
    def test_determinant_cross_check(self, m):
        assert integer_determinant(m) == bareiss_determinant(m)

    @given(matrices(), st.sampled_from([0, 2, 3, 5]))
    def test_rank_cross_check(self, m, p):
        field = QQ if p == 0 else GF(p)
        assert rank(m, field) == fraction_rank(m, field)
