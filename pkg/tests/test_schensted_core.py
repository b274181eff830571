import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shadowring.errors import DomainError, ParseError, ResourceGuardError
from shadowring.guards import resource_limits
from shadowring.schensted_core import (
    Permutation,
    RookPlacement,
    Tableau,
    TableauPair,
    ballot_check,
    first_positive_prefix,
    format_permutation,
    format_rook_placement,
    insertion_schensted,
    inverse_schensted,
    is_shadow_set,
    iterated_shadow_sets,
    lis,
    lis_histogram,
    lis_length,
    parse_permutation,
    parse_rook_placement,
    permutation_rank,
    permutation_shadow_set,
    permutations,
    rook_placements,
    shadow_lines,
    shadow_set,
    shadow_set_to_permutation,
    viennot_schensted,
)

W = Permutation((4, 1, 8, 5, 3, 6, 2, 7))


def perms(max_n=8):
    return st.integers(1, max_n).flatmap(lambda n: st.permutations(range(1, n + 1))).map(lambda p: Permutation(tuple(p)))


def rp(n, *cells):
    return RookPlacement(n, frozenset(cells))


class TestTypes:
    def test_permutation_rejects_non_permutations(self):
        with pytest.raises(DomainError):
            Permutation((1, 1, 2))
        with pytest.raises(DomainError):
            Permutation(())

    def test_rook_placement_rejects_shared_row(self):
        with pytest.raises(DomainError):
            rp(3, (1, 1), (1, 2))
        with pytest.raises(DomainError):
            rp(3, (1, 4))

    def test_inverse_and_identity(self):
        assert W.inverse().inverse() == W
        assert Permutation.identity(3).word == (1, 2, 3)

    def test_permutations_lexicographic(self):
        ps = list(permutations(3))
        assert [p.word for p in ps] == sorted(itertools.permutations(range(1, 4)))
        assert [permutation_rank(p) for p in ps] == list(range(6))

    def test_rook_placement_count(self):
        # sum_k C(n,k)^2 k!
        assert len(list(rook_placements(3))) == 34
        assert len(list(rook_placements(4))) == 209

    def test_tableau_validation(self):
        with pytest.raises(DomainError):
            Tableau(((1, 3), (2, 4), (5, 6, 7)))
        with pytest.raises(DomainError):
            TableauPair(Tableau(((1, 2),)), Tableau(((1,), (2,))))


class TestShadowLines:
    def test_paper_permutation(self):
        d = shadow_lines(W.graph())
        assert len(d.lines) == 4
        assert sorted(d.ray_ys) == [1, 2, 6, 7]
        assert sorted(d.ray_xs) == [1, 3, 6, 8]

    def test_empty(self):
        assert shadow_lines(rp(5)).lines == ()

    def test_ballot_example_rays(self):
        d = shadow_lines(rp(8, (2, 8), (3, 7), (5, 3), (6, 5), (7, 6)))
        assert len(d.lines) == 3
        assert sorted(d.ray_xs) == [2, 6, 7]
        assert sorted(d.ray_ys) == [3, 5, 6]

    def test_shadow_set(self):
        assert permutation_shadow_set(W) == rp(8, (2, 4), (4, 8), (5, 5), (7, 3))
        assert shadow_set(Permutation.identity(5).graph()) == rp(5)

    def test_iterated(self):
        assert iterated_shadow_sets(W) == [
            rp(8, (2, 4), (4, 8), (5, 5), (7, 3)),
            rp(8, (5, 8), (7, 4)),
            rp(8, (7, 8)),
            rp(8),
        ]
        assert iterated_shadow_sets(Permutation.identity(4)) == [rp(4)]

    def test_iterated_sizes_match_shape(self):
        for w in permutations(5):
            shape = insertion_schensted(w).shape
            sizes = [len(s) for s in iterated_shadow_sets(w)]
            expected = [5 - sum(shape[: k + 1]) for k in range(len(shape))]
            assert sizes == expected

    @given(perms())
    def test_lines_partition_the_points(self, w):
        d = shadow_lines(w.graph())
        pts = [p for line in d.lines for p in line.points]
        assert sorted(pts) == sorted(w.graph().cells)
        for line in d.lines:
            xs = [p[0] for p in line.points]
            ys = [p[1] for p in line.points]
            assert xs == sorted(xs) and ys == sorted(ys, reverse=True)


class TestSchensted:
    def test_paper_example(self):
        pair = viennot_schensted(W)
        assert pair.P.rows == ((1, 2, 6, 7), (3, 5), (4,), (8,))
        assert pair.Q.rows == ((1, 3, 6, 8), (2, 4), (5,), (7,))
        assert insertion_schensted(W) == pair
        assert inverse_schensted(pair) == W

    def test_small(self):
        assert insertion_schensted(Permutation((2, 1))).P.rows == ((1,), (2,))
        assert insertion_schensted(Permutation((2, 1))).Q.rows == ((1,), (2,))
        assert insertion_schensted(Permutation((3, 1, 2))).shape == (2, 1)
        assert viennot_schensted(Permutation((1, 2, 3))).P.rows == ((1, 2, 3),)

    def test_n5_exhaustive(self):
        for w in permutations(5):
            assert viennot_schensted(w) == insertion_schensted(w)

    def test_inverse_is_bijective_on_pairs_n4(self):
        from shadowring.rep_theory import partitions

        def syt(shape):
            n = sum(shape)
            out = []
            for word in itertools.permutations(range(1, n + 1)):
                rows, k = [], 0
                for length in shape:
                    rows.append(word[k : k + length])
                    k += length
                try:
                    t = Tableau(tuple(rows))
                except DomainError:
                    continue
                out.append(t)
            return out

        images = set()
        for lam in partitions(4):
            ts = syt(lam)
            for P in ts:
                for Q in ts:
                    images.add(inverse_schensted(TableauPair(P, Q)))
        assert len(images) == 24

    @given(perms())
    def test_round_trip(self, w):
        pair = viennot_schensted(w)
        assert pair == insertion_schensted(w)
        assert inverse_schensted(pair) == w
        assert insertion_schensted(w.inverse()) == TableauPair(pair.Q, pair.P)


class TestLis:
    def test_values(self):
        assert lis(W) == 4
        assert lis(Permutation.identity(6)) == 6
        assert lis(Permutation((5, 4, 3, 2, 1))) == 1

    def test_histogram(self):
        assert lis_histogram(4) == (1, 13, 9, 1)
        assert lis_histogram(1) == (1,)
        assert lis_histogram(2) == (1, 1)
        assert sum(lis_histogram(5)) == 120

    def test_guard(self):
        with resource_limits(max_enumeration_n=4):
            with pytest.raises(ResourceGuardError):
                lis_histogram(5)

    @given(st.lists(st.integers(-20, 20), max_size=12))
    def test_patience_matches_brute_force(self, word):
        best = 0
        for r in range(len(word) + 1):
            for idx in itertools.combinations(range(len(word)), r):
                sub = [word[i] for i in idx]
                if all(a < b for a, b in zip(sub, sub[1:])):
                    best = max(best, r)
        assert lis_length(word) == best

    @given(perms())
    def test_shadow_size_law(self, w):
        assert len(permutation_shadow_set(w)) == w.n - lis(w)


class TestBallot:
    def test_paper_counterexample(self):
        ok, xs, ys = ballot_check(rp(8, (2, 8), (3, 7), (5, 3), (6, 5), (7, 6)))
        assert not ok
        assert sum(xs[:7]) == 1
        assert first_positive_prefix(xs) == 7

    def test_empty_is_shadow_set(self):
        ok, xs, ys = ballot_check(rp(4))
        assert ok and xs == (-1,) * 4 and ys == (-1,) * 4
        assert shadow_set_to_permutation(rp(3)) == Permutation.identity(3)

    def test_paper_round_trip(self):
        assert shadow_set_to_permutation(rp(8, (2, 4), (4, 8), (5, 5), (7, 3))) == W

    def test_non_shadow_set_rejected(self):
        with pytest.raises(DomainError):
            shadow_set_to_permutation(rp(2, (1, 1)))

    def test_bijection_n4(self):
        valid = [r for r in rook_placements(4) if is_shadow_set(r)]
        assert len(valid) == 24
        assert {shadow_set_to_permutation(r) for r in valid} == set(permutations(4))

    @given(perms(7))
    @settings(max_examples=150)
    def test_shadow_sets_pass(self, w):
        s = permutation_shadow_set(w)
        assert ballot_check(s)[0]
        assert shadow_set_to_permutation(s) == w


class TestText:
    def test_permutation_round_trip(self):
        assert parse_permutation("4,1,8,5,3,6,2,7") == W
        assert format_permutation(W) == "4,1,8,5,3,6,2,7"

    def test_rook_round_trip(self):
        r = rp(8, (2, 8), (3, 7))
        assert format_rook_placement(r) == "8; (2,8) (3,7)"
        assert parse_rook_placement("8; (3,7) (2,8)") == r
        assert parse_rook_placement("3;") == rp(3)

    @pytest.mark.parametrize("text,pos", [("4,1,x", 4), ("1,,2", 2)])
    def test_permutation_parse_errors(self, text, pos):
        with pytest.raises(ParseError) as info:
            parse_permutation(text)
        assert info.value.position == pos

    def test_not_a_permutation(self):
        with pytest.raises(ParseError):
            parse_permutation("1,1,2")

    @pytest.mark.parametrize("text", ["8 (2,8)", "x; (1,1)", "3; (1,1) (1,2)", "3; (1,1) junk", "3; (4,1)"])
    def test_rook_parse_errors(self, text):
        with pytest.raises(ParseError):
            parse_rook_placement(text)

    @given(perms())
    def test_permutation_text_round_trip(self, w):
        assert parse_permutation(format_permutation(w)) == w

    @given(perms(6))
    def test_rook_text_round_trip(self, w):
        r = permutation_shadow_set(w)
        assert parse_rook_placement(format_rook_placement(r)) == r
