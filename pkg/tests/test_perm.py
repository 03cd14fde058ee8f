"""Tests for permutations, simplicity and pattern containment."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pinclass.errors import EmptyPermutation, NotABijection, PermutationError
from pinclass.perm import (
    Permutation,
    all_permutations,
    avoids_all,
    contains_pattern,
    is_simple,
    parse_permutation,
)
from tests.conftest import perm


def brute_contains(sigma: Permutation, pi: Permutation) -> bool:
    target = sorted(range(len(pi)), key=lambda i: pi.entries[i])
    for sub in itertools.combinations(sigma.entries, len(pi)):
        if sorted(range(len(sub)), key=lambda i: sub[i]) == target:
            return True
    return False


permutations_up_to_7 = st.integers(min_value=1, max_value=7).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))
).map(lambda entries: Permutation(tuple(entries)))

permutations_up_to_4 = st.integers(min_value=1, max_value=4).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))
).map(lambda entries: Permutation(tuple(entries)))


class TestPermutation:
    """Construction and parsing."""

    def test_parse_one_line_notation(self):
        """Whitespace separated values parse in order."""
        p = parse_permutation("  2 4\t1 3 ")
        assert p.entries == (2, 4, 1, 3)
        assert str(p) == "2 4 1 3"
        assert p.compact == "2413"

    def test_empty_text_rejected(self):
        """Empty input is not a permutation."""
        with pytest.raises(EmptyPermutation):
            parse_permutation("   ")

    def test_repeated_value_rejected(self):
        """1 1 is not a bijection."""
        with pytest.raises(NotABijection) as excinfo:
            parse_permutation("1 1")
        assert excinfo.value.entries == (1, 1)

    def test_gap_rejected(self):
        """Values must be exactly 1..n."""
        with pytest.raises(NotABijection):
            Permutation.of(1, 3)

    def test_non_integer_rejected(self):
        """Letters are a parse error."""
        with pytest.raises(PermutationError):
            parse_permutation("a b")

    def test_errors_are_value_errors(self):
        """Callers can catch bad input as ValueError."""
        with pytest.raises(ValueError):
            parse_permutation("2 2")

    def test_inverse(self):
        """2413 and 3142 are inverse to each other."""
        assert perm("2413").inverse() == perm("3142")

    def test_from_points_standardizes(self):
        """Rational points reduce to their relative order."""
        points = [(0.5, 10), (-3, 2), (7, -1)]
        assert Permutation.from_points(points) == perm("231")

    def test_points_are_one_based(self):
        """Diagram points are (column, row) starting at 1."""
        assert perm("213").points() == [(1, 2), (2, 1), (3, 3)]

    def test_all_permutations_count(self):
        """There are n! permutations of length n."""
        assert sum(1 for _ in all_permutations(5)) == 120


class TestSimplicity:
    """Detection of blocks."""

    @pytest.mark.parametrize("text", ["1", "12", "21", "2413", "3142", "24153"])
    def test_simple(self, text):
        """Known simple permutations."""
        assert is_simple(perm(text))

    @pytest.mark.parametrize("text", ["123", "132", "1324", "462315", "4 6 2 3 1 5"])
    def test_not_simple(self, text):
        """Each of these has a proper block of size at least 2."""
        assert not is_simple(perm(text))

    def test_simple_counts(self):
        """Simple permutations of length 1..7 number 1, 2, 0, 2, 6, 46, 338."""
        counts = [
            sum(1 for p in all_permutations(n) if is_simple(p)) for n in range(1, 8)
        ]
        assert counts == [1, 2, 0, 2, 6, 46, 338]


class TestContainment:
    """Pattern containment by backtracking."""

    def test_contains_itself(self):
        """Every permutation contains itself."""
        assert contains_pattern(perm("2413"), perm("2413"))

    def test_longer_pattern(self):
        """A longer pattern is never contained."""
        assert not contains_pattern(perm("21"), perm("213"))

    def test_occurrence_not_contiguous(self):
        """24153 contains 2413 through positions 1, 2, 3, 5."""
        assert contains_pattern(perm("24153"), perm("2413"))

    def test_separable_avoids_both(self):
        """3241 avoids 2413 and 3142."""
        assert avoids_all(perm("3241"), [perm("2413"), perm("3142")])

    @given(permutations_up_to_7, permutations_up_to_4)
    def test_agrees_with_subsequence_search(self, sigma, pi):
        """Backtracking agrees with checking every subsequence."""
        assert contains_pattern(sigma, pi) == brute_contains(sigma, pi)

    def test_reflexive(self):
        """Every permutation up to length 6 contains itself."""
        for n in range(1, 7):
            assert all(contains_pattern(p, p) for p in all_permutations(n))

    def test_transitive(self):
        """Patterns of patterns are patterns, up to length 5."""
        assert_transitive(pattern_sets(5))

    @pytest.mark.slow
    def test_transitive_exhaustive(self):
        """Same check for every permutation up to length 6."""
        assert_transitive(pattern_sets(6))


def pattern_sets(max_length):
    """Patterns of each permutation, among all permutations up to max_length."""
    everything = [p for n in range(1, max_length + 1) for p in all_permutations(n)]
    return {
        sigma: frozenset(
            pi
            for pi in everything
            if len(pi) <= len(sigma) and contains_pattern(sigma, pi)
        )
        for sigma in everything
    }


def assert_transitive(patterns):
    for sigma, below in patterns.items():
        for pi in below:
            assert patterns[pi] <= below, (sigma, pi)
