"""Tests for the brute-force reference searches."""

import pytest

from pinclass.automata import build_factor_automaton, complement
from pinclass.decision import ALTERNATIONS
from pinclass.errors import TooLarge
from pinclass.oracle import (
    oracle_family_counts,
    oracle_pin_sequences,
    oracle_pin_words,
    oracle_proper_pin_permutations,
    oracle_simples_in_class,
    oracle_words_accepted,
)
from pinclass.perm import Permutation, contains_pattern
from pinclass.pins import FORBIDDEN_FACTORS, pin_words
from pinclass.symmetry import Symmetry
from tests.conftest import perm

SIMPLE_COUNTS = {1: 1, 2: 2, 3: 0, 4: 2, 5: 6, 6: 46, 7: 338, 8: 2926}


class TestSimplesInClass:
    """Simple permutations of Av(B) by length."""

    def test_whole_space(self):
        """With no basis every simple permutation is counted."""
        profile = oracle_simples_in_class([], 6)
        assert profile.max_length == 6
        assert profile.counts == {n: SIMPLE_COUNTS[n] for n in range(1, 7)}

    @pytest.mark.slow
    def test_whole_space_length_8(self):
        """Known counts through length 8."""
        assert oracle_simples_in_class([], 8).counts == SIMPLE_COUNTS

    def test_av_2413(self):
        """Only 3142 and 41352 are simple of lengths 4 and 5 avoiding 2413."""
        profile = oracle_simples_in_class([perm("2413")], 5)
        assert profile.counts == {1: 1, 2: 2, 3: 0, 4: 1, 5: 1}

    def test_separable_class(self, separable_basis):
        """Separable permutations of length >= 3 are never simple."""
        counts = oracle_simples_in_class(separable_basis, 7).counts
        assert all(counts[n] == 0 for n in range(3, 8))

    @pytest.mark.slow
    def test_separable_class_length_10(self, separable_basis):
        """Same zeros up to the enumeration cap."""
        counts = oracle_simples_in_class(separable_basis, 10).counts
        assert all(counts[n] == 0 for n in range(3, 11))

    def test_empty_class(self):
        """Avoiding 1 leaves nothing."""
        assert oracle_simples_in_class([perm("1")], 3).counts == {1: 0, 2: 0, 3: 0}

    def test_cap(self):
        """Lengths above the cap are refused."""
        with pytest.raises(TooLarge) as excinfo:
            oracle_simples_in_class([], 11)
        assert excinfo.value.limit == 10

    def test_csv(self):
        """Profiles print as length,count rows."""
        csv = oracle_simples_in_class([], 4).to_csv()
        assert csv == "length,count\n1,1\n2,2\n3,0\n4,2\n"


class TestFamilyCounts:
    """Intersections with the eight images of a pattern class."""

    def test_one_profile_per_symmetry(self):
        """Profiles are keyed by symmetry."""
        profiles = oracle_family_counts([], ALTERNATIONS.patterns, 4)
        assert list(profiles) == list(Symmetry)
        assert all(p.max_length == 4 for p in profiles.values())

    def test_separable_basis_is_bounded(self, separable_basis):
        """No image adds a simple permutation of length >= 4."""
        profiles = oracle_family_counts(separable_basis, ALTERNATIONS.patterns, 6)
        for profile in profiles.values():
            assert all(profile.counts[n] == 0 for n in range(4, 7))


class TestPinSearches:
    """Pin sequences and pin words by exhaustive search."""

    def test_two_points(self):
        """Both orders of two points are pin sequences."""
        sequences = oracle_pin_sequences(perm("12"))
        assert len(sequences) == 2

    def test_sequences_cover_every_point(self):
        """Each sequence visits every point of 2413 once."""
        p = perm("2413")
        points = set(p.points())
        sequences = oracle_pin_sequences(p)
        assert sequences
        for sequence in sequences:
            assert sequence.is_pin_sequence
            assert set(sequence.points) == points
            assert sequence.permutation() == p

    def test_sequence_cap(self):
        """Pin sequences are not searched beyond length 9."""
        with pytest.raises(TooLarge):
            oracle_pin_sequences(Permutation(tuple(range(1, 11))))

    def test_single_point_words(self):
        """A single point is drawn by any numeral."""
        assert oracle_pin_words(perm("1")) == {"1", "2", "3", "4"}

    def test_words_agree(self):
        """Exhaustive decoding finds the same words as the representation search."""
        for text in ("2413", "3142", "24153", "41352"):
            p = perm(text)
            assert oracle_pin_words(p) == pin_words(p)

    def test_proper_pin_permutations_of_length_two(self):
        """Strict words of length 2 draw 12 and 21."""
        found = oracle_proper_pin_permutations([], 2)
        assert found == {perm("12"), perm("21")}

    def test_proper_pin_permutations_avoid_basis(self, separable_basis):
        """Everything returned lies in the class."""
        found = oracle_proper_pin_permutations(separable_basis, 6)
        assert perm("12") in found
        for sigma in found:
            assert not any(contains_pattern(sigma, beta) for beta in separable_basis)


class TestWordsAccepted:
    """Breadth-first enumeration of automaton languages."""

    def test_alternating_words(self):
        """Without a basis, the allowed words are the alternating ones."""
        allowed = complement(build_factor_automaton(FORBIDDEN_FACTORS))
        assert allowed.num_states == 13
        words = oracle_words_accepted(allowed, 3)
        assert "LUL" in words
        assert "LLU" not in words
        assert len(words) == 1 + 4 + 8 + 16
        assert all(allowed.accepts(w) for w in words)

    def test_length_cap(self):
        """Words longer than twice the number of states are refused."""
        everything = complement(build_factor_automaton([]))
        assert len(oracle_words_accepted(everything, 2)) == 1 + 4 + 16
        with pytest.raises(TooLarge):
            oracle_words_accepted(everything, 3)

    def test_empty_language(self):
        """An automaton with no accepting state accepts nothing."""
        assert oracle_words_accepted(build_factor_automaton([]), 2) == set()
