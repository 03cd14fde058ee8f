"""Tests for the eight diagram symmetries."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pinclass.perm import Permutation, contains_pattern
from pinclass.symmetry import Symmetry, apply_symmetry, orbit, symmetric_images
from tests.conftest import perm

permutations_up_to_6 = st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))
).map(lambda entries: Permutation(tuple(entries)))


class TestSymmetry:
    """Labels, order and images."""

    def test_order_and_labels(self):
        """Reports name symmetries in this fixed order."""
        assert [s.label for s in Symmetry] == [
            "identity",
            "reverse",
            "complement",
            "reverse-complement",
            "inverse",
            "inverse-reverse",
            "inverse-complement",
            "inverse-reverse-complement",
        ]
        assert [s.index for s in Symmetry] == list(range(8))

    @pytest.mark.parametrize(
        "s, expected",
        [
            (Symmetry.IDENTITY, "1243"),
            (Symmetry.REVERSE, "3421"),
            (Symmetry.COMPLEMENT, "4312"),
            (Symmetry.REVERSE_COMPLEMENT, "2134"),
            (Symmetry.INVERSE, "1243"),
        ],
    )
    def test_images_of_1243(self, s, expected):
        """Reverse mirrors positions, complement mirrors values."""
        assert apply_symmetry(perm("1243"), s) == perm(expected)

    def test_transpose_applies_first(self):
        """INVERSE_REVERSE is the reverse of the inverse."""
        p = perm("2314")
        assert Symmetry.INVERSE_REVERSE(p) == Symmetry.REVERSE(p.inverse())

    def test_orbit_of_2413(self):
        """2413 and 3142 form one orbit."""
        assert orbit(perm("2413")) == {perm("2413"), perm("3142")}

    def test_symmetric_images_is_a_set(self):
        """Images of several patterns are deduplicated."""
        images = symmetric_images([perm("2413"), perm("3142")], Symmetry.REVERSE)
        assert images == frozenset({perm("2413"), perm("3142")})

    @pytest.mark.parametrize("s", list(Symmetry))
    def test_inverse_undoes(self, s):
        """s.inverse() maps every image back."""
        for text in ["2413", "25314", "246135"]:
            p = perm(text)
            assert apply_symmetry(apply_symmetry(p, s), s.inverse()) == p

    @given(permutations_up_to_6, permutations_up_to_6, st.sampled_from(list(Symmetry)))
    def test_containment_is_preserved(self, sigma, pi, s):
        """pi <= sigma exactly when s(pi) <= s(sigma)."""
        assert contains_pattern(sigma, pi) == contains_pattern(s(sigma), s(pi))
