"""The eight symmetries of permutation diagrams."""

from __future__ import annotations

from collections.abc import Iterable
from enum import Enum

from pinclass.perm import Permutation


class Symmetry(Enum):
    """A diagram symmetry as (transpose, reverse, complement).

    The three parts apply in that order: transpose (inverse) first, then the
    left-right mirror (reverse), then the top-bottom mirror (complement).
    Members are listed in the order reports use to name a failing symmetry.
    """

    IDENTITY = (False, False, False)
    REVERSE = (False, True, False)
    COMPLEMENT = (False, False, True)
    REVERSE_COMPLEMENT = (False, True, True)
    INVERSE = (True, False, False)
    INVERSE_REVERSE = (True, True, False)
    INVERSE_COMPLEMENT = (True, False, True)
    INVERSE_REVERSE_COMPLEMENT = (True, True, True)

    @property
    def label(self) -> str:
        return self.name.lower().replace("_", "-")

    @property
    def index(self) -> int:
        return list(Symmetry).index(self)

    def inverse(self) -> Symmetry:
        transpose, reverse, complement = self.value
        if transpose:
            return Symmetry((True, complement, reverse))
        return self

    def __call__(self, p: Permutation) -> Permutation:
        return apply_symmetry(p, self)


def apply_symmetry(p: Permutation, s: Symmetry) -> Permutation:
    """Image of p under s."""
    transpose, reverse, complement = s.value
    entries = p.inverse().entries if transpose else p.entries
    if reverse:
        entries = entries[::-1]
    if complement:
        n = len(entries)
        entries = tuple(n + 1 - value for value in entries)
    return Permutation(entries)


def symmetric_images(
    patterns: Iterable[Permutation], s: Symmetry
) -> frozenset[Permutation]:
    return frozenset(apply_symmetry(pattern, s) for pattern in patterns)


def orbit(p: Permutation) -> frozenset[Permutation]:
    return frozenset(apply_symmetry(p, s) for s in Symmetry)
