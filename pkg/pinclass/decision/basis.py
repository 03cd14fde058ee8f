"""Validated bases of wreath-closed permutation classes."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from pinclass.constants import STRICT_ANTICHAIN
from pinclass.errors import NotAntichain, NotSimpleElement
from pinclass.perm import Permutation, contains_pattern, is_simple

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Basis:
    """Simple permutations, pairwise incomparable, sorted by length then value."""

    elements: tuple[Permutation, ...] = ()

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, p: object) -> bool:
        return p in self.elements

    def of_length_at_least(self, n: int) -> tuple[Permutation, ...]:
        return tuple(p for p in self.elements if len(p) >= n)

    def contains_any(self, sigma: Permutation) -> bool:
        """True when sigma contains some basis element, i.e. sigma is outside Av(B)."""
        return any(contains_pattern(sigma, beta) for beta in self.elements)


def _sort_key(p: Permutation) -> tuple[int, tuple[int, ...]]:
    return len(p), p.entries


def validate_basis(
    elements: Iterable[Permutation], strict_antichain: bool = STRICT_ANTICHAIN
) -> Basis:
    """Check simplicity and incomparability, dropping duplicates.

    Args:
        elements: Candidate basis elements
        strict_antichain: Reject comparable pairs; when False, keep only the
            minimal elements and log a warning

    Raises:
        NotSimpleElement: If an element is not simple
        NotAntichain: If one element contains another and strict_antichain is set
    """
    unique = sorted(set(elements), key=_sort_key)
    for p in unique:
        if not is_simple(p):
            raise NotSimpleElement(p)

    kept: list[Permutation] = []
    for candidate in unique:
        smaller = next(
            (
                p
                for p in kept
                if len(p) < len(candidate) and contains_pattern(candidate, p)
            ),
            None,
        )
        if smaller is None:
            kept.append(candidate)
        elif strict_antichain:
            raise NotAntichain(smaller, candidate)
        else:
            logger.warning(f"dropping {candidate}: it contains basis element {smaller}")
    return Basis(tuple(kept))
