"""Permutations in one-line notation, simplicity and pattern containment."""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from operator import itemgetter
from typing import Any

from pinclass.errors import EmptyPermutation, NotABijection, PermutationError


@dataclass(frozen=True, slots=True)
class Permutation:
    """A bijection of {1..n} written as the tuple of its values."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise EmptyPermutation()
        if sorted(entries) != list(range(1, len(entries) + 1)):
            raise NotABijection(entries)

    @classmethod
    def of(cls, *entries: int) -> Permutation:
        return cls(entries)

    @classmethod
    def from_points(cls, points: Iterable[tuple[Any, Any]]) -> Permutation:
        """Standardize a set of points with distinct coordinates.

        Args:
            points: (column, row) pairs with totally ordered coordinates

        Returns:
            The permutation order-isomorphic to the point set
        """
        ordered = sorted(points, key=itemgetter(0))
        rows = sorted(row for _, row in ordered)
        ranks = {row: rank for rank, row in enumerate(rows, start=1)}
        return cls(tuple(ranks[row] for _, row in ordered))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __str__(self) -> str:
        return " ".join(map(str, self.entries))

    @property
    def compact(self) -> str:
        """Digits run together when every value is a single digit, else spaced."""
        if len(self.entries) < 10:
            return "".join(map(str, self.entries))
        return str(self)

    def inverse(self) -> Permutation:
        positions = [0] * len(self.entries)
        for index, value in enumerate(self.entries, start=1):
            positions[value - 1] = index
        return Permutation(tuple(positions))

    def points(self) -> list[tuple[int, int]]:
        """Diagram points as 1-based (column, row) pairs."""
        return [(col, row) for col, row in enumerate(self.entries, start=1)]


def parse_permutation(text: str) -> Permutation:
    """Read whitespace separated one-line notation, e.g. ``"2 4 1 3"``."""
    tokens = text.split()
    if not tokens:
        raise EmptyPermutation("empty permutation text")
    try:
        entries = tuple(int(token) for token in tokens)
    except ValueError as e:
        raise PermutationError(f"not a list of integers: {text.strip()!r}") from e
    return Permutation(entries)


def all_permutations(n: int) -> Iterator[Permutation]:
    """Every permutation of length n in lexicographic order."""
    for entries in itertools.permutations(range(1, n + 1)):
        yield Permutation(entries)


def is_simple(p: Permutation) -> bool:
    """True when the only blocks of p are singletons and p itself.

    Every window of positions i..j is scanned with a running min/max; the
    window is a block exactly when max - min == j - i.
    """
    entries = p.entries
    n = len(entries)
    for i in range(n - 1):
        low = high = entries[i]
        for j in range(i + 1, n):
            value = entries[j]
            if value < low:
                low = value
            elif value > high:
                high = value
            if high - low == j - i and j - i + 1 < n:
                return False
    return True


def _neighbour_bounds(pattern: Sequence[int]) -> tuple[list[int], list[int]]:
    """Earlier pattern positions holding the nearest smaller and larger values."""
    lower: list[int] = []
    upper: list[int] = []
    for j, value in enumerate(pattern):
        below = [i for i in range(j) if pattern[i] < value]
        above = [i for i in range(j) if pattern[i] > value]
        lower.append(max(below, key=lambda i: pattern[i]) if below else -1)
        upper.append(min(above, key=lambda i: pattern[i]) if above else -1)
    return lower, upper


def contains_pattern(sigma: Permutation, pi: Permutation) -> bool:
    """True when some subsequence of sigma is order-isomorphic to pi.

    Backtracks over pattern positions. A text value is admissible for pattern
    position j when it lies strictly between the values already matched to the
    nearest smaller and nearest larger earlier pattern values, and enough text
    remains to place the rest of the pattern.
    """
    text, pattern = sigma.entries, pi.entries
    n, k = len(text), len(pattern)
    if k > n:
        return False
    if k == n:
        return text == pattern
    lower, upper = _neighbour_bounds(pattern)
    matched = [0] * k

    def search(j: int, start: int) -> bool:
        if j == k:
            return True
        low = matched[lower[j]] if lower[j] >= 0 else 0
        high = matched[upper[j]] if upper[j] >= 0 else n + 1
        for i in range(start, n - (k - j) + 1):
            value = text[i]
            if low < value < high:
                matched[j] = value
                if search(j + 1, i + 1):
                    return True
        return False

    return search(0, 0)


def avoids_all(sigma: Permutation, patterns: Iterable[Permutation]) -> bool:
    return not any(contains_pattern(sigma, pi) for pi in patterns)
