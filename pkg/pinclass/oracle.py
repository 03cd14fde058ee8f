"""Brute-force reference implementations used to cross-check the pipeline.

Everything here is written from the definitions, without the shortcuts of the
main modules: containment tries every subsequence, pin sequences try every
ordering of the points, and decoding rescans all earlier points at each step.
Each search refuses inputs above a hard size cap.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterable, Sequence
from fractions import Fraction
from functools import lru_cache

from pinclass.automata import ALPHABET, FactorAutomaton
from pinclass.constants import ORACLE_MAX_LENGTH, ORACLE_MAX_PIN_SEQUENCE_LENGTH
from pinclass.errors import InvalidPinWord, TooLarge
from pinclass.perm import Permutation
from pinclass.pins.geometry import PinSequence, Point
from pinclass.pins.words import (
    DIRECTIONS,
    NUMERALS,
    PinWord,
    quasi_strict_pin_words,
    strict_pin_words,
    validate_pin_word,
)
from pinclass.schemas.report_models import EnumerationProfile
from pinclass.symmetry import Symmetry

logger = logging.getLogger(__name__)

_Plane = tuple[Fraction, Fraction]


def _check_cap(size: int, limit: int, what: str) -> None:
    if size > limit:
        raise TooLarge(size, limit, what)


def _standardize(values: Sequence[int]) -> tuple[int, ...]:
    order = sorted(values)
    return tuple(order.index(v) + 1 for v in values)


def _contains(sigma: Sequence[int], pi: Sequence[int]) -> bool:
    target = tuple(pi)
    return any(
        _standardize(sub) == target for sub in itertools.combinations(sigma, len(pi))
    )


def _contains_with(sigma: Sequence[int], pi: Sequence[int], position: int) -> bool:
    """Containment restricted to occurrences using ``sigma[position]``."""
    target = tuple(pi)
    others = [i for i in range(len(sigma)) if i != position]
    for chosen in itertools.combinations(others, len(pi) - 1):
        indices = sorted((*chosen, position))
        if _standardize([sigma[i] for i in indices]) == target:
            return True
    return False


def _is_simple(entries: Sequence[int]) -> bool:
    n = len(entries)
    for i in range(n):
        for j in range(i + 1, n):
            if j - i + 1 == n:
                continue
            window = entries[i : j + 1]
            if max(window) - min(window) == j - i:
                return False
    return True


def _transform(entries: tuple[int, ...], s: Symmetry) -> tuple[int, ...]:
    transpose, reverse, complement = s.value
    n = len(entries)
    if transpose:
        entries = tuple(entries.index(v) + 1 for v in range(1, n + 1))
    if reverse:
        entries = entries[::-1]
    if complement:
        entries = tuple(n + 1 - v for v in entries)
    return entries


# pin sequences


def _outside(point: Point, earlier: Sequence[Point]) -> bool:
    cols = [p.col for p in earlier]
    rows = [p.row for p in earlier]
    inside = min(cols) < point.col < max(cols) and min(rows) < point.row < max(rows)
    return not inside and point.col not in cols and point.row not in rows


def _independent(point: Point, earlier: Sequence[Point]) -> bool:
    cols = [p.col for p in earlier]
    rows = [p.row for p in earlier]
    return (point.col > max(cols) or point.col < min(cols)) and (
        point.row > max(rows) or point.row < min(rows)
    )


def _separates(point: Point, last: Point, rest: Sequence[Point]) -> bool:
    if not rest:
        return False
    by_col = all(p.col < point.col for p in rest) and last.col > point.col
    by_col |= all(p.col > point.col for p in rest) and last.col < point.col
    by_row = all(p.row < point.row for p in rest) and last.row > point.row
    by_row |= all(p.row > point.row for p in rest) and last.row < point.row
    return by_col or by_row


def _is_next_pin(point: Point, chain: Sequence[Point]) -> bool:
    if len(chain) == 1:
        return True
    return _outside(point, chain) and (
        _independent(point, chain) or _separates(point, chain[-1], chain[:-1])
    )


def oracle_pin_sequences(p: Permutation) -> set[PinSequence]:
    """Every pin sequence, proper or not, on all diagram points of p.

    Raises:
        TooLarge: If p is longer than the pin-sequence cap
    """
    _check_cap(len(p), ORACLE_MAX_PIN_SEQUENCE_LENGTH, "permutation")
    points = [Point(col, row) for col, row in p.points()]
    found: set[PinSequence] = set()

    def extend(chain: list[Point], remaining: list[Point]) -> None:
        if not remaining:
            sequence = PinSequence(tuple(chain))
            assert sequence.is_pin_sequence, f"not a pin sequence: {chain}"
            found.add(sequence)
            return
        for i, point in enumerate(remaining):
            if _is_next_pin(point, chain):
                extend([*chain, point], remaining[:i] + remaining[i + 1 :])

    for i, first in enumerate(points):
        extend([first], points[:i] + points[i + 1 :])
    return found


# pin words


def _decode_points(word: PinWord) -> list[_Plane]:
    """Points p0..pk drawn by a pin word, p0 at the origin."""
    validate_pin_word(word)
    points: list[_Plane] = [(Fraction(0), Fraction(0))]
    for position, letter in enumerate(word):
        cols = [c for c, _ in points]
        rows = [r for _, r in points]
        last_col, last_row = points[-1]
        rest_cols, rest_rows = cols[:-1], rows[:-1]
        if letter in NUMERALS:
            col = max(cols) + 1 if letter in "14" else min(cols) - 1
            row = max(rows) + 1 if letter in "12" else min(rows) - 1
        elif not rest_cols:
            raise InvalidPinWord(
                word, position, "a direction cannot place the first pin"
            )
        elif letter in "UD":
            row = max(rows) + 1 if letter == "U" else min(rows) - 1
            if all(c > last_col for c in rest_cols):
                col = (last_col + min(rest_cols)) / 2
            elif all(c < last_col for c in rest_cols):
                col = (last_col + max(rest_cols)) / 2
            else:
                raise InvalidPinWord(word, position, "nothing to separate")
        else:
            col = max(cols) + 1 if letter == "R" else min(cols) - 1
            if all(r > last_row for r in rest_rows):
                row = (last_row + min(rest_rows)) / 2
            elif all(r < last_row for r in rest_rows):
                row = (last_row + max(rest_rows)) / 2
            else:
                raise InvalidPinWord(word, position, "nothing to separate")
        points.append((col, row))
    return points


def _decode(word: PinWord) -> Permutation:
    return Permutation.from_points(_decode_points(word)[1:])


def oracle_pin_words(p: Permutation) -> set[PinWord]:
    """Strict and quasi-strict words of length |p| whose drawing is p."""
    _check_cap(len(p), ORACLE_MAX_PIN_SEQUENCE_LENGTH, "permutation")
    n = len(p)
    if n < 2:
        return set(NUMERALS) if n == 1 else set()
    words = set()
    for word in itertools.chain(strict_pin_words(n), quasi_strict_pin_words(n)):
        try:
            if _decode(word) == p:
                words.add(word)
        except InvalidPinWord:
            continue
    return words


def _quadrant_of(point: _Plane, earlier: Sequence[_Plane]) -> str | None:
    cols = [c for c, _ in earlier]
    rows = [r for _, r in earlier]
    col, row = point
    right, left = col > max(cols), col < min(cols)
    above, below = row > max(rows), row < min(rows)
    if above and right:
        return "1"
    if above and left:
        return "2"
    if below and left:
        return "3"
    if below and right:
        return "4"
    return None


def _numeral_led_factors(word: PinWord) -> list[str]:
    starts = [i for i, letter in enumerate(word) if letter in NUMERALS]
    if not starts or starts[0] != 0:
        raise InvalidPinWord(word, 0, "a pin word starts with a numeral")
    return [word[a:b] for a, b in itertools.pairwise([*starts, len(word)])]


def oracle_preceq(u: PinWord, w: PinWord) -> bool:
    """u precedes w in the pin-word order.

    w must split as v1 w1 ... vj wj v(j+1) against the numeral-led factors
    u1 ... uj of u: a numeral-led wi equals ui; a direction-led wi needs a
    nonempty vi, its first pin in the quadrant named by ui's numeral, and its
    remaining letters equal to those of ui.
    """
    factors = _numeral_led_factors(u)
    validate_pin_word(w)
    points = _decode_points(w)

    def fits(factor: str, start: int) -> bool:
        segment = w[start : start + len(factor)]
        if len(segment) < len(factor):
            return False
        if segment[0] in NUMERALS:
            return segment == factor
        # the letter w[start] draws p(start + 1)
        if segment[1:] != factor[1:]:
            return False
        pin = start + 1
        return _quadrant_of(points[pin], points[: pin - 1]) == factor[0]

    @lru_cache(maxsize=None)
    def match(i: int, position: int) -> bool:
        if i == len(factors):
            return True
        factor = factors[i]
        for start in range(position, len(w) - len(factor) + 1):
            if w[start] in DIRECTIONS and start == position:
                continue
            if fits(factor, start) and match(i + 1, start + len(factor)):
                return True
        return False

    return match(0, 0)


# classes


def _grow(
    members: list[tuple[int, ...]], basis: Sequence[tuple[int, ...]]
) -> list[tuple[int, ...]]:
    """Members of the next length: insert the new maximum anywhere, then prune."""
    grown = []
    for entries in members:
        n = len(entries) + 1
        for position in range(n):
            candidate = entries[:position] + (n,) + entries[position:]
            if not any(
                len(beta) <= n and _contains_with(candidate, beta, position)
                for beta in basis
            ):
                grown.append(candidate)
    return grown


def _class_levels(
    basis: Iterable[Permutation], max_length: int
) -> Iterable[tuple[int, list[tuple[int, ...]]]]:
    _check_cap(max_length, ORACLE_MAX_LENGTH, "length")
    patterns = [beta.entries for beta in basis]
    level: list[tuple[int, ...]] = [()]
    for n in range(1, max_length + 1):
        level = _grow(level, patterns)
        yield n, level


def oracle_simples_in_class(
    b: Iterable[Permutation], max_length: int
) -> EnumerationProfile:
    """Number of simple permutations of each length avoiding every element of b.

    Raises:
        TooLarge: If max_length exceeds the enumeration cap
    """
    counts = {}
    for n, level in _class_levels(b, max_length):
        counts[n] = sum(1 for entries in level if _is_simple(entries))
        logger.debug(f"length {n}: {len(level)} class members, {counts[n]} simple")
    return EnumerationProfile(max_length=max_length, counts=counts)


def oracle_family_counts(
    b: Iterable[Permutation], patterns: Iterable[Permutation], max_length: int
) -> dict[Symmetry, EnumerationProfile]:
    """Simple counts of Av(b) intersected with each symmetric image of Av(patterns)."""
    basis = list(b)
    pattern_list = list(patterns)
    profiles = {}
    for s in Symmetry:
        images = [Permutation(_transform(pi.entries, s)) for pi in pattern_list]
        profiles[s] = oracle_simples_in_class(basis + images, max_length)
    return profiles


def oracle_proper_pin_permutations(
    b: Iterable[Permutation], max_length: int
) -> set[Permutation]:
    """Drawings of strict pin words of length 2..max_length that avoid b."""
    _check_cap(max_length, ORACLE_MAX_LENGTH, "length")
    basis = [beta.entries for beta in b]
    found = set()
    for n in range(2, max_length + 1):
        for word in strict_pin_words(n):
            sigma = _decode(word)
            if not any(_contains(sigma.entries, beta) for beta in basis):
                found.add(sigma)
    return found


# automata


def _live_states(a: FactorAutomaton) -> set[int]:
    live = set(a.accepting)
    changed = True
    while changed:
        changed = False
        for state, row in enumerate(a.transitions):
            if state not in live and any(target in live for target in row):
                live.add(state)
                changed = True
    return live


def oracle_words_accepted(a: FactorAutomaton, max_length: int) -> set[str]:
    """Accepted words of length <= max_length, by breadth-first unrolling.

    Raises:
        TooLarge: If max_length exceeds twice the number of states
    """
    _check_cap(max_length, 2 * a.num_states, "word length")
    live = _live_states(a)
    accepted = set()
    frontier = [("", a.start)] if a.start in live else []
    for length in range(max_length + 1):
        next_frontier = []
        for word, state in frontier:
            if state in a.accepting:
                accepted.add(word)
            if length < max_length:
                for index, target in enumerate(a.transitions[state]):
                    if target in live:
                        next_frontier.append((word + ALPHABET[index], target))
        frontier = next_frontier
    return accepted


def oracle_language_is_infinite(a: FactorAutomaton) -> bool:
    """Some word with length in [#states, 2 * #states) is accepted."""
    n = a.num_states
    reachable = {a.start}
    for length in range(2 * n):
        if length >= n and reachable & a.accepting:
            return True
        reachable = {target for state in reachable for target in a.transitions[state]}
    return False
