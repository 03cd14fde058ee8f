"""Pin sequences in the plane and the pin words of a permutation.

Diagram points of a permutation sit on the integer grid. Encoding places the
origin of a pin word at half-integer positions, so all geometry here runs on
doubled integer coordinates; decoding creates fresh rows and columns at exact
rational midpoints.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from pinclass.constants import MAX_KNIGHT_PAIRS, MAX_PIN_WORDS
from pinclass.errors import InvalidPinWord, InvalidRepresentation, NotSimple
from pinclass.perm import Permutation, is_simple
from pinclass.pins.words import DIRECTIONS, NUMERALS, PinWord, validate_pin_word

logger = logging.getLogger(__name__)

KNIGHT_MOVES: tuple[tuple[int, int], ...] = (
    (1, 2),
    (2, 1),
    (2, -1),
    (1, -2),
    (-1, -2),
    (-2, -1),
    (-2, 1),
    (-1, 2),
)


class Point(NamedTuple):
    col: int
    row: int


KnightPair = tuple[Point, Point]


@dataclass(frozen=True)
class _Box:
    """Closed bounding box of a point set."""

    min_col: int
    max_col: int
    min_row: int
    max_row: int

    @classmethod
    def around(cls, point: Point) -> _Box:
        return cls(point.col, point.col, point.row, point.row)

    def extend(self, point: Point) -> _Box:
        return _Box(
            min(self.min_col, point.col),
            max(self.max_col, point.col),
            min(self.min_row, point.row),
            max(self.max_row, point.row),
        )


def _pin_letter(point: Point, last: Point, box: _Box, rest: _Box | None) -> str | None:
    """Letter encoding ``point`` as the pin following ``last``.

    ``box`` bounds every earlier pin and ``rest`` every earlier pin except
    ``last``. Returns None when ``point`` is neither independent nor separating.
    """
    right, left = point.col > box.max_col, point.col < box.min_col
    above, below = point.row > box.max_row, point.row < box.min_row
    outside_cols, outside_rows = right or left, above or below
    if outside_cols and outside_rows:
        if above:
            return "1" if right else "2"
        return "4" if right else "3"
    if not (outside_cols or outside_rows) or rest is None:
        return None
    if outside_rows:
        if last.col < point.col < rest.min_col or rest.max_col < point.col < last.col:
            return "U" if above else "D"
        return None
    if last.row < point.row < rest.min_row or rest.max_row < point.row < last.row:
        return "R" if right else "L"
    return None


def _separates(point: Point, last: Point, box: _Box, rest: _Box | None) -> bool:
    letter = _pin_letter(point, last, box, rest)
    return letter is not None and letter in DIRECTIONS


def _encode(points: Sequence[Point]) -> str | None:
    """Letters for points[1:], or None if some point is not a valid pin."""
    box = _Box.around(points[0])
    rest: _Box | None = None
    letters = []
    for last, point in itertools.pairwise(points):
        letter = _pin_letter(point, last, box, rest)
        if letter is None:
            return None
        letters.append(letter)
        rest, box = box, box.extend(point)
    return "".join(letters)


@dataclass(frozen=True)
class PinSequence:
    """Ordered diagram points p1..pk of a permutation."""

    points: tuple[Point, ...]

    def __post_init__(self) -> None:
        points = tuple(Point(*point) for point in self.points)
        object.__setattr__(self, "points", points)
        if len({p.col for p in points}) != len(points) or len(
            {p.row for p in points}
        ) != len(points):
            raise InvalidRepresentation(points, "two points share a row or column")

    def __len__(self) -> int:
        return len(self.points)

    @property
    def letters(self) -> str | None:
        """Letters of p2..pk relative to p1, or None if this is not a pin sequence."""
        if not self.points:
            return None
        return _encode(self.points)

    @property
    def is_pin_sequence(self) -> bool:
        return self.letters is not None

    @property
    def is_proper(self) -> bool:
        """Every pin from p3 on separates."""
        letters = self.letters
        return letters is not None and all(
            letter in DIRECTIONS for letter in letters[1:]
        )

    def permutation(self) -> Permutation:
        return Permutation.from_points(self.points)


def knight_pairs(p: Permutation) -> list[KnightPair]:
    """Ordered pairs of diagram points in knight position."""
    entries = p.entries
    n = len(entries)
    pairs: list[KnightPair] = []
    for col, row in enumerate(entries, start=1):
        for d_col, d_row in KNIGHT_MOVES:
            other = col + d_col
            if 1 <= other <= n and entries[other - 1] == row + d_row:
                pairs.append((Point(col, row), Point(other, row + d_row)))
    return pairs


def extend_proper_representation(
    p: Permutation, start: KnightPair
) -> PinSequence | None:
    """Complete ``start`` into a proper pin sequence on all points of p.

    Only the column neighbours and value neighbours of the last pin can be the
    next pin, so the search tries at most four candidates per step and
    backtracks on dead ends.

    Args:
        p: The permutation
        start: Two diagram points of p used as p1 and p2

    Returns:
        The pin sequence, or None when no proper representation starts with
        ``start``
    """
    entries = p.entries
    n = len(entries)
    first, second = (Point(*point) for point in start)
    for point in (first, second):
        if not 1 <= point.col <= n or entries[point.col - 1] != point.row:
            raise InvalidRepresentation(start, f"{point} is not a point of {p}")
    if first == second:
        raise InvalidRepresentation(start, "start points coincide")
    inverse = p.inverse().entries

    chain = [first, second]
    boxes = [_Box.around(first), _Box.around(first).extend(second)]
    used = bytearray(n + 2)
    used[first.col] = used[second.col] = 1

    def candidates() -> Iterator[Point]:
        last = chain[-1]
        found: list[Point] = []
        for col in (last.col - 1, last.col + 1):
            if 1 <= col <= n and not used[col]:
                found.append(Point(col, entries[col - 1]))
        for row in (last.row - 1, last.row + 1):
            if 1 <= row <= n and not used[inverse[row - 1]]:
                point = Point(inverse[row - 1], row)
                if point not in found:
                    found.append(point)
        return iter(
            [
                point
                for point in found
                if _separates(point, last, boxes[-1], boxes[-2])
            ]
        )

    pending = [candidates()]
    while len(chain) < n:
        if not pending:
            return None
        point = next(pending[-1], None)
        if point is None:
            pending.pop()
            if pending:
                dropped = chain.pop()
                boxes.pop()
                used[dropped.col] = 0
            continue
        chain.append(point)
        boxes.append(boxes[-1].extend(point))
        used[point.col] = 1
        if len(chain) < n:
            pending.append(candidates())
    return PinSequence(tuple(chain))


def _origin_offsets(a: int, b: int) -> list[int]:
    """Doubled coordinates one half-step either side of two grid coordinates."""
    low, high = min(a, b), max(a, b)
    return sorted({2 * low - 1, 2 * low + 1, 2 * high - 1, 2 * high + 1})


def encode_pin_sequence(origin: Point, rep: PinSequence) -> PinWord | None:
    """Pin word of ``rep`` read from ``origin``, both in doubled coordinates."""
    return _encode([origin, *rep.points])


def pin_words_of_representation(rep: PinSequence) -> set[PinWord]:
    """Pin words of a pin sequence for every admissible origin position.

    The origin p0 is tried in each cell around the bounding box of p1 and p2;
    a candidate survives only if every letter of the re-encoded word is
    geometrically valid.

    Raises:
        InvalidRepresentation: If rep has fewer than two points or is not a pin
            sequence
    """
    if len(rep) < 2:
        raise InvalidRepresentation(rep.points, "need at least two pins")
    if not rep.is_pin_sequence:
        raise InvalidRepresentation(
            rep.points, "a pin neither separates nor is independent"
        )
    first, second = rep.points[0], rep.points[1]
    doubled = PinSequence(tuple(Point(2 * p.col, 2 * p.row) for p in rep.points))
    words: set[PinWord] = set()
    for col in _origin_offsets(first.col, second.col):
        for row in _origin_offsets(first.row, second.row):
            word = encode_pin_sequence(Point(col, row), doubled)
            if word is not None:
                words.add(word)
    return words


def pin_words(p: Permutation) -> set[PinWord]:
    """Every pin word encoding the simple permutation p.

    Collects ordered knight pairs, gives up when there are more than the
    48 a pin-permutation can have, and otherwise extends each pair into a
    proper pin representation and encodes it.

    Raises:
        NotSimple: If p is not simple
    """
    if not is_simple(p):
        raise NotSimple(p)
    if len(p) == 1:
        return set(NUMERALS)
    if len(p) == 2:
        points = [Point(col, row) for col, row in p.points()]
        return pin_words_of_representation(
            PinSequence((points[0], points[1]))
        ) | pin_words_of_representation(PinSequence((points[1], points[0])))

    pairs = knight_pairs(p)
    logger.debug(f"{p.compact}: {len(pairs)} ordered knight pairs")
    if len(pairs) > MAX_KNIGHT_PAIRS:
        logger.debug(f"{p.compact}: more than {MAX_KNIGHT_PAIRS} knight pairs")
        return set()
    words: set[PinWord] = set()
    for pair in pairs:
        rep = extend_proper_representation(p, pair)
        if rep is not None:
            words |= pin_words_of_representation(rep)
    if len(words) > MAX_PIN_WORDS:
        logger.warning(f"{p.compact}: {len(words)} pin words exceed {MAX_PIN_WORDS}")
    return words


def decode_pin_word(word: PinWord) -> Permutation:
    """The permutation whose diagram a pin word draws.

    Raises:
        InvalidPinWord: If a letter is foreign, a forbidden factor occurs, or a
            direction cannot separate the previous pin from the earlier ones
    """
    validate_pin_word(word)
    origin = (Fraction(0), Fraction(0))
    points = [origin]
    min_col = max_col = min_row = max_row = Fraction(0)
    # bounding box of every pin except the last one
    rest: tuple[Fraction, Fraction, Fraction, Fraction] | None = None
    for position, letter in enumerate(word):
        last_col, last_row = points[-1]
        if letter in NUMERALS:
            col = max_col + 1 if letter in "14" else min_col - 1
            row = max_row + 1 if letter in "12" else min_row - 1
        elif rest is None:
            raise InvalidPinWord(
                word, position, "a direction cannot place the first pin"
            )
        elif letter in "UD":
            rest_min_col, rest_max_col = rest[0], rest[1]
            if last_col < rest_min_col:
                col = (last_col + rest_min_col) / 2
            elif last_col > rest_max_col:
                col = (last_col + rest_max_col) / 2
            else:
                raise InvalidPinWord(
                    word, position, "previous pin is not extreme horizontally"
                )
            row = max_row + 1 if letter == "U" else min_row - 1
        else:
            rest_min_row, rest_max_row = rest[2], rest[3]
            if last_row < rest_min_row:
                row = (last_row + rest_min_row) / 2
            elif last_row > rest_max_row:
                row = (last_row + rest_max_row) / 2
            else:
                raise InvalidPinWord(
                    word, position, "previous pin is not extreme vertically"
                )
            col = max_col + 1 if letter == "R" else min_col - 1
        rest = (min_col, max_col, min_row, max_row)
        points.append((col, row))
        min_col, max_col = min(min_col, col), max(max_col, col)
        min_row, max_row = min(min_row, row), max(max_row, row)
    return Permutation.from_points(points[1:])
