"""Exception hierarchy shared by every pinclass module.

All errors describe invalid input, so each one is also a ``ValueError``.
"""

from __future__ import annotations

from collections.abc import Sequence
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from pinclass.perm import Permutation
    from pinclass.pins.geometry import Point


class PinClassError(ValueError):
    """Base class for all pinclass errors."""

    pass


class PermutationError(PinClassError):
    """Raised when a value cannot be read as a permutation."""

    pass


class EmptyPermutation(PermutationError):
    """Raised when a permutation has no entries."""

    def __init__(self, message: str = "a permutation needs at least one entry"):
        super().__init__(message)


class NotABijection(PermutationError):
    """Raised when entries are not a rearrangement of 1..n."""

    def __init__(self, entries: Sequence[int]):
        super().__init__(
            f"{' '.join(map(str, entries))} is not a rearrangement of 1..{len(entries)}"
        )
        self.entries = tuple(entries)


class NotSimple(PinClassError):
    """Raised when an operation needs a simple permutation."""

    def __init__(self, permutation: Permutation):
        super().__init__(f"{permutation} is not simple")
        self.permutation = permutation


class TooShort(PinClassError):
    """Raised when a permutation is shorter than an operation allows."""

    def __init__(self, permutation: Permutation, minimum: int):
        super().__init__(f"{permutation} has length {len(permutation)} < {minimum}")
        self.permutation = permutation
        self.minimum = minimum


class InvalidPinWord(PinClassError):
    """Raised when a pin word breaks the alphabet, factor or geometry rules.

    Args:
        word: The offending word
        position: Index of the first offending letter, if known
        reason: Human readable explanation
    """

    def __init__(self, word: str, position: int | None = None, reason: str = ""):
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"invalid pin word {word!r}{where}: {reason}".rstrip(": "))
        self.word = word
        self.position = position
        self.reason = reason


class NotStrict(InvalidPinWord):
    """Raised when a strict pin word is required."""

    def __init__(self, word: str):
        super().__init__(word, reason="not a strict pin word")


class NotInM(InvalidPinWord):
    """Raised when a word is not an alternating direction word of length >= 3."""

    def __init__(self, word: str):
        super().__init__(
            word, reason="not an alternating direction word of length >= 3"
        )


class IncompatiblePair(PinClassError):
    """Raised when two letters do not determine a quadrant."""

    def __init__(self, first: str, second: str):
        super().__init__(
            f"letters {first!r} and {second!r} do not determine a quadrant"
        )
        self.first = first
        self.second = second


class InvalidRepresentation(PinClassError):
    """Raised when a point sequence is not a pin sequence."""

    def __init__(self, points: Sequence[Point], reason: str):
        super().__init__(f"not a pin sequence: {reason}")
        self.points = tuple(points)
        self.reason = reason


class InvalidFactor(PinClassError):
    """Raised when a factor is not a word over L, R, U, D."""

    def __init__(self, factor: str, reason: str = "letters must be L, R, U or D"):
        super().__init__(f"invalid factor {factor!r}: {reason}")
        self.factor = factor


class EmptyFactor(InvalidFactor):
    """Raised when the empty word is used as a factor."""

    def __init__(self) -> None:
        super().__init__("", reason="factors must be nonempty")


class BasisError(PinClassError):
    """Raised when a list of permutations is not a valid wreath-closed basis."""

    pass


class NotSimpleElement(BasisError):
    """Raised when a basis element is not simple."""

    def __init__(self, element: Permutation):
        super().__init__(f"basis element {element} is not simple")
        self.element = element


class NotAntichain(BasisError):
    """Raised when one basis element contains another."""

    def __init__(self, smaller: Permutation, larger: Permutation):
        super().__init__(f"basis element {larger} contains basis element {smaller}")
        self.smaller = smaller
        self.larger = larger


class TooLarge(PinClassError):
    """Raised when a brute-force search is asked for more than its cap."""

    def __init__(self, size: int, limit: int, what: str = "input"):
        super().__init__(f"{what} size {size} exceeds the limit of {limit}")
        self.size = size
        self.limit = limit


class InfiniteLanguage(PinClassError):
    """Raised when a finite listing is requested from an infinite language."""

    def __init__(self, lasso: object):
        super().__init__(f"the language is infinite (witness {lasso})")
        self.lasso = lasso


class BasisFileError(PinClassError):
    """Raised when a basis file cannot be decoded as UTF-8 text."""

    def __init__(self, path: object, offset: int, reason: str):
        super().__init__(f"{path}: not UTF-8 text at byte {offset} ({reason})")
        self.path = path
        self.offset = offset
