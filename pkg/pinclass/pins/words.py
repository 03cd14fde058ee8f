"""Pin word alphabet, validation and generators."""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from enum import Enum
from typing import Final, TypeAlias

from pinclass.errors import InvalidPinWord

PinWord: TypeAlias = str
MWord: TypeAlias = str

NUMERALS: Final[str] = "1234"
DIRECTIONS: Final[str] = "LRUD"
HORIZONTAL: Final[str] = "LR"
VERTICAL: Final[str] = "UD"
PIN_ALPHABET: Final[frozenset[str]] = frozenset(NUMERALS + DIRECTIONS)

FORBIDDEN_FACTORS: Final[tuple[str, ...]] = (
    "LL",
    "LR",
    "RL",
    "RR",
    "UU",
    "UD",
    "DU",
    "DD",
)


class PinWordKind(str, Enum):
    STRICT = "strict"
    QUASI_STRICT = "quasi-strict"
    OTHER = "other"


def family(letter: str) -> str:
    """``"LR"`` for horizontal moves, ``"UD"`` for vertical ones."""
    return HORIZONTAL if letter in HORIZONTAL else VERTICAL


def validate_pin_word(word: str) -> PinWord:
    """Check the alphabet and the forbidden direction factors.

    Raises:
        InvalidPinWord: On an empty word, a foreign letter or a forbidden factor
    """
    if not word:
        raise InvalidPinWord(word, reason="empty word")
    for position, letter in enumerate(word):
        if letter not in PIN_ALPHABET:
            raise InvalidPinWord(word, position, f"unknown letter {letter!r}")
    for position in range(len(word) - 1):
        if word[position : position + 2] in FORBIDDEN_FACTORS:
            raise InvalidPinWord(
                word, position, f"forbidden factor {word[position : position + 2]}"
            )
    return word


def classify(word: PinWord) -> PinWordKind:
    validate_pin_word(word)
    numerals = [i for i, letter in enumerate(word) if letter in NUMERALS]
    if len(word) >= 2 and numerals == [0]:
        return PinWordKind.STRICT
    if len(word) >= 2 and numerals == [0, 1]:
        return PinWordKind.QUASI_STRICT
    return PinWordKind.OTHER


def is_m_word(word: str) -> bool:
    """Membership in M: direction words of length >= 3 alternating families."""
    if len(word) < 3 or any(letter not in DIRECTIONS for letter in word):
        return False
    return all(family(a) != family(b) for a, b in itertools.pairwise(word))


def alternating_words(length: int, first_family: str | None = None) -> Iterator[str]:
    """All direction words of the given length whose letters alternate families."""
    if length <= 0:
        yield ""
        return
    families = [first_family] if first_family else [HORIZONTAL, VERTICAL]
    for start in families:
        other = VERTICAL if start == HORIZONTAL else HORIZONTAL
        choices = [start if i % 2 == 0 else other for i in range(length)]
        for letters in itertools.product(*choices):
            yield "".join(letters)


def strict_pin_words(n: int) -> Iterator[PinWord]:
    """SP_n: a numeral followed by n - 1 alternating directions (n >= 2)."""
    for numeral in NUMERALS:
        for tail in alternating_words(n - 1):
            yield numeral + tail


def quasi_strict_pin_words(n: int) -> Iterator[PinWord]:
    """Two numerals followed by n - 2 alternating directions (n >= 2)."""
    for first, second in itertools.product(NUMERALS, repeat=2):
        for tail in alternating_words(n - 2):
            yield first + second + tail


def m_words(n: int) -> Iterator[MWord]:
    """M_n for n >= 3."""
    if n >= 3:
        yield from alternating_words(n)
