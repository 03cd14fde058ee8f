"""The bijection phi between strict pin words and M, and the factor sets E(pi).

A permutation decoded from a strict pin word w contains the simple pattern pi
exactly when phi(w) contains a factor of E(pi).
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from typing import Final, TypeAlias

from pinclass.constants import MAX_FACTORS_PER_PATTERN, MIN_FACTOR_PATTERN_LENGTH
from pinclass.errors import (
    IncompatiblePair,
    InvalidPinWord,
    NotInM,
    NotStrict,
    TooShort,
)
from pinclass.perm import Permutation
from pinclass.pins.geometry import pin_words
from pinclass.pins.words import (
    DIRECTIONS,
    HORIZONTAL,
    NUMERALS,
    MWord,
    PinWord,
    PinWordKind,
    classify,
    is_m_word,
)

logger = logging.getLogger(__name__)

FactorSet: TypeAlias = frozenset[MWord]

PHI_TABLE: Final[dict[str, str]] = {
    "1R": "RUR",
    "2R": "LUR",
    "3R": "LDR",
    "4R": "RDR",
    "1L": "RUL",
    "2L": "LUL",
    "3L": "LDL",
    "4L": "RDL",
    "1U": "URU",
    "2U": "ULU",
    "3U": "DLU",
    "4U": "DRU",
    "1D": "URD",
    "2D": "ULD",
    "3D": "DLD",
    "4D": "DRD",
}

NUMERAL_PAIRS: Final[dict[str, frozenset[str]]] = {
    "1": frozenset({"UR", "RU"}),
    "2": frozenset({"UL", "LU"}),
    "3": frozenset({"DL", "LD"}),
    "4": frozenset({"DR", "RD"}),
}

_PAIR_NUMERAL: Final[dict[str, str]] = {
    pair: numeral for numeral, pairs in NUMERAL_PAIRS.items() for pair in pairs
}

# two-letter heads that alternate correctly with a tail starting L/R or U/D
_HEADS_BEFORE_HORIZONTAL: Final[tuple[str, ...]] = ("LU", "LD", "RU", "RD")
_HEADS_BEFORE_VERTICAL: Final[tuple[str, ...]] = ("UL", "UR", "DL", "DR")


def _is_strict(word: str) -> bool:
    try:
        return classify(word) is PinWordKind.STRICT
    except InvalidPinWord:
        return False


def phi(u: PinWord) -> MWord:
    """Image of a strict pin word in M; one letter longer than u.

    Raises:
        NotStrict: If u is not a strict pin word
    """
    if not _is_strict(u):
        raise NotStrict(u)
    return PHI_TABLE[u[:2]] + u[2:]


def phi_of_numeral(numeral: str) -> frozenset[str]:
    """The two direction pairs a lone numeral stands for."""
    if numeral not in NUMERAL_PAIRS:
        raise InvalidPinWord(numeral, 0, "expected a single numeral")
    return NUMERAL_PAIRS[numeral]


def phi_inverse(m: MWord) -> PinWord:
    """The strict pin word u with phi(u) == m.

    Raises:
        NotInM: If m is not an alternating direction word of length >= 3
    """
    if not is_m_word(m):
        raise NotInM(m)
    return _PAIR_NUMERAL[m[:2]] + m[2:]


def quadrant(a: str, b: str) -> str:
    """Quadrant numeral q(a, b) of a pin relative to the pins before its predecessor.

    Raises:
        IncompatiblePair: If (a, b) is not an alternating direction pair or a
            numeral followed by a direction
    """
    if b not in DIRECTIONS:
        raise IncompatiblePair(a, b)
    if a in DIRECTIONS:
        pair = a + b
        if pair not in _PAIR_NUMERAL:
            raise IncompatiblePair(a, b)
        return _PAIR_NUMERAL[pair]
    if a in NUMERALS:
        return _PAIR_NUMERAL[PHI_TABLE[a + b][1:]]
    raise IncompatiblePair(a, b)


def factors_of_pin_words(words: Iterable[PinWord]) -> FactorSet:
    """E built from a set of strict and quasi-strict pin words."""
    factors: set[MWord] = set()
    for u in words:
        kind = classify(u)
        if kind is PinWordKind.STRICT:
            factors.add(phi(u))
        elif kind is PinWordKind.QUASI_STRICT:
            tail = phi(u[1:])
            heads = (
                _HEADS_BEFORE_HORIZONTAL
                if tail[0] in HORIZONTAL
                else _HEADS_BEFORE_VERTICAL
            )
            factors.update(head + tail for head in heads)
        else:
            raise InvalidPinWord(u, reason="expected a strict or quasi-strict pin word")
    return frozenset(factors)


def factor_set(pi: Permutation, words: Iterable[PinWord] | None = None) -> FactorSet:
    """E(pi) for a simple permutation of length at least 4.

    Args:
        pi: The pattern
        words: Precomputed pin words of pi; computed when omitted

    Raises:
        TooShort: If pi has fewer than 4 entries
        NotSimple: If pi is not simple
    """
    if len(pi) < MIN_FACTOR_PATTERN_LENGTH:
        raise TooShort(pi, MIN_FACTOR_PATTERN_LENGTH)
    if words is None:
        words = pin_words(pi)
    factors = factors_of_pin_words(words)
    logger.debug(f"E({pi.compact}) has {len(factors)} factors")
    if len(factors) > MAX_FACTORS_PER_PATTERN:
        logger.warning(
            f"E({pi.compact}) has {len(factors)} factors, "
            f"above {MAX_FACTORS_PER_PATTERN}"
        )
    return factors


def contains_factor_from(m: MWord, fs: Iterable[str]) -> bool:
    return any(factor in m for factor in fs)
