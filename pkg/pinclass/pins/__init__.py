"""Pin sequences, pin words and the pin-word language."""

from .geometry import (
    PinSequence,
    Point,
    decode_pin_word,
    encode_pin_sequence,
    extend_proper_representation,
    knight_pairs,
    pin_words,
    pin_words_of_representation,
)
from .language import (
    PHI_TABLE,
    FactorSet,
    contains_factor_from,
    factor_set,
    phi,
    phi_inverse,
    phi_of_numeral,
    quadrant,
)
from .words import (
    FORBIDDEN_FACTORS,
    PinWordKind,
    classify,
    is_m_word,
    m_words,
    quasi_strict_pin_words,
    strict_pin_words,
    validate_pin_word,
)

__all__ = [
    "FORBIDDEN_FACTORS",
    "PHI_TABLE",
    "FactorSet",
    "PinSequence",
    "PinWordKind",
    "Point",
    "classify",
    "contains_factor_from",
    "decode_pin_word",
    "encode_pin_sequence",
    "extend_proper_representation",
    "factor_set",
    "is_m_word",
    "knight_pairs",
    "m_words",
    "phi",
    "phi_inverse",
    "phi_of_numeral",
    "pin_words",
    "pin_words_of_representation",
    "quadrant",
    "quasi_strict_pin_words",
    "strict_pin_words",
    "validate_pin_word",
]
