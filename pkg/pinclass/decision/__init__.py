"""Finiteness criteria and the end-to-end decision procedure."""

from .base import CriterionResult, FinitenessCriterion
from .basis import Basis, validate_basis
from .patterns import (
    ALTERNATION_PATTERNS,
    ALTERNATIONS,
    WEDGE_TYPE1,
    WEDGE_TYPE1_PATTERNS,
    WEDGE_TYPE2,
    WEDGE_TYPE2_PATTERNS,
    SymmetricAvoidanceCriterion,
)
from .pins import ProperPinCriterion, pin_witnesses, proper_pin_permutations
from .pipeline import (
    decide_overall,
    decide_parallel_alternations,
    decide_pin_finiteness,
    decide_wedge_type1,
    decide_wedge_type2,
)

# Criteria in report order: pin, alternations, wedge1, wedge2
DEFAULT_CRITERIA: list[FinitenessCriterion] = [
    ProperPinCriterion(),
    ALTERNATIONS,
    WEDGE_TYPE1,
    WEDGE_TYPE2,
]

__all__ = [
    "ALTERNATIONS",
    "ALTERNATION_PATTERNS",
    "Basis",
    "CriterionResult",
    "DEFAULT_CRITERIA",
    "FinitenessCriterion",
    "ProperPinCriterion",
    "SymmetricAvoidanceCriterion",
    "WEDGE_TYPE1",
    "WEDGE_TYPE1_PATTERNS",
    "WEDGE_TYPE2",
    "WEDGE_TYPE2_PATTERNS",
    "decide_overall",
    "decide_parallel_alternations",
    "decide_pin_finiteness",
    "decide_wedge_type1",
    "decide_wedge_type2",
    "pin_witnesses",
    "proper_pin_permutations",
    "validate_basis",
]
