"""Finiteness of the proper pin-permutations of a class.

The class has finitely many proper pin-permutations exactly when the set of
alternating direction words avoiding every factor of E(beta), beta in B, and
the eight same-family pairs is finite. That set is the language of the
complement of a factor automaton, finite iff no cycle of the complement is
both accessible and co-accessible.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from typing import Final

from pinclass.automata import (
    FactorAutomaton,
    Lasso,
    build_factor_automaton,
    complement,
    finite_language,
    has_accessible_coaccessible_cycle,
    prune_subsumed,
)
from pinclass.constants import MIN_FACTOR_PATTERN_LENGTH, PRUNE_SUBSUMED_FACTORS
from pinclass.decision.base import CriterionResult, FinitenessCriterion
from pinclass.decision.basis import Basis
from pinclass.perm import Permutation
from pinclass.pins.geometry import decode_pin_word, pin_words
from pinclass.pins.language import factors_of_pin_words, phi_inverse
from pinclass.pins.words import FORBIDDEN_FACTORS
from pinclass.schemas.report_models import PinWitness, Verdict
from pinclass.timing import StageTimer

logger = logging.getLogger(__name__)

DEFAULT_WITNESS_REPETITIONS: Final[tuple[int, ...]] = (0, 1, 2, 3, 4, 5, 6)


class ProperPinCriterion(FinitenessCriterion):
    """Finite iff the complement of the basis factor automaton has a finite language."""

    name = "pin"

    def __init__(self, prune: bool = PRUNE_SUBSUMED_FACTORS):
        self.prune = prune

    def factors(self, basis: Basis, timer: StageTimer | None = None) -> frozenset[str]:
        """Union of E(beta) over elements of length >= 4 and the same-family pairs."""
        timer = timer or StageTimer()
        patterns = basis.of_length_at_least(MIN_FACTOR_PATTERN_LENGTH)
        with timer.stage("pin_words"):
            words = {beta: pin_words(beta) for beta in patterns}
        with timer.stage("factor_sets"):
            factors: set[str] = set(FORBIDDEN_FACTORS)
            for beta in patterns:
                factors |= factors_of_pin_words(words[beta])
            result = prune_subsumed(factors) if self.prune else frozenset(factors)
        logger.debug(f"{len(result)} factors from {len(patterns)} basis elements")
        return result

    def automaton(
        self, basis: Basis, timer: StageTimer | None = None
    ) -> FactorAutomaton:
        """Complement automaton whose words code the proper pin-permutations."""
        timer = timer or StageTimer()
        factors = self.factors(basis, timer)
        with timer.stage("automaton"):
            forbidden = build_factor_automaton(factors)
        with timer.stage("complement"):
            return complement(forbidden)

    def evaluate(
        self, basis: Basis, timer: StageTimer | None = None
    ) -> CriterionResult:
        timer = timer or StageTimer()
        allowed = self.automaton(basis, timer)
        with timer.stage("cycle"):
            lasso = has_accessible_coaccessible_cycle(allowed)
        if lasso is None:
            logger.info(f"pin: finite ({allowed.num_states} states)")
            return CriterionResult(Verdict.FINITE)
        logger.info(f"pin: infinite, cycle {lasso.cycle!r}")
        return CriterionResult(Verdict.INFINITE, lasso=lasso)


def pin_witnesses(
    lasso: Lasso,
    basis: Basis,
    repetitions: Iterable[int] = DEFAULT_WITNESS_REPETITIONS,
) -> list[PinWitness]:
    """Decode pumped lasso words into proper pin-permutations of the class.

    Pumped words shorter than three letters code no strict pin word and are
    skipped.
    """
    witnesses = []
    for k in repetitions:
        m_word = lasso.pumped(k)
        if len(m_word) < 3:
            continue
        pin_word = phi_inverse(m_word)
        permutation = decode_pin_word(pin_word)
        avoids = not basis.contains_any(permutation)
        if not avoids:
            logger.error(f"witness {pin_word} draws {permutation}, outside the class")
        witnesses.append(
            PinWitness(
                repetitions=k,
                m_word=m_word,
                pin_word=pin_word,
                permutation=str(permutation),
                avoids_basis=avoids,
            )
        )
    return witnesses


def proper_pin_permutations(
    basis: Basis, criterion: ProperPinCriterion | None = None
) -> set[Permutation]:
    """All proper pin-permutations of length >= 2 in Av(basis), when finitely many.

    Raises:
        InfiniteLanguage: If the class has infinitely many proper pin-permutations
    """
    allowed = (criterion or ProperPinCriterion()).automaton(basis)
    return {
        decode_pin_word(phi_inverse(word))
        for word in finite_language(allowed)
        if len(word) >= 3
    }
