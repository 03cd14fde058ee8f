"""Parallel alternations and wedge simple permutations.

Each family has infinitely many members in Av(B) unless every symmetric image
of a fixed class Av(X) contains some basis element; equivalently, for every
symmetry s some element of B avoids all of s(X).
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from typing import Final

from pinclass.decision.base import CriterionResult, FinitenessCriterion
from pinclass.decision.basis import Basis
from pinclass.perm import Permutation, avoids_all
from pinclass.schemas.report_models import Verdict
from pinclass.symmetry import Symmetry, symmetric_images
from pinclass.timing import StageTimer

logger = logging.getLogger(__name__)

ALTERNATION_PATTERNS: Final[tuple[str, ...]] = ("123", "2413", "3412")
WEDGE_TYPE1_PATTERNS: Final[tuple[str, ...]] = (
    "1243",
    "1324",
    "1423",
    "1432",
    "2431",
    "3124",
    "4123",
    "4132",
    "4231",
    "4312",
)
WEDGE_TYPE2_PATTERNS: Final[tuple[str, ...]] = (
    "2134",
    "2143",
    "3124",
    "3142",
    "3241",
    "3412",
    "4123",
    "4132",
    "4231",
    "4312",
)


def _from_digits(digits: str) -> Permutation:
    return Permutation(tuple(int(d) for d in digits))


class SymmetricAvoidanceCriterion(FinitenessCriterion):
    """Finite iff each symmetric image of Av(X) holds a basis element."""

    def __init__(self, name: str, patterns: Iterable[str]):
        self.name = name
        self.patterns = tuple(_from_digits(p) for p in patterns)

    def images(self, s: Symmetry) -> frozenset[Permutation]:
        return symmetric_images(self.patterns, s)

    def evaluate(
        self, basis: Basis, timer: StageTimer | None = None
    ) -> CriterionResult:
        timer = timer or StageTimer()
        with timer.stage(self.name):
            for s in Symmetry:
                images = self.images(s)
                if not any(avoids_all(beta, images) for beta in basis):
                    logger.info(f"{self.name}: infinite, no basis element in {s.label}")
                    return CriterionResult(Verdict.INFINITE, failing_symmetry=s)
        logger.info(f"{self.name}: finite")
        return CriterionResult(Verdict.FINITE)


ALTERNATIONS = SymmetricAvoidanceCriterion("alternations", ALTERNATION_PATTERNS)
WEDGE_TYPE1 = SymmetricAvoidanceCriterion("wedge1", WEDGE_TYPE1_PATTERNS)
WEDGE_TYPE2 = SymmetricAvoidanceCriterion("wedge2", WEDGE_TYPE2_PATTERNS)
