from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass

from pinclass.automata import Lasso
from pinclass.decision.basis import Basis
from pinclass.schemas.report_models import SubVerdict, Verdict
from pinclass.symmetry import Symmetry
from pinclass.timing import StageTimer


@dataclass(frozen=True)
class CriterionResult:
    """Verdict of one criterion with whatever evidence it produced."""

    verdict: Verdict
    failing_symmetry: Symmetry | None = None
    lasso: Lasso | None = None
    note: str | None = None

    @property
    def is_finite(self) -> bool:
        return self.verdict is Verdict.FINITE

    def to_sub_verdict(self) -> SubVerdict:
        return SubVerdict(
            verdict=self.verdict,
            failing_symmetry=(
                self.failing_symmetry.label if self.failing_symmetry else None
            ),
            failing_symmetry_index=(
                self.failing_symmetry.index if self.failing_symmetry else None
            ),
            note=self.note,
        )


class FinitenessCriterion(ABC):
    """Abstract base class for the four sub-verdicts of the finiteness decision."""

    name: str

    @abstractmethod
    def evaluate(
        self, basis: Basis, timer: StageTimer | None = None
    ) -> CriterionResult:
        """Decide whether Av(basis) has finitely many simples of this family.

        Args:
            basis: A validated basis
            timer: Optional stage timer to record into
        Returns:
            The criterion's verdict
        """
        pass
