"""End-to-end decision: does Av(B) contain finitely many simple permutations?

A wreath-closed class has infinitely many simple permutations exactly when it
has infinitely many proper pin-permutations, parallel alternations, or wedge
simple permutations of type 1 or 2. Each family has its own criterion; the
overall verdict is their conjunction.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from concurrent.futures import ThreadPoolExecutor

from pinclass.constants import PARALLEL_DECIDERS, STRICT_ANTICHAIN
from pinclass.decision.base import CriterionResult, FinitenessCriterion
from pinclass.decision.basis import Basis, validate_basis
from pinclass.decision.patterns import ALTERNATIONS, WEDGE_TYPE1, WEDGE_TYPE2
from pinclass.decision.pins import ProperPinCriterion, pin_witnesses
from pinclass.perm import Permutation
from pinclass.schemas.report_models import (
    FinitenessReport,
    LassoWitness,
    Verdict,
    Witnesses,
)
from pinclass.timing import StageTimer

logger = logging.getLogger(__name__)

EMPTY_CLASS_NOTE = "1 is a basis element: the class is empty"
MONOTONE_CLASS_NOTE = (
    "12 or 21 is a basis element: the class holds only monotone permutations"
)


def decide_pin_finiteness(b: Basis, timer: StageTimer | None = None) -> CriterionResult:
    """Pin verdict over basis elements of length >= 4, with a lasso if infinite."""
    return ProperPinCriterion().evaluate(b, timer)


def decide_parallel_alternations(
    b: Basis, timer: StageTimer | None = None
) -> CriterionResult:
    return ALTERNATIONS.evaluate(b, timer)


def decide_wedge_type1(b: Basis, timer: StageTimer | None = None) -> CriterionResult:
    return WEDGE_TYPE1.evaluate(b, timer)


def decide_wedge_type2(b: Basis, timer: StageTimer | None = None) -> CriterionResult:
    return WEDGE_TYPE2.evaluate(b, timer)


def _short_element_note(basis: Basis) -> str | None:
    lengths = {len(p) for p in basis}
    if 1 in lengths:
        return EMPTY_CLASS_NOTE
    if 2 in lengths:
        return MONOTONE_CLASS_NOTE
    return None


def _run_criteria(
    criteria: list[FinitenessCriterion],
    basis: Basis,
    timer: StageTimer,
    parallel: bool,
) -> list[CriterionResult]:
    if not parallel:
        return [criterion.evaluate(basis, timer) for criterion in criteria]
    with ThreadPoolExecutor(max_workers=len(criteria)) as pool:
        futures = [pool.submit(c.evaluate, basis, timer) for c in criteria]
        return [future.result() for future in futures]


def decide_overall(
    elements: Basis | Iterable[Permutation],
    *,
    strict_antichain: bool = STRICT_ANTICHAIN,
    parallel: bool = PARALLEL_DECIDERS,
    emit_witness: bool = False,
) -> FinitenessReport:
    """Validate a basis and combine the four criteria into a report.

    Args:
        elements: Basis elements, simple and pairwise incomparable; a
            validated Basis is used as given
        strict_antichain: Reject comparable elements instead of minimizing
        parallel: Evaluate the four criteria on a thread pool
        emit_witness: Decode pumped lasso words into witness permutations

    Returns:
        The finiteness report

    Raises:
        NotSimpleElement: If an element is not simple
        NotAntichain: If an element contains another and strict_antichain is set
    """
    timer = StageTimer()
    if isinstance(elements, Basis):
        basis = elements
    else:
        with timer.stage("validate"):
            basis = validate_basis(elements, strict_antichain=strict_antichain)
    logger.info(f"deciding a basis of {len(basis)} elements")

    note = _short_element_note(basis)
    pin_criterion = ProperPinCriterion()
    pattern_criteria: list[FinitenessCriterion] = [
        ALTERNATIONS,
        WEDGE_TYPE1,
        WEDGE_TYPE2,
    ]
    if note is None:
        pin, alternations, wedge1, wedge2 = _run_criteria(
            [pin_criterion, *pattern_criteria], basis, timer, parallel
        )
    else:
        # no simple permutation of length 4 or more lies in the class
        logger.info(note)
        pin = CriterionResult(Verdict.FINITE, note=note)
        alternations, wedge1, wedge2 = _run_criteria(
            pattern_criteria, basis, timer, parallel
        )

    witnesses = Witnesses()
    if pin.lasso is not None:
        witnesses.pin_lasso = LassoWitness(
            prefix=pin.lasso.prefix, cycle=pin.lasso.cycle, suffix=pin.lasso.suffix
        )
        if emit_witness:
            with timer.stage("witness"):
                witnesses.pin_words = pin_witnesses(pin.lasso, basis)

    results = (pin, alternations, wedge1, wedge2)
    overall = Verdict.FINITE if all(r.is_finite for r in results) else Verdict.INFINITE
    logger.info(f"overall: {overall.value}")
    return FinitenessReport(
        pin=pin.to_sub_verdict(),
        alternations=alternations.to_sub_verdict(),
        wedge1=wedge1.to_sub_verdict(),
        wedge2=wedge2.to_sub_verdict(),
        overall=overall,
        witnesses=witnesses,
        timings=timer.snapshot(),
    )
