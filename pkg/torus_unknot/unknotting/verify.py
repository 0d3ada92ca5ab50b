import logging
from typing import Callable, Optional

from torus_unknot.braids.permutation import component_count_of_closure
from torus_unknot.braids.word import BraidWord
from torus_unknot.invariants.bracket import DEFAULT_CROSSING_BUDGET
from torus_unknot.invariants.verdict import (
    TrivialityVerdict, triviality_verdict,
)
from torus_unknot.unknotting.certify import (
    DEFAULT_SEARCH_BUDGET, certify_unknot,
)
from torus_unknot.unknotting.recursion import UnknottingPlan
from torus_unknot.word_problem.certificate import Certificate
from torus_unknot.word_problem.handle_reduction import DEFAULT_STEP_CAP

logger = logging.getLogger('verify')


__all__ = [
    'verify_plan',
]


def verify_plan(
        plan: UnknottingPlan,
        *,
        crossing_budget: int = DEFAULT_CROSSING_BUDGET,
        search_budget: int = DEFAULT_SEARCH_BUDGET,
        step_cap: int = DEFAULT_STEP_CAP,
        certifier: Callable[[BraidWord], Optional[Certificate]] = None,
) -> TrivialityVerdict:
    """
    Flips the plan's positions in B(p, q) (or in its reversal for a mirrored
    plan) and checks the closure against the d-component unlink. Without a
    `certifier` the certificate search of `certify_unknot` runs with
    `search_budget` steps.

    Crossing changes do not change the permutation of the braid, so the
    component count of the flipped closure is always d.

    >>> from torus_unknot.unknotting.recursion import minimal_ucd
    >>> verify_plan(minimal_ucd(3, 4)).status.value
    'CertifiedTrivialUnlink'
    """
    word = plan.flipped_word()
    components = component_count_of_closure(word)
    assert components == plan.d, (components, plan.d, plan.p, plan.q)
    logger.debug(
        f'Verifying {len(plan)} crossing changes in '
        f'{"reversed " if plan.mirrored else ""}B({plan.p}, {plan.q})'
    )
    if certifier is None:
        def certifier(w):
            return certify_unknot(w, budget=search_budget, step_cap=step_cap)
    return triviality_verdict(
        word, plan.d, crossing_budget=crossing_budget, certifier=certifier)
