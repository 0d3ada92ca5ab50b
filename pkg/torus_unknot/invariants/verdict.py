"""
Combines the cheap closure checks, the invariants and an optional unknot
certificate into a triviality verdict for a braid closure.
"""
import enum
import logging
from dataclasses import dataclass, field
from typing import Callable, Optional

from torus_unknot import keys
from torus_unknot.braids.permutation import component_count_of_closure
from torus_unknot.braids.word import BraidWord
from torus_unknot.invariants.bracket import (
    DEFAULT_CROSSING_BUDGET, CrossingBudgetExceeded, jones_of_closure,
    unlink_jones,
)
from torus_unknot.invariants.burau import alexander_of_closure

logger = logging.getLogger('verdict')


__all__ = [
    'VerdictStatus',
    'TrivialityVerdict',
    'triviality_verdict',
]


class VerdictStatus(enum.Enum):
    TRIVIAL_UNLINK = 'CertifiedTrivialUnlink'
    NONTRIVIAL = 'CertifiedNontrivial'
    INCONCLUSIVE = 'Inconclusive'


@dataclass(frozen=True)
class TrivialityVerdict:
    """
    `evidence` maps each check that ran to its record, e.g.
    {'components': {'expected': 1, 'value': 1, 'match': True}, ...}.
    Checks that were refused carry {'skipped': reason}.
    """
    status: VerdictStatus
    components: int
    evidence: dict = field(default_factory=dict)
    certificate: Optional[object] = None

    @property
    def is_trivial(self) -> bool:
        return self.status is VerdictStatus.TRIVIAL_UNLINK

    def to_json(self):
        return {
            keys.STATUS: self.status.value,
            keys.COMPONENTS: self.components,
            keys.EVIDENCE: self.evidence,
        }


def _record(expected, value):
    return {
        'expected': expected if isinstance(expected, int) else str(expected),
        'value': value if isinstance(value, int) else str(value),
        'match': expected == value,
    }


def triviality_verdict(
        word: BraidWord,
        components: int,
        *,
        crossing_budget: int = DEFAULT_CROSSING_BUDGET,
        certifier: Callable[[BraidWord], Optional[object]] = None,
) -> TrivialityVerdict:
    """
    Checks the closure of `word` against the `components`-component unlink.

    NONTRIVIAL is returned as soon as an invariant differs from the unlink
    value. TRIVIAL_UNLINK needs every check that ran to match and either
    the Jones polynomial or an unknot certificate from `certifier` as
    corroboration, since Alexander = 1 alone does not detect the unknot.
    """
    evidence = {}

    def verdict(status, certificate=None):
        logger.debug(f'{status.value}: {evidence}')
        return TrivialityVerdict(status, components, evidence, certificate)

    evidence['components'] = _record(
        components, component_count_of_closure(word))
    if not evidence['components']['match']:
        return verdict(VerdictStatus.NONTRIVIAL)

    evidence['alexander'] = _record(
        1 if components == 1 else 0, alexander_of_closure(word))
    if not evidence['alexander']['match']:
        return verdict(VerdictStatus.NONTRIVIAL)

    try:
        jones = jones_of_closure(word, crossing_budget=crossing_budget)
    except CrossingBudgetExceeded as e:
        evidence['jones'] = {'skipped': str(e)}
    else:
        evidence['jones'] = _record(unlink_jones(components), jones)
        if not evidence['jones']['match']:
            return verdict(VerdictStatus.NONTRIVIAL)

    certificate = None
    if certifier is not None:
        certificate = certifier(word)
        if certificate is None:
            evidence['certificate'] = {'found': False}
        else:
            evidence['certificate'] = {
                'found': True, 'steps': len(certificate.steps)}

    if evidence['jones'].get('match') or certificate is not None:
        return verdict(VerdictStatus.TRIVIAL_UNLINK, certificate)
    return verdict(VerdictStatus.INCONCLUSIVE)
