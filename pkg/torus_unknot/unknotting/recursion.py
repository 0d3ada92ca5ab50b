"""
Minimal unknotting crossing data of torus knots and links.

The Euclid-style recursion alternates odd steps (p_i, q_i) with
q_i = m_i p_i + a_i and even steps with p_i = m_i q_i + a_i. Odd steps
contribute the U-crossing data of K(p_i, q_i), even steps the data of the
reductions K(p_i - j q_i, q_i), all translated into crossing positions of the
original B(p, q).
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import paderbox as pb

from torus_unknot.braids.word import (
    BraidWord, apply_crossing_changes, reverse, toric_braid,
)
from torus_unknot.unknotting.procedure import (
    ToricParams, u_crossing_data, unknotting_number,
)

logger = logging.getLogger('recursion')


__all__ = [
    'ODD',
    'EVEN',
    'EuclidStep',
    'EuclidTrace',
    'ProvenanceRecord',
    'UnknottingPlan',
    'euclid_trace',
    'minimal_ucd',
    'procedure_plan',
    'mirrored_ucd',
    'mirrored_plan',
    'step_positions',
    'combined_records',
]

ODD = 'odd'
EVEN = 'even'

# Stopping rules of the recursion
TERMINAL_Q_ONE = 'q = 1 mod p'
TERMINAL_Q_MINUS_ONE = 'q = p - 1 mod p'
TERMINAL_P_ONE = 'p = 1 mod q'
TERMINAL_LINK = 'remainder 0'

# Position sources
PERIOD = 'period'  # full periods of an odd step, copy j
REMAINDER = 'remainder'  # the remaining a_i blocks of an odd step
REDUCTION = 'reduction'  # reductions of an even step, copy j


@dataclass(frozen=True)
class EuclidStep:
    index: int
    p: int
    q: int
    m: int
    a: int
    parity: str


@dataclass(frozen=True)
class EuclidTrace:
    """
    >>> [(s.p, s.q, s.m, s.a) for s in euclid_trace(7, 4).steps]
    [(7, 4, 0, 4), (7, 4, 1, 3), (3, 4, 1, 1)]
    >>> euclid_trace(7, 4).terminal
    'q = 1 mod p'
    """
    steps: Tuple[EuclidStep, ...]
    terminal: str

    def __len__(self):
        return len(self.steps)


@dataclass(frozen=True)
class ProvenanceRecord:
    position: int
    step: int
    source: str
    copy: Optional[int] = None


@dataclass(frozen=True)
class UnknottingPlan:
    """
    Crossing positions to flip. They index B(p, q), or reverse(B(p, q)) when
    `mirrored` is set.
    """
    params: ToricParams
    positions: Tuple[int, ...]
    provenance: Tuple[ProvenanceRecord, ...] = ()
    trace: Optional[EuclidTrace] = None
    mirrored: bool = False

    def __post_init__(self):
        positions = tuple(self.positions)
        assert pb.utils.misc.all_unique(positions), positions
        object.__setattr__(self, 'positions', tuple(sorted(positions)))
        object.__setattr__(self, 'provenance', tuple(self.provenance))
        for position in self.positions:
            if not 1 <= position <= self.params.crossings:
                raise ValueError(
                    f'Position {position} is outside of 1..'
                    f'{self.params.crossings} for B({self.params.p}, '
                    f'{self.params.q})'
                )

    @property
    def p(self) -> int:
        return self.params.p

    @property
    def q(self) -> int:
        return self.params.q

    @property
    def d(self) -> int:
        return self.params.d

    def __len__(self):
        return len(self.positions)

    def braid(self) -> BraidWord:
        word = toric_braid(self.p, self.q)
        return reverse(word) if self.mirrored else word

    def flipped_word(self) -> BraidWord:
        return apply_crossing_changes(self.braid(), self.positions)


def euclid_trace(p: int, q: int) -> EuclidTrace:
    ToricParams(p, q)
    steps = []
    p_i, q_i, parity = p, q, ODD
    while True:
        index = len(steps) + 1
        if parity == ODD:
            m, a = divmod(q_i, p_i)
            steps.append(EuclidStep(index, p_i, q_i, m, a, ODD))
            if a == 0:
                terminal = TERMINAL_LINK
            elif a == 1:
                terminal = TERMINAL_Q_ONE
            elif a == p_i - 1:
                terminal = TERMINAL_Q_MINUS_ONE
            else:
                p_i, q_i, parity = p_i, a, EVEN
                continue
        else:
            m, a = divmod(p_i, q_i)
            steps.append(EuclidStep(index, p_i, q_i, m, a, EVEN))
            if a == 0:
                terminal = TERMINAL_LINK
            elif a == 1:
                terminal = TERMINAL_P_ONE
            else:
                p_i, q_i, parity = a, q_i, ODD
                continue
        logger.debug(f'Trace of ({p}, {q}): {len(steps)} steps, {terminal}')
        return EuclidTrace(tuple(steps), terminal)


def _odd_positions(step: EuclidStep, period: int) -> List[ProvenanceRecord]:
    """U-crossing data of K(p_i, q_i) in positions of B(p, q), ascending."""
    p_i = step.p
    records = []
    for j in range(1, step.m + 1):
        for k in range(1, p_i):
            for g in range(1, k + 1):
                position = ((j - 1) * p_i + k) * period + p_i - g
                records.append(ProvenanceRecord(position, step.index, PERIOD, j))
    if step.a > 1:
        for k in range(1, step.a):
            for g in range(1, k + 1):
                position = step.m * p_i * period + k * period + p_i - g
                records.append(ProvenanceRecord(position, step.index, REMAINDER))
    return sorted(records, key=lambda record: record.position)


def _even_positions(step: EuclidStep, period: int) -> List[ProvenanceRecord]:
    """U-crossing data of K(p_i - j q_i, q_i) for j = 1..m_i-1, in program order."""
    records = []
    for j in range(1, step.m):
        for k in range(1, step.q):
            for g in range(1, k + 1):
                position = k * period + step.p - j * step.q - g
                records.append(ProvenanceRecord(position, step.index, REDUCTION, j))
    return records


def step_positions(step: EuclidStep, period: int) -> List[ProvenanceRecord]:
    if step.parity == ODD:
        return _odd_positions(step, period)
    return _even_positions(step, period)


def combined_records(trace: EuclidTrace, p: int) -> List[ProvenanceRecord]:
    """
    B_1, then m_1 p_1 (p-1) + (B_2 u B_3), then
    (m_1 p_1 + m_3 p_3)(p-1) + (B_4 u B_5), ... Each pair is ascending, the
    concatenation is not.
    """
    period = p - 1
    blocks = [step_positions(step, period) for step in trace.steps]
    records = list(blocks[0])
    offset = 0
    for first in range(1, len(blocks), 2):
        offset += trace.steps[first - 1].m * trace.steps[first - 1].p * period
        pair = blocks[first] + (blocks[first + 1] if first + 1 < len(blocks) else [])
        records.extend(
            ProvenanceRecord(offset + r.position, r.step, r.source, r.copy)
            for r in sorted(pair, key=lambda record: record.position)
        )
    return records


def minimal_ucd(p: int, q: int) -> UnknottingPlan:
    """
    >>> minimal_ucd(7, 4).positions
    (8, 12, 13, 14, 17, 18, 22, 23, 24)
    >>> minimal_ucd(6, 4).positions
    (6, 10, 14, 15, 16, 18, 19, 20)
    """
    params = ToricParams(p, q)
    trace = euclid_trace(p, q)
    records = combined_records(trace, p)
    positions = [record.position for record in records]
    assert len(positions) == unknotting_number(p, q), (
        params, positions, unknotting_number(p, q))
    return UnknottingPlan(
        params,
        positions,
        sorted(records, key=lambda record: record.position),
        trace,
    )


def procedure_plan(p: int, q: int) -> UnknottingPlan:
    """
    The U-crossing data of B(p, q) as a plan, one period per copy. The
    trace is attached for reference, the positions only use its first step.
    """
    params = ToricParams(p, q)
    period = p * (p - 1)
    records = []
    for position in u_crossing_data(p, q):
        copy = (position - 1) // period
        if copy < q // p:
            records.append(ProvenanceRecord(position, 1, PERIOD, copy + 1))
        else:
            records.append(ProvenanceRecord(position, 1, REMAINDER))
    return UnknottingPlan(
        params,
        [record.position for record in records],
        records,
        euclid_trace(p, q),
    )


def mirrored_ucd(plan: UnknottingPlan) -> Tuple[int, ...]:
    """
    {q(p-1) + 1 - x}, the same crossings counted from the other end.

    >>> mirrored_ucd(minimal_ucd(7, 4))
    (1, 2, 3, 7, 8, 11, 12, 13, 17)
    """
    total = plan.params.crossings
    return tuple(sorted(total + 1 - position for position in plan.positions))


def mirrored_plan(plan: UnknottingPlan) -> UnknottingPlan:
    """Plan for the reversed braid, flipping the same crossings."""
    total = plan.params.crossings
    return UnknottingPlan(
        plan.params,
        mirrored_ucd(plan),
        sorted(
            (
                ProvenanceRecord(total + 1 - r.position, r.step, r.source, r.copy)
                for r in plan.provenance
            ),
            key=lambda record: record.position,
        ),
        plan.trace,
        mirrored=not plan.mirrored,
    )
