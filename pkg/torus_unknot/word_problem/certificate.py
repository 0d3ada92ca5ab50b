"""
Machine-checkable chains of rewrite steps.

A certificate is replayed step by step from its start word. The chain is
valid when every step is a legal instance of its rule and the last word is
the end word. Group-equality certificates use group rules only, so their
start and end represent the same braid; markov-equivalence certificates may
also use the closure-only Markov moves.

Text format, one record per line, `#` starts a comment:

    kind markov-equivalence
    start 3 1 2 -1
    end 1
    free-cancel 2
    M2-destabilize 1
"""
import enum
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Tuple

from torus_unknot.braids.word import BraidWord, Letter, reverse
from torus_unknot.word_problem.handle_reduction import DEFAULT_STEP_CAP
from torus_unknot.word_problem.rewrite import (
    IllegalStep, RewriteStep, Rule, apply_step, format_step, parse_step,
)

logger = logging.getLogger('certificate')


__all__ = [
    'CertificateKind',
    'Certificate',
    'replay',
    'check_certificate',
    'first_illegal_step',
    'reverse_certificate',
    'format_certificate',
    'parse_certificate',
    'dump_certificate',
    'load_certificate',
]


class CertificateKind(enum.Enum):
    GROUP_EQUALITY = 'group-equality'
    MARKOV_EQUIVALENCE = 'markov-equivalence'


@dataclass(frozen=True)
class Certificate:
    start: BraidWord
    end: BraidWord
    steps: Tuple[RewriteStep, ...] = field(default_factory=tuple)
    kind: CertificateKind = CertificateKind.MARKOV_EQUIVALENCE

    def __post_init__(self):
        object.__setattr__(self, 'steps', tuple(self.steps))
        if not isinstance(self.kind, CertificateKind):
            object.__setattr__(self, 'kind', CertificateKind(self.kind))
        if self.kind is CertificateKind.GROUP_EQUALITY:
            markov = [
                index for index, step in enumerate(self.steps)
                if step.closure_only
            ]
            if markov:
                raise ValueError(
                    f'A group-equality certificate cannot contain Markov '
                    f'moves, found some at steps {markov}'
                )
            if self.start.strands != self.end.strands:
                raise ValueError(
                    f'A group-equality certificate keeps the strand count, '
                    f'got {self.start.strands} and {self.end.strands}'
                )

    def __len__(self):
        return len(self.steps)


def replay(
        certificate: Certificate,
        step_cap: int = DEFAULT_STEP_CAP,
) -> List[BraidWord]:
    """
    Returns the words visited by the chain, start first.
    Raises IllegalStep carrying the 0-based index of the offending step.
    """
    words = [certificate.start]
    for index, step in enumerate(certificate.steps):
        try:
            words.append(apply_step(words[-1], step, step_cap=step_cap))
        except IllegalStep as e:
            raise IllegalStep(str(e), index=index) from None
    return words


def first_illegal_step(
        certificate: Certificate,
        step_cap: int = DEFAULT_STEP_CAP,
) -> Optional[int]:
    """
    The 0-based index of the first illegal step, len(steps) when every step
    is legal but the chain does not end at the end word, or None for a
    valid certificate.

    A group-rewrite that cannot be decided within `step_cap` handle
    reductions raises StepCapExceeded, it is neither legal nor illegal.
    """
    try:
        words = replay(certificate, step_cap=step_cap)
    except IllegalStep as e:
        logger.debug(str(e))
        return e.index
    if words[-1] != certificate.end:
        logger.debug(
            f'Chain ends at {words[-1]} on {words[-1].strands} strands, '
            f'expected {certificate.end} on {certificate.end.strands}'
        )
        return len(certificate.steps)
    return None


def check_certificate(
        certificate: Certificate,
        step_cap: int = DEFAULT_STEP_CAP,
) -> bool:
    """
    Raises StepCapExceeded like first_illegal_step.

    >>> w = BraidWord.from_ints(2, [1, -1])
    >>> c = Certificate(w, BraidWord.empty(2), [RewriteStep(Rule.FREE_CANCEL, 1)])
    >>> check_certificate(c)
    True
    >>> check_certificate(Certificate(w, w))
    True
    """
    return first_illegal_step(certificate, step_cap=step_cap) is None


def _negated(params):
    return tuple(-value for value in params)


def reverse_certificate(
        certificate: Certificate,
        step_cap: int = DEFAULT_STEP_CAP,
) -> Certificate:
    """
    Maps a valid certificate for w to a certificate for reverse(w).

    Letter reversal is an anti-automorphism of the braid group that commutes
    with the Markov moves up to bookkeeping, so every step has a counterpart
    acting on the reversed word.
    """
    words = replay(certificate, step_cap=step_cap)
    steps = []
    for word, after, step in zip(words, words[1:], certificate.steps):
        length = len(word)
        rule, site = step.rule, step.site
        if rule in (Rule.FREE_CANCEL, Rule.FAR_COMMUTATION):
            steps.append(RewriteStep(rule, length - site))
        elif rule is Rule.BRAID_RELATION:
            steps.append(RewriteStep(rule, length - site - 1))
        elif rule is Rule.RUN_SHIFT:
            size = step.params[0] + 1
            window = after.letters[site - 1:site - 1 + size]
            steps.append(RewriteStep(
                Rule.GROUP_REWRITE,
                length - site - size + 2,
                (size, *[letter.to_int() for letter in reversed(window)]),
            ))
        elif rule is Rule.GROUP_REWRITE:
            size, replacement = step.params[0], step.params[1:]
            steps.append(RewriteStep(
                rule, length - site - size + 2,
                (size, *reversed(replacement)),
            ))
        elif rule is Rule.M1_CONJUGATE:
            steps.append(RewriteStep(rule, 0, _negated(step.params)))
        elif rule is Rule.M2_DESTABILIZE:
            steps.append(RewriteStep(rule, length + 1 - site))
        elif rule is Rule.M2_STABILIZE:
            # s_n^e rev(w) is reached as a conjugate of rev(w) s_n^e
            sign, = step.params
            top = Letter(word.strands, sign).to_int()
            steps.extend([
                step,
                RewriteStep(Rule.M1_CONJUGATE, 0, (top,)),
                RewriteStep(Rule.FREE_CANCEL, length + 2),
            ])
        else:
            raise TypeError(rule)
    return Certificate(
        reverse(certificate.start),
        reverse(certificate.end),
        steps,
        kind=certificate.kind,
    )


def _format_word_record(name, word):
    return ' '.join([name, str(word.strands), *map(str, word.to_ints())])


def format_certificate(certificate: Certificate) -> str:
    lines = [
        f'kind {certificate.kind.value}',
        _format_word_record('start', certificate.start),
        _format_word_record('end', certificate.end),
        *map(format_step, certificate.steps),
    ]
    return '\n'.join(lines) + '\n'


def _parse_word_record(values):
    if len(values) == 0:
        raise ValueError('Missing strand count in word record')
    strands, *letters = map(int, values)
    return BraidWord.from_ints(strands, letters)


def parse_certificate(text: str) -> Certificate:
    """
    >>> c = parse_certificate('''
    ... kind group-equality
    ... start 2 1 -1
    ... end 2
    ... free-cancel 1  # the only step
    ... ''')
    >>> c.kind, len(c), check_certificate(c)
    (<CertificateKind.GROUP_EQUALITY: 'group-equality'>, 1, True)
    """
    header = {}
    steps = []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        key, *values = line.split()
        try:
            if key == 'kind':
                header['kind'] = CertificateKind(*values)
            elif key in ('start', 'end'):
                header[key] = _parse_word_record(values)
            else:
                steps.append(parse_step(line))
        except (TypeError, ValueError) as e:
            raise ValueError(f'Line {number}: {e}') from None
    missing = {'start', 'end'} - header.keys()
    if missing:
        raise ValueError(f'Certificate is missing the records {sorted(missing)}')
    return Certificate(
        header['start'],
        header['end'],
        steps,
        kind=header.get('kind', CertificateKind.MARKOV_EQUIVALENCE),
    )


def dump_certificate(certificate: Certificate, path):
    path = Path(path)
    path.write_text(format_certificate(certificate))
    logger.info(f'Wrote file: {path}')


def load_certificate(path) -> Certificate:
    return parse_certificate(Path(path).read_text())
