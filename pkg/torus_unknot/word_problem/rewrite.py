"""
Elementary rewrite rules on braid words and their exact legality checks.

Sites are 1-based letter positions. Group rules keep the braid group element;
the Markov rules (M1/M2) only keep the closure.
"""
import enum
from dataclasses import dataclass
from typing import Tuple

from torus_unknot.braids.markov import (
    conjugate, destabilize, stabilize, top_generator_positions,
)
from torus_unknot.braids.word import (
    BraidWord, InvalidBraidWord, Letter, concat, inverse,
)
from torus_unknot.word_problem.handle_reduction import (
    DEFAULT_STEP_CAP, is_identity,
)


__all__ = [
    'Rule',
    'RewriteStep',
    'IllegalStep',
    'apply_step',
    'format_step',
    'parse_step',
]


class Rule(enum.Enum):
    FREE_CANCEL = 'free-cancel'
    FAR_COMMUTATION = 'far-commutation'
    BRAID_RELATION = 'braid-relation'
    RUN_SHIFT = 'run-shift'
    GROUP_REWRITE = 'group-rewrite'
    M1_CONJUGATE = 'M1-conjugate'
    M2_DESTABILIZE = 'M2-destabilize'
    M2_STABILIZE = 'M2-stabilize'

    @property
    def closure_only(self) -> bool:
        return self in (
            Rule.M1_CONJUGATE, Rule.M2_DESTABILIZE, Rule.M2_STABILIZE)


@dataclass(frozen=True)
class RewriteStep:
    """
    Parameters per rule:
        free-cancel, far-commutation, braid-relation: none
        run-shift: (run length, direction), direction +1 moves the single
            letter from the front of the run to its end, -1 moves it back
        group-rewrite: (length of the replaced subword, *replacement ints)
        M1-conjugate: the conjugator as signed ints, the site is unused
        M2-destabilize: none, the site is the unique top generator
        M2-stabilize: (sign,), the site is unused
    """
    rule: Rule
    site: int = 0
    params: Tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.rule, Rule):
            object.__setattr__(self, 'rule', Rule(self.rule))
        object.__setattr__(self, 'params', tuple(self.params))

    @property
    def closure_only(self) -> bool:
        return self.rule.closure_only


class IllegalStep(ValueError):
    def __init__(self, message, index: int = None):
        if index is not None:
            message = f'Step {index}: {message}'
        super().__init__(message)
        self.index = index


def _window(word: BraidWord, site: int, length: int):
    if site < 1 or site + length - 1 > len(word):
        raise IllegalStep(
            f'Site {site} with {length} letters is outside of a word '
            f'of length {len(word)}'
        )
    return word.letters[site - 1:site - 1 + length]


def _splice(word: BraidWord, site: int, length: int, letters):
    return word.with_letters(
        word.letters[:site - 1] + tuple(letters)
        + word.letters[site - 1 + length:]
    )


def _free_cancel(word, step):
    a, b = _window(word, step.site, 2)
    if not a.cancels(b):
        raise IllegalStep(f'{a} {b} at site {step.site} do not cancel')
    return _splice(word, step.site, 2, ())


def _far_commutation(word, step):
    a, b = _window(word, step.site, 2)
    if abs(a.index - b.index) < 2:
        raise IllegalStep(f'{a} and {b} at site {step.site} do not commute')
    return _splice(word, step.site, 2, (b, a))


def _braid_relation(word, step):
    x1, y, x2 = _window(word, step.site, 3)
    if x1.index != x2.index or abs(x1.index - y.index) != 1:
        raise IllegalStep(
            f'{x1} {y} {x2} at site {step.site} is not of the form x y x '
            f'with adjacent generators'
        )
    if not (x1.sign == y.sign or y.sign == x2.sign):
        raise IllegalStep(
            f'{x1} {y} {x2} at site {step.site} violates the sign condition')
    return _splice(word, step.site, 3, (
        Letter(y.index, x2.sign),
        Letter(x1.index, y.sign),
        Letter(y.index, x1.sign),
    ))


def _ascending_run(letters):
    first = letters[0].index
    return all(
        letter.index == first + k for k, letter in enumerate(letters))


def _swap_signs(run, i):
    """Exchanges the signs of s_{i-1} and s_i inside an ascending run."""
    first = run[0].index
    run = list(run)
    a, b = i - 1 - first, i - first
    run[a], run[b] = (
        Letter(run[a].index, run[b].sign), Letter(run[b].index, run[a].sign))
    return run


def _run_shift(word, step):
    if len(step.params) != 2 or step.params[1] not in (1, -1):
        raise IllegalStep(f'run-shift expects (length, +-1), got {step.params}')
    length, direction = step.params
    if length < 2:
        raise IllegalStep(f'run-shift needs a run of length >= 2, not {length}')
    window = _window(word, step.site, length + 1)
    if direction == 1:
        single, run = window[0], window[1:]
        i = single.index
    else:
        run, single = window[:-1], window[-1]
        i = single.index + 1
    if not _ascending_run(run):
        raise IllegalStep(f'No ascending run at site {step.site}')
    j, n = run[0].index, run[-1].index
    if not j < i <= n:
        raise IllegalStep(
            f'Generator s{i} does not satisfy {j} < {i} <= {n}')
    g = single.sign
    if direction == 1:
        lower, upper = run[i - 1 - j].sign, run[i - j].sign
        shifted = _swap_signs(run, i) + [Letter(i - 1, g)]
    else:
        # signs of the run before the shift are swapped back
        lower, upper = run[i - j].sign, run[i - 1 - j].sign
        shifted = [Letter(i, g)] + _swap_signs(run, i)
    if not (g == lower or lower == upper):
        raise IllegalStep(
            f'Run shift of s{i}^{g} at site {step.site} violates the sign '
            f'condition'
        )
    return _splice(word, step.site, length + 1, shifted)


def _group_rewrite(word, step, step_cap):
    if len(step.params) < 1 or step.params[0] < 0:
        raise IllegalStep(f'group-rewrite expects (length, ...), got {step.params}')
    length, replacement = step.params[0], step.params[1:]
    if length == 0:
        if not 1 <= step.site <= len(word) + 1:
            raise IllegalStep(f'Site {step.site} is outside of the word')
        old = ()
    else:
        old = _window(word, step.site, length)
    try:
        old = BraidWord(word.strands, old)
        new = BraidWord.from_ints(word.strands, replacement)
    except InvalidBraidWord as e:
        raise IllegalStep(str(e)) from None
    if not is_identity(concat(old, inverse(new)), step_cap=step_cap):
        raise IllegalStep(
            f'Replacement at site {step.site} is not equal to the subword '
            f'it replaces'
        )
    return _splice(word, step.site, length, new.letters)


def _m1_conjugate(word, step):
    try:
        conjugator = BraidWord.from_ints(word.strands, step.params)
    except InvalidBraidWord as e:
        raise IllegalStep(str(e)) from None
    return conjugate(word, conjugator)


def _m2_destabilize(word, step):
    positions = top_generator_positions(word)
    if word.strands < 2 or positions != [step.site]:
        raise IllegalStep(
            f'Top generator occurrences {positions} do not allow a '
            f'destabilization at site {step.site}'
        )
    return destabilize(word)


def _m2_stabilize(word, step):
    if len(step.params) != 1 or step.params[0] not in (1, -1):
        raise IllegalStep(f'M2-stabilize expects a sign, got {step.params}')
    return stabilize(word, step.params[0])


def apply_step(
        word: BraidWord,
        step: RewriteStep,
        step_cap: int = DEFAULT_STEP_CAP,
) -> BraidWord:
    """
    Applies one rewrite step, raising IllegalStep when the step does not
    match its rule at the given site.

    >>> w = BraidWord.from_ints(3, [2, 1, 2])
    >>> apply_step(w, RewriteStep(Rule.BRAID_RELATION, 1)).to_ints()
    (1, 2, 1)
    """
    rule = step.rule
    if rule is Rule.FREE_CANCEL:
        return _free_cancel(word, step)
    elif rule is Rule.FAR_COMMUTATION:
        return _far_commutation(word, step)
    elif rule is Rule.BRAID_RELATION:
        return _braid_relation(word, step)
    elif rule is Rule.RUN_SHIFT:
        return _run_shift(word, step)
    elif rule is Rule.GROUP_REWRITE:
        return _group_rewrite(word, step, step_cap)
    elif rule is Rule.M1_CONJUGATE:
        return _m1_conjugate(word, step)
    elif rule is Rule.M2_DESTABILIZE:
        return _m2_destabilize(word, step)
    elif rule is Rule.M2_STABILIZE:
        return _m2_stabilize(word, step)
    raise TypeError(rule)


def format_step(step: RewriteStep) -> str:
    return ' '.join([step.rule.value, str(step.site), *map(str, step.params)])


def parse_step(line: str) -> RewriteStep:
    """
    >>> parse_step('run-shift 4 4 1')
    RewriteStep(rule=<Rule.RUN_SHIFT: 'run-shift'>, site=4, params=(4, 1))
    """
    rule, *values = line.split()
    try:
        rule = Rule(rule)
    except ValueError:
        raise ValueError(f'Unknown rewrite rule {rule!r}') from None
    if len(values) == 0:
        raise ValueError(f'Missing site in {line!r}')
    site, *params = map(int, values)
    return RewriteStep(rule, site, tuple(params))
