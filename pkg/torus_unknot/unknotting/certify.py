"""
Search for Markov certificates that reduce a braid word to the empty word,
i.e. that its closure is an unknot or unlink.

Words of toric shape (B(p, q) with some crossings flipped) are reduced along
the Euclid recursion:

- a trivial prefix of m full periods is cancelled with one group rewrite,
- the remaining a blocks must end in the staircase pattern
  s_c ... s_(p-i) s_(p-i+1)^-1 ... s_(p-1)^-1 (c = p - a, block i),
- the top strands are then removed one at a time: a group rewrite gathers
  the top generator into a single letter, which is destabilized, and the
  cancellations that follow leave the same pattern on one strand less,
- after a strands the word is eta_1 ... eta_a on c strands, again of toric
  shape, and the recursion continues with (c, a).

Other words get a greedy search of free cancellation, whole word
cancellation, destabilization and top handle removal.
"""
import logging
from typing import List, Optional

from torus_unknot.braids.markov import top_generator_positions
from torus_unknot.braids.word import BraidWord, Letter, inverse, reverse
from torus_unknot.word_problem.certificate import (
    Certificate, CertificateKind, check_certificate, reverse_certificate,
)
from torus_unknot.word_problem.handle_reduction import (
    DEFAULT_STEP_CAP, StepCapExceeded, is_identity,
)
from torus_unknot.word_problem.rewrite import (
    IllegalStep, RewriteStep, Rule, apply_step,
)

logger = logging.getLogger('certify')


__all__ = [
    'DEFAULT_SEARCH_BUDGET',
    'certify_unknot',
    'toric_shape',
]

DEFAULT_SEARCH_BUDGET = 5000


class _SearchExhausted(Exception):
    pass


class _Chain:
    """Current word plus the steps that produced it."""
    def __init__(self, word: BraidWord, budget: int, step_cap: int):
        self.start = word
        self.word = word
        self.steps: List[RewriteStep] = []
        self.budget = budget
        self.step_cap = step_cap

    def apply(self, rule: Rule, site: int = 0, params=()):
        if len(self.steps) >= self.budget:
            raise _SearchExhausted()
        step = RewriteStep(rule, site, tuple(params))
        self.word = apply_step(self.word, step, step_cap=self.step_cap)
        self.steps.append(step)

    def certificate(self) -> Certificate:
        return Certificate(
            self.start, self.word, self.steps,
            kind=CertificateKind.MARKOV_EQUIVALENCE,
        )


def toric_shape(word: BraidWord) -> Optional[int]:
    """
    Number of blocks q when the indices of `word` read
    (1, 2, ..., p-1) repeated q times with any signs, else None.

    >>> toric_shape(BraidWord.from_ints(3, [1, -2, 1, 2]))
    2
    >>> toric_shape(BraidWord.from_ints(3, [2, 1])) is None
    True
    """
    period = word.strands - 1
    if period == 0:
        return 0 if len(word) == 0 else None
    if len(word) % period:
        return None
    for k, letter in enumerate(word.letters):
        if letter.index != k % period + 1:
            return None
    return len(word) // period


def _has_staircase_tails(word: BraidWord, p: int, a: int) -> bool:
    c = p - a
    for i in range(1, a + 1):
        block = word.letters[(i - 1) * (p - 1):i * (p - 1)]
        for letter in block[c - 1:]:
            expected = 1 if letter.index <= p - i else -1
            if letter.sign != expected:
                return False
    return True


def _tail(c: int, n: int, i: int) -> List[Letter]:
    """s_c ... s_(n-i) s_(n-i+1)^-1 ... s_(n-1)^-1"""
    return [Letter(index, 1 if index <= n - i else -1) for index in range(c, n)]


def _strip_top_strand(chain: _Chain, c: int, r: int):
    """
    eta_1 T_1 ... eta_r T_r E on n = c + r strands, with T_i = _tail(c, n, i),
    becomes eta_1 T'_1 ... eta_(r-1) T'_(r-1) eta_r E on n - 1 strands.
    """
    n = c + r
    assert chain.word.strands == n, (chain.word.strands, n)
    block = n - 1
    letters = chain.word.letters
    etas = [letters[i * block:i * block + c - 1] for i in range(r)]
    old = letters[c - 1:r * block]
    new = list(_tail(c, n - 1, 1))
    for i in range(2, r + 1):
        new.extend(etas[i - 1])
        new.extend(_tail(c, n - 1, i))
    new.extend(Letter(index) for index in range(n - 1, c - 1, -1))
    if tuple(new) != old:
        chain.apply(
            Rule.GROUP_REWRITE, c,
            (len(old), *[letter.to_int() for letter in new]),
        )
    head = r * (n - 2)
    chain.apply(Rule.M2_DESTABILIZE, head + 1)
    # B A with A = eta_1 T'_1 ... eta_r T'_r, back to A B
    rest = chain.word.letters[:len(chain.word) - head]
    if rest:
        chain.apply(
            Rule.M1_CONJUGATE, 0,
            inverse(chain.word.with_letters(rest)).to_ints(),
        )
        for site in range(len(rest), 0, -1):
            chain.apply(Rule.FREE_CANCEL, site)
    for k in range(r - 1):
        chain.apply(Rule.FREE_CANCEL, head - k)


def _structured(word: BraidWord, budget: int, step_cap: int):
    q = toric_shape(word)
    if q is None:
        return None
    chain = _Chain(word, budget, step_cap)
    p = word.strands
    while p > 1:
        m, a = divmod(q, p)
        if m:
            size = m * p * (p - 1)
            prefix = chain.word.with_letters(chain.word.letters[:size])
            if not is_identity(prefix, step_cap=step_cap):
                logger.debug(f'Level ({p}, {q}): the first {m} periods are not trivial')
                return None
            chain.apply(Rule.GROUP_REWRITE, 1, (size,))
        if a == 0:
            break
        if not _has_staircase_tails(chain.word, p, a):
            logger.debug(f'Level ({p}, {q}): no staircase pattern')
            return None
        c = p - a
        for r in range(a, 0, -1):
            _strip_top_strand(chain, c, r)
        p, q = c, a
    if len(chain.word):
        return None
    return chain.certificate()


def _cyclic_cancel(chain: _Chain) -> bool:
    letters = chain.word.letters
    for site in range(1, len(letters)):
        if letters[site - 1].cancels(letters[site]):
            chain.apply(Rule.FREE_CANCEL, site)
            return True
    if len(letters) >= 2 and letters[0].cancels(letters[-1]):
        chain.apply(Rule.M1_CONJUGATE, 0, (letters[-1].to_int(),))
        # x (x^-1 u x) x^-1
        chain.apply(Rule.FREE_CANCEL, 1)
        chain.apply(Rule.FREE_CANCEL, len(chain.word) - 1)
        return True
    return False


def _top_handle(chain: _Chain) -> bool:
    """
    Removes a pair s_(n-1)^e v s_(n-1)^-e with at most one s_(n-2) in v by
    rewriting it as v with s_(n-2)^d replaced by s_(n-2)^-e s_(n-1)^d s_(n-2)^e.
    """
    n = chain.word.strands
    if n < 3:
        return False
    letters = chain.word.letters
    positions = top_generator_positions(chain.word)
    for first, second in zip(positions, positions[1:]):
        opening, closing = letters[first - 1], letters[second - 1]
        if opening.sign != -closing.sign:
            continue
        middle = letters[first:second - 1]
        lower = [k for k, letter in enumerate(middle) if letter.index == n - 2]
        if len(lower) > 1:
            continue
        replacement = list(middle)
        if lower:
            k, = lower
            d, e = middle[k].sign, opening.sign
            replacement[k:k + 1] = [
                Letter(n - 2, -e), Letter(n - 1, d), Letter(n - 2, e)]
        chain.apply(
            Rule.GROUP_REWRITE, first,
            (second - first + 1, *[letter.to_int() for letter in replacement]),
        )
        return True
    return False


def _greedy(word: BraidWord, budget: int, step_cap: int):
    chain = _Chain(word, budget, step_cap)
    while len(chain.word):
        if _cyclic_cancel(chain):
            continue
        if is_identity(chain.word, step_cap=step_cap):
            chain.apply(Rule.GROUP_REWRITE, 1, (len(chain.word),))
            continue
        positions = top_generator_positions(chain.word)
        if chain.word.strands >= 2 and len(positions) == 1:
            chain.apply(Rule.M2_DESTABILIZE, positions[0])
            continue
        if _top_handle(chain):
            continue
        logger.debug(f'Greedy search stuck at {chain.word}')
        return None
    return chain.certificate()


def _reversed(word: BraidWord, budget: int, step_cap: int):
    certificate = _structured(reverse(word), budget, step_cap)
    if certificate is None:
        return None
    return reverse_certificate(certificate, step_cap=step_cap)


def certify_unknot(
        word: BraidWord,
        budget: int = DEFAULT_SEARCH_BUDGET,
        step_cap: int = DEFAULT_STEP_CAP,
) -> Optional[Certificate]:
    """
    A checked markov-equivalence certificate from `word` to the empty word,
    or None (inconclusive) when no strategy succeeds within `budget` steps.

    >>> w = BraidWord.from_ints(3, [1, 2, 1, -2, -1, -2, 1, 2])
    >>> c = certify_unknot(w)
    >>> c.end.strands, len(c.end), check_certificate(c)
    (1, 0, True)
    >>> certify_unknot(BraidWord.from_ints(3, [1, 2, 1, 2])) is None
    True
    """
    attempts = [
        ('toric', lambda: _structured(word, budget, step_cap)),
        ('reversed toric', lambda: _reversed(word, budget, step_cap)),
        ('greedy', lambda: _greedy(word, budget, step_cap)),
    ]
    for name, attempt in attempts:
        try:
            certificate = attempt()
        except _SearchExhausted:
            logger.debug(f'{name}: search budget of {budget} steps exhausted')
            continue
        except (IllegalStep, StepCapExceeded) as e:
            logger.debug(f'{name}: {e}')
            continue
        if certificate is None:
            continue
        if len(certificate.steps) > budget:
            logger.debug(f'{name}: {len(certificate.steps)} steps exceed the budget')
            continue
        try:
            valid = check_certificate(certificate, step_cap=step_cap)
        except StepCapExceeded as e:
            logger.debug(f'{name}: replay undecided, {e}')
            continue
        if not valid:
            logger.warning(f'{name}: discarding a certificate that does not replay')
            continue
        logger.debug(f'{name}: certificate with {len(certificate.steps)} steps')
        return certificate
    return None
