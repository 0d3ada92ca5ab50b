"""
Braid identities behind the unknotting procedure, as word constructors.

Each constructor returns concrete words so that the identities can be
decided exactly (handle reduction) or compared on closure invariants.
"""
from typing import Sequence, Tuple

import numpy as np

from torus_unknot.braids.word import (
    BraidWord, Letter, concat, reverse, toric_braid,
)
from torus_unknot.word_problem.certificate import Certificate
from torus_unknot.word_problem.rewrite import RewriteStep, Rule


__all__ = [
    'staircase_factors',
    'staircase_identity_word',
    'descending_run',
    'run_shift_pair',
    'block_reduction_pair',
    'symmetric_product',
    'symmetric_product_certificate',
]


def _signed_run(first, last, signs):
    return [Letter(index, sign) for index, sign in zip(range(first, last + 1), signs)]


def staircase_factors(n: int) -> Tuple[BraidWord, ...]:
    """
    The words eta_1, ..., eta_n on n + 1 strands, where eta_i is
    s_1 ... s_n with the last i - 1 letters inverted.

    >>> [w.to_ints() for w in staircase_factors(2)]
    [(1, 2), (1, -2)]
    """
    assert n >= 1, n
    return tuple(
        BraidWord(n + 1, tuple(
            Letter(index, 1 if index <= n - i + 1 else -1)
            for index in range(1, n + 1)
        ))
        for i in range(1, n + 1)
    )


def descending_run(n: int) -> BraidWord:
    """s_n s_(n-1) ... s_1 on n + 1 strands, equal to eta_1 ... eta_n."""
    return BraidWord.from_ints(n + 1, range(n, 0, -1))


def staircase_identity_word(n: int) -> BraidWord:
    """
    eta_1 ... eta_n followed by s_1^-1 ... s_n^-1, the trivial braid on
    n + 1 strands. It is B(n + 1, n + 1) after flipping its U-crossing data.

    >>> staircase_identity_word(1).to_ints()
    (1, -1)
    """
    return concat(
        *staircase_factors(n),
        BraidWord.from_ints(n + 1, range(-1, -n - 1, -1)),
    )


def run_shift_pair(
        n: int,
        i: int,
        j: int,
        g: int,
        run_signs: Sequence[int],
) -> Tuple[BraidWord, BraidWord]:
    """
    Both sides of moving s_i^g through the ascending run
    s_j^(g_j) ... s_n^(g_n) on n + 1 strands:

        s_i^g s_j^(g_j) ... s_n^(g_n)
            = s_j^(g_j) ... s_(i-1)^(g_i) s_i^(g_(i-1)) ... s_n^(g_n) s_(i-1)^g

    which holds when g = g_(i-1) or g_(i-1) = g_i.

    >>> lhs, rhs = run_shift_pair(3, 3, 1, 1, [1, 1, 1])
    >>> lhs.to_ints(), rhs.to_ints()
    ((3, 1, 2, 3), (1, 2, 3, 2))
    """
    run_signs = list(run_signs)
    if not 1 <= j < i <= n:
        raise ValueError(f'Need 1 <= j < i <= n, got j={j}, i={i}, n={n}')
    if len(run_signs) != n - j + 1:
        raise ValueError(
            f'Expected {n - j + 1} run signs for s_{j} ... s_{n}, '
            f'got {len(run_signs)}'
        )
    lower, upper = run_signs[i - 1 - j], run_signs[i - j]
    if not (g == lower or lower == upper):
        raise ValueError(
            f'Sign condition violated: g={g}, g_(i-1)={lower}, g_i={upper}')
    swapped = list(run_signs)
    swapped[i - 1 - j], swapped[i - j] = upper, lower
    lhs = [Letter(i, g)] + _signed_run(j, n, run_signs)
    rhs = _signed_run(j, n, swapped) + [Letter(i - 1, g)]
    return BraidWord(n + 1, tuple(lhs)), BraidWord(n + 1, tuple(rhs))


def block_reduction_pair(
        p: int,
        a: int,
        signs,
) -> Tuple[BraidWord, BraidWord]:
    """
    The p-braid

        eta_1 k_(p-1) eta_2 k_(p-2) s_(p-1)^-1 ... eta_a k_(p-a) s_(p-a+1)^-1 ... s_(p-1)^-1

    with eta_i = s_1^(g_i1) ... s_(p-a-1)^(g_i,p-a-1) and
    k_j = s_(p-a) ... s_j, and the (p - a)-braid eta_1 ... eta_a it is Markov
    equivalent to. `signs` is an (a, p - a - 1) array of +-1.

    With all signs +1 the left side is B(p, a) flipped at its U-crossing data
    and the right side is B(p - a, a).

    >>> lhs, rhs = block_reduction_pair(3, 1, [[1]])
    >>> lhs.to_ints(), rhs.to_ints()
    ((1, 2), (1,))
    """
    if not p > a >= 1:
        raise ValueError(f'Need p > a >= 1, got p={p}, a={a}')
    c = p - a
    signs = np.asarray(signs, dtype=int)
    if signs.size == 0:
        signs = signs.reshape(a, 0)
    if signs.shape != (a, c - 1):
        raise ValueError(
            f'Expected a sign matrix of shape {(a, c - 1)}, got {signs.shape}')
    if not np.all(np.isin(signs, (-1, 1))):
        raise ValueError(f'Signs must be +1 or -1, got {signs.tolist()}')
    lhs = []
    rhs = []
    for i in range(1, a + 1):
        eta = [Letter(index, int(sign))
               for index, sign in enumerate(signs[i - 1], start=1)]
        rhs.extend(eta)
        lhs.extend(eta)
        lhs.extend(
            Letter(index, 1 if index <= p - i else -1)
            for index in range(c, p)
        )
    return BraidWord(p, tuple(lhs)), BraidWord(c, tuple(rhs))


def symmetric_product(a: int, n: int) -> BraidWord:
    """
    B(a, a) followed by the reversed B(a, n), whose closure is the closure
    of B(a + n, a).

    >>> symmetric_product(2, 1).to_ints()
    (1, 1, 1)
    """
    return concat(toric_braid(a, a), reverse(toric_braid(a, n)))


def symmetric_product_certificate(a: int) -> Certificate:
    """
    Markov certificate from B(a + 1, a) to symmetric_product(a, 1).

    The letters s_a are moved to the end one at a time with run shifts,
    which leaves (s_1 ... s_(a-1))^a s_a s_(a-1) ... s_1. Conjugating the
    tail s_(a-1) ... s_1 to the front isolates s_a at the end, which is
    destabilized, and a second conjugation moves the tail back.
    """
    if a < 2:
        raise ValueError(f'Need a >= 2, got {a}')
    steps = []
    for j in range(2, a + 1):
        s = (j - 1) * a + 1
        for k in range(1, j):
            steps.append(RewriteStep(Rule.RUN_SHIFT, s - k, (a, 1)))
    tail = list(range(a - 1, 0, -1))
    steps.append(RewriteStep(Rule.M1_CONJUGATE, 0, tuple(tail)))
    first = (a - 1) + a * a
    steps.extend(
        RewriteStep(Rule.FREE_CANCEL, first - k) for k in range(a - 1))
    steps.append(RewriteStep(Rule.M2_DESTABILIZE, a * a))
    steps.append(RewriteStep(
        Rule.M1_CONJUGATE, 0, tuple(-index for index in reversed(tail))))
    steps.extend(
        RewriteStep(Rule.FREE_CANCEL, site) for site in range(a - 1, 0, -1))
    return Certificate(
        toric_braid(a + 1, a),
        symmetric_product(a, 1),
        steps,
    )
