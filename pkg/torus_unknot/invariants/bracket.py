"""
Kauffman bracket and Jones polynomial of braid closures.

The bracket is contracted letter by letter over Temperley-Lieb states: a
state is a planar perfect matching of the 2n boundary points of the braid
read so far (top points 0..n-1, current bottom points n..2n-1). A crossing
contributes A * id + A^-1 * e_i, its inverse A^-1 * id + A * e_i, where e_i
caps the bottom points i, i+1 and opens a new cup below them.
"""
import logging
from fractions import Fraction
from typing import Dict, Tuple

from torus_unknot.braids.word import BraidWord, exponent_sum
from torus_unknot.invariants.laurent import LaurentPolynomial

logger = logging.getLogger('bracket')


__all__ = [
    'DEFAULT_CROSSING_BUDGET',
    'CrossingBudgetExceeded',
    'LOOP_VALUE',
    'kauffman_bracket',
    'jones_of_closure',
    'unlink_jones',
]

DEFAULT_CROSSING_BUDGET = 20

# -A^2 - A^-2
LOOP_VALUE = LaurentPolynomial.from_dict({2: -1, -2: -1}, variable='A')

Matching = Tuple[int, ...]


class CrossingBudgetExceeded(RuntimeError):
    def __init__(self, crossings: int, budget: int):
        super().__init__(
            f'{crossings} crossings exceed the crossing budget of {budget}')
        self.crossings = crossings
        self.budget = budget


def _cap(matching: Matching, strands: int, index: int):
    """Applies e_index, returns the new matching and whether a loop closed."""
    x, y = strands + index - 1, strands + index
    match = list(matching)
    a, b = match[x], match[y]
    closed = a == y
    if not closed:
        match[a], match[b] = b, a
    match[x], match[y] = y, x
    return tuple(match), closed


def _closure_loops(matching: Matching, strands: int) -> int:
    """Number of loops after joining top point k to bottom point n + k."""
    seen = [False] * (2 * strands)
    loops = 0
    for start in range(2 * strands):
        if seen[start]:
            continue
        loops += 1
        point = start
        while not seen[point]:
            seen[point] = True
            partner = matching[point]
            seen[partner] = True
            point = partner + strands if partner < strands else partner - strands
    return loops


def kauffman_bracket(
        word: BraidWord,
        crossing_budget: int = DEFAULT_CROSSING_BUDGET,
) -> LaurentPolynomial:
    """
    Bracket of the closure in the variable A, normalized so that a single
    circle has bracket 1.

    >>> print(kauffman_bracket(BraidWord.from_ints(2, [1])))
    -A^3
    >>> print(kauffman_bracket(BraidWord.empty(2)))
    -A^-2 - A^2
    """
    if len(word) > crossing_budget:
        logger.debug(
            f'Refusing bracket of {len(word)} crossings '
            f'(budget {crossing_budget})'
        )
        raise CrossingBudgetExceeded(len(word), crossing_budget)
    n = word.strands
    one = LaurentPolynomial.constant(1, 'A')
    identity = tuple(range(n, 2 * n)) + tuple(range(n))
    states: Dict[Matching, LaurentPolynomial] = {identity: one}
    for letter in word.letters:
        smooth = LaurentPolynomial.monomial(1, letter.sign, 'A')
        capped = LaurentPolynomial.monomial(1, -letter.sign, 'A')
        new_states: Dict[Matching, LaurentPolynomial] = {}
        for matching, coeff in states.items():
            new_states[matching] = new_states.get(matching, 0) + coeff * smooth
            target, closed = _cap(matching, n, letter.index)
            weight = coeff * capped
            if closed:
                weight = weight * LOOP_VALUE
            new_states[target] = new_states.get(target, 0) + weight
        states = {m: c for m, c in new_states.items() if not c.is_zero()}
    logger.debug(f'{len(states)} Temperley-Lieb states at the bottom')
    result = LaurentPolynomial((), 'A')
    for matching, coeff in states.items():
        result = result + coeff * LOOP_VALUE ** (_closure_loops(matching, n) - 1)
    return result


def jones_of_closure(
        word: BraidWord,
        crossing_budget: int = DEFAULT_CROSSING_BUDGET,
) -> LaurentPolynomial:
    """
    (-A^3)^-writhe * bracket, with A = t^(-1/4).

    >>> print(jones_of_closure(BraidWord.from_ints(2, [1, 1, 1])))
    t + t^3 - t^4
    >>> print(jones_of_closure(BraidWord.from_ints(2, [1, 1])))
    -t^(1/2) - t^(5/2)
    """
    bracket = kauffman_bracket(word, crossing_budget=crossing_budget)
    writhe = exponent_sum(word)
    framing = LaurentPolynomial.monomial((-1) ** (writhe % 2), -3 * writhe, 'A')
    return (framing * bracket).scale_exponents(-Fraction(1, 4), variable='t')


def unlink_jones(components: int) -> LaurentPolynomial:
    """
    (-t^(1/2) - t^(-1/2))^(d-1), the Jones polynomial of the d-component
    unlink.

    >>> print(unlink_jones(2))
    -t^(-1/2) - t^(1/2)
    """
    assert components >= 1, components
    loop = LaurentPolynomial.from_dict(
        {Fraction(1, 2): -1, Fraction(-1, 2): -1})
    return loop ** (components - 1)
