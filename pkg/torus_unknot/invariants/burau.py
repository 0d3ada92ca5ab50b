"""
Burau representation over exact Laurent polynomials and the Alexander
polynomial of a braid closure.

The Alexander polynomial uses the reduced representation:
det(I - burau(w)) = (1 + t + ... + t^(n-1)) * Alexander(closure of w)
up to a unit +-t^k.
"""
import logging

import numpy as np
import sympy as sp

from torus_unknot.braids.word import BraidWord
from torus_unknot.invariants.laurent import LaurentPolynomial

logger = logging.getLogger('burau')


__all__ = [
    'burau_matrix',
    'burau_to_sympy',
    'burau_equal',
    'alexander_of_closure',
]

T = sp.Symbol('t')


def _poly(mapping):
    return LaurentPolynomial.from_dict(mapping)


_ZERO = LaurentPolynomial()
_ONE = LaurentPolynomial.constant(1)


def _identity(size):
    matrix = np.full((size, size), _ZERO, dtype=object)
    for k in range(size):
        matrix[k, k] = _ONE
    return matrix


def _unreduced_generator(strands, index, sign):
    matrix = _identity(strands)
    i = index - 1
    if sign > 0:
        block = [[_poly({0: 1, 1: -1}), _poly({1: 1})], [_ONE, _ZERO]]
    else:
        block = [[_ZERO, _ONE], [_poly({-1: 1}), _poly({0: 1, -1: -1})]]
    matrix[i:i + 2, i:i + 2] = np.array(block, dtype=object)
    return matrix


def _reduced_generator(strands, index, sign):
    size = strands - 1
    matrix = _identity(size)
    t = _poly({sign: 1})
    minus_t = -t
    if size == 1:
        matrix[0, 0] = minus_t
        return matrix
    if sign > 0:
        first = [[minus_t, _ZERO], [_ONE, _ONE]]
        middle = [[_ONE, t, _ZERO], [_ZERO, minus_t, _ZERO], [_ZERO, _ONE, _ONE]]
        last = [[_ONE, t], [_ZERO, minus_t]]
    else:
        first = [[minus_t, _ZERO], [t, _ONE]]
        middle = [[_ONE, _ONE, _ZERO], [_ZERO, minus_t, _ZERO], [_ZERO, t, _ONE]]
        last = [[_ONE, _ONE], [_ZERO, minus_t]]
    if index == 1:
        matrix[0:2, 0:2] = np.array(first, dtype=object)
    elif index == strands - 1:
        matrix[size - 2:, size - 2:] = np.array(last, dtype=object)
    else:
        i = index - 1
        matrix[i - 1:i + 2, i - 1:i + 2] = np.array(middle, dtype=object)
    return matrix


def burau_matrix(word: BraidWord, reduced: bool = True) -> np.ndarray:
    """
    Product of the generator matrices in letter order, as an object array of
    LaurentPolynomial. The reduced representation has size strands - 1.

    >>> print(burau_matrix(BraidWord.from_ints(2, [1, 1]))[0, 0])
    t^2
    """
    generator = _reduced_generator if reduced else _unreduced_generator
    size = word.strands - 1 if reduced else word.strands
    matrix = _identity(size)
    for letter in word.letters:
        matrix = matrix.dot(generator(word.strands, letter.index, letter.sign))
    return matrix


def burau_to_sympy(matrix: np.ndarray) -> sp.Matrix:
    return sp.Matrix(matrix.shape[0], matrix.shape[1], [
        entry.to_sympy(T) for entry in matrix.flat
    ])


def burau_equal(word1: BraidWord, word2: BraidWord, reduced=False) -> bool:
    """Entrywise equality of the Burau matrices."""
    if word1.strands != word2.strands:
        raise ValueError(
            f'Cannot compare braids on {word1.strands} and '
            f'{word2.strands} strands'
        )
    m1 = burau_matrix(word1, reduced=reduced)
    m2 = burau_matrix(word2, reduced=reduced)
    return all(a == b for a, b in zip(m1.flat, m2.flat))


def _divide_exactly(numerator: LaurentPolynomial, degree: int):
    """Divides by 1 + t + ... + t^degree, which must divide exactly."""
    if numerator.is_zero():
        return numerator
    low = numerator.min_exponent
    assert low.denominator == 1, ('Unexpected fractional exponent', numerator)
    shifted = numerator.shift(-low)
    divisor = sp.Poly(sum(T ** k for k in range(degree + 1)), T)
    quotient, remainder = sp.div(sp.Poly(shifted.to_sympy(T), T), divisor)
    assert remainder.is_zero, (
        'Burau determinant is not divisible', numerator, degree)
    return LaurentPolynomial.from_sympy(quotient.as_expr(), T).shift(low)


def alexander_of_closure(word: BraidWord) -> LaurentPolynomial:
    """
    Alexander polynomial of the closure, normalized to lowest exponent 0
    with a positive lowest coefficient. Split links give 0.

    >>> print(alexander_of_closure(BraidWord.from_ints(2, [1, 1, 1])))
    1 - t + t^2
    >>> print(alexander_of_closure(BraidWord.from_ints(2, [1, -1, 1])))
    1
    >>> print(alexander_of_closure(BraidWord.empty(2)))
    0
    """
    n = word.strands
    if n == 1:
        return LaurentPolynomial.constant(1)
    matrix = _identity(n - 1) - burau_matrix(word, reduced=True)
    determinant = LaurentPolynomial.from_sympy(
        burau_to_sympy(matrix).det(method='berkowitz'), T)
    logger.debug(f'det(I - burau) = {determinant} for {len(word)} letters')
    return _divide_exactly(determinant, n - 1).normalized()
