import itertools
import math

import numpy as np
import pytest

import torus_unknot
from torus_unknot.braids import (
    BraidWord,
    InvalidBraidWord,
    Letter,
    apply_crossing_changes,
    component_count_of_closure,
    concat,
    conjugate,
    destabilize,
    exponent_sum,
    free_reduce,
    inverse,
    parse_word,
    reverse,
    rotate,
    stabilize,
    toric_braid,
    underlying_permutation,
)
from torus_unknot.unknotting import minimal_ucd, unknotting_number
from torus_unknot.utils import get_rng, random_word


toric_grid = pytest.mark.parametrize(
    'p, q', tuple(itertools.product(range(2, 9), range(1, 9)))
)


@toric_grid
def test_toric_braid_shape(p, q):
    word = toric_braid(p, q)
    assert word.strands == p
    assert len(word) == q * (p - 1)
    assert word.to_ints() == tuple(range(1, p)) * q


@toric_grid
def test_closure_components_of_toric_braid(p, q):
    assert component_count_of_closure(toric_braid(p, q)) == math.gcd(p, q)


def test_invalid_torus_parameters():
    with pytest.raises(ValueError):
        toric_braid(1, 3)
    with pytest.raises(ValueError):
        toric_braid(3, 0)


def test_apply_crossing_changes():
    word = toric_braid(3, 4)
    flipped = apply_crossing_changes(word, [4, 5, 6])
    assert flipped.to_ints() == (1, 2, 1, -2, -1, -2, 1, 2)

    # positions are a set, flipping twice is not a thing
    assert apply_crossing_changes(word, [4, 4]) == apply_crossing_changes(word, [4])

    for position in (0, 9, -1):
        with pytest.raises(ValueError):
            apply_crossing_changes(word, [position])


def test_crossing_changes_keep_permutation():
    rng = get_rng('crossing_changes')
    for _ in range(20):
        word = random_word(5, 12, rng)
        positions = rng.choice(np.arange(1, 13), size=4, replace=False)
        flipped = apply_crossing_changes(word, positions.tolist())
        assert underlying_permutation(flipped) == underlying_permutation(word)


def test_parse_and_format():
    word = parse_word('1 -2 1', 3)
    assert word.letters == (Letter(1), Letter(2, -1), Letter(1))
    assert str(word) == '1 -2 1'
    assert parse_word('1, 2', 3).to_ints() == (1, 2)
    assert len(parse_word('', 2)) == 0

    with pytest.raises(InvalidBraidWord):
        parse_word('1 x', 3)
    with pytest.raises(InvalidBraidWord):
        parse_word('0', 3)
    with pytest.raises(InvalidBraidWord):
        # s3 does not fit on three strands
        parse_word('3', 3)
    with pytest.raises(InvalidBraidWord):
        BraidWord.from_ints(0, [])


def test_inverse_and_reverse():
    word = BraidWord.from_ints(4, [1, -2, 3, 3])
    assert inverse(word).to_ints() == (-3, -3, 2, -1)
    assert reverse(word).to_ints() == (3, 3, -2, 1)
    assert inverse(inverse(word)) == word
    assert len(free_reduce(concat(word, inverse(word)))) == 0

    with pytest.raises(ValueError):
        concat(word, BraidWord.empty(3))


def test_markov_moves():
    word = BraidWord.from_ints(3, [1, 2, -1])
    assert conjugate(word, BraidWord.from_ints(3, [1])).to_ints() == (1, 1, 2, -1, -1)
    assert rotate(word, 1).to_ints() == (2, -1, 1)
    assert rotate(word, 3) == word

    stabilized = stabilize(word, -1)
    assert stabilized.strands == 4
    assert stabilized.to_ints() == (1, 2, -1, -3)
    assert destabilize(stabilized) == word

    with pytest.raises(ValueError):
        # s2 occurs twice
        destabilize(BraidWord.from_ints(3, [2, 1, 2]))
    with pytest.raises(ValueError):
        destabilize(BraidWord.empty(1))


@pytest.mark.parametrize('strands', range(2, 7))
def test_markov_moves_keep_components(strands):
    rng = get_rng('markov', strands)
    for _ in range(10):
        word = random_word(strands, 10, rng)
        components = component_count_of_closure(word)
        conjugator = random_word(strands, 3, rng)
        assert component_count_of_closure(conjugate(word, conjugator)) == components
        assert component_count_of_closure(rotate(word, 4)) == components
        assert component_count_of_closure(stabilize(word, 1)) == components
        assert component_count_of_closure(stabilize(word, -1)) == components


def test_top_generator_positions():
    word = BraidWord.from_ints(4, [3, 1, -3, 2])
    assert torus_unknot.braids.markov.top_generator_positions(word) == [1, 3]


def test_exponent_sum():
    assert exponent_sum(toric_braid(3, 2)) == 4
    assert exponent_sum(BraidWord.empty(3)) == 0
    assert exponent_sum(BraidWord.from_ints(3, [1, -2, -2])) == -1


@toric_grid
def test_exponent_sum_after_crossing_changes(p, q):
    word = toric_braid(p, q)
    assert exponent_sum(word) == q * (p - 1)
    rng = get_rng('exponent_sum', p, q)
    for k in range(len(word) + 1):
        positions = rng.choice(np.arange(1, len(word) + 1), size=k, replace=False)
        flipped = apply_crossing_changes(word, positions.tolist())
        assert exponent_sum(flipped) == q * (p - 1) - 2 * k


@pytest.mark.parametrize('p, q', tuple(
    (p, q) for p, q in itertools.product(range(2, 9), repeat=2)
    if math.gcd(p, q) == 1
))
def test_exponent_sum_after_minimal_crossing_changes(p, q):
    plan = minimal_ucd(p, q)
    u = unknotting_number(p, q)
    assert len(plan) == u
    assert exponent_sum(plan.flipped_word()) == q * (p - 1) - 2 * u


@toric_grid
def test_toric_braid_permutation(p, q):
    assert underlying_permutation(toric_braid(p, q)).is_identity() == (q % p == 0)


@toric_grid
def test_reverse_of_toric_braid(p, q):
    descending = BraidWord.from_ints(p, list(range(p - 1, 0, -1)) * q)
    assert reverse(toric_braid(p, q)) == descending


def test_toric_braid_words():
    assert reverse(toric_braid(4, 1)).to_ints() == (3, 2, 1)
    word = concat(toric_braid(4, 4), reverse(toric_braid(4, 1)))
    assert len(word) == 15
    assert word.to_ints() == (1, 2, 3) * 4 + (3, 2, 1)

    stabilized = BraidWord.from_ints(5, [1, 2, 3] * 4 + [4])
    assert destabilize(stabilized) == toric_braid(4, 4)
    assert destabilize(stabilized).strands == 4
