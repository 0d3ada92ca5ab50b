import itertools
import math

import pytest

from torus_unknot.braids import (
    BraidWord, apply_crossing_changes, reverse, toric_braid,
)
from torus_unknot.unknotting import certify_unknot, minimal_ucd, u_crossing_data
from torus_unknot.unknotting.certify import toric_shape
from torus_unknot.word_problem import Rule, check_certificate


def assert_unlink_certificate(certificate, word, components):
    assert certificate is not None, word
    assert certificate.start == word
    assert certificate.end.strands == components
    assert len(certificate.end) == 0
    assert check_certificate(certificate)


def test_three_strand_period_plus_one():
    word = apply_crossing_changes(toric_braid(3, 4), [4, 5, 6])
    certificate = certify_unknot(word)
    assert_unlink_certificate(certificate, word, 1)
    assert [step.rule for step in certificate.steps] == [
        Rule.GROUP_REWRITE, Rule.M2_DESTABILIZE, Rule.M2_DESTABILIZE,
    ]


@pytest.mark.parametrize('p, q', tuple(
    (p, m * p + e)
    for p in range(2, 7) for m in (1, 2) for e in (-1, 1)
))
def test_u_crossing_data_near_multiples(p, q):
    word = apply_crossing_changes(toric_braid(p, q), u_crossing_data(p, q))
    assert_unlink_certificate(certify_unknot(word), word, 1)


@pytest.mark.parametrize('p, q', tuple(
    (p, q) for p, q in itertools.product(range(2, 7), repeat=2)
))
def test_minimal_ucd(p, q):
    word = minimal_ucd(p, q).flipped_word()
    assert_unlink_certificate(certify_unknot(word), word, math.gcd(p, q))


def test_reversed_word():
    word = reverse(minimal_ucd(7, 4).flipped_word())
    assert toric_shape(word) is None
    assert_unlink_certificate(certify_unknot(word), word, 1)


def test_nontrivial_closures_are_not_certified():
    assert certify_unknot(toric_braid(3, 2)) is None
    assert certify_unknot(toric_braid(2, 2)) is None
    assert certify_unknot(BraidWord.from_ints(3, [1, -2, 1, -2])) is None


def test_search_budget():
    word = minimal_ucd(7, 4).flipped_word()
    assert certify_unknot(word, budget=1) is None
    certificate = certify_unknot(word)
    assert certify_unknot(word, budget=len(certificate)) is not None


def test_step_cap():
    # every strategy needs a word problem with at least two handle reductions
    word = minimal_ucd(3, 4).flipped_word()
    assert certify_unknot(word, step_cap=1) is None
    assert certify_unknot(word) is not None


def test_greedy_search():
    # s2 s1 conjugated by s2^-1
    word = BraidWord.from_ints(3, [2, 2, 1, -2])
    assert toric_shape(word) is None
    assert_unlink_certificate(certify_unknot(word), word, 1)
