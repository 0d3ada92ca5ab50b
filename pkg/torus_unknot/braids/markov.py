"""
Markov moves on braid words. Conjugation (M1) keeps the strand count,
(de)stabilization (M2) changes it by one. Both keep the closure.
"""
from torus_unknot.braids.word import BraidWord, Letter, concat, inverse


__all__ = [
    'conjugate',
    'rotate',
    'stabilize',
    'destabilize',
    'top_generator_positions',
]


def conjugate(word: BraidWord, conjugator: BraidWord) -> BraidWord:
    """
    Returns conjugator * word * conjugator^-1 without any cancellation.

    >>> w = BraidWord.from_ints(3, [1, 2])
    >>> conjugate(w, BraidWord.from_ints(3, [2])).to_ints()
    (2, 1, 2, -2)
    """
    return concat(conjugator, word, inverse(conjugator))


def rotate(word: BraidWord, shift: int) -> BraidWord:
    """
    Cyclic rotation moving the first `shift` letters to the end. This is the
    free reduction of a conjugation by the inverse of those letters.

    >>> rotate(BraidWord.from_ints(3, [1, 2, -1]), 1).to_ints()
    (2, -1, 1)
    """
    if len(word) == 0:
        return word
    shift %= len(word)
    return word.with_letters(word.letters[shift:] + word.letters[:shift])


def stabilize(word: BraidWord, sign: int = 1) -> BraidWord:
    """
    Appends sigma_n^sign and adds the (n+1)-th strand.

    >>> stabilize(BraidWord.from_ints(2, [1])).to_ints()
    (1, 2)
    """
    n = word.strands
    return BraidWord(n + 1, word.letters + (Letter(n, sign),))


def top_generator_positions(word: BraidWord):
    """1-based positions of letters using the top generator sigma_{n-1}."""
    top = word.strands - 1
    return [
        position for position, letter in enumerate(word.letters, start=1)
        if letter.index == top
    ]


def destabilize(word: BraidWord) -> BraidWord:
    """
    Removes the unique occurrence of sigma_{n-1}^{+-1} and the n-th strand.

    When the occurrence is not the last letter, the word is first rotated so
    that it is (conjugation), i.e. A s B becomes B A.

    >>> destabilize(BraidWord.from_ints(3, [1, 2])).to_ints()
    (1,)
    >>> destabilize(BraidWord.from_ints(3, [1, -2, 1])).to_ints()
    (1, 1)
    """
    if word.strands < 2:
        raise ValueError('Cannot destabilize a braid on a single strand')
    positions = top_generator_positions(word)
    if len(positions) != 1:
        raise ValueError(
            f'Destabilization needs exactly one occurrence of the top '
            f'generator s{word.strands - 1}, found {len(positions)} '
            f'at {positions}'
        )
    k = positions[0] - 1
    letters = word.letters[k + 1:] + word.letters[:k]
    return BraidWord(word.strands - 1, letters)
