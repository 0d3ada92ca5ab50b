import logging

from torus_unknot.braids.permutation import underlying_permutation
from torus_unknot.braids.word import (
    BraidWord, Letter, concat, exponent_sum, free_reduce, inverse,
)

logger = logging.getLogger('handle_reduction')


__all__ = [
    'DEFAULT_STEP_CAP',
    'StepCapExceeded',
    'find_handle',
    'reduce_handles',
    'is_identity',
    'are_equal',
]

DEFAULT_STEP_CAP = 10 ** 6


class StepCapExceeded(RuntimeError):
    """The word problem was not decided within the allowed reductions."""
    def __init__(self, steps: int, length: int):
        super().__init__(
            f'Handle reduction stopped after {steps} reductions '
            f'(current word length {length})'
        )
        self.steps = steps
        self.length = length


def find_handle(letters, start: int = 0):
    """
    Finds the handle whose closing letter comes first, scanning from `start`.

    A s_i-handle is a subword s_i^e v s_i^-e where v only contains letters
    s_j with j > i. Returns the pair (open, close) of 0-based indices or
    None.

    >>> from torus_unknot.braids.word import ints_to_letters
    >>> find_handle(ints_to_letters([2, 1, 2, -1]))
    (1, 3)
    >>> find_handle(ints_to_letters([1, 2, 1])) is None
    True
    """
    for close in range(start, len(letters)):
        index, sign = letters[close].index, letters[close].sign
        for open_ in range(close - 1, -1, -1):
            other = letters[open_]
            if other.index < index:
                break
            if other.index == index:
                if other.sign == -sign:
                    return open_, close
                break
    return None


def _reduce_at(letters, open_: int, close: int):
    index = letters[open_].index
    e = letters[open_].sign
    middle = []
    for letter in letters[open_ + 1:close]:
        if letter.index == index + 1:
            middle.extend([
                Letter(index + 1, -e),
                Letter(index, letter.sign),
                Letter(index + 1, e),
            ])
        else:
            middle.append(letter)
    letters[open_:close + 1] = middle


def reduce_handles(word: BraidWord, step_cap: int = DEFAULT_STEP_CAP):
    """
    Dehornoy handle reduction, always reducing the handle that closes first.
    That handle contains no other handle, so each reduction is permitted and
    the procedure terminates. The result contains no handle: it is empty,
    or its lowest generator occurs with one sign only.

    Raises StepCapExceeded after `step_cap` reductions.
    """
    letters = list(word.letters)
    steps = 0
    start = 0
    while True:
        handle = find_handle(letters, start)
        if handle is None:
            break
        steps += 1
        if steps > step_cap:
            raise StepCapExceeded(steps - 1, len(letters))
        _reduce_at(letters, *handle)
        # Everything left of the handle is untouched and handle free.
        start = handle[0]
        if steps % 100000 == 0:
            logger.debug(
                f'{steps} handle reductions, word length {len(letters)}')
    return word.with_letters(letters)


def is_identity(word: BraidWord, step_cap: int = DEFAULT_STEP_CAP) -> bool:
    """
    Exact decision whether `word` represents the trivial braid.

    >>> is_identity(BraidWord.from_ints(3, [1, 2, 1, -2, -1, -2]))
    True
    >>> is_identity(BraidWord.from_ints(3, [1, 2, -1, -2]))
    False
    """
    if exponent_sum(word) != 0:
        return False
    if not underlying_permutation(word).is_identity():
        return False
    word = free_reduce(word)
    if len(word) == 0:
        return True
    return len(reduce_handles(word, step_cap=step_cap)) == 0


def are_equal(
        word1: BraidWord,
        word2: BraidWord,
        step_cap: int = DEFAULT_STEP_CAP,
) -> bool:
    if word1.strands != word2.strands:
        raise ValueError(
            f'Cannot compare braids on {word1.strands} and '
            f'{word2.strands} strands'
        )
    return is_identity(concat(word1, inverse(word2)), step_cap=step_cap)
