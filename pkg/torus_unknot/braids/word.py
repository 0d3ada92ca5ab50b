from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple


__all__ = [
    'InvalidBraidWord',
    'Letter',
    'BraidWord',
    'toric_braid',
    'apply_crossing_changes',
    'concat',
    'inverse',
    'reverse',
    'free_reduce',
    'exponent_sum',
    'parse_word',
    'format_word',
]


class InvalidBraidWord(ValueError):
    pass


@dataclass(frozen=True)
class Letter:
    """
    Elementary braid sigma_index raised to sign (+1 or -1).

    >>> Letter.from_int(-2)
    Letter(index=2, sign=-1)
    >>> Letter(3).to_int()
    3
    """
    index: int
    sign: int = 1

    def __post_init__(self):
        if self.index < 1:
            raise InvalidBraidWord(
                f'Generator index must be positive, not {self.index}')
        if self.sign not in (1, -1):
            raise InvalidBraidWord(f'Sign must be +1 or -1, not {self.sign}')

    @classmethod
    def from_int(cls, value: int) -> 'Letter':
        if value == 0:
            raise InvalidBraidWord('0 does not denote a generator')
        return cls(abs(value), 1 if value > 0 else -1)

    def to_int(self) -> int:
        return self.index * self.sign

    def flipped(self) -> 'Letter':
        return Letter(self.index, -self.sign)

    def cancels(self, other: 'Letter') -> bool:
        return self.index == other.index and self.sign == -other.sign

    def __str__(self):
        if self.sign > 0:
            return f's{self.index}'
        return f's{self.index}^-1'


@dataclass(frozen=True)
class BraidWord:
    """
    A braid word on `strands` strands, read top to bottom.

    Crossing positions used throughout the package are 1-based indices into
    `letters`.

    >>> w = BraidWord.from_ints(3, [1, -2, 1])
    >>> len(w), w.to_ints()
    (3, (1, -2, 1))
    >>> str(w)
    '1 -2 1'
    """
    strands: int
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise InvalidBraidWord(
                f'A braid needs at least one strand, not {self.strands}')
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, 'letters', tuple(self.letters))
        for position, letter in enumerate(self.letters, start=1):
            if letter.index >= self.strands:
                raise InvalidBraidWord(
                    f'Letter {letter} at position {position} does not fit '
                    f'on {self.strands} strands'
                )

    @classmethod
    def from_ints(cls, strands: int, values: Iterable[int]) -> 'BraidWord':
        return cls(strands, tuple(Letter.from_int(v) for v in values))

    @classmethod
    def empty(cls, strands: int) -> 'BraidWord':
        return cls(strands, ())

    def to_ints(self) -> Tuple[int, ...]:
        return tuple(letter.to_int() for letter in self.letters)

    def with_letters(self, letters: Iterable[Letter], strands: int = None):
        if strands is None:
            strands = self.strands
        return BraidWord(strands, tuple(letters))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, item):
        return self.letters[item]

    def __str__(self):
        return format_word(self)


def parse_word(text: str, strands: int) -> BraidWord:
    """
    Parses whitespace separated nonzero integers, k for sigma_k and -k for
    its inverse.

    >>> parse_word('1 1 -2', 3).to_ints()
    (1, 1, -2)
    >>> parse_word('', 1).letters
    ()
    """
    values = []
    for token in text.replace(',', ' ').split():
        try:
            values.append(int(token))
        except ValueError:
            raise InvalidBraidWord(
                f'Expected a signed integer, not {token!r}') from None
    return BraidWord.from_ints(strands, values)


def format_word(word: BraidWord) -> str:
    return ' '.join(map(str, word.to_ints()))


def toric_braid(p: int, q: int) -> BraidWord:
    """
    The toric braid (s1 s2 ... s_{p-1})^q on p strands.

    >>> toric_braid(2, 3).to_ints()
    (1, 1, 1)
    >>> len(toric_braid(7, 4))
    24
    """
    if p < 2 or q < 1:
        raise ValueError(
            f'Torus parameters need p >= 2 and q >= 1, got p={p}, q={q}')
    block = [Letter(i) for i in range(1, p)]
    return BraidWord(p, tuple(block * q))


def _check_positions(word: BraidWord, positions: Iterable[int]):
    positions = set(positions)
    for position in positions:
        if not 1 <= position <= len(word):
            raise ValueError(
                f'Crossing position {position} is outside of 1..{len(word)}')
    return positions


def apply_crossing_changes(word: BraidWord, positions: Iterable[int]):
    """
    Negates the sign of every letter whose 1-based position is listed.

    >>> apply_crossing_changes(toric_braid(2, 3), [2]).to_ints()
    (1, -1, 1)
    """
    positions = _check_positions(word, positions)
    return word.with_letters(
        letter.flipped() if position in positions else letter
        for position, letter in enumerate(word.letters, start=1)
    )


def concat(*words: BraidWord) -> BraidWord:
    if len(words) == 0:
        raise ValueError('concat needs at least one word')
    strands = {w.strands for w in words}
    if len(strands) != 1:
        raise ValueError(
            f'Cannot concatenate words on different strand counts: '
            f'{sorted(strands)}'
        )
    return BraidWord(
        words[0].strands,
        tuple(letter for w in words for letter in w.letters),
    )


def inverse(word: BraidWord) -> BraidWord:
    return word.with_letters(
        letter.flipped() for letter in reversed(word.letters))


def reverse(word: BraidWord) -> BraidWord:
    """
    Letter order reversed, signs and indices kept. This is an
    anti-automorphism of the braid group: every defining relation reads the
    same backwards.
    """
    return word.with_letters(reversed(word.letters))


def free_reduce(word: BraidWord) -> BraidWord:
    """
    >>> free_reduce(BraidWord.from_ints(3, [1, 2, -2, 1])).to_ints()
    (1, 1)
    """
    stack = []
    for letter in word.letters:
        if stack and stack[-1].cancels(letter):
            stack.pop()
        else:
            stack.append(letter)
    return word.with_letters(stack)


def exponent_sum(word: BraidWord) -> int:
    return sum(letter.sign for letter in word.letters)


def ints_to_letters(values: Sequence[int]) -> Tuple[Letter, ...]:
    return tuple(Letter.from_int(v) for v in values)
