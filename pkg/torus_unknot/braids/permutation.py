from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from torus_unknot.braids.word import BraidWord


__all__ = [
    'Permutation',
    'underlying_permutation',
    'component_count_of_closure',
]


@dataclass(frozen=True)
class Permutation:
    """
    `image[s - 1]` is the bottom position reached by the strand that starts
    at top position s (both 1-based).
    """
    image: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(1, len(self.image) + 1)):
            raise ValueError(f'Not a permutation of 1..n: {self.image}')

    @classmethod
    def identity(cls, n: int) -> 'Permutation':
        return cls(tuple(range(1, n + 1)))

    @property
    def size(self) -> int:
        return len(self.image)

    def is_identity(self) -> bool:
        return all(s == t for s, t in enumerate(self.image, start=1))

    def cycles(self) -> List[Tuple[int, ...]]:
        seen = set()
        cycles = []
        for start in range(1, self.size + 1):
            if start in seen:
                continue
            cycle = []
            s = start
            while s not in seen:
                seen.add(s)
                cycle.append(s)
                s = self.image[s - 1]
            cycles.append(tuple(cycle))
        return cycles

    def __call__(self, s: int) -> int:
        return self.image[s - 1]


def underlying_permutation(word: BraidWord) -> Permutation:
    """
    Composes the transpositions (i, i+1) of all letters in reading order,
    ignoring signs.

    >>> underlying_permutation(BraidWord.from_ints(2, [1])).image
    (2, 1)
    >>> underlying_permutation(BraidWord.from_ints(3, [1, 2])).image
    (3, 1, 2)
    """
    # occupant[k] is the start strand currently at position k (0-based)
    occupant = np.arange(word.strands)
    for letter in word.letters:
        i = letter.index
        occupant[[i - 1, i]] = occupant[[i, i - 1]]
    image = np.empty(word.strands, dtype=int)
    image[occupant] = np.arange(1, word.strands + 1)
    return Permutation(tuple(int(v) for v in image))


def component_count_of_closure(word: BraidWord) -> int:
    return len(underlying_permutation(word).cycles())
