import numpy as np

import paderbox as pb

from torus_unknot.braids.word import BraidWord


def get_rng(*seed: [str, int]) -> np.random.Generator:
    return pb.utils.random_utils.str_to_random_generator(
        '_'.join(map(str, seed)))


def random_word(
        strands: int,
        length: int,
        rng: np.random.Generator,
) -> BraidWord:
    """Uniform random word over the generators and their inverses."""
    if strands < 2:
        return BraidWord.empty(strands)
    indices = rng.integers(1, strands, size=length)
    signs = rng.choice([-1, 1], size=length)
    return BraidWord.from_ints(strands, (indices * signs).tolist())
