from . import word
from . import permutation
from . import markov
from .word import (
    InvalidBraidWord,
    Letter,
    BraidWord,
    toric_braid,
    apply_crossing_changes,
    concat,
    inverse,
    reverse,
    free_reduce,
    exponent_sum,
    parse_word,
    format_word,
)
from .permutation import (
    Permutation,
    underlying_permutation,
    component_count_of_closure,
)
from .markov import conjugate, rotate, stabilize, destabilize
