from . import rng
from .rng import get_rng, random_word
