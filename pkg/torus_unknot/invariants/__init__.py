from . import laurent
from . import burau
from . import bracket
from . import verdict
from .laurent import LaurentPolynomial
from .burau import burau_matrix, burau_equal, alexander_of_closure
from .bracket import (
    DEFAULT_CROSSING_BUDGET,
    CrossingBudgetExceeded,
    kauffman_bracket,
    jones_of_closure,
    unlink_jones,
)
from .verdict import VerdictStatus, TrivialityVerdict, triviality_verdict
