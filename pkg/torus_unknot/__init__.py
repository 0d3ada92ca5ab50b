from . import braids
from . import word_problem
from . import invariants
from . import unknotting
from . import utils
from . import visualization
