from . import procedure
from . import recursion
from . import identities
from . import parity
from . import certify
from . import verify
from . import io
from .procedure import (
    ToricParams,
    staircase_positions,
    u_crossing_data,
    unknotting_number,
)
from .recursion import (
    EuclidStep,
    EuclidTrace,
    ProvenanceRecord,
    UnknottingPlan,
    euclid_trace,
    minimal_ucd,
    procedure_plan,
    mirrored_ucd,
    mirrored_plan,
)
from .identities import (
    staircase_factors,
    staircase_identity_word,
    descending_run,
    run_shift_pair,
    block_reduction_pair,
    symmetric_product,
    symmetric_product_certificate,
)
from .parity import ParityReport, matlab_parity
from .certify import DEFAULT_SEARCH_BUDGET, certify_unknot
from .verify import verify_plan
from .io import MalformedPlan, plan_to_json, plan_from_json, dump_plan, load_plan
