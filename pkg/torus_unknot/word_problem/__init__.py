from . import handle_reduction
from . import rewrite
from . import certificate
from .handle_reduction import (
    DEFAULT_STEP_CAP,
    StepCapExceeded,
    reduce_handles,
    is_identity,
    are_equal,
)
from .rewrite import Rule, RewriteStep, IllegalStep, apply_step
from .certificate import (
    CertificateKind,
    Certificate,
    check_certificate,
    first_illegal_step,
    reverse_certificate,
    dump_certificate,
    load_certificate,
)
