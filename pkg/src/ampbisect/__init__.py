"""Binary-search measurement of real probability amplitudes on a state-vector simulator."""
from .baseline import SampleReport, estimate_angles, required_shots, sample, sample_counts
from .bisection import (
    SearchConfig,
    SearchResult,
    bisect_angle,
    bound_for_iters,
    iters_for_error,
    search_all,
    search_multi,
    search_single,
)
from .comparator import (
    ComparisonOutcome,
    PipelineTrace,
    compare_multi,
    compare_multi_full,
    compare_single,
    pipeline_trace,
)
from .gates import GateName, embed_a, operator_a, rotation_c, standard_gate
from .generators import generate_frqi_state, generate_random_state
from .separable import FactorAngles, NotSeparableError, factor_product_state, search_separable
from .statevector import (
    BasisIndex,
    DomainError,
    LinearOperator,
    Projector,
    QuantumState,
    apply,
    inner,
    prepare_from_amplitudes,
    prepare_from_angle,
    project_and_renormalize,
    tensor,
)

__version__ = "0.1.0"
