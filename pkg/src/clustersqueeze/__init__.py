"""Squeezing transformations for weighted-graph Gaussian cluster states.

For any real symmetric adjacency matrix the library constructs the
multi-mode squeezing transformation whose output state approximates the
corresponding cluster state, computes the nullifier covariance in closed
form, reduces the transformation to single-mode squeezers plus
interferometers, and verifies every result against a brute-force
matrix-exponential path.
"""

from .analysis import (
    DEFAULT_PHASE_SEED,
    ClusterRecovery,
    adjacency_from_k,
    adjacency_from_unitary,
    analyze_interaction,
    find_regular_phases,
    k_matrix_form,
    regularity_margin,
)
from .blochmessiah import (
    BlochMessiahFactors,
    bloch_messiah,
    canonical_cluster_interferometer,
    cluster_condition_residual,
    unitary_from_interferometer,
)
from .errors import (
    ClusterSqueezeError,
    DimensionMismatch,
    DomainError,
    DuplicateEdge,
    GaugeIncompatible,
    GraphFormatError,
    IndexOutOfRange,
    NonRealResult,
    NotHermitian,
    NotOrthogonal,
    NotPositiveDefinite,
    NotSymmetric,
    NotUnitary,
    OracleMismatch,
    ParseError,
    SearchExhausted,
    SingularInput,
    SingularPhasePoint,
)
from .graphs import (
    adjacency_matrix,
    format_graph,
    nullifier_map,
    parse_graph,
    phase_vector,
)
from .matfun import (
    hermitian_apply,
    is_hermitian,
    is_real,
    is_symmetric,
    is_unitary,
    polar_decompose_symmetric,
    takagi_symmetric_unitary,
)
from .oracle import (
    SweepPoint,
    bogoliubov_matrix,
    bogoliubov_oracle,
    convergence_sweep,
    covariance_from_pair,
    covariance_oracle,
    squeezing_generator,
    swap_form,
)
from .synthesis import (
    BogoliubovPair,
    CovarianceReport,
    GaugeCheck,
    InteractionMatrix,
    SqueezerMode,
    bogoliubov_from_interaction,
    covariance_closed_form,
    gauge_faithful,
    gauge_identity,
    interaction_from_cluster,
    resolve_gauge,
    squeezer_spectrum,
    unitary_from_adjacency,
    validate_gauge,
)
from .tolerances import DEFAULT_TOLERANCES, Tolerances

__version__ = "0.1.0"

__all__ = [
    "BlochMessiahFactors",
    "BogoliubovPair",
    "ClusterRecovery",
    "ClusterSqueezeError",
    "CovarianceReport",
    "DEFAULT_PHASE_SEED",
    "DEFAULT_TOLERANCES",
    "DimensionMismatch",
    "DomainError",
    "DuplicateEdge",
    "GaugeCheck",
    "GaugeIncompatible",
    "GraphFormatError",
    "IndexOutOfRange",
    "InteractionMatrix",
    "NonRealResult",
    "NotHermitian",
    "NotOrthogonal",
    "NotPositiveDefinite",
    "NotSymmetric",
    "NotUnitary",
    "OracleMismatch",
    "ParseError",
    "SearchExhausted",
    "SingularInput",
    "SingularPhasePoint",
    "SqueezerMode",
    "SweepPoint",
    "Tolerances",
    "adjacency_from_k",
    "adjacency_from_unitary",
    "adjacency_matrix",
    "analyze_interaction",
    "bloch_messiah",
    "bogoliubov_from_interaction",
    "bogoliubov_matrix",
    "bogoliubov_oracle",
    "canonical_cluster_interferometer",
    "cluster_condition_residual",
    "convergence_sweep",
    "covariance_closed_form",
    "covariance_from_pair",
    "covariance_oracle",
    "find_regular_phases",
    "format_graph",
    "gauge_faithful",
    "gauge_identity",
    "hermitian_apply",
    "interaction_from_cluster",
    "is_hermitian",
    "is_real",
    "is_symmetric",
    "is_unitary",
    "k_matrix_form",
    "nullifier_map",
    "parse_graph",
    "phase_vector",
    "polar_decompose_symmetric",
    "regularity_margin",
    "resolve_gauge",
    "squeezer_spectrum",
    "squeezing_generator",
    "swap_form",
    "takagi_symmetric_unitary",
    "unitary_from_adjacency",
    "unitary_from_interferometer",
    "validate_gauge",
]
