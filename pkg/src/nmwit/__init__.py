"""Qubit channel divisibility classification, SPA-based indivisibility
witnesses, and positive-map entanglement detection.

All heavy lifting is dense small-matrix numerics on numpy arrays; every
public operation is a pure function over immutable values.
"""

from .choi import ChoiState, DivisibilityVerdict, choi_of, choi_state, classify, scan
from .entanglement import (
    MapFamilyPoint,
    PhaseScanRow,
    WernerState,
    detect_entanglement,
    family_map_apply,
    is_cp,
    is_positive,
    phase_scan,
    werner,
    werner_threshold,
)
from .errors import (
    DegenerateMinimum,
    DimensionMismatch,
    EmptyGrid,
    MapNotPositive,
    NmwitError,
    NonHermitianInput,
    NonHermitianJump,
    NonPositiveEpsilon,
    ParameterOutOfRange,
)
from .kernel import (
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    Spectrum,
    eig_hermitian,
    is_density,
    is_hermitian,
    max_entangled,
    partial_trace,
    projector,
    tensor,
    trace_norm,
)
from .lindblad import (
    CoefficientModel,
    LindbladGenerator,
    SmallTimeMap,
    apply_generator,
    constant,
    dephasing,
    depolarizer,
    eternal_depolarizer,
    eternal_tanh,
    extend_and_apply,
    from_callable,
    generator_from_dict,
    load_generator,
    small_time_map,
    tabulated,
)
from .spa import SpaDecomposition, optimal_decomposition, optimal_p, spa_mix
from .witness import (
    MARKOVIAN_CONSISTENT,
    NON_MARKOVIAN_DETECTED,
    WitnessOperator,
    build_witness,
    classify_by_witness,
    evaluate,
    adjoint_identity_max_residual,
    adjoint_identity_residual,
    witness_to_dict,
)

__version__ = "0.1.0"

__all__ = [
    "ChoiState",
    "CoefficientModel",
    "DegenerateMinimum",
    "DimensionMismatch",
    "DivisibilityVerdict",
    "EmptyGrid",
    "LindbladGenerator",
    "MapFamilyPoint",
    "MapNotPositive",
    "MARKOVIAN_CONSISTENT",
    "NON_MARKOVIAN_DETECTED",
    "NmwitError",
    "NonHermitianInput",
    "NonHermitianJump",
    "NonPositiveEpsilon",
    "ParameterOutOfRange",
    "PhaseScanRow",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "SmallTimeMap",
    "SpaDecomposition",
    "Spectrum",
    "WernerState",
    "WitnessOperator",
    "apply_generator",
    "build_witness",
    "choi_of",
    "choi_state",
    "classify",
    "classify_by_witness",
    "constant",
    "dephasing",
    "depolarizer",
    "detect_entanglement",
    "eig_hermitian",
    "eternal_depolarizer",
    "eternal_tanh",
    "evaluate",
    "extend_and_apply",
    "family_map_apply",
    "from_callable",
    "generator_from_dict",
    "is_cp",
    "is_density",
    "is_hermitian",
    "is_positive",
    "load_generator",
    "max_entangled",
    "optimal_decomposition",
    "optimal_p",
    "partial_trace",
    "phase_scan",
    "projector",
    "adjoint_identity_max_residual",
    "adjoint_identity_residual",
    "scan",
    "small_time_map",
    "spa_mix",
    "tabulated",
    "tensor",
    "trace_norm",
    "werner",
    "werner_threshold",
    "witness_to_dict",
]
