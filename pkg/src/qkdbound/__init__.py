"""Security analysis toolkit for d-dimensional two-basis QKD protocols.

The package computes certified upper bounds on the phase error rate of
qudit QKD protocols that transmit only a subset of the monitoring-basis
states, via a dense semidefinite-programming engine, and converts those
bounds into secret-key fractions, three-intensity decoy-state key rates,
and key-rate-versus-loss simulations with an optional detector-saturation
model.
"""

from .operators import (
    ProtocolConfig,
    ConstraintSet,
    fourier_matrix,
    phase_state,
    bob_phase_state,
    error_operator_T,
    error_operator_F,
    weyl_operators,
    build_constraints,
    ideal_statistics,
)
from .sdp import (
    SdpProblem,
    SdpSolution,
    SdpStatus,
    SdpFailure,
    CertificationError,
    embed_real,
    solve_max,
    certify,
)
from .bounds import (
    BoundCurve,
    BoundPoint,
    CurveRangeError,
    phase_error_bound,
    phase_error_point,
    bound_curve,
    lookup_bound,
)
from .keyrate import (
    DecoySettings,
    MeasuredStatistics,
    KeyRateBreakdown,
    entropy_d,
    key_fraction_single_photon,
    error_tolerance,
    crossover_with_qubit,
    zero_photon_yield,
    single_photon_yield,
    single_photon_gain,
    single_photon_error,
    key_fraction_decoy,
)
from .channel import (
    ChannelParams,
    DetectorModel,
    SimulationParams,
    gain,
    error_prob,
    apply_saturation,
    model_statistics,
    optimize_intensities,
    simulate_rate_curve,
)

__version__ = "0.1.0"

__all__ = [
    "ProtocolConfig",
    "ConstraintSet",
    "fourier_matrix",
    "phase_state",
    "bob_phase_state",
    "error_operator_T",
    "error_operator_F",
    "weyl_operators",
    "build_constraints",
    "ideal_statistics",
    "SdpProblem",
    "SdpSolution",
    "SdpStatus",
    "SdpFailure",
    "CertificationError",
    "embed_real",
    "solve_max",
    "certify",
    "BoundCurve",
    "BoundPoint",
    "CurveRangeError",
    "phase_error_bound",
    "phase_error_point",
    "bound_curve",
    "lookup_bound",
    "DecoySettings",
    "MeasuredStatistics",
    "KeyRateBreakdown",
    "entropy_d",
    "key_fraction_single_photon",
    "error_tolerance",
    "crossover_with_qubit",
    "zero_photon_yield",
    "single_photon_yield",
    "single_photon_gain",
    "single_photon_error",
    "key_fraction_decoy",
    "ChannelParams",
    "DetectorModel",
    "SimulationParams",
    "gain",
    "error_prob",
    "apply_saturation",
    "model_statistics",
    "optimize_intensities",
    "simulate_rate_curve",
]
