"""Entanglement and local quantum uncertainty of two qubits under collective dephasing."""
from .analysis import (
    EventTimes, Region, RegionTag, SubRegion, Trajectory, classify, event_times,
    lqu_regime, phase_diagram, sudden_death_time, sudden_transition_time, trajectory,
)
from .channel import (
    ChannelParams, NoiseSampleConfig, apply_dephasing, decay_factor, evolve_params,
    monte_carlo_evolve,
)
from .correlations import (
    BetaBranches, CorrelationReport, LocalObservable, local_quantum_coherence,
    lqu_family, lqu_generic, negativity, pt_spectrum_family, skew_information, w_matrix,
)
from .linalg import hermitian_eig, kron, matrix_sqrt_psd, partial_transpose
from .states import (
    DensityMatrix, XStateParams, build_xstate, extract_params, validate_density,
)

__version__ = "0.1.0"

__all__ = [
    "BetaBranches",
    "ChannelParams",
    "CorrelationReport",
    "DensityMatrix",
    "EventTimes",
    "LocalObservable",
    "NoiseSampleConfig",
    "Region",
    "RegionTag",
    "SubRegion",
    "Trajectory",
    "XStateParams",
    "apply_dephasing",
    "build_xstate",
    "classify",
    "decay_factor",
    "event_times",
    "evolve_params",
    "extract_params",
    "hermitian_eig",
    "kron",
    "local_quantum_coherence",
    "lqu_family",
    "lqu_generic",
    "lqu_regime",
    "matrix_sqrt_psd",
    "monte_carlo_evolve",
    "negativity",
    "partial_transpose",
    "phase_diagram",
    "pt_spectrum_family",
    "skew_information",
    "sudden_death_time",
    "sudden_transition_time",
    "trajectory",
    "validate_density",
    "w_matrix",
]
