"""Wave-packet neutrino oscillations and the quantum-information
quantities they drive: memory-assisted entropic uncertainty and the
nonlocal advantage of quantum coherence."""

from .analysis import (
    IdentityReport,
    SweepRow,
    SweepSpec,
    asymptotic_probabilities,
    check_identity,
    find_local_minima,
    sweep,
    threshold_angle,
)
from .eur import EurResult, binary_entropy, eur_closed, eur_general, max_overlap_pauli, measured_state
from .flavorstate import (
    BlochDecomposition,
    FlavorAmplitudes,
    amplitudes_from_probabilities,
    bipartite_state,
    bloch_decompose,
    bloch_reconstruct,
    state_from_probabilities,
)
from .naqc import (
    MEASURES,
    NaqcTriple,
    coherence_l1,
    coherence_re,
    coherence_sk,
    naqc_bound,
    naqc_closed,
    naqc_general,
    naqc_triple,
)
from .oscillation import (
    ExperimentPreset,
    OscParams,
    ProbabilityPair,
    coherence_length,
    mass_basis_density,
    mixing_matrix,
    oscillation_length,
    preset,
    theta_from_sin2_2theta,
    theta_from_tan2_2theta,
    theta_from_tan2_theta,
    transition_probability,
    transition_probability_pw,
    transition_probability_wp,
)

__version__ = "0.1.0"

__all__ = [
    "BlochDecomposition",
    "EurResult",
    "ExperimentPreset",
    "FlavorAmplitudes",
    "IdentityReport",
    "MEASURES",
    "NaqcTriple",
    "OscParams",
    "ProbabilityPair",
    "SweepRow",
    "SweepSpec",
    "amplitudes_from_probabilities",
    "asymptotic_probabilities",
    "binary_entropy",
    "bipartite_state",
    "bloch_decompose",
    "bloch_reconstruct",
    "check_identity",
    "coherence_l1",
    "coherence_length",
    "coherence_re",
    "coherence_sk",
    "eur_closed",
    "eur_general",
    "find_local_minima",
    "mass_basis_density",
    "max_overlap_pauli",
    "measured_state",
    "mixing_matrix",
    "naqc_bound",
    "naqc_closed",
    "naqc_general",
    "naqc_triple",
    "oscillation_length",
    "preset",
    "state_from_probabilities",
    "sweep",
    "theta_from_sin2_2theta",
    "theta_from_tan2_2theta",
    "theta_from_tan2_theta",
    "threshold_angle",
    "transition_probability",
    "transition_probability_pw",
    "transition_probability_wp",
]
