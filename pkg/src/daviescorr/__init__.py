"""Correlation dynamics of a Bell pair with one qubit in a thermalizing environment.

The package follows one storyline: prepare a two-qubit Bell state, let
qubit A precess freely while qubit B relaxes and dephases through an
exactly solvable completely positive map, and track how entanglement
negativity and quantum discord decay. Closed-form expressions and
from-definition numerical routes are both exposed so each can check the
other.
"""

from .linalg import (
    SIGMA,
    tensor,
    partial_trace,
    partial_transpose,
    eigh,
    entropy_from_eigenvalues,
    von_neumann_entropy,
    check_density_matrix,
)
from .davies import (
    DaviesParams,
    thermal_weight,
    gibbs_state,
    relaxation_u,
    relaxation_v,
    davies_superoperator,
    apply_map,
    choi_matrix,
    conjugation_superoperator,
    tensor_superoperator,
)
from .evolution import (
    SystemConfig,
    bell_state,
    unitary_A,
    joint_superoperator,
    evolve,
    closed_form_state,
)
from .correlations import (
    OptimizerSettings,
    CorrelationReport,
    negativity_oracle,
    negativity_closed,
    esd_time,
    mutual_information,
    projector_pair,
    average_conditional_entropy,
    classical_correlations,
    discord_oracle,
    discord_closed,
    discord_asymptotic,
    optimal_theta_claim,
    correlation_report,
)

__version__ = "0.1.0"

__all__ = [
    "SIGMA",
    "tensor",
    "partial_trace",
    "partial_transpose",
    "eigh",
    "entropy_from_eigenvalues",
    "von_neumann_entropy",
    "check_density_matrix",
    "DaviesParams",
    "thermal_weight",
    "gibbs_state",
    "relaxation_u",
    "relaxation_v",
    "davies_superoperator",
    "apply_map",
    "choi_matrix",
    "conjugation_superoperator",
    "tensor_superoperator",
    "SystemConfig",
    "bell_state",
    "unitary_A",
    "joint_superoperator",
    "evolve",
    "closed_form_state",
    "OptimizerSettings",
    "CorrelationReport",
    "negativity_oracle",
    "negativity_closed",
    "esd_time",
    "mutual_information",
    "projector_pair",
    "average_conditional_entropy",
    "classical_correlations",
    "discord_oracle",
    "discord_closed",
    "discord_asymptotic",
    "optimal_theta_claim",
    "correlation_report",
]
