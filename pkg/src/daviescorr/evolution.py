"""Bell-pair preparation and its evolution under local dynamics.

Qubit A evolves unitarily with Hamiltonian (omega_A/2) sigma_z while qubit B
passes through the thermalization map; the pair superoperator is assembled
once per time point and applied to the vectorized initial state. For the
maximally mixed bath (p = 1/2) the result is an X state with an exact
closed form.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .davies import (
    DaviesParams,
    conjugation_superoperator,
    davies_superoperator,
    tensor_superoperator,
    apply_map,
)
from .linalg import SIGMA, check_density_matrix, tensor

__all__ = [
    "SystemConfig",
    "bell_state",
    "unitary_A",
    "joint_superoperator",
    "evolve",
    "closed_form_state",
]


@dataclass(frozen=True)
class SystemConfig:
    """Level splitting of qubit A, bath parameters of qubit B, initial Bell index."""

    omega_A: float
    davies: DaviesParams
    bell_index: int = 0

    def __post_init__(self) -> None:
        if self.bell_index not in (0, 1, 2, 3):
            raise ValueError(f"bell_index must be 0..3, got {self.bell_index}")


def bell_state(i: int) -> np.ndarray:
    """Bell state rho_i = (sigma_0 kron sigma_i) rho_0 (sigma_0 kron sigma_i).

    rho_0 projects onto (|01> + |10>)/sqrt(2); i = 1, 2, 3 rotate it onto the
    other three Bell states by a Pauli on qubit B.
    """
    if i not in (0, 1, 2, 3):
        raise ValueError(f"Bell index must be 0..3, got {i}")
    psi = np.array([0.0, 1.0, 1.0, 0.0], dtype=complex) / np.sqrt(2.0)
    rho0 = np.outer(psi, psi.conj())
    m = tensor(SIGMA[0], SIGMA[i])
    return m @ rho0 @ m


def unitary_A(t: float, omega_A: float) -> np.ndarray:
    """Free propagator diag(exp(-i omega_A t/2), exp(+i omega_A t/2)) of qubit A."""
    phase = np.exp(-0.5j * omega_A * t)
    return np.diag([phase, phase.conjugate()])


def joint_superoperator(config: SystemConfig, t: float) -> np.ndarray:
    """16x16 superoperator of (unitary on A) kron (thermalization map on B)."""
    sop_a = conjugation_superoperator(unitary_A(t, config.omega_A))
    sop_b = davies_superoperator(t, config.davies)
    return tensor_superoperator(sop_a, sop_b)


def evolve(config: SystemConfig, t: float) -> np.ndarray:
    """State of the pair at time t, starting from the configured Bell state."""
    if t < 0.0:
        raise ValueError(f"time must be nonnegative, got {t}")
    rho = apply_map(joint_superoperator(config, t), bell_state(config.bell_index))
    check_density_matrix(rho)
    return rho


def closed_form_state(F: float, G: float, omega: float, t: float) -> np.ndarray:
    """Exact X state for the p = 1/2 bath and Bell index 0.

    omega = omega_A - omega_B is the detuning between the qubits. Diagonal
    (1 -/+ exp(-F t))/4, inner coherences of magnitude exp(-G t)/2 rotating
    at the detuning.
    """
    if t < 0.0:
        raise ValueError(f"time must be nonnegative, got {t}")
    x = np.exp(-F * t)
    y = np.exp(-G * t)
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = rho[3, 3] = (1.0 - x) / 4.0
    rho[1, 1] = rho[2, 2] = (1.0 + x) / 4.0
    rho[1, 2] = 0.5 * y * np.exp(-1j * omega * t)
    rho[2, 1] = rho[1, 2].conjugate()
    return rho
