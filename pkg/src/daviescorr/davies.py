"""Exactly solvable single-qubit thermalization map and superoperator tools.

Superoperators act on row-major vectorized matrices,
||rho>> = (rho_00, rho_01, rho_10, rho_11)^T, so that
vec(A X B) = (A kron B^T) vec(X).

The map models a qubit with level splitting omega_B coupled to a heat bath:
populations relax toward the Gibbs weights (p, 1 - p) at rate F = 1/tau_1
while coherences rotate at omega_B and decay at rate G = 1/tau_2. Complete
positivity requires G >= F/2 >= 0 and the stationary state is diag(p, 1 - p).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
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
]


@dataclass(frozen=True)
class DaviesParams:
    """Rates and bath parameters of the thermalization map.

    F is the energy relaxation rate (1/tau_1), G the dephasing rate
    (1/tau_2), p the excited-bath Gibbs weight and omega_B the qubit
    frequency. Construction rejects parameter sets that break complete
    positivity (G >= F/2 >= 0) or leave the thermal regime (0 < p <= 1/2)
    unless `unphysical` is set, which is meant for negative testing only.
    """

    F: float
    G: float
    p: float = 0.5
    omega_B: float = 0.0
    unphysical: bool = False

    def __post_init__(self) -> None:
        if not (0.0 < self.p < 1.0):
            raise ValueError(f"p must lie in (0, 1), got {self.p}")
        if self.F < 0.0 or self.G < 0.0:
            raise ValueError(f"rates must be nonnegative, got F={self.F}, G={self.G}")
        if self.unphysical:
            return
        if self.G < self.F / 2.0:
            raise ValueError(f"complete positivity needs G >= F/2, got F={self.F}, G={self.G}")
        if self.p > 0.5:
            raise ValueError(f"thermal weight must satisfy p <= 1/2, got {self.p}")

    @property
    def energy_relaxation_time(self) -> float:
        """tau_1 = 1/F (infinite when F = 0)."""
        return math.inf if self.F == 0.0 else 1.0 / self.F

    @property
    def dephasing_time(self) -> float:
        """tau_2 = 1/G (infinite when G = 0)."""
        return math.inf if self.G == 0.0 else 1.0 / self.G


def thermal_weight(beta: float, omega_B: float) -> float:
    """Gibbs weight p = exp(-beta*omega_B) / (exp(-beta*omega_B) + exp(beta*omega_B)).

    Evaluated as 1 / (1 + exp(2*beta*omega_B)) so large exponents saturate
    instead of overflowing.
    """
    if beta < 0.0:
        raise ValueError(f"inverse temperature must be nonnegative, got {beta}")
    z = 2.0 * beta * omega_B
    if z > 709.0:
        return 0.0
    return 1.0 / (1.0 + math.exp(z))


def gibbs_state(p: float) -> np.ndarray:
    """Stationary state diag(p, 1 - p) of the map."""
    return np.diag([complex(p), complex(1.0 - p)])


def relaxation_u(t: float, params: DaviesParams) -> float:
    """Population relaxation profile u(t) = (1 - p)(1 - exp(-F t))."""
    if t < 0.0:
        raise ValueError(f"time must be nonnegative, got {t}")
    return (1.0 - params.p) * -math.expm1(-params.F * t)


def relaxation_v(t: float, params: DaviesParams) -> complex:
    """Coherence factor v(t) = exp(-i omega_B t - G t)."""
    if t < 0.0:
        raise ValueError(f"time must be nonnegative, got {t}")
    return complex(np.exp((-1j * params.omega_B - params.G) * t))


def davies_superoperator(t: float, params: DaviesParams) -> np.ndarray:
    """4x4 superoperator of the map at time t.

    In the row-major vec basis (rho_00, rho_01, rho_10, rho_11):

        [[1 - u,  0,  0,       u p/(1-p)],
         [0,      v,  0,       0        ],
         [0,      0,  conj(v), 0        ],
         [u,      0,  0,       1 - u p/(1-p)]]

    The lower-left entry is not a free function: trace preservation of the
    first column forces it to equal u(t).
    """
    u = relaxation_u(t, params)
    v = relaxation_v(t, params)
    choi_entry = u
    w = u * params.p / (1.0 - params.p)
    sop = np.zeros((4, 4), dtype=complex)
    sop[0, 0] = 1.0 - u
    sop[0, 3] = w
    sop[1, 1] = v
    sop[2, 2] = v.conjugate()
    sop[3, 0] = choi_entry
    sop[3, 3] = 1.0 - w
    return sop


def apply_map(sop: np.ndarray, mat: np.ndarray) -> np.ndarray:
    """Apply a superoperator: vectorize, multiply, devectorize.

    For a CPTP superoperator and a density-matrix input the output is again
    a density matrix; applying it to general matrices (basis elements, say)
    is allowed and is how the Choi matrix is assembled.
    """
    sop = np.asarray(sop, dtype=complex)
    mat = np.asarray(mat, dtype=complex)
    d = mat.shape[0]
    if mat.shape != (d, d) or sop.shape != (d * d, d * d):
        raise ValueError(f"shape mismatch: superoperator {sop.shape}, matrix {mat.shape}")
    return (sop @ mat.reshape(-1)).reshape(d, d)


def choi_matrix(sop: np.ndarray) -> np.ndarray:
    """Unnormalized Choi matrix C = sum_ij |i><j| kron Phi(|i><j|).

    The map is completely positive iff C is positive semidefinite; for the
    identity map on a qubit the eigenvalues are (2, 0, 0, 0).
    """
    d2 = np.asarray(sop).shape[0]
    d = math.isqrt(d2)
    if d * d != d2:
        raise ValueError(f"superoperator dimension {d2} is not a perfect square")
    c = np.zeros((d2, d2), dtype=complex)
    for i in range(d):
        for j in range(d):
            e = np.zeros((d, d), dtype=complex)
            e[i, j] = 1.0
            c += np.kron(e, apply_map(sop, e))
    return c


def conjugation_superoperator(u: np.ndarray) -> np.ndarray:
    """Superoperator of X -> U X U^dag in the row-major vec convention."""
    u = np.asarray(u, dtype=complex)
    return np.kron(u, u.conj())


def tensor_superoperator(sop_a: np.ndarray, sop_b: np.ndarray) -> np.ndarray:
    """Superoperator of the product map Phi_A kron Phi_B on a bipartite system.

    A plain Kronecker product orders the vec indices as (i_A, j_A, i_B, j_B);
    the bipartite row-major convention needs (i_A, i_B, j_A, j_B), so the
    middle index pair is swapped on both sides.
    """
    sop_a = np.asarray(sop_a, dtype=complex)
    sop_b = np.asarray(sop_b, dtype=complex)
    da = math.isqrt(sop_a.shape[0])
    db = math.isqrt(sop_b.shape[0])
    k = np.kron(sop_a, sop_b)
    k = k.reshape(da, da, db, db, da, da, db, db)
    k = k.transpose(0, 2, 1, 3, 4, 6, 5, 7)
    return k.reshape(da * da * db * db, da * da * db * db)
