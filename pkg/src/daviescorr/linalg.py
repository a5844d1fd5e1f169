"""Dense linear algebra for one- and two-qubit density matrices.

Everything works on plain numpy arrays in the computational basis. Two-qubit
matrices index the pair as (qubit A, qubit B), so row r = 2*i_A + i_B.
All functions are pure and never mutate their inputs.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "SIGMA",
    "tensor",
    "partial_trace",
    "partial_transpose",
    "eigh",
    "entropy_from_eigenvalues",
    "von_neumann_entropy",
    "check_density_matrix",
]

# Pauli matrices sigma_0 .. sigma_3 (identity, x, y, z).
SIGMA = (
    np.eye(2, dtype=complex),
    np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
    np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
)
for _s in SIGMA:
    _s.flags.writeable = False

HERMITICITY_ATOL = 1e-12
TRACE_ATOL = 1e-12
EIGENVALUE_FLOOR = -1e-10


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with complex dtype."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def _as_two_qubit(rho: np.ndarray) -> np.ndarray:
    rho = np.asarray(rho)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {rho.shape}")
    return rho.reshape(2, 2, 2, 2)


def partial_trace(rho: np.ndarray, trace_out: str) -> np.ndarray:
    """Trace out one qubit of a two-qubit state and return the other.

    trace_out selects the discarded subsystem, "A" (first factor) or "B"
    (second factor); the reduced 2x2 state of the kept qubit is returned.
    """
    t = _as_two_qubit(rho)
    if trace_out == "A":
        return np.einsum("aiaj->ij", t)
    if trace_out == "B":
        return np.einsum("iaja->ij", t)
    raise ValueError(f"trace_out must be 'A' or 'B', got {trace_out!r}")


def partial_transpose(rho: np.ndarray, subsystem: str) -> np.ndarray:
    """Transpose the indices of one qubit of a two-qubit operator."""
    t = _as_two_qubit(rho)
    if subsystem == "A":
        return t.transpose(2, 1, 0, 3).reshape(4, 4)
    if subsystem == "B":
        return t.transpose(0, 3, 2, 1).reshape(4, 4)
    raise ValueError(f"subsystem must be 'A' or 'B', got {subsystem!r}")


def eigh(m: np.ndarray, herm_atol: float = 1e-10) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    Returns (eigenvalues, eigenvectors) with real eigenvalues in ascending
    order and eigenvectors as columns. Raises ValueError if m deviates from
    Hermiticity by more than herm_atol in any entry.
    """
    m = np.asarray(m, dtype=complex)
    dev = np.abs(m - m.conj().T).max()
    if dev > herm_atol:
        raise ValueError(f"matrix is not Hermitian: max deviation {dev:.3e} > {herm_atol:.1e}")
    w, v = np.linalg.eigh(m)
    return w, v


def entropy_from_eigenvalues(w: np.ndarray, axis: int = -1) -> float | np.ndarray:
    """Shannon entropy (nats) of an eigenvalue distribution.

    Eigenvalues in [-1e-10, 0) are clamped to 0 and values in (1, 1 + 1e-10]
    to 1; anything outside that window is rejected. The 0*log(0) = 0
    convention applies below 1e-300.
    """
    w = np.asarray(w, dtype=float)
    if (w < EIGENVALUE_FLOOR).any():
        raise ValueError(f"eigenvalue {w.min():.3e} below floor {EIGENVALUE_FLOOR:.1e}")
    if (w > 1.0 - EIGENVALUE_FLOOR).any():
        raise ValueError(f"eigenvalue {w.max():.3e} above 1 + {-EIGENVALUE_FLOOR:.1e}")
    w = np.clip(w, 0.0, 1.0)
    safe = np.where(w > 1e-300, w, 1.0)
    terms = np.where(w > 1e-300, -w * np.log(safe), 0.0)
    s = terms.sum(axis=axis)
    return float(s) if np.ndim(s) == 0 else s


def von_neumann_entropy(rho: np.ndarray) -> float:
    """S(rho) = -Tr(rho log rho) in nats."""
    w, _ = eigh(rho)
    if abs(w.sum() - 1.0) > 1e-10:
        raise ValueError(f"trace of state is {w.sum():.12f}, expected 1")
    return float(entropy_from_eigenvalues(w))


def check_density_matrix(
    rho: np.ndarray,
    herm_atol: float = HERMITICITY_ATOL,
    trace_atol: float = TRACE_ATOL,
    eig_floor: float = EIGENVALUE_FLOOR,
) -> None:
    """Raise ValueError (naming the violated bound) if rho is not a state."""
    rho = np.asarray(rho)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"not a square matrix: shape {rho.shape}")
    herm_dev = np.abs(rho - rho.conj().T).max()
    if herm_dev > herm_atol:
        raise ValueError(f"Hermiticity violated: max |rho - rho^dag| = {herm_dev:.3e} > {herm_atol:.1e}")
    trace_dev = abs(rho.trace() - 1.0)
    if trace_dev > trace_atol:
        raise ValueError(f"unit trace violated: |Tr(rho) - 1| = {trace_dev:.3e} > {trace_atol:.1e}")
    w = np.linalg.eigvalsh(rho)
    if w[0] < eig_floor:
        raise ValueError(f"positivity violated: smallest eigenvalue {w[0]:.3e} < {eig_floor:.1e}")
