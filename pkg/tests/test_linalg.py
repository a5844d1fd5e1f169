from __future__ import annotations

import numpy as np
import pytest

from conftest import random_density_matrix, random_unitary
from daviescorr import (
    SIGMA,
    bell_state,
    check_density_matrix,
    eigh,
    entropy_from_eigenvalues,
    partial_trace,
    partial_transpose,
    tensor,
    von_neumann_entropy,
)


def test_tensor_identity_blocks():
    out = tensor(SIGMA[3], SIGMA[0])
    assert np.abs(out - np.diag([1, 1, -1, -1])).max() == 0.0


def test_tensor_pauli_conjugation_on_bell():
    rho0 = bell_state(0)
    m = tensor(SIGMA[0], SIGMA[1])
    expected = np.zeros((4, 4), dtype=complex)
    expected[0, 0] = expected[0, 3] = expected[3, 0] = expected[3, 3] = 0.5
    assert np.abs(m @ rho0 @ m - expected).max() < 1e-15
    # sigma_x on both qubits stabilizes the first Bell state
    mm = tensor(SIGMA[1], SIGMA[1])
    assert np.abs(mm @ rho0 @ mm - rho0).max() < 1e-15


def test_partial_trace_bell_marginals():
    rho0 = bell_state(0)
    assert np.abs(partial_trace(rho0, "A") - 0.5 * np.eye(2)).max() < 1e-15
    assert np.abs(partial_trace(rho0, "B") - 0.5 * np.eye(2)).max() < 1e-15


def test_partial_trace_product_state():
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = 1.0  # |00><00|
    out = partial_trace(rho, "B")
    assert np.abs(out - np.diag([1.0, 0.0])).max() == 0.0


def test_partial_trace_keeps_unit_trace():
    rng = np.random.default_rng(7)
    for _ in range(25):
        rho = random_density_matrix(rng, 4)
        for side in ("A", "B"):
            assert abs(partial_trace(rho, side).trace() - 1.0) < 1e-12


def test_partial_trace_rejects_bad_subsystem():
    with pytest.raises(ValueError):
        partial_trace(np.eye(4) / 4.0, "C")


def test_partial_transpose_bell_spectrum():
    w, _ = eigh(partial_transpose(bell_state(0), "B"))
    assert np.abs(w - np.array([-0.5, 0.5, 0.5, 0.5])).max() < 1e-12


def test_partial_transpose_preserves_trace_and_hermiticity():
    rng = np.random.default_rng(11)
    for _ in range(25):
        rho = random_density_matrix(rng, 4)
        for side in ("A", "B"):
            pt = partial_transpose(rho, side)
            assert abs(pt.trace() - rho.trace()) < 1e-14
            assert np.abs(pt - pt.conj().T).max() < 1e-14


def test_partial_transpose_is_involution():
    rng = np.random.default_rng(13)
    rho = random_density_matrix(rng, 4)
    assert np.abs(partial_transpose(partial_transpose(rho, "B"), "B") - rho).max() == 0.0


def test_eigh_sorted_and_reconstructs():
    w, v = eigh(np.diag([3.0, 1.0, 2.0]))
    assert np.abs(w - np.array([1.0, 2.0, 3.0])).max() < 1e-14
    rng = np.random.default_rng(17)
    for _ in range(20):
        rho = random_density_matrix(rng, 4)
        w, v = eigh(rho)
        assert np.all(np.diff(w) >= -1e-14)
        assert abs(w.sum() - rho.trace().real) < 1e-10
        assert np.abs((v * w) @ v.conj().T - rho).max() < 1e-10


def test_eigh_sigma_x():
    w, _ = eigh(SIGMA[1])
    assert np.abs(w - np.array([-1.0, 1.0])).max() < 1e-14


def test_eigh_rejects_non_hermitian():
    with pytest.raises(ValueError):
        eigh(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_spectrum_invariant_under_local_basis_change():
    rng = np.random.default_rng(19)
    rho = random_density_matrix(rng, 4)
    w0, _ = eigh(rho)
    for _ in range(5):
        u = tensor(random_unitary(rng, 2), random_unitary(rng, 2))
        w1, _ = eigh(u @ rho @ u.conj().T)
        assert np.abs(w0 - w1).max() < 1e-10


def test_entropy_examples():
    psi = np.zeros((4, 4), dtype=complex)
    psi[2, 2] = 1.0
    assert von_neumann_entropy(psi) == 0.0
    assert abs(von_neumann_entropy(np.eye(2) / 2.0) - np.log(2.0)) < 1e-12
    assert abs(von_neumann_entropy(np.eye(4) / 4.0) - 2.0 * np.log(2.0)) < 1e-12
    assert abs(von_neumann_entropy(bell_state(2))) < 1e-12


def test_entropy_unitary_invariance():
    rng = np.random.default_rng(23)
    rho = random_density_matrix(rng, 4)
    s0 = von_neumann_entropy(rho)
    for _ in range(5):
        u = random_unitary(rng, 4)
        assert abs(von_neumann_entropy(u @ rho @ u.conj().T) - s0) < 1e-10


def test_entropy_eigenvalue_clamping():
    assert entropy_from_eigenvalues(np.array([1.0, -5e-11, 0.0])) == 0.0
    assert entropy_from_eigenvalues(np.array([1.0 + 5e-11, 0.0])) == 0.0
    with pytest.raises(ValueError):
        entropy_from_eigenvalues(np.array([1.0, -1e-6]))
    with pytest.raises(ValueError):
        entropy_from_eigenvalues(np.array([1.1, 0.0]))


def test_check_density_matrix_names_the_bound():
    good = np.eye(4) / 4.0
    check_density_matrix(good)
    with pytest.raises(ValueError, match="Hermiticity"):
        bad = good.astype(complex).copy()
        bad[0, 1] = 0.1
        check_density_matrix(bad)
    with pytest.raises(ValueError, match="trace"):
        check_density_matrix(np.eye(4) / 2.0)
    with pytest.raises(ValueError, match="positivity"):
        check_density_matrix(np.diag([1.5, -0.5, 0.0, 0.0]))
