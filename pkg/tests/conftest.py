from __future__ import annotations

import numpy as np


def random_density_matrix(rng: np.random.Generator, dim: int) -> np.ndarray:
    a = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    rho = a @ a.conj().T
    return rho / rho.trace()


def random_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    a = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(a)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_valid_params(rng: np.random.Generator):
    """Rates inside the completely positive cone, thermal p, any frequency."""
    from daviescorr import DaviesParams

    g = rng.uniform(0.05, 3.0)
    f = rng.uniform(0.0, 2.0) * g
    p = rng.uniform(1e-3, 0.5)
    omega_b = rng.uniform(-2.0, 2.0)
    return DaviesParams(F=f, G=g, p=p, omega_B=omega_b)
