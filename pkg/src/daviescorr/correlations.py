"""Entanglement negativity and quantum discord, closed form and from definition.

Every quantity exists twice on purpose. The closed-form functions evaluate
the exact p = 1/2 expressions in the rates F (energy relaxation) and G
(dephasing); the oracle functions take an explicit density matrix and work
from the definitions (partial transpose spectrum, entropy bookkeeping, a
scan over projective measurements on qubit B). Entropies are in nats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .evolution import SystemConfig, evolve
from .linalg import (
    check_density_matrix,
    eigh,
    entropy_from_eigenvalues,
    partial_trace,
    partial_transpose,
    von_neumann_entropy,
)

__all__ = [
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

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def _xlogx(z: np.ndarray | float) -> np.ndarray | float:
    """z*log(z) with the 0*log(0) = 0 convention below 1e-300."""
    z = np.asarray(z, dtype=float)
    safe = np.where(z > 1e-300, z, 1.0)
    out = np.where(z > 1e-300, z * np.log(safe), 0.0)
    return float(out) if np.ndim(out) == 0 else out


def negativity_oracle(rho: np.ndarray) -> float:
    """N(rho) = sum of |lambda| - lambda over the B-partial-transpose spectrum, halved."""
    check_density_matrix(rho)
    w, _ = eigh(partial_transpose(rho, "B"))
    return float(0.5 * np.sum(np.abs(w) - w))


def negativity_closed(F: float, G: float, t: float | np.ndarray) -> float | np.ndarray:
    """Exact negativity for the p = 1/2 bath, independent of the detuning.

    8 N(t) = 2 exp(-G t) + exp(-F t) - 1 + |2 exp(-G t) + exp(-F t) - 1|,
    which is zero beyond the sudden-death time whenever F > 0.
    """
    t = np.asarray(t, dtype=float)
    if (t < 0.0).any():
        raise ValueError("time must be nonnegative")
    b = 2.0 * np.exp(-G * t) + np.exp(-F * t) - 1.0
    n = (b + np.abs(b)) / 8.0
    return float(n) if np.ndim(n) == 0 else n


def esd_time(F: float, G: float) -> float | None:
    """Root of 2 exp(-G t) + exp(-F t) = 1, where entanglement dies.

    Returns None for F <= 0 (pure dephasing never kills the negativity).
    Bisection on a doubling bracket, absolute tolerance 1e-12.
    """
    if G <= 0.0:
        raise ValueError(f"G must be positive, got {G}")
    if F <= 0.0:
        return None

    def f(t: float) -> float:
        return 2.0 * math.exp(-G * t) + math.exp(-F * t) - 1.0

    hi = 1.0
    while f(hi) > 0.0:
        hi *= 2.0
    lo = 0.0
    while hi - lo > 1e-12:
        mid = 0.5 * (lo + hi)
        if f(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def mutual_information(rho: np.ndarray) -> float:
    """I(rho) = S(rho_A) + S(rho_B) - S(rho_AB) in nats."""
    check_density_matrix(rho)
    s_a = von_neumann_entropy(partial_trace(rho, "B"))
    s_b = von_neumann_entropy(partial_trace(rho, "A"))
    s_ab = von_neumann_entropy(rho)
    return s_a + s_b - s_ab


def projector_pair(theta: float, phi: float) -> tuple[np.ndarray, np.ndarray]:
    """Orthogonal rank-1 projectors along the Bloch direction (theta, phi)."""
    c = math.cos(0.5 * theta)
    s = math.sin(0.5 * theta)
    off = c * s * np.exp(-1j * phi)
    pi0 = np.array([[c * c, off], [off.conjugate(), s * s]], dtype=complex)
    pi1 = np.eye(2, dtype=complex) - pi0
    return pi0, pi1


@dataclass(frozen=True)
class OptimizerSettings:
    """Grid-plus-refinement schedule for the measurement optimization."""

    theta_steps: int = 64
    phi_steps: int = 64
    refine_tol: float = 1e-8
    phi_variation: float = 1e-10


def average_conditional_entropy(
    rho: np.ndarray,
    thetas: float | np.ndarray,
    phis: float | np.ndarray,
) -> float | np.ndarray:
    """sum_k q_k S(rho_A^k) after measuring qubit B along (theta, phi).

    Broadcasts over a (theta, phi) grid and returns an array of shape
    (len(thetas), len(phis)), or a float for scalar angles. Outcomes with
    probability below 1e-14 contribute zero.
    """
    scalar = np.ndim(thetas) == 0 and np.ndim(phis) == 0
    thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
    phis = np.atleast_1d(np.asarray(phis, dtype=float))
    t = np.asarray(rho, dtype=complex).reshape(2, 2, 2, 2)

    half = 0.5 * thetas[:, None]
    cc = (np.cos(half) ** 2) * np.ones_like(phis)[None, :]
    off = (0.5 * np.sin(thetas[:, None])) * np.exp(-1j * phis[None, :])
    # projector stacks, shape (n_theta, n_phi, 2, 2)
    pi0 = np.empty(cc.shape + (2, 2), dtype=complex)
    pi0[..., 0, 0] = cc
    pi0[..., 0, 1] = off
    pi0[..., 1, 0] = off.conjugate()
    pi0[..., 1, 1] = 1.0 - cc
    pi1 = np.eye(2, dtype=complex) - pi0

    total = np.zeros(cc.shape, dtype=float)
    for pk in (pi0, pi1):
        # unnormalized conditional state of A: contract B's indices with the projector
        m = np.einsum("aibj,...ji->...ab", t, pk)
        q = np.einsum("...aa->...", m).real
        norm = np.where(q > 1e-14, q, 1.0)
        m = m / norm[..., None, None]
        mean = 0.5 * (m[..., 0, 0] + m[..., 1, 1]).real
        r = np.sqrt(
            (0.5 * (m[..., 0, 0] - m[..., 1, 1]).real) ** 2 + np.abs(m[..., 0, 1]) ** 2
        )
        w = np.stack([mean - r, mean + r], axis=-1)
        s = entropy_from_eigenvalues(w, axis=-1)
        total += np.where(q > 1e-14, q * s, 0.0)
    return float(total[0, 0]) if scalar else total


def _golden_min(f, lo: float, hi: float, tol: float) -> tuple[float, float]:
    """Golden-section minimum of f on [lo, hi] to absolute x-tolerance tol."""
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)


def classical_correlations(
    rho: np.ndarray, settings: OptimizerSettings | None = None
) -> tuple[float, float, float]:
    """Classical correlations C = max over B-measurements of S(rho_A) - sum_k q_k S(rho_A^k).

    Deterministic optimizer: a coarse (theta, phi) grid followed by local
    golden-section refinement in theta (and in phi only when the grid shows
    phi dependence above the configured threshold). Returns
    (value, theta_opt, phi_opt).
    """
    check_density_matrix(rho)
    cfg = settings if settings is not None else OptimizerSettings()
    s_a = von_neumann_entropy(partial_trace(rho, "B"))

    thetas = np.linspace(0.0, math.pi, cfg.theta_steps)
    phis = np.linspace(0.0, 2.0 * math.pi, cfg.phi_steps, endpoint=False)
    grid = average_conditional_entropy(rho, thetas, phis)
    i, j = np.unravel_index(int(np.argmin(grid)), grid.shape)
    best = float(grid[i, j])
    theta_opt = float(thetas[i])
    phi_opt = float(phis[j])

    dtheta = thetas[1] - thetas[0]
    lo = max(0.0, theta_opt - dtheta)
    hi = min(math.pi, theta_opt + dtheta)
    theta_ref, val = _golden_min(
        lambda th: average_conditional_entropy(rho, th, phi_opt), lo, hi, cfg.refine_tol
    )
    if val < best:
        best, theta_opt = val, theta_ref

    if float(grid[i].max() - grid[i].min()) > cfg.phi_variation:
        dphi = phis[1] - phis[0]
        phi_ref, val = _golden_min(
            lambda ph: average_conditional_entropy(rho, theta_opt, ph),
            phi_opt - dphi,
            phi_opt + dphi,
            cfg.refine_tol,
        )
        if val < best:
            best, phi_opt = val, phi_ref

    return s_a - best, theta_opt, phi_opt


def discord_oracle(rho: np.ndarray, settings: OptimizerSettings | None = None) -> float:
    """Quantum discord D = I - C from the definitions; tiny negatives are clamped."""
    d = mutual_information(rho) - classical_correlations(rho, settings)[0]
    if -1e-9 <= d < 0.0:
        return 0.0
    return d


def _discord_low_relaxation(x, y):
    # measurement along z is optimal (F <= G)
    return (_xlogx(x + 1.0 + 2.0 * y) + _xlogx(x + 1.0 - 2.0 * y) - 2.0 * _xlogx(1.0 + x)) / 4.0


def _discord_fast_relaxation(x, y):
    # measurement in the equatorial plane is optimal (G < F <= 2G)
    return (
        _xlogx(x + 1.0 + 2.0 * y)
        + _xlogx(x + 1.0 - 2.0 * y)
        + 2.0 * _xlogx(1.0 - x)
        - 2.0 * _xlogx(1.0 - y)
        - 2.0 * _xlogx(1.0 + y)
    ) / 4.0


def discord_closed(F: float, G: float, t: float | np.ndarray) -> float | np.ndarray:
    """Exact discord for the p = 1/2 bath, in nats.

    Two branches meet continuously at F = G; the F <= G branch is used on
    the boundary. Valid only in the completely positive region G >= F/2.
    """
    if F < 0.0 or G < F / 2.0:
        raise ValueError(f"need G >= F/2 >= 0, got F={F}, G={G}")
    t = np.asarray(t, dtype=float)
    if (t < 0.0).any():
        raise ValueError("time must be nonnegative")
    x = np.exp(-F * t)
    y = np.exp(-G * t)
    if F <= G:
        d = _discord_low_relaxation(x, y)
    else:
        d = _discord_fast_relaxation(x, y)
    return float(d) if np.ndim(d) == 0 else d


def discord_asymptotic(F: float, G: float, t: float | np.ndarray) -> float | np.ndarray:
    """Long-time behavior of the discord.

    exp(-2 G t) / (1 + exp(-F t)) for F <= G, and the symmetric combination
    (exp(-2 G t) + exp(-2 F t)) / 2 for G < F <= 2G.
    """
    t = np.asarray(t, dtype=float)
    if F <= G:
        d = np.exp(-2.0 * G * t) / (1.0 + np.exp(-F * t))
    else:
        d = 0.5 * (np.exp(-2.0 * G * t) + np.exp(-2.0 * F * t))
    return float(d) if np.ndim(d) == 0 else d


def optimal_theta_claim(F: float, G: float) -> float:
    """Claimed optimal measurement polar angle: 0 for F <= G, pi/2 for F > G."""
    return 0.0 if F <= G else 0.5 * math.pi


@dataclass(frozen=True)
class CorrelationReport:
    """Correlation measures of the evolved pair at one time point.

    Closed-form fields are None when the bath is away from p = 1/2, where
    only the oracle pipeline applies.
    """

    t: float
    negativity_closed: float | None
    negativity_oracle: float
    discord_closed: float | None
    discord_oracle: float
    classical: float
    mutual_info: float
    theta_opt: float


def correlation_report(
    config: SystemConfig, t: float, settings: OptimizerSettings | None = None
) -> CorrelationReport:
    """Evaluate both pipelines on the evolved state at time t."""
    rho = evolve(config, t)
    info = mutual_information(rho)
    classical, theta_opt, _ = classical_correlations(rho, settings)
    d = info - classical
    if -1e-9 <= d < 0.0:
        d = 0.0
    params = config.davies
    closed_ok = abs(params.p - 0.5) <= 1e-15
    return CorrelationReport(
        t=t,
        negativity_closed=negativity_closed(params.F, params.G, t) if closed_ok else None,
        negativity_oracle=negativity_oracle(rho),
        discord_closed=discord_closed(params.F, params.G, t) if closed_ok else None,
        discord_oracle=d,
        classical=classical,
        mutual_info=info,
        theta_opt=theta_opt,
    )
