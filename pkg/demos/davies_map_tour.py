"""Tour of the single-qubit thermal map: trace preservation, the Gibbs
fixed point, semigroup composition, and where complete positivity fails.

Run:  python3 demos/davies_map_tour.py
"""

import numpy as np

from daviescorr import (
    DaviesParams,
    apply_map,
    choi_matrix,
    davies_superoperator,
    gibbs_state,
    thermal_weight,
)


def main():
    params = DaviesParams(F=1.0, G=1.0, p=0.3)
    print("map parameters:", params)
    print("T1 =", params.energy_relaxation_time, " T2 =", params.dephasing_time)
    print()

    # An excited-state qubit relaxing toward the Gibbs state diag(p, 1-p).
    rho = np.diag([1.0, 0.0]).astype(complex)
    print("excited state relaxing (diagonal entries):")
    for t in (0.0, 0.5, 1.0, 2.0, 5.0, 20.0):
        out = apply_map(davies_superoperator(t, params), rho)
        print(f"  t={t:5.1f}  diag = {out[0, 0].real:.6f}, {out[1, 1].real:.6f}"
              f"   trace = {np.trace(out).real:.12f}")
    print("Gibbs target:", np.diag(gibbs_state(params.p)).real)
    print()

    # Composing the map over two legs equals the map over the whole interval.
    s, t = 0.7, 1.9
    two_legs = davies_superoperator(s, params) @ davies_superoperator(t, params)
    one_leg = davies_superoperator(s + t, params)
    print(f"semigroup check: max |Phi_s Phi_t - Phi_(s+t)| = "
          f"{np.abs(two_legs - one_leg).max():.3e}")
    print()

    # The excitation probability p is a thermal weight: p = 1/(1 + e^(2 beta w)).
    for beta in (0.0, 0.5, 2.0):
        print(f"thermal weight at beta={beta}, omega_B=1: {thermal_weight(beta, 1.0):.6f}")
    print()

    # Complete positivity holds iff G >= F/2. Probe the Choi spectrum on both
    # sides of that boundary.
    for ratio in (1.0, 2.0, 3.0):
        p = DaviesParams(F=ratio, G=1.0, unphysical=True)
        worst = min(
            np.linalg.eigvalsh(choi_matrix(davies_superoperator(t, p))).min()
            for t in np.linspace(0.0, 5.0, 201)
        )
        verdict = "CP" if worst >= -1e-10 else "NOT CP"
        print(f"F/G = {ratio:3.1f}: min Choi eigenvalue over t = {worst:+.6f}  -> {verdict}")


if __name__ == "__main__":
    main()
