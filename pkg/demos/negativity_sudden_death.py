"""Entanglement sudden death: with any energy relaxation the negativity
hits exactly zero at a finite time, while pure dephasing only ever decays
it exponentially.

Run:  python3 demos/negativity_sudden_death.py
"""

import numpy as np

from daviescorr import esd_time, negativity_closed


def main():
    print("death times t_c (in units of 1/G):")
    print("  F/G     G*t_c")
    for a in (0.25, 0.5, 1.0, 1.5, 2.0):
        print(f"  {a:4.2f}  {esd_time(a, 1.0):8.5f}")
    print("  0.00       inf  (pure dephasing: N = exp(-Gt)/2 never vanishes)")
    print()
    print(f"F=2G analytic value: ln(1+sqrt2) = {np.log(1 + np.sqrt(2)):.12f}")
    print(f"F=G  analytic value: ln(3)       = {np.log(3.0):.12f}")
    print()

    gts = np.linspace(0.0, 2.0, 9)
    ratios = (0.0, 0.5, 1.0, 2.0)
    print("negativity N(Gt):")
    print("   Gt   " + "".join(f"  F/G={a:<6g}" for a in ratios))
    for gt in gts:
        row = [negativity_closed(a, 1.0, gt) for a in ratios]
        print(f"  {gt:4.2f} " + "".join(f"  {v:10.6f}" for v in row))
    print()
    print("note the exact zeros: past t_c the partially transposed state is")
    print("positive and stays positive, so this is death, not just decay.")


if __name__ == "__main__":
    main()
