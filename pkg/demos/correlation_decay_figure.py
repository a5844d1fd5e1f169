"""Sweep negativity and discord over time for several rate ratios, save the
numbers to CSV, and render the decay figure.

Run:  python3 demos/correlation_decay_figure.py [outdir]

Writes correlation_decay.csv and correlation_decay.png into outdir
(default: the current directory). Requires matplotlib for the PNG.
"""

import csv
import sys
from pathlib import Path

import numpy as np

from daviescorr import discord_closed, esd_time, negativity_closed

RATIOS = (0.0, 0.5, 1.0, 2.0)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    outdir = Path(argv[0]) if argv else Path(".")
    outdir.mkdir(parents=True, exist_ok=True)

    gts = np.linspace(0.0, 5.0, 201)
    columns = {}
    for a in RATIOS:
        columns[("N", a)] = negativity_closed(a, 1.0, gts)
        columns[("D", a)] = np.array([discord_closed(a, 1.0, float(t)) for t in gts])

    csv_path = outdir / "correlation_decay.csv"
    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["Gt"] + [f"{k}_ratio_{a:g}" for k, a in columns])
        for i, gt in enumerate(gts):
            writer.writerow([f"{gt:.6f}"] + [f"{columns[key][i]:.12e}" for key in columns])
    print("wrote", csv_path)

    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, (ax_n, ax_d) = plt.subplots(1, 2, figsize=(10, 4), sharex=True)
    for a in RATIOS:
        ax_n.plot(gts, columns[("N", a)], label=f"F/G = {a:g}")
        ax_d.plot(gts, columns[("D", a)], label=f"F/G = {a:g}")
        tc = esd_time(a, 1.0)
        if tc is not None:
            ax_n.axvline(tc, color="gray", lw=0.6, ls=":")
    ax_n.set_ylabel("negativity")
    ax_d.set_ylabel("quantum discord (nats)")
    for ax in (ax_n, ax_d):
        ax.set_xlabel("Gt")
        ax.legend()
    fig.suptitle("entanglement dies suddenly, discord only asymptotically")
    fig.tight_layout()
    png_path = outdir / "correlation_decay.png"
    fig.savefig(png_path, dpi=150)
    print("wrote", png_path)


if __name__ == "__main__":
    main()
