"""Acceptance gate: every headline result, each at its stated tolerance.

Each criterion prints one [PASS]/[FAIL] line (run pytest with -s, or execute
this file directly to see them and get a nonzero exit on failure).
"""

from __future__ import annotations

import math
import sys
import tempfile
from pathlib import Path

import numpy as np

from daviescorr import (
    DaviesParams,
    SystemConfig,
    bell_state,
    choi_matrix,
    classical_correlations,
    closed_form_state,
    correlation_report,
    davies_superoperator,
    discord_asymptotic,
    discord_closed,
    discord_oracle,
    esd_time,
    evolve,
    gibbs_state,
    apply_map,
    negativity_closed,
    negativity_oracle,
)
from daviescorr.cli import main as cli_main

LN2 = math.log(2.0)
RATIOS = (0.0, 0.5, 1.0, 2.0)


def _config(F, G, p=0.5, omega_A=0.0, omega_B=0.0, bell_index=0):
    return SystemConfig(
        omega_A=omega_A,
        davies=DaviesParams(F=F, G=G, p=p, omega_B=omega_B),
        bell_index=bell_index,
    )


def _line(num: int, label: str, ok: bool, detail: str) -> bool:
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {num:02d} {label} :: {detail}")
    return ok


def criterion_01_bell_baseline() -> bool:
    worst_n = 0.0
    worst_d = 0.0
    for i in range(4):
        rho = bell_state(i)
        worst_n = max(worst_n, abs(negativity_oracle(rho) - 0.5))
        worst_d = max(worst_d, abs(discord_oracle(rho) - LN2))
    exact = all(negativity_closed(f, g, 0.0) == 0.5 for f, g in ((0.0, 1.0), (1.3, 1.0), (2.0, 1.0)))
    closed_d = max(abs(discord_closed(f, g, 0.0) - LN2) for f, g in ((0.0, 1.0), (1.0, 1.0), (2.0, 1.0)))
    ok = worst_n <= 1e-12 and worst_d <= 1e-10 and exact and closed_d <= 1e-12
    return _line(1, "Bell baseline N=1/2, D=ln2", ok,
                 f"max|N-1/2|={worst_n:.2e}, max|D-ln2|={worst_d:.2e}")


def criterion_02_pure_dephasing_negativity() -> bool:
    cfg = _config(0.0, 1.0, omega_A=0.9, omega_B=0.2)
    worst = 0.0
    for gt in np.linspace(0.0, 10.0, 50):
        n = negativity_oracle(evolve(cfg, float(gt)))
        worst = max(worst, abs(n - 0.5 * math.exp(-float(gt))))
    ok = worst <= 1e-10
    return _line(2, "F=0 negativity exp(-Gt)/2", ok, f"max err={worst:.2e} over 50 points")


def criterion_03_esd_time() -> bool:
    target = math.log(1.0 + math.sqrt(2.0))
    err = max(abs(esd_time(2.0, 1.0) - target), abs(0.7 * esd_time(1.4, 0.7) - target))
    times = [esd_time(a, 1.0) for a in (0.25, 0.5, 1.0, 1.5, 2.0)]
    monotone = all(b < a for a, b in zip(times, times[1:]))
    ok = err <= 1e-9 and monotone
    return _line(3, "sudden death at ln(1+sqrt2)/G for F=2G", ok,
                 f"|Gt_c-ln(1+sqrt2)|={err:.2e}, monotone={monotone}")


def criterion_04_closed_form_state() -> bool:
    worst = 0.0
    for omega in (0.0, 3.0):
        for a in RATIOS:
            cfg = _config(a, 1.0, omega_A=omega + 0.6, omega_B=0.6)
            for gt in np.linspace(0.0, 8.0, 25):
                diff = np.abs(evolve(cfg, float(gt)) - closed_form_state(a, 1.0, omega, float(gt))).max()
                worst = max(worst, diff)
    ok = worst <= 1e-12
    return _line(4, "evolution equals exact X state", ok,
                 f"max entrywise err={worst:.2e} (ratios x 25 times x 2 detunings)")


def criterion_05_discord_equivalence() -> bool:
    worst = 0.0
    worst_theta = 0.0
    resolution = math.pi / 63.0 + 1e-6
    theta_ok = True
    for omega in (0.0, 3.0):
        for a in RATIOS:
            cfg = _config(a, 1.0, omega_A=omega)
            for gt in np.linspace(0.0, 8.0, 25):
                rep = correlation_report(cfg, float(gt))
                worst = max(worst, abs(rep.discord_oracle - rep.discord_closed))
                if gt > 0.0 and a != 1.0:
                    claim = 0.0 if a <= 1.0 else 0.5 * math.pi
                    dist = min(abs(rep.theta_opt - claim), abs(math.pi - rep.theta_opt - claim))
                    worst_theta = max(worst_theta, dist)
                    theta_ok = theta_ok and dist <= resolution
    ok = worst <= 1e-6 and theta_ok
    return _line(5, "discord: optimizer matches closed form", ok,
                 f"max|D_or-D_cl|={worst:.2e}, max theta dev={worst_theta:.2e}")


def criterion_06_asymptotics() -> bool:
    gt = 8.0
    worst = 0.0
    for a in (0.0, 0.5, 1.0, 1.5, 2.0):
        ratio = discord_closed(a, 1.0, gt) / discord_asymptotic(a, 1.0, gt)
        worst = max(worst, abs(ratio - 1.0))
    n = negativity_closed(0.0, 1.0, gt)
    ratio = discord_closed(0.0, 1.0, gt) / (2.0 * n * n)
    worst_n = abs(ratio - 1.0)
    ok = worst <= 1e-2 and worst_n <= 1e-2
    return _line(6, "long-time discord asymptotics at Gt=8", ok,
                 f"max|ratio-1|={worst:.2e}, F=0 vs 2N^2: {worst_n:.2e}")


def criterion_07_slowest_decay_at_equal_rates() -> bool:
    gt = 5.0
    ratios = np.arange(0.0, 2.01, 0.25)
    values = [discord_closed(float(a), 1.0, gt) for a in ratios]
    best = int(np.argmax(values))
    ok = abs(float(ratios[best]) - 1.0) < 1e-12 and all(
        values[best] > v for k, v in enumerate(values) if k != best
    )
    return _line(7, "slowest discord decay at F=G", ok,
                 f"argmax F/G={float(ratios[best]):g} at Gt={gt:g}")


def criterion_08_dephasing_classical_plateau() -> bool:
    cfg = _config(0.0, 1.0, omega_A=1.1, omega_B=0.4)
    worst = 0.0
    for gt in np.linspace(0.0, 6.0, 20):
        c, _, _ = classical_correlations(evolve(cfg, float(gt)))
        worst = max(worst, abs(c - LN2))
    ok = worst <= 1e-8
    return _line(8, "F=0 classical correlations stay ln2", ok, f"max|C-ln2|={worst:.2e}")


def criterion_09_complete_positivity() -> bool:
    rng = np.random.default_rng(20260822)
    min_valid = math.inf
    for _ in range(100):
        g = float(rng.uniform(0.05, 3.0))
        params = DaviesParams(
            F=float(rng.uniform(0.0, 2.0)) * g,
            G=g,
            p=float(rng.uniform(1e-3, 0.5)),
            omega_B=float(rng.uniform(-2.0, 2.0)),
        )
        t = float(rng.uniform(0.0, 10.0))
        w = np.linalg.eigvalsh(choi_matrix(davies_superoperator(t, params)))
        min_valid = min(min_valid, float(w[0]))
    bad = DaviesParams(F=3.0, G=1.0, unphysical=True)
    min_bad = min(
        float(np.linalg.eigvalsh(choi_matrix(davies_superoperator(float(t), bad)))[0])
        for t in np.linspace(0.0, 5.0, 251)
    )
    ok = min_valid >= -1e-10 and min_bad < -1e-6
    return _line(9, "Choi positivity inside cone, violation at F=3G", ok,
                 f"min eig valid={min_valid:.2e}, F=3G={min_bad:.2e}")


def criterion_10_bell_and_detuning_invariance() -> bool:
    spread_n = 0.0
    spread_d = 0.0
    for f, g in ((0.5, 1.0), (1.5, 1.0)):
        for gt in (0.7, 2.5):
            ns, ds = [], []
            for bell in range(4):
                for omega in (0.0, 1.0, 7.3):
                    cfg = _config(f, g, omega_A=omega + 0.4, omega_B=0.4, bell_index=bell)
                    rho = evolve(cfg, gt / g)
                    ns.append(negativity_oracle(rho))
                    ds.append(discord_oracle(rho))
            spread_n = max(spread_n, max(ns) - min(ns))
            spread_d = max(spread_d, max(ds) - min(ds))
    ok = spread_n <= 1e-10 and spread_d <= 1e-10
    return _line(10, "N, D invariant under Bell index and detuning", ok,
                 f"spread N={spread_n:.2e}, D={spread_d:.2e}")


def criterion_11_semigroup_and_gibbs() -> bool:
    rng = np.random.default_rng(915)
    worst_comp = 0.0
    worst_fix = 0.0
    for _ in range(25):
        g = float(rng.uniform(0.05, 2.5))
        params = DaviesParams(
            F=float(rng.uniform(0.0, 2.0)) * g,
            G=g,
            p=float(rng.uniform(1e-3, 0.5)),
            omega_B=float(rng.uniform(-2.0, 2.0)),
        )
        s, t = (float(v) for v in rng.uniform(0.0, 6.0, size=2))
        comp = davies_superoperator(s, params) @ davies_superoperator(t, params)
        worst_comp = max(worst_comp, float(np.abs(comp - davies_superoperator(s + t, params)).max()))
        fixed = apply_map(davies_superoperator(t, params), gibbs_state(params.p))
        worst_fix = max(worst_fix, float(np.abs(fixed - gibbs_state(params.p)).max()))
    ok = worst_comp <= 1e-12 and worst_fix <= 1e-12
    return _line(11, "semigroup composition and Gibbs fixed point", ok,
                 f"max comp err={worst_comp:.2e}, max fixed-point err={worst_fix:.2e}")


def criterion_12_sweep_csv_shape() -> bool:
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "sweep.csv"
        rc = cli_main(["sweep", "--steps", "161", "--t-max", "8", "--output", str(path)])
        if rc != 0:
            return _line(12, "sweep CSV decay shape", False, f"sweep exited {rc}")
        lines = path.read_text().strip().splitlines()
    rows = [[float(x) for x in line.split(",")] for line in lines[1:]]
    ok = True
    details = []
    for a in RATIOS:
        sub = [r for r in rows if r[1] == a]
        gts = [r[0] for r in sub]
        n = [r[2] for r in sub]
        d = [r[3] for r in sub]
        if any(b > x + 1e-15 for x, b in zip(n, n[1:])):
            ok, _ = False, details.append(f"N not monotone at a={a}")
        if any(b >= x for x, b in zip(d, d[1:])):
            ok, _ = False, details.append(f"D not strictly decreasing at a={a}")
        if a > 0.0:
            gtc = esd_time(a, 1.0)
            if any(v != 0.0 for gt, v in zip(gts, n) if gt > gtc * (1.0 + 1e-9)):
                ok, _ = False, details.append(f"N not exactly 0 beyond t_c at a={a}")
            logs = [math.log(v) for gt, v in zip(gts, n) if gt < gtc and v > 0.0]
            second = [logs[k + 1] - 2.0 * logs[k] + logs[k - 1] for k in range(1, len(logs) - 1)]
            if any(s >= -1e-9 for s in second):
                ok, _ = False, details.append(f"ln N not strictly concave at a={a}")
    detail = "; ".join(details) if details else "monotone, exact zero after t_c, ln N concave"
    return _line(12, "sweep CSV decay shape", ok, detail)


CRITERIA = [
    criterion_01_bell_baseline,
    criterion_02_pure_dephasing_negativity,
    criterion_03_esd_time,
    criterion_04_closed_form_state,
    criterion_05_discord_equivalence,
    criterion_06_asymptotics,
    criterion_07_slowest_decay_at_equal_rates,
    criterion_08_dephasing_classical_plateau,
    criterion_09_complete_positivity,
    criterion_10_bell_and_detuning_invariance,
    criterion_11_semigroup_and_gibbs,
    criterion_12_sweep_csv_shape,
]


def test_criterion_01():
    assert criterion_01_bell_baseline()


def test_criterion_02():
    assert criterion_02_pure_dephasing_negativity()


def test_criterion_03():
    assert criterion_03_esd_time()


def test_criterion_04():
    assert criterion_04_closed_form_state()


def test_criterion_05():
    assert criterion_05_discord_equivalence()


def test_criterion_06():
    assert criterion_06_asymptotics()


def test_criterion_07():
    assert criterion_07_slowest_decay_at_equal_rates()


def test_criterion_08():
    assert criterion_08_dephasing_classical_plateau()


def test_criterion_09():
    assert criterion_09_complete_positivity()


def test_criterion_10():
    assert criterion_10_bell_and_detuning_invariance()


def test_criterion_11():
    assert criterion_11_semigroup_and_gibbs()


def test_criterion_12():
    assert criterion_12_sweep_csv_shape()


if __name__ == "__main__":
    results = [fn() for fn in CRITERIA]
    print(f"{sum(results)}/{len(results)} acceptance criteria passed")
    sys.exit(0 if all(results) else 1)
