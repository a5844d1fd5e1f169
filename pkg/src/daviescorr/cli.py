"""Command line front end.

Subcommands:
    sweep       CSV of correlation measures over a (rate ratio, time) grid
    esd         sudden-death time of the negativity as single-line JSON
    state       evolved density matrix plus measures as single-line JSON
    choi-check  minimum Choi eigenvalue over a time grid (accepts invalid rates)

Exit codes: 0 success, 1 invalid arguments or invariant violation,
2 verification failure (--verify found closed form and oracle apart).

Flags override values from an optional key-value config file (--config,
lines of the form `t-max = 8.0`, `#` comments allowed); built-in defaults
apply last. No environment variables are consulted.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import math
import sys

import numpy as np

from .correlations import (
    correlation_report,
    classical_correlations,
    discord_closed,
    esd_time,
    mutual_information,
    negativity_closed,
    negativity_oracle,
)
from .davies import DaviesParams, choi_matrix, davies_superoperator
from .evolution import SystemConfig, evolve

NEGATIVITY_VERIFY_TOL = 1e-10
DISCORD_VERIFY_TOL = 1e-6


def _fmt(x: float) -> str:
    """12 significant digits, trailing zeros kept."""
    return format(float(x), "#.12g")


def _parse_ratios(text: str) -> list[float]:
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise ValueError("ratios list is empty")
    return [float(p) for p in parts]


def _parse_bool(text: str) -> bool:
    low = text.strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


def _read_config(path: str) -> dict[str, str]:
    values: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {raw.strip()!r}")
            key, _, val = line.partition("=")
            values[key.strip().replace("-", "_")] = val.strip()
    return values


# per-option: (converter for config-file strings, built-in default)
_OPTION_SPEC = {
    "F": (float, None),
    "G": (float, 1.0),
    "p": (float, 0.5),
    "omega_a": (float, 0.0),
    "omega_b": (float, 0.0),
    "bell_index": (int, 0),
    "t": (float, None),
    "t_max": (float, 8.0),
    "steps": (int, 201),
    "ratios": (_parse_ratios, (0.0, 0.5, 1.0, 2.0)),
    "method": (str, "closed"),
    "verify": (_parse_bool, False),
    "absolute": (_parse_bool, False),
    "output": (str, None),
}


def _resolve(args: argparse.Namespace, names: list[str], choi_defaults: bool = False) -> dict:
    cfg = _read_config(args.config) if getattr(args, "config", None) else {}
    out = {}
    for name in names:
        conv, default = _OPTION_SPEC[name]
        if choi_defaults and name == "t_max":
            default = 5.0
        value = getattr(args, name, None)
        if value is None:
            value = conv(cfg[name]) if name in cfg else default
        out[name] = value
    return out


def _require(opts: dict, names: list[str]) -> None:
    for name in names:
        if opts[name] is None:
            raise ValueError(f"missing required option --{name.replace('_', '-')}")


@contextlib.contextmanager
def _open_output(path: str | None):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _emit_json(obj: dict, path: str | None) -> None:
    with _open_output(path) as fh:
        fh.write(json.dumps(obj) + "\n")


def cmd_sweep(args: argparse.Namespace) -> int:
    o = _resolve(
        args,
        ["ratios", "G", "p", "omega_a", "omega_b", "bell_index", "t_max", "steps",
         "method", "verify", "absolute", "output"],
    )
    if o["G"] <= 0.0:
        raise ValueError(f"G must be positive, got {o['G']}")
    if o["steps"] < 2:
        raise ValueError(f"steps must be at least 2, got {o['steps']}")
    if o["t_max"] <= 0.0:
        raise ValueError(f"t-max must be positive, got {o['t_max']}")
    if o["method"] not in ("closed", "oracle", "both"):
        raise ValueError(f"method must be closed, oracle or both, got {o['method']!r}")
    if o["verify"] and o["method"] != "both":
        raise ValueError("--verify needs --method both")
    ratios = sorted(set(o["ratios"]))
    for a in ratios:
        if not 0.0 <= a <= 2.0:
            raise ValueError(f"rate ratio {a} outside the physical window [0, 2]")
    closed_columns = o["method"] in ("closed", "both")
    if closed_columns and abs(o["p"] - 0.5) > 1e-15:
        raise ValueError("closed-form columns are defined for p = 1/2 only; use --method oracle")

    time_label = "t" if o["absolute"] else "Gt"
    header = {
        "closed": [time_label, "rate_ratio", "negativity_closed", "discord_closed"],
        "oracle": [time_label, "rate_ratio", "negativity_oracle", "discord_oracle",
                   "classical", "mutual_info"],
        "both": [time_label, "rate_ratio", "negativity_closed", "discord_closed",
                 "negativity_oracle", "discord_oracle", "classical", "mutual_info"],
    }[o["method"]]

    gts = np.linspace(0.0, o["t_max"], o["steps"])
    violations = 0
    worst = ""
    with _open_output(o["output"]) as fh:
        fh.write(",".join(header) + "\n")
        for a in ratios:
            f_rate = a * o["G"]
            config = SystemConfig(
                omega_A=o["omega_a"],
                davies=DaviesParams(F=f_rate, G=o["G"], p=o["p"], omega_B=o["omega_b"]),
                bell_index=o["bell_index"],
            )
            for gt in gts:
                t = gt / o["G"]
                tval = t if o["absolute"] else gt
                if o["method"] == "closed":
                    row = [tval, a,
                           negativity_closed(f_rate, o["G"], t),
                           discord_closed(f_rate, o["G"], t)]
                else:
                    rep = correlation_report(config, t)
                    if o["method"] == "oracle":
                        row = [tval, a, rep.negativity_oracle, rep.discord_oracle,
                               rep.classical, rep.mutual_info]
                    else:
                        row = [tval, a, rep.negativity_closed, rep.discord_closed,
                               rep.negativity_oracle, rep.discord_oracle,
                               rep.classical, rep.mutual_info]
                        if o["verify"]:
                            dn = abs(rep.negativity_oracle - rep.negativity_closed)
                            dd = abs(rep.discord_oracle - rep.discord_closed)
                            if dn > NEGATIVITY_VERIFY_TOL or dd > DISCORD_VERIFY_TOL:
                                violations += 1
                                if not worst:
                                    worst = (f"Gt={gt:g} a={a:g}: |dN|={dn:.3e}, |dD|={dd:.3e}")
                fh.write(",".join(_fmt(v) for v in row) + "\n")
    if violations:
        print(f"verification failed on {violations} row(s); first: {worst}", file=sys.stderr)
        return 2
    return 0


def cmd_esd(args: argparse.Namespace) -> int:
    o = _resolve(args, ["F", "G", "output"])
    _require(o, ["F", "G"])
    if o["F"] < 0.0:
        raise ValueError(f"F must be nonnegative, got {o['F']}")
    tc = esd_time(o["F"], o["G"])
    _emit_json({"t_c": tc, "Gt_c": None if tc is None else o["G"] * tc}, o["output"])
    return 0


def cmd_state(args: argparse.Namespace) -> int:
    o = _resolve(args, ["F", "G", "p", "omega_a", "omega_b", "bell_index", "t", "output"])
    _require(o, ["F", "G", "t"])
    config = SystemConfig(
        omega_A=o["omega_a"],
        davies=DaviesParams(F=o["F"], G=o["G"], p=o["p"], omega_B=o["omega_b"]),
        bell_index=o["bell_index"],
    )
    rho = evolve(config, o["t"])
    info = mutual_information(rho)
    classical, _, _ = classical_correlations(rho)
    discord = info - classical
    if -1e-9 <= discord < 0.0:
        discord = 0.0
    _emit_json(
        {
            "t": o["t"],
            "rho": [[[float(z.real), float(z.imag)] for z in row] for row in rho],
            "negativity": negativity_oracle(rho),
            "discord": discord,
            "classical": classical,
            "mutual_information": info,
        },
        o["output"],
    )
    return 0


def cmd_choi_check(args: argparse.Namespace) -> int:
    o = _resolve(args, ["F", "G", "p", "omega_b", "t_max", "steps", "output"], choi_defaults=True)
    _require(o, ["F", "G"])
    if o["steps"] < 2:
        raise ValueError(f"steps must be at least 2, got {o['steps']}")
    if o["t_max"] <= 0.0:
        raise ValueError(f"t-max must be positive, got {o['t_max']}")
    params = DaviesParams(F=o["F"], G=o["G"], p=o["p"], omega_B=o["omega_b"], unphysical=True)
    min_eig = math.inf
    t_at_min = 0.0
    for t in np.linspace(0.0, o["t_max"], o["steps"]):
        w = np.linalg.eigvalsh(choi_matrix(davies_superoperator(float(t), params)))
        if w[0] < min_eig:
            min_eig = float(w[0])
            t_at_min = float(t)
    _emit_json(
        {"min_choi_eigenvalue": min_eig, "t_at_min": t_at_min, "is_cp": bool(min_eig >= -1e-9)},
        o["output"],
    )
    return 0


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad arguments; the contract reserves 2 for
    # verification failures, so route usage errors to exit code 1
    def error(self, message):  # noqa: D401
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _add_common(sub: argparse.ArgumentParser, names: list[str]) -> None:
    flags = {
        "F": ("--F", float, "energy relaxation rate (1/tau_1)"),
        "G": ("--G", float, "dephasing rate (1/tau_2)"),
        "p": ("--p", float, "thermal weight of the bath, in (0, 1/2]"),
        "omega_a": ("--omega-a", float, "level splitting of qubit A"),
        "omega_b": ("--omega-b", float, "level splitting of qubit B"),
        "bell_index": ("--bell-index", int, "initial Bell state index 0..3"),
        "t": ("--t", float, "evaluation time"),
        "t_max": ("--t-max", float, "grid end (sweep: in units of Gt)"),
        "steps": ("--steps", int, "number of grid points"),
        "ratios": ("--ratios", _parse_ratios, "comma-separated F/G values"),
        "method": ("--method", str, "closed, oracle or both"),
        "output": ("--output", str, "write to this path instead of stdout"),
    }
    for name in names:
        if name == "verify":
            sub.add_argument("--verify", action="store_true", default=None,
                             help="with --method both, fail (exit 2) if pipelines disagree")
        elif name == "absolute":
            sub.add_argument("--absolute", action="store_true", default=None,
                             help="emit absolute time t instead of Gt")
        else:
            flag, conv, help_text = flags[name]
            sub.add_argument(flag, dest=name, type=conv, default=None, help=help_text)
    sub.add_argument("--config", default=None, help="key-value file with option defaults")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="daviescorr",
                     description="Correlation dynamics of a Bell pair with one thermalizing qubit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_sweep = sub.add_parser("sweep", help="CSV over a (rate ratio, Gt) grid")
    _add_common(p_sweep, ["ratios", "G", "p", "omega_a", "omega_b", "bell_index",
                          "t_max", "steps", "method", "verify", "absolute", "output"])
    p_sweep.set_defaults(func=cmd_sweep)

    p_esd = sub.add_parser("esd", help="entanglement sudden-death time as JSON")
    _add_common(p_esd, ["F", "G", "output"])
    p_esd.set_defaults(func=cmd_esd)

    p_state = sub.add_parser("state", help="evolved state and measures as JSON")
    _add_common(p_state, ["F", "G", "p", "omega_a", "omega_b", "bell_index", "t", "output"])
    p_state.set_defaults(func=cmd_state)

    p_choi = sub.add_parser("choi-check", help="minimum Choi eigenvalue over a time grid")
    _add_common(p_choi, ["F", "G", "p", "omega_b", "t_max", "steps", "output"])
    p_choi.set_defaults(func=cmd_choi_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else int(exc.code)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    sys.exit(main())
