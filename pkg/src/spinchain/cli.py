"""Command-line interface.

Subcommands:

* profile    build a coupling profile, print or save its record
* evolve     sample the clean transfer curve f(t), F(t) to CSV
* sweep      disorder-averaged fidelity table over a cell grid
* contour    extract an iso-fidelity level set from a table and fit it
* crossover  disorder strength where two schemes trade places
* fit        power-law fit of stored contour points
* preset     canned experiment grids (fig1, fig2a, fig2bcd, fig3ab,
             fig3cd, fig4) writing their artifacts into a directory

Conventions: artifacts go to --out / --out-dir; every generated file
carries '# generated: <UTC time>' unless --no-timestamp is given (byte
identical reruns need that flag); --seed falls back to the
SPINCHAIN_SEED environment variable, then 0.  Exit status is 0 only
when every requested artifact was fully produced, 2 for usage errors.
"""

import argparse
from datetime import datetime, timezone
import os
from pathlib import Path
import sys

import numpy as np

from .dynamics import curve_to_csv, diagonalize, fidelity_curve
from .experiments import (
    InsufficientDataError,
    FitError,
    PRESET_NAMES,
    PRESET_PLANS,
    PeakSearchError,
    SystemKind,
    analytic_tau_estimate,
    contour_fit_from_json,
    extract_contour,
    find_crossover,
    fit_power_law,
    optimize_alpha,
    run_sweep,
    sweep_table_from_csv,
    sweep_table_to_csv,
    transfer_time,
)
from .profiles import (
    CouplingProfile,
    ReconstructionError,
    alpha_boundary_profile,
    homogeneous_profile,
    profile_to_record,
    pst_linear_profile,
    pst_quadratic_profile,
)

_PROFILE_SYSTEMS = ("homogeneous", "alpha", "alpha-opt", "pst-linear", "pst-quadratic")
_SWEEP_SYSTEMS = ("homogeneous", "pst-linear", "pst-quadratic", "alpha-opt", "alpha-weak")


def _timestamp_lines(ns) -> tuple[str, ...]:
    if getattr(ns, "no_timestamp", False):
        return ()
    now = datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
    return (f"generated: {now}",)


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _parse_n_range(text: str) -> list[int]:
    """'50:200:10' -> [50, 60, ..., 200]; '50,51,60' -> [50, 51, 60]."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise argparse.ArgumentTypeError(
                f"expected LO:HI:STEP, got {text!r}"
            )
        lo, hi, step = (int(p) for p in parts)
        if step <= 0 or hi < lo:
            raise argparse.ArgumentTypeError(f"bad range {text!r}")
        return list(range(lo, hi + 1, step))
    return [int(p) for p in text.split(",")]


def _parse_epsilon_grid(text: str) -> list[float]:
    """'1e-3:0.3:25' -> 25 log-spaced points; '0.01,0.05' -> those values."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise argparse.ArgumentTypeError(f"expected LO:HI:COUNT, got {text!r}")
        lo, hi = float(parts[0]), float(parts[1])
        count = int(parts[2])
        if lo <= 0 or hi <= lo or count < 2:
            raise argparse.ArgumentTypeError(f"bad epsilon grid {text!r}")
        return [float(e) for e in np.geomspace(lo, hi, count)]
    values = [float(p) for p in text.split(",")]
    if any(v < 0 for v in values):
        raise argparse.ArgumentTypeError("epsilon values must be non-negative")
    return values


def _parse_models(text: str) -> list[str]:
    models = [m.strip() for m in text.split(",") if m.strip()]
    for m in models:
        if m not in ("rsd", "asd"):
            raise argparse.ArgumentTypeError(f"unknown model {m!r} (rsd or asd)")
    if not models:
        raise argparse.ArgumentTypeError("need at least one model")
    return models


def _default_seed() -> int:
    env = os.environ.get("SPINCHAIN_SEED", "")
    return int(env) if env.strip() else 0


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        Path(path).write_text(text)


def _build_profile(ns) -> tuple[CouplingProfile, dict]:
    """Profile for the profile/evolve commands, plus calibration notes."""
    notes: dict = {}
    if ns.system == "homogeneous":
        return homogeneous_profile(ns.n), notes
    if ns.system == "pst-linear":
        return pst_linear_profile(ns.n), notes
    if ns.system == "pst-quadratic":
        return pst_quadratic_profile(ns.n), notes
    if ns.system == "alpha":
        if ns.alpha is None:
            raise ValueError("--system alpha requires --alpha")
        return alpha_boundary_profile(ns.n, ns.alpha), notes
    if ns.system == "alpha-opt":
        opt = optimize_alpha(ns.n)
        notes["alpha"] = opt.alpha
        notes["tau"] = opt.tau
        return alpha_boundary_profile(ns.n, opt.alpha), notes
    raise ValueError(f"unknown system {ns.system!r}")


def _profile_tau(ns, profile: CouplingProfile, notes: dict) -> float:
    """Arrival time for the evolve command's --tau-mult grid."""
    if "tau" in notes:
        return notes["tau"]
    if ns.system == "pst-linear":
        return transfer_time(profile, analytic_tau_estimate("pst_linear", ns.n), "first")
    if ns.system == "pst-quadratic":
        est = analytic_tau_estimate("pst_quadratic", ns.n)
        if ns.n % 2:
            return transfer_time(profile, est, "first")
        return transfer_time(profile, 2.0 * est, "best")
    if ns.system == "alpha":
        try:
            return transfer_time(profile, ns.n / 2.0, "best")
        except PeakSearchError:
            # weakly coupled boundaries arrive far later than the ballistic window
            est = analytic_tau_estimate("alpha_weak", ns.n, ns.alpha)
            return transfer_time(profile, est, "best")
    return transfer_time(profile, ns.n / 2.0, "best")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_profile(ns) -> int:
    profile, notes = _build_profile(ns)
    spectral = diagonalize(profile)
    gaps = np.diff(spectral.energies)
    J = profile.couplings
    stats = [
        f"# min gap: {gaps.min():.12g}",
        f"# max gap: {gaps.max():.12g}",
        f"# coupling ratio Jmax/Jmin: {J.max() / J.min():.12g}",
    ]
    if "alpha" in notes:
        stats.insert(0, f"# optimized alpha: {notes['alpha']:.12g}")
    record = profile_to_record(profile)
    if ns.out is None:
        sys.stdout.write(record)
        print("\n".join(stats))
    else:
        _write_text(ns.out, record)
        print("\n".join(stats))
        print(f"profile written to {ns.out}")
    return 0


def cmd_evolve(ns) -> int:
    profile, notes = _build_profile(ns)
    if ns.t_max is not None:
        t_max = ns.t_max
        header_extra = ()
    else:
        tau = _profile_tau(ns, profile, notes)
        t_max = ns.tau_mult * tau
        header_extra = (f"tau: {tau:.12g}",)
    if t_max <= 0:
        raise ValueError(f"time horizon must be positive, got {t_max}")
    times = np.linspace(0.0, t_max, ns.t_points)
    curve = fidelity_curve(profile, times)
    headers = (
        "spinchain evolve",
        f"system: {ns.system}, n: {ns.n}",
        *header_extra,
        *_timestamp_lines(ns),
    )
    _write_text(ns.out, curve_to_csv(curve, headers))
    return 0


def _sweep_systems(ns) -> list[SystemKind]:
    systems = []
    names = [n for chunk in ns.system for n in chunk.split(",")]
    for name in names:
        name = name.strip()
        if name not in _SWEEP_SYSTEMS:
            raise ValueError(f"unknown sweep system {name!r} (choose from {_SWEEP_SYSTEMS})")
        if name == "alpha-weak":
            if ns.alpha is None:
                raise ValueError("alpha-weak requires --alpha")
            systems.append(SystemKind("alpha_weak", alpha=ns.alpha))
        else:
            systems.append(SystemKind(name.replace("-", "_")))
    return systems


def _sweep_to_json(table, meta: dict) -> str:
    import json

    payload = {
        "meta": meta,
        "complete": table.complete,
        "errors": list(table.errors),
        "rows": [
            {
                "system": r.system,
                "parity": r.parity,
                "N": r.n_sites,
                "epsilon": r.epsilon,
                "model": r.model,
                "tau": r.tau,
                "mean_F": r.mean_F,
                "stderr_F": r.stderr_F,
                "n_real": r.n_realizations,
                "master_seed": r.master_seed,
            }
            for r in table.rows
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def cmd_sweep(ns) -> int:
    systems = _sweep_systems(ns)
    if ns.n is not None:
        n_values = [ns.n]
    elif ns.n_range is not None:
        n_values = ns.n_range
    else:
        raise ValueError("sweep needs --n or --n-range")
    if ns.epsilon is not None:
        epsilons = [ns.epsilon]
    elif ns.epsilon_grid is not None:
        epsilons = ns.epsilon_grid
    else:
        epsilons = list(np.geomspace(1e-3, 0.3, 25))
    table = run_sweep(
        systems,
        n_values,
        epsilons,
        models=ns.model,
        n_realizations=ns.realizations,
        master_seed=ns.seed,
        threads=ns.threads,
    )
    meta_lines = (
        "spinchain sweep",
        f"seed: {ns.seed}",
        f"realizations: {ns.realizations}",
        *_timestamp_lines(ns),
    )
    if ns.format == "json":
        meta = {"seed": ns.seed, "realizations": ns.realizations}
        if not ns.no_timestamp:
            meta["generated"] = datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
        _write_text(ns.out, _sweep_to_json(table, meta))
    else:
        _write_text(ns.out, sweep_table_to_csv(table, meta_lines))
    if not table.complete:
        for err in table.errors:
            print(f"sweep cell failed: {err}", file=sys.stderr)
        return 1
    return 0


def cmd_contour(ns) -> int:
    table = sweep_table_from_csv(Path(ns.table).read_text())
    points = extract_contour(table, ns.system, ns.model, ns.level, parity=ns.parity)
    fit = fit_power_law(points, level=ns.level)
    _write_text(ns.out, fit.to_json())
    if ns.out is not None:
        print(
            f"F = {ns.level:g} contour: {len(points)} points, "
            f"beta = {fit.beta:.4g}, r^2 = {fit.r_squared:.4g}"
        )
    return 0


def cmd_crossover(ns) -> int:
    table = sweep_table_from_csv(Path(ns.table).read_text())
    eps_star = find_crossover(
        table,
        ns.system_a,
        ns.system_b,
        ns.n,
        ns.model,
        n_sites_b=ns.n_b,
        eps_max=ns.eps_max,
    )
    if eps_star is None:
        print("crossover: none within the table's epsilon grid")
    else:
        print(f"crossover epsilon: {eps_star:.6g}")
    if ns.out is not None:
        import json

        payload = {
            "system_a": ns.system_a,
            "system_b": ns.system_b,
            "N": ns.n,
            "N_b": ns.n if ns.n_b is None else ns.n_b,
            "model": ns.model,
            "epsilon": eps_star,
        }
        _write_text(ns.out, json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return 0


def cmd_fit(ns) -> int:
    import json

    payload = json.loads(Path(ns.points).read_text())
    if isinstance(payload, dict) and "points" in payload:
        points = payload["points"]
        level = float(payload.get("level", ns.level))
    else:
        points = payload
        level = ns.level
    fit = fit_power_law(points, level=level)
    print(f"beta = {fit.beta:.12g}")
    print(f"const = {fit.const:.12g}")
    print(f"r_squared = {fit.r_squared:.12g}")
    if ns.out is not None:
        _write_text(ns.out, fit.to_json())
    return 0


# ---------------------------------------------------------------------------
# presets
# ---------------------------------------------------------------------------

def _spectrum_csv(spectral, header_lines) -> str:
    """Columns k, E, P1: mode index, eigenenergy, weight on the first site."""
    n = spectral.n_sites
    k = np.arange(n) - (n - 1) / 2.0
    lines = [f"# {h}" for h in header_lines]
    lines.append("k,E,P1")
    for kk, E, a1 in zip(k, spectral.energies, spectral.first_components):
        lines.append(f"{kk:.12g},{E:.12g},{a1 * a1:.12g}")
    return "\n".join(lines) + "\n"


def _run_fig1(ns, out_dir: Path) -> int:
    n = ns.n if ns.n is not None else 200
    stamp = _timestamp_lines(ns)
    lin = pst_linear_profile(n)
    opt = optimize_alpha(n)
    boundary = alpha_boundary_profile(n, opt.alpha)
    tau_lin = transfer_time(lin, analytic_tau_estimate("pst_linear", n), "first")
    times = np.linspace(0.0, 3.0 * tau_lin, 1500)
    for tag, profile in (("pst_linear", lin), ("alpha_opt", boundary)):
        (out_dir / f"fig1_profile_{tag}.txt").write_text(profile_to_record(profile))
        spectral = diagonalize(profile)
        (out_dir / f"fig1_spectrum_{tag}.csv").write_text(
            _spectrum_csv(spectral, (f"spinchain preset fig1, system {tag}, n {n}", *stamp))
        )
        curve = fidelity_curve(profile, times)
        (out_dir / f"fig1_curve_{tag}.csv").write_text(
            curve_to_csv(curve, (f"spinchain preset fig1, system {tag}, n {n}", *stamp))
        )
    print(f"fig1 artifacts written to {out_dir} (optimized alpha {opt.alpha:.6g})")
    return 0


def cmd_preset(ns) -> int:
    out_dir = Path(ns.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    if ns.preset == "fig1":
        return _run_fig1(ns, out_dir)

    plan = PRESET_PLANS[ns.preset]
    n_values = tuple(ns.n_range) if ns.n_range else ((ns.n,) if ns.n else plan.n_values)
    epsilons = tuple(ns.epsilon_grid) if ns.epsilon_grid else plan.epsilons
    table = run_sweep(
        plan.systems,
        n_values,
        epsilons,
        models=plan.models,
        n_realizations=ns.realizations,
        master_seed=ns.seed,
        threads=ns.threads,
    )
    headers = (
        f"spinchain preset {ns.preset}",
        f"seed: {ns.seed}",
        f"realizations: {ns.realizations}",
        *_timestamp_lines(ns),
    )
    table_path = out_dir / f"{ns.preset}.csv"
    table_path.write_text(sweep_table_to_csv(table, headers))
    status = 0
    if not table.complete:
        for err in table.errors:
            print(f"sweep cell failed: {err}", file=sys.stderr)
        status = 1
    for tag, system, parity, level in plan.contours:
        try:
            points = extract_contour(table, system, level=level, model="rsd", parity=parity)
            fit = fit_power_law(points, level=level)
        except (InsufficientDataError, FitError) as exc:
            print(f"contour {tag}: {exc}", file=sys.stderr)
            status = 1
            continue
        (out_dir / f"{ns.preset}_contour_{tag}.json").write_text(fit.to_json())
    print(f"{ns.preset} artifacts written to {out_dir}")
    return status


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinchain",
        description="State transfer through XX spin chains under coupling disorder.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common_system(p, choices):
        p.add_argument("--system", required=True, choices=choices)
        p.add_argument("--n", type=_positive_int, required=True, help="number of sites")
        p.add_argument("--alpha", type=float, help="boundary coupling in (0, 1]")

    p = sub.add_parser("profile", help="build a coupling profile")
    add_common_system(p, _PROFILE_SYSTEMS)
    p.add_argument("--out", help="write the profile record here instead of stdout")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("evolve", help="clean transfer curve to CSV")
    add_common_system(p, _PROFILE_SYSTEMS)
    grid = p.add_mutually_exclusive_group(required=True)
    grid.add_argument("--t-max", type=float, help="time horizon")
    grid.add_argument(
        "--tau-mult", type=float, help="horizon as a multiple of the arrival time"
    )
    p.add_argument("--t-points", type=_positive_int, default=1500)
    p.add_argument("--out")
    p.add_argument("--no-timestamp", action="store_true")
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("sweep", help="disorder-averaged fidelity table")
    p.add_argument("--system", required=True, action="append",
                   help=f"system to sweep, from {', '.join(_SWEEP_SYSTEMS)}; "
                        "repeat the flag or pass a comma list for several")
    p.add_argument("--n", type=_positive_int)
    p.add_argument("--n-range", type=_parse_n_range, metavar="LO:HI:STEP")
    p.add_argument("--alpha", type=float, help="boundary coupling for alpha-weak")
    p.add_argument("--epsilon", type=float, help="single disorder strength")
    p.add_argument("--epsilon-grid", type=_parse_epsilon_grid, metavar="LO:HI:COUNT")
    p.add_argument("--model", type=_parse_models, default=["rsd", "asd"],
                   help="rsd, asd, or rsd,asd")
    p.add_argument("--realizations", type=_positive_int, default=500)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--threads", type=_positive_int, default=1)
    p.add_argument("--out")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--no-timestamp", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("contour", help="iso-fidelity level set and power-law fit")
    p.add_argument("--table", required=True, help="sweep CSV")
    p.add_argument("--system", required=True, help="system label as it appears in the table")
    p.add_argument("--model", required=True, choices=("rsd", "asd"))
    p.add_argument("--level", type=float, default=0.9)
    p.add_argument("--parity", choices=("odd", "even"))
    p.add_argument("--out")
    p.set_defaults(func=cmd_contour)

    p = sub.add_parser("crossover", help="disorder strength where two schemes trade places")
    p.add_argument("--table", required=True)
    p.add_argument("--system-a", required=True)
    p.add_argument("--system-b", required=True)
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--n-b", type=_positive_int, help="chain length for system b")
    p.add_argument("--model", required=True, choices=("rsd", "asd"))
    p.add_argument("--eps-max", type=float)
    p.add_argument("--out")
    p.set_defaults(func=cmd_crossover)

    p = sub.add_parser("fit", help="power-law fit of contour points")
    p.add_argument("--points", required=True, help="JSON with a points array")
    p.add_argument("--level", type=float, default=float("nan"))
    p.add_argument("--out")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("preset", help="canned experiment grids")
    p.add_argument("--preset", required=True, choices=PRESET_NAMES)
    p.add_argument("--out-dir", required=True)
    p.add_argument("--n", type=_positive_int, help="override the preset's single length")
    p.add_argument("--n-range", type=_parse_n_range, metavar="LO:HI:STEP")
    p.add_argument("--epsilon-grid", type=_parse_epsilon_grid, metavar="LO:HI:COUNT")
    p.add_argument("--realizations", type=_positive_int, default=500)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--threads", type=_positive_int, default=1)
    p.add_argument("--no-timestamp", action="store_true")
    p.set_defaults(func=cmd_preset)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.func(ns)
    except (
        ValueError,
        PeakSearchError,
        ReconstructionError,
        InsufficientDataError,
        FitError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
