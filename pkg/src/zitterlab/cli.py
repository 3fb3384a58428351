"""Command-line front end: ``zitterlab check|simulate|sweep``.

Exit codes: 0 success, 1 numerical or tolerance failure, 2 usage/config error.
"""

from __future__ import annotations

import argparse
import logging
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import numpy as np

from . import checks
from .config import ConfigError, RunConfig, load_config
from .dynamics import (
    UnitVelocity,
    helix,
    integrate,
    make_initial_state,
    reduced_field,
    riewe_form_check,
)
from .errors import NoHelix, ZitterError
from .lagrangians import BoppParams
from .output import (
    MONITORS_HEADER,
    REPORT_HEADER,
    SUMMARY_HEADER,
    TRAJECTORY_HEADER,
    fmt,
    write_csv,
    write_polyline_svg,
)

log = logging.getLogger("zitterlab")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def run_check(cfg: RunConfig) -> int:
    results = checks.run_all(cfg.params, cfg.seed, cfg.sample_count)
    cfg.out.mkdir(parents=True, exist_ok=True)
    lines = [
        f"zitterlab identity suites: a={fmt(cfg.params.a)} A={fmt(cfg.params.A)} "
        f"seed={cfg.seed} samples={cfg.sample_count}"
    ]
    width = max(len(r.name) for r in results)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{r.name:<{width}}  {fmt(r.max_residual):>24}  <= {fmt(r.tolerance):<8}  {status}")
    failed = [r.name for r in results if not r.passed]
    lines.append("all suites passed" if not failed else f"FAILED: {', '.join(failed)}")
    (cfg.out / "report.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")
    write_csv(
        cfg.out / "report.csv",
        REPORT_HEADER,
        [(r.name, r.max_residual, r.tolerance, "pass" if r.passed else "fail") for r in results],
    )
    print("\n".join(lines))
    return EXIT_FAIL if failed else EXIT_OK


def initial_state(cfg: RunConfig):
    if cfg.helix is not None:
        return helix(cfg.params, cfg.helix.omega, cfg.helix.phase).state
    i = cfg.initial
    return make_initial_state(i.u0, i.udot0, i.uddot0, cfg.params)


def run_simulate(cfg: RunConfig, svg: bool = False) -> int:
    try:
        s0 = initial_state(cfg)
        traj = integrate(
            reduced_field(cfg.params),
            s0,
            cfg.tau_end,
            cfg.step,
            params=cfg.params,
            sample_every=cfg.sample_every,
            gauge_tol=UnitVelocity().tol,
        )
    except ZitterError as exc:
        print(f"integration failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    cfg.out.mkdir(parents=True, exist_ok=True)
    write_csv(
        cfg.out / "trajectory.csv",
        TRAJECTORY_HEADER,
        (np.concatenate([[t], y]).tolist() for t, y in zip(traj.tau, traj.states)),
    )
    write_csv(
        cfg.out / "monitors.csv",
        MONITORS_HEADER,
        zip(traj.tau.tolist(), traj.H.tolist(), traj.u_sq.tolist(), traj.wp_drift.tolist()),
    )
    if svg:
        write_polyline_svg(cfg.out / "plot.svg", traj.x[:, 1], traj.x[:, 2])
    print(
        f"{len(traj)} samples to tau={fmt(traj.tau[-1])}; "
        f"max |H-1|={fmt(float(np.max(np.abs(traj.H - 1))))} "
        f"max |u.u-1|={fmt(float(np.max(np.abs(traj.u_sq - 1))))} "
        f"max wp drift={fmt(float(np.max(traj.wp_drift)))}"
    )
    return EXIT_OK


def sweep_row(a: float, A_over_a: float, key: str, value: float, tau_end: float, step: float) -> list:
    """One summary row; failures land in the status column."""
    omega = k0 = math.nan
    row_tail = [math.nan] * 7
    try:
        params = BoppParams(a, A_over_a * a)
        if key == "omega":
            omega = value
        else:
            k0 = value
            w_sq = -1.5 * k0 * k0 - A_over_a / 2
            if not w_sq > 0:
                raise NoHelix(f"omega^2 = {w_sq:.6g} <= 0")
            omega = math.sqrt(w_sq)
        sol = helix(params, omega)
        k0 = sol.k0
        traj = integrate(reduced_field(params), sol.state, tau_end, step, params=params, sample_every=10)
        fit = riewe_form_check(traj)
        row_tail = [
            sol.radius,
            fit.frequency,
            fit.varpi_sq,
            fit.predicted_varpi_sq,
            float(np.max(np.abs(traj.H - 1))),
            float(np.max(np.abs(traj.u_sq - 1))),
            float(np.max(traj.wp_drift)),
        ]
        helix_flag, status = "yes", "ok"
    except NoHelix:
        helix_flag, status = "no", "nohelix"
    except ZitterError as exc:
        helix_flag, status = "yes", f"error:{type(exc).__name__}"
    return [A_over_a, omega, k0, helix_flag, *row_tail, status]


def run_sweep(cfg: RunConfig) -> int:
    jobs = [(cfg.params.a, r, key, v, cfg.tau_end, cfg.step) for r, key, v in cfg.sweep.points()]
    if cfg.workers > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            rows = list(pool.map(sweep_row, *zip(*jobs)))
    else:
        rows = [sweep_row(*j) for j in jobs]
    cfg.out.mkdir(parents=True, exist_ok=True)
    write_csv(cfg.out / "summary.csv", SUMMARY_HEADER, rows)
    for row in rows:
        print(",".join(fmt(v) for v in row))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zitterlab", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=("check", "simulate", "sweep"))
    parser.add_argument("--config", type=Path, help="key = value config file")
    parser.add_argument("--svg", action="store_true", help="also write plot.svg (simulate)")
    parser.add_argument("--out", type=Path, help="output directory (overrides [run] out)")
    parser.add_argument("--seed", type=int, help="RNG seed (overrides [run] seed)")
    parser.add_argument("-v", "--verbose", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(message)s")
    if args.config is None and args.command != "check":
        print(f"zitterlab {args.command}: --config is required", file=sys.stderr)
        return EXIT_USAGE
    try:
        cfg = load_config(args.config, args.command, seed=args.seed, out=args.out)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    log.debug("config: %s", cfg)
    if cfg.mode == "check":
        return run_check(cfg)
    if cfg.mode == "simulate":
        return run_simulate(cfg, svg=args.svg)
    return run_sweep(cfg)


if __name__ == "__main__":
    sys.exit(main())
