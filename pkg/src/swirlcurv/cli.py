"""Command-line interface: profile checks, curvature tables, spectra, Jacobi fields.

Every command reads one JSON config (see :mod:`swirlcurv.config`) and writes
deterministic artifacts into the output directory: CSV numbers use fixed
17-significant-digit scientific notation and rows are ordered by (n, m)
regardless of how the computation was scheduled.  Exit status: 0 success,
2 when a theorem hypothesis is violated by the input, 1 for anything else;
errors are reported as single-line JSON on stderr.

The environment variable ``SWIRLCURV_THREADS`` (default 1) sets the worker
count for batch commands.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from .config import RunConfig, parse_config
from .curvature import curvature_report, oscillation_study
from .errors import HypothesisViolationError, SwirlcurvError
from .jacobi import (assemble_jacobi, conjugate_times, jacobi_residuals,
                     lambda_over_n_study, sl_spectrum)
from .profile import classify_criteria

__all__ = ["main", "run_command"]

_FMT = "%.16e"  # 17 significant digits, reproducible diffs


def _fmt(value) -> str:
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return _FMT % float(value)


def _write_csv(path: Path, header, rows):
    lines = [",".join(header)]
    lines += [",".join(_fmt(v) for v in row) for row in rows]
    path.write_text("\n".join(lines) + "\n")


def _write_json(path: Path, payload):
    path.write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _thread_count() -> int:
    try:
        return max(1, int(os.environ.get("SWIRLCURV_THREADS", "1")))
    except ValueError:
        return 1


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _cmd_check_profile(cfg: RunConfig, out: Path, grid, quiet):
    report = classify_criteria(cfg.profile, int(cfg.params.get("sample_count", 256)))
    payload = {
        "eta_strictly_positive": report.eta_strictly_positive,
        "eta_nonnegative": report.eta_nonnegative,
        "u_omega_positive": report.u_omega_positive,
        "eta_min": report.eta_min,
        "u_omega_min": report.u_omega_min,
        "tolerance": report.tolerance,
        "witness_points": report.witness_points,
    }
    _write_json(out / "criteria.json", payload)
    return ["criteria.json"]


def _cmd_curvature(cfg: RunConfig, out: Path, grid, quiet):
    oracle_grid = int(grid or cfg.params.get("grid", 2048))
    modes = sorted(cfg.modes, key=lambda m: m.n)
    workers = _thread_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(
                lambda m: curvature_report(cfg.profile, m, oracle_grid), modes))
    else:
        results = [curvature_report(cfg.profile, m, oracle_grid) for m in modes]
    rows = [(res.n, res.kbar_closed, res.kbar_oracle, res.discrepancy, res.k_normalized)
            for res in sorted(results, key=lambda rr: rr.n)]
    _write_csv(out / "curvature.csv",
               ["n", "kbar_closed", "kbar_oracle", "discrepancy", "k_normalized"], rows)
    return ["curvature.csv"]


def _cmd_spectrum(cfg: RunConfig, out: Path, grid, quiet):
    eigen_grid = int(grid or cfg.params.get("grid", 2048))
    m_max = int(cfg.params.get("m_max", 3))
    n_list = cfg.params.get("n_list") or [int(cfg.params.get("n", 1))]
    rows = []
    for n in sorted(int(x) for x in n_list):
        s = sl_spectrum(cfg.profile, n, m_max, grid=eigen_grid)
        for (m, t_star), lam, est in zip(conjugate_times(s), s.eigenvalues,
                                         s.error_estimates):
            rows.append((n, m, float(lam), t_star, float(est)))
    _write_csv(out / "spectrum.csv",
               ["n", "m", "lambda", "t_star", "error_estimate"], rows)
    return ["spectrum.csv"]


def _cmd_jacobi(cfg: RunConfig, out: Path, grid, quiet):
    eigen_grid = int(grid or cfg.params.get("grid", 2048))
    n = int(cfg.params.get("n", 1))
    m = int(cfg.params.get("m", 1))
    phase = cfg.params.get("phase", "cos")
    s = sl_spectrum(cfg.profile, n, m, grid=eigen_grid)
    sol = assemble_jacobi(cfg.profile, s, m, phase=phase)
    times = [float(t) for t in cfg.params.get(
        "times", [0.25 * sol.t_star, 0.5 * sol.t_star, 0.75 * sol.t_star])]
    report = jacobi_residuals(cfg.profile, sol, grid=int(cfg.params.get("eval_grid", 256)),
                              times=times)
    _write_json(out / "jacobi_residuals.json", {
        "n": n, "m": m, "lambda": float(sol.lam), "t_star": sol.t_star, "phase": phase,
        "residual_swirl_transport": report.swirl_transport,
        "residual_stream_transport": report.stream_transport,
        "residual_second_order": report.second_order,
        "residual_flow_components": report.flow_components,
        "times": times,
    })
    artifacts = ["jacobi_residuals.json"]

    snap = int(cfg.params.get("snapshot_grid", 64))
    r = np.linspace(1.0 / snap, 1.0, snap)
    z = 2.0 * np.pi * np.arange(16) / 16
    rr, zz = np.meshgrid(r, z, indexing="ij")
    for idx, t in enumerate(times):
        for name in ("h", "j", "g", "f"):
            vals = getattr(sol, name)(t, rr[:, :1], zz[:1, :])
            vals = np.broadcast_to(vals, rr.shape)
            rows = [(rr[i, k], zz[i, k], vals[i, k])
                    for i in range(snap) for k in range(16)]
            fname = f"jacobi_{name}_t{idx}.csv"
            _write_csv(out / fname, ["r", "z", name], rows)
            artifacts.append(fname)
    return artifacts


def _cmd_oscillation(cfg: RunConfig, out: Path, grid, quiet):
    n = int(cfg.params.get("n", 1))
    k_max = int(cfg.params.get("k_max", 32))
    rows = oscillation_study(cfg.profile, n, range(1, k_max + 1))
    _write_csv(out / "oscillation.csv", ["k", "k_normalized"], rows)
    return ["oscillation.csv"]


def _cmd_limit(cfg: RunConfig, out: Path, grid, quiet):
    m = int(cfg.params.get("m", 1))
    n_list = [int(x) for x in cfg.params.get("n_list", [4, 8, 16, 32, 64])]
    eigen_grid = int(grid or cfg.params.get("grid", 1024))
    pairs = lambda_over_n_study(cfg.profile, m, n_list, grid=eigen_grid)
    rows = []
    prev = None
    for n, ratio in pairs:
        diff = float("nan") if prev is None else ratio - prev
        rows.append((n, ratio, diff))
        prev = ratio
    _write_csv(out / "limit.csv", ["n", "lambda_over_n", "diff"], rows)
    return ["limit.csv"]


_COMMANDS = {
    "check-profile": _cmd_check_profile,
    "curvature": _cmd_curvature,
    "spectrum": _cmd_spectrum,
    "jacobi": _cmd_jacobi,
    "oscillation-study": _cmd_oscillation,
    "limit-study": _cmd_limit,
}


def run_command(command: str, cfg: RunConfig, out_dir, grid=None, quiet=False) -> int:
    """Run one subcommand; returns the process exit status."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    try:
        artifacts = _COMMANDS[command](cfg, out, grid, quiet)
    except HypothesisViolationError as exc:
        print(json.dumps({"error": "hypothesis-violation", "message": str(exc)}),
              file=sys.stderr)
        return 2
    except SwirlcurvError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}),
              file=sys.stderr)
        return 1
    if not quiet:
        for name in artifacts:
            print(out / name)
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="swirlcurv",
        description="Curvature and conjugate points of axisymmetric swirl flows")
    parser.add_argument("command", choices=sorted(_COMMANDS))
    parser.add_argument("--config", required=True, help="path to the JSON config")
    parser.add_argument("--out", default=".", help="output directory for artifacts")
    parser.add_argument("--grid", type=int, default=None,
                        help="override the solver grid size")
    parser.add_argument("--quiet", action="store_true")
    args = parser.parse_args(argv)
    try:
        cfg = parse_config(args.config)
    except SwirlcurvError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}),
              file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError) as exc:
        print(json.dumps({"error": "config-error", "message": str(exc)}), file=sys.stderr)
        return 1
    try:
        return run_command(args.command, cfg, args.out, args.grid, args.quiet)
    except Exception as exc:  # internal error: report, never traceback-spray
        print(json.dumps({"error": "internal", "message": f"{type(exc).__name__}: {exc}"}),
              file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
