"""
Command-line front end.

    shortpath {sweep,mingap,crossing,scaling,projected} --config FILE
              [--out DIR] [--threads K] [--format csv|json|both]

Exit codes: 0 success, 2 configuration error, 3 numerical error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import warnings
from pathlib import Path

import numpy as np

from . import __version__
from .analytic import analytic_crossing, k2_transitions, small_field_crossing
from .config import ConfigError, RunConfig, load_config
from .errors import DomainError, NotApplicableError, ParameterError, ShortPathError
from .operators import interpolated_hamiltonian
from .projected import build_basis, projected_hamiltonian, projected_path_profile
from .scaling import comparison_report
from .search import min_gap, sweep_b
from .spectral import eigensolve

__all__ = ["main", "cmd_sweep", "cmd_mingap", "cmd_crossing", "cmd_scaling", "cmd_projected"]

EXIT_OK, EXIT_CONFIG, EXIT_NUMERIC = 0, 2, 3


def fmt(x) -> str:
    """17 significant digits, enough to round-trip a double."""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    if x is None:
        return ""
    if isinstance(x, str):
        return x
    return format(float(x), ".17g")


def _json_value(x):
    if isinstance(x, float) and not math.isfinite(x):
        return None
    if isinstance(x, dict):
        return {k: _json_value(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_json_value(v) for v in x]
    if hasattr(x, "item"):
        return _json_value(x.item())
    return x


def _header(command: str, cfg: RunConfig, single_size: bool = True) -> str:
    params = cfg.params.describe() if single_size else f"{cfg.param_spec.describe()} n_list={list(cfg.n_list)}"
    return f"shortpath {__version__} {command} | params: {params} | driver: {cfg.driver.describe()}"


def _write_csv(path: Path, header: str, columns, rows):
    buf = io.StringIO()
    buf.write(f"# {header}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([fmt(v) for v in row])
    path.write_text(buf.getvalue())
    return path


def _write_json(path: Path, header: str, record: dict):
    body = {"provenance": header}
    body.update(record)
    path.write_text(json.dumps(_json_value(body), indent=2) + "\n")
    return path


def _wants(fmt_flag: str, kind: str) -> bool:
    return fmt_flag in (kind, "both")


def cmd_sweep(cfg: RunConfig, out: Path, threads: int = 1, fmt_flag: str = "csv") -> list[Path]:
    """Gap and overlap along the b grid at fixed n, k, s."""
    rows = sweep_b(cfg.params, cfg.k, cfg.s, cfg.b_grid, threads=threads)
    header = _header("sweep", cfg)
    table = [(r.b, r.e0, r.e1, r.gap, r.overlap) for r in rows]
    written = []
    if _wants(fmt_flag, "csv"):
        written.append(_write_csv(out / "sweep.csv", header, ["b", "e0", "e1", "gap", "overlap"], table))
    if _wants(fmt_flag, "json"):
        record = {"rows": [dict(zip(["b", "e0", "e1", "gap", "overlap"], t)) for t in table]}
        written.append(_write_json(out / "sweep.json", header, record))
    return written


def cmd_mingap(cfg: RunConfig, out: Path, threads: int = 1, fmt_flag: str = "json") -> list[Path]:
    """Refined gap minimum over [b_lo, b_hi]."""
    res = min_gap(cfg.params, cfg.k, cfg.s, cfg.b_range, cfg.coarse_points, cfg.tol, threads=threads)
    record = res.as_dict()
    record["other_minima"] = [m.as_dict() for m in res.others]
    return [_write_json(out / "mingap.json", _header("mingap", cfg), record)]


def cmd_crossing(cfg: RunConfig, out: Path, threads: int = 1, fmt_flag: str = "json") -> list[Path]:
    """Decoupled-spin crossing, small-field estimate, numeric minimum, K=2 transitions."""
    params = cfg.params
    analytic = analytic_crossing(params).b_cross
    try:
        small = small_field_crossing(params).b_cross
    except NotApplicableError:
        small = None
    numeric = min_gap(params, 1.0, 1.0, cfg.b_range, cfg.coarse_points, cfg.tol, threads=threads)
    wide, narrow = k2_transitions(params)
    record = {
        "analytic": analytic,
        "small_field": small,
        "numeric": numeric.b_min,
        "k2_wide": wide,
        "k2_narrow": narrow,
    }
    return [_write_json(out / "crossing.json", _header("crossing", cfg), record)]


def cmd_scaling(cfg: RunConfig, out: Path, threads: int = 1, fmt_flag: str = "both") -> list[Path]:
    """Per-size exponents for every algorithm plus a summary table."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        rep = comparison_report(
            cfg.param_spec,
            cfg.k,
            cfg.b,
            cfg.n_list,
            b_range=cfg.b_range,
            coarse_points=cfg.coarse_points,
            tol=cfg.tol,
            check_field=cfg.check_field,
            threads=threads,
        )
    header = _header("scaling", cfg, single_size=False)
    per_n = []
    for r in (rep.shortpath, rep.adiabatic, rep.adiabatic_rc, rep.greedy):
        if r is None:
            continue
        for row in r.rows:
            per_n.append((r.algorithm, row.n, row.c_n, row.value, row.b, row.flagged))
    summary = [
        {"algorithm": name, "c": c, "fitted_c": fc, "note": note}
        for name, c, fc, note in rep.table()
    ]
    written = []
    if _wants(fmt_flag, "csv"):
        cols = ["algorithm", "n", "c_n", "value", "b", "flagged"]
        written.append(_write_csv(out / "scaling.csv", header, cols, per_n))
    if _wants(fmt_flag, "json"):
        written.append(_write_json(out / "scaling.json", header, {"summary": summary}))
    return written


def cmd_projected(cfg: RunConfig, out: Path, threads: int = 1, fmt_flag: str = "both") -> list[Path]:
    """Locally projected adiabatic path around a weight-``w_b`` string, radius ``d``."""
    params = cfg.params
    try:
        basis = build_basis(params.n, cfg.w_b, cfg.d)
    except DomainError as exc:
        raise ConfigError(str(exc)) from exc
    prof = projected_path_profile(params, basis, cfg.s_grid, threads=threads)

    full = build_basis(params.n, cfg.w_b, params.n)
    ok = True
    for s in (0.0, 0.5, 1.0):
        a = eigensolve(projected_hamiltonian(params, full, s), count=1)[0][0]
        b = eigensolve(interpolated_hamiltonian(params, s), count=1)[0][0]
        ok &= abs(a - b) <= 1e-10 * max(1.0, abs(b))

    header = _header("projected", cfg) + f" | w_b={cfg.w_b} d={cfg.d}"
    record = {
        "basis_size": prof.basis_size,
        "min_gap": prof.min_gap,
        "argmin_s": prof.argmin_s,
        "success": prof.success,
        "ground_weight": prof.ground_weight,
        "ball_min_energy": prof.ball_min_energy,
        "global_min_energy": prof.global_min_energy,
        "full_ball_equivalence": "pass" if ok else "fail",
    }
    written = []
    if _wants(fmt_flag, "csv"):
        written.append(_write_csv(out / "projected.csv", header, ["s", "gap"], list(prof)))
    written.append(_write_json(out / "projected.json", header, record))
    return written


COMMANDS = {
    "sweep": (cmd_sweep, "csv"),
    "mingap": (cmd_mingap, "json"),
    "crossing": (cmd_crossing, "json"),
    "scaling": (cmd_scaling, "both"),
    "projected": (cmd_projected, "both"),
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="shortpath", description=__doc__.split("\n\n")[0].strip())
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--config", help="key = value run configuration")
    p.add_argument("--out", default=".", help="output directory (default: .)")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--format", choices=["csv", "json", "both"], default=None)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_OK
    fn, default_fmt = COMMANDS[args.command]
    try:
        if args.threads < 1:
            raise ConfigError("--threads must be at least 1")
        cfg = load_config(args.config)
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        written = fn(cfg, out, threads=args.threads, fmt_flag=args.format or default_fmt)
    except (ConfigError, ParameterError, DomainError) as exc:
        print(f"shortpath: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (ShortPathError, ArithmeticError, np.linalg.LinAlgError) as exc:
        print(f"shortpath: numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    for path in written:
        print(path)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
