"""Command-line front end and experiment driver.

Exit codes: 0 success, 1 input error, 2 negative result (solver failure,
unsolvable grid, or a campaign that found a counterexample).
"""

from __future__ import annotations

import argparse
import io
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import plots
from .analysis import run_conjecture_campaign, sudoq_error
from .classical import classical_score, count_solutions, shift_copy_square
from .constraints import constraints_to_json, export_tanner, latin_constraints, sudoku_constraints
from .erasure import generate_codeword, simulate_channel
from .errors import BudgetExceeded, SudoqError
from .grids import GridDimension, parse_classical_grid, serialize_classical_grid
from .puzzles import minimal_4clue_4x4
from .shidoku import minimal_shidoku_grids
from .sinkhorn import SolverConfig, solve, solve_trials
from .analysis import quantum_score_estimate

SCHEMA_VERSION = 1

OK = 0
INPUT_ERROR = 1
NEGATIVE = 2


def _fmt(x) -> str:
    if isinstance(x, float):
        return "%.17g" % x
    return str(x)


def _write_csv(header: list[str], rows: list[list], out: str | None) -> None:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(_fmt(v) for v in row) + "\n")
    _emit(buf.getvalue(), out)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _figure_path(out: str) -> str:
    return str(Path(out).with_suffix(".png"))


def _load_grid(path: str, n: int | None):
    text = Path(path).read_text()
    text = "\n".join(ln for ln in text.splitlines() if not ln.lstrip().startswith("#"))
    if n is None:
        tokens = text.split()
        count = len(tokens)
        if not all(len(t) == 1 for t in tokens) or count <= 1:
            count = sum(1 for ch in text if not ch.isspace())
        N = math.isqrt(count)
        n = math.isqrt(N)
        if n * n != N or N * N != count:
            raise SudoqError(f"cannot infer grid size from {count} tokens; pass --n")
    return parse_classical_grid(text, GridDimension(n))


def _solver_config(args) -> SolverConfig:
    return SolverConfig(
        sigma=args.sigma, epsilon=args.epsilon, i_max=args.imax, seed=args.seed
    )


def _add_solver_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--sigma", type=float, default=0.6, help="strength parameter in (0, 1]")
    p.add_argument("--epsilon", type=float, default=1e-8, help="convergence precision")
    p.add_argument("--imax", type=int, default=500, help="maximum sweeps per run")
    p.add_argument("--seed", type=int, default=0, help="base random seed")


def _iteration_histogram(iterations: list[int], i_max: int, width: int = 10) -> list[int]:
    buckets = [0] * max(1, -(-i_max // width))
    for it in iterations:
        buckets[min(it // width, len(buckets) - 1)] += 1
    return buckets


# ---------------------------------------------------------------------------
# subcommands


def cmd_solve(args) -> int:
    grid = _load_grid(args.grid, args.n)
    outcome = solve(grid, cfg=_solver_config(args))
    _emit(outcome.to_json() + "\n", args.out)
    return OK if outcome.solved else NEGATIVE


def cmd_check(args) -> int:
    grid = _load_grid(args.grid, args.n)
    sc = count_solutions(grid, cap=2)
    kind = {0: "unsolvable", 1: "unique"}.get(sc.count, "multiple")
    if args.format == "json":
        _emit(json.dumps({"class": kind, "count": sc.count, "capped": sc.capped,
                          "conflict": sc.conflict}) + "\n", args.out)
    else:
        label = f"{kind} ({sc.count})" if kind == "multiple" else kind
        _emit(label + "\n", args.out)
    return NEGATIVE if sc.count == 0 else OK


def cmd_score(args) -> int:
    grid = _load_grid(args.grid, args.n)
    try:
        c_score = classical_score(grid)
    except BudgetExceeded:
        c_score = None
    estimate = quantum_score_estimate(grid, args.trials, _solver_config(args))
    _emit(
        json.dumps(
            {
                "classical_score": c_score,
                "quantum_score_estimate": estimate.value,
                "trials": args.trials,
            }
        )
        + "\n",
        args.out,
    )
    return OK


def cmd_sweep_sigma(args) -> int:
    grid = _load_grid(args.grid, args.n)
    if args.trials < 1:
        raise SudoqError("trials must be >= 1")
    sigmas = [float(s) for s in args.sigmas.split(",")]
    base = _solver_config(args)
    rows = []
    report_rows = []
    n_buckets = max(1, -(-args.imax // 10))
    for sigma in sigmas:
        cfg = SolverConfig(sigma=sigma, epsilon=base.epsilon, i_max=base.i_max, seed=base.seed)
        outcomes = solve_trials(grid, None, cfg, args.trials, workers=args.workers)
        iters = [o.iterations for o in outcomes if o.solved]
        hist = _iteration_histogram(iters, args.imax)
        successes = len(iters)
        rows.append(
            [SCHEMA_VERSION, sigma, args.trials, successes, successes / args.trials, *hist]
        )
        report_rows.append(
            {
                "sigma": sigma,
                "trials": args.trials,
                "successes": successes,
                "success_rate": successes / args.trials,
                "histogram": hist,
                "bucket_width": 10,
            }
        )
    header = ["schema_version", "sigma", "trials", "successes", "success_rate"] + [
        f"iters_{10 * b}" for b in range(n_buckets)
    ]
    _write_csv(header, rows, args.out)
    if args.out and not args.no_plot:
        plots.plot_sigma_sweep(report_rows, _figure_path(args.out))
    return OK


def cmd_shidoku_suite(args) -> int:
    if args.trials < 1:
        raise SudoqError("trials must be >= 1")
    cfg = _solver_config(args)
    grids = minimal_shidoku_grids()
    rows = []
    report_rows = []
    counterexamples = 0
    for idx, g in enumerate(grids):
        grid_id = f"S{idx + 1:02d}"
        ev = run_conjecture_campaign(
            g, "two", args.trials, cfg, grid_id=grid_id, workers=args.workers
        )
        iters = [r.iterations for r in ev.records if r.status == "solved"]
        counterexamples += ev.counterexample is not None
        row = {
            "grid_id": grid_id,
            "trials": args.trials,
            "solved": ev.solved,
            "failures": args.trials - ev.solved,
            "classical": ev.classical_outcomes,
            "nonclassical": ev.nonclassical_outcomes,
            "min_iterations": min(iters) if iters else 0,
            "mean_iterations": float(np.mean(iters)) if iters else 0.0,
            "max_iterations": max(iters) if iters else 0,
            "counterexample": ev.counterexample is not None,
        }
        report_rows.append(row)
        rows.append([SCHEMA_VERSION, *row.values()])
    header = ["schema_version", *report_rows[0].keys()]
    _write_csv(header, rows, args.out)
    if args.out and not args.no_plot:
        plots.plot_shidoku_suite(report_rows, _figure_path(args.out))
    return NEGATIVE if counterexamples else OK


def cmd_erasure_sim(args) -> int:
    ps = [float(p) for p in args.p_erase.split(",")]
    rows = simulate_channel(args.n or 2, ps, args.trials, _solver_config(args))
    header = ["schema_version", "n", "p_erase", "trials", "decoded_rate", "exact_rate", "unique_rate"]
    _write_csv(header, [[SCHEMA_VERSION, *r.values()] for r in rows], args.out)
    if args.out and not args.no_plot:
        plots.plot_erasure_rates(rows, _figure_path(args.out))
    return OK


def cmd_gen(args) -> int:
    n = args.n or 3
    if args.seed is not None:
        grid = generate_codeword(n, args.seed)
    else:
        grid = shift_copy_square(n)
    _emit(serialize_classical_grid(grid), args.out)
    return OK


def cmd_tanner(args) -> int:
    if args.latin:
        cl = latin_constraints(args.latin)
    else:
        cl = sudoku_constraints(args.n or 3)
    text = constraints_to_json(cl) + "\n" if args.format == "json" else export_tanner(cl)
    _emit(text, args.out)
    return OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sudoq", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, grid_arg=True):
        if grid_arg:
            p.add_argument("grid", help="path to a grid text file")
        p.add_argument("--n", type=int, default=None, help="block side (inferred when omitted)")
        p.add_argument("--out", default=None, help="output file (stdout when omitted)")
        p.add_argument("--workers", type=int, default=1, help="parallel trial workers")
        p.add_argument("--no-plot", action="store_true", help="skip figure rendering")

    p = sub.add_parser("solve", help="run the quantum solver on a grid")
    common(p)
    _add_solver_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="classify a grid by its classical solution count")
    common(p)
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("score", help="classical score and quantum score estimate")
    common(p)
    _add_solver_flags(p)
    p.add_argument("--trials", type=int, default=20)
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("sweep-sigma", help="success-rate sweep over the strength parameter")
    common(p)
    _add_solver_flags(p)
    p.add_argument("--sigmas", default=",".join(f"{s / 10:g}" for s in range(1, 11)))
    p.add_argument("--trials", type=int, default=100)
    p.set_defaults(func=cmd_sweep_sigma)

    p = sub.add_parser("shidoku-suite", help="campaign over the 13 minimal 4x4 grids")
    common(p, grid_arg=False)
    _add_solver_flags(p)
    p.add_argument("--trials", type=int, default=100)
    p.set_defaults(func=cmd_shidoku_suite)

    p = sub.add_parser("erasure-sim", help="erasure-channel recovery-rate simulation")
    common(p, grid_arg=False)
    _add_solver_flags(p)
    p.add_argument("--p-erase", default="0,0.1,0.2,0.3,0.4,0.5")
    p.add_argument("--trials", type=int, default=100)
    p.set_defaults(func=cmd_erasure_sim)

    p = sub.add_parser("gen", help="emit a full valid square")
    common(p, grid_arg=False)
    p.add_argument("--seed", type=int, default=None, help="randomize via seeded scrambling")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("tanner", help="export the constraint (Tanner) graph")
    common(p, grid_arg=False)
    p.add_argument("--latin", type=int, default=None, help="rook constraints of this side instead")
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.set_defaults(func=cmd_tanner)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SudoqError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
