"""Error metrics on full quantum grids, score estimation, and the
conjecture-evidence campaigns.

The two conjectures under numerical test: (one) a classically unsolvable grid
has no quantum solution either; (two) a grid with a unique classical solution
has no extra, non-classical quantum solution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.optimize import minimize

from .classical import ClassicalClass, classify_classical, count_solutions
from .constraints import ConstraintList, sudoku_constraints
from .errors import NotFull, NotNormalized, WrongClass
from .grids import (
    DEFAULT_CLASS_TOL,
    ClassicalGrid,
    QuantumGrid,
    cell_fidelity,
    classify,
    quantize,
    quantum_grid_to_json,
)
from .puzzles import two_solution_9x9, two_solution_completions
from .sinkhorn import SolverConfig, SolverOutcome, solve_trials

CONJECTURE_ONE = "one"
CONJECTURE_TWO = "two"

MATCH_TOL = 1e-6


@dataclass
class ErrorReport:
    per_constraint: list[tuple[int, float]]
    max_residual: float


@dataclass
class TrialRecord:
    """One solver run inside a campaign, for CSV reporting."""

    grid_id: str
    seed: int
    status: str
    iterations: int
    classical: Optional[bool]
    max_residual: Optional[float]


@dataclass
class ConjectureEvidence:
    conjecture: str
    grid_id: str
    trials: int
    solved: int
    classical_outcomes: int
    nonclassical_outcomes: int
    counterexample: Optional[str] = None  # quantum grid JSON
    records: list[TrialRecord] = field(default_factory=list)


@dataclass
class RigidityReport:
    """Outcome split for the two-solution grid: every solved run must land on
    one of the two classical completions."""

    trials: int
    solved: int
    matches_first: int
    matches_second: int
    mismatches: int
    counterexample: Optional[str] = None


@dataclass
class ScoreEstimate:
    value: float
    grid: Optional[QuantumGrid]


def sudoq_error(q: QuantumGrid, cl: ConstraintList | None = None) -> ErrorReport:
    """Frobenius residual of every constraint for a full, unit-norm grid."""
    if cl is None:
        cl = sudoku_constraints(q.n)
    if not q.is_full():
        raise NotFull("error metric requires a completely filled grid")
    norms = np.linalg.norm(q.vectors, axis=2)
    if np.abs(norms - 1.0).max() > MATCH_TOL:
        raise NotNormalized("all cells must be unit norm within 1e-6")
    N = q.N
    eye = np.eye(N, dtype=complex)
    per = []
    for c in cl:
        rows, cols = c.index_arrays
        V = q.vectors[rows, cols, :]
        per.append((c.id, float(np.linalg.norm(eye - V.T @ V.conj()))))
    return ErrorReport(per, max(r for _, r in per))


def grids_match(a: QuantumGrid, b: QuantumGrid, tol: float = MATCH_TOL) -> bool:
    """Cell-wise projector equality up to tolerance: fidelity >= 1 - tol."""
    if a.n != b.n or not (a.is_full() and b.is_full()):
        return False
    for r in range(a.N):
        for c in range(a.N):
            if cell_fidelity(a.vectors[r, c], b.vectors[r, c]) < 1.0 - tol:
                return False
    return True


# ---------------------------------------------------------------------------
# score estimation


def _free_cell_params(g: ClassicalGrid):
    """For each empty cell, the basis directions worth exploring: symbols
    absent from at least one of the cell's three constraints' clue sets."""
    cl = sudoku_constraints(g.n)
    N = g.N
    spans = []
    for (r, c) in g.empty_cells():
        missing: set[int] = set()
        for con in cl:
            cells0 = {(a - 1, b - 1) for a, b in con.cells}
            if (r, c) not in cells0:
                continue
            present = {int(g.entries[a, b]) for a, b in cells0 if g.entries[a, b] > 0}
            missing |= set(range(1, N + 1)) - present
        spans.append(((r, c), sorted(missing)))
    return spans


def _error_evaluator(g: ClassicalGrid, cells, cl):
    """Callable mapping free-cell vectors to the worst constraint residual,
    with the clue part of the grid precomputed."""
    base = np.array(quantize(g).vectors)
    N = g.N
    eye = np.eye(N, dtype=complex)
    index = [(c.index_arrays) for c in cl]

    def evaluate(vectors) -> float:
        q = base
        for (r, c), v in zip(cells, vectors):
            q[r, c] = v
        worst = 0.0
        for rows, cols in index:
            V = q[rows, cols, :]
            res = float(np.linalg.norm(eye - V.T @ V.conj()))
            if res > worst:
                worst = res
        return worst

    return evaluate


def quantum_score_estimate(g: ClassicalGrid, trials: int, cfg: SolverConfig) -> ScoreEstimate:
    """Upper bound on the best achievable constraint error over all unit
    fillings: minimum over multi-start solver runs, refined (for grids with
    at most two free cells) by a grid-plus-polish search over the free cells.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    cl = sudoku_constraints(g.n)
    empties = g.empty_cells()
    if not empties:
        rep = sudoq_error(quantize(g), cl)
        return ScoreEstimate(rep.max_residual, quantize(g))

    best = math.inf
    best_grid: Optional[QuantumGrid] = None
    for out in solve_trials(g, cl, cfg, trials):
        rep = sudoq_error(out.grid, cl)
        if rep.max_residual < best:
            best, best_grid = rep.max_residual, out.grid

    if len(empties) <= 2:
        refined, vecs = _dense_search(g, cl)
        if refined < best:
            best = refined
            q = np.array(quantize(g).vectors)
            for (r, c), v in zip(empties, vecs):
                q[r, c] = v
            best_grid = QuantumGrid(g.n, q, np.ones((g.N, g.N), dtype=bool))
    return ScoreEstimate(best, best_grid)


def _dense_search(g: ClassicalGrid, cl: ConstraintList, coarse: int = 10):
    """Coarse angle grid over 2-dim cell spans followed by a local polish of
    the full free-vector parametrization."""
    N = g.N
    spans = _free_cell_params(g)
    cells = [cell for cell, _ in spans]
    evaluate = _error_evaluator(g, cells, cl)

    def vec_from_angles(span, theta, phi):
        v = np.zeros(N, dtype=complex)
        v[span[0] - 1] = math.cos(theta)
        v[span[1] - 1] = math.sin(theta) * np.exp(1j * phi)
        return v

    start_vectors = None
    if all(len(span) == 2 for _, span in spans):
        import itertools

        thetas = np.linspace(0.0, math.pi / 2, coarse)
        phis = np.linspace(0.0, 2 * math.pi, coarse, endpoint=False)
        axes = []
        for _, span in spans:
            axes.append([vec_from_angles(span, t, p) for t in thetas for p in phis])
        best = math.inf
        for vecs in itertools.product(*axes):
            err = evaluate(vecs)
            if err < best:
                best = err
                start_vectors = list(vecs)
    if start_vectors is None:
        rng = np.random.default_rng(0)
        start_vectors = []
        for _ in cells:
            v = rng.standard_normal(N) + 1j * rng.standard_normal(N)
            start_vectors.append(v / np.linalg.norm(v))

    def objective(x):
        vecs = []
        for k in range(len(cells)):
            chunk = x[2 * N * k : 2 * N * (k + 1)]
            v = chunk[:N] + 1j * chunk[N:]
            nrm = np.linalg.norm(v)
            vecs.append(v / nrm if nrm > 0 else v)
        return evaluate(vecs)

    x0 = np.concatenate([np.concatenate([v.real, v.imag]) for v in start_vectors])
    res = minimize(objective, x0, method="Nelder-Mead",
                   options={"maxiter": 20000, "xatol": 1e-10, "fatol": 1e-12})
    x = res.x
    vecs = []
    for k in range(len(cells)):
        chunk = x[2 * N * k : 2 * N * (k + 1)]
        v = chunk[:N] + 1j * chunk[N:]
        vecs.append(v / np.linalg.norm(v))
    return float(res.fun), vecs


# ---------------------------------------------------------------------------
# campaigns


def run_conjecture_campaign(
    g: ClassicalGrid,
    conjecture: str,
    trials: int,
    cfg: SolverConfig,
    grid_id: str = "grid",
    tau_class: float = DEFAULT_CLASS_TOL,
    workers: int = 1,
) -> ConjectureEvidence:
    """Repeated solver runs classifying every solved outcome.

    Conjecture "one" wants an unsolvable grid (any solved run is a
    counterexample); "two" wants a uniquely solvable grid (any solved run
    that is non-classical or differs from the oracle solution is one).
    """
    if conjecture not in (CONJECTURE_ONE, CONJECTURE_TWO):
        raise ValueError(f"unknown conjecture {conjecture!r}")
    cls = classify_classical(g)
    if conjecture == CONJECTURE_ONE and cls is not ClassicalClass.UNSOLVABLE:
        raise WrongClass(f"conjecture one requires an unsolvable grid, got {cls.value}")
    if conjecture == CONJECTURE_TWO and cls is not ClassicalClass.UNIQUE:
        raise WrongClass(f"conjecture two requires a uniquely solvable grid, got {cls.value}")

    unique_solution = None
    if conjecture == CONJECTURE_TWO:
        unique_solution = count_solutions(g, cap=2).solutions[0]

    cl = sudoku_constraints(g.n)
    ev = ConjectureEvidence(conjecture, grid_id, trials, 0, 0, 0)
    for t, out in enumerate(solve_trials(g, cl, cfg, trials, workers=workers)):
        rec = TrialRecord(grid_id, cfg.seed + t, out.status, out.iterations, None, None)
        if out.solved:
            ev.solved += 1
            rec.max_residual = sudoq_error(out.grid, cl).max_residual
            verdict = classify(out.grid, tau_class)
            rec.classical = verdict.is_classical
            agrees = (
                verdict.is_classical
                and (unique_solution is None or verdict.grid == unique_solution)
            )
            if verdict.is_classical:
                ev.classical_outcomes += 1
            else:
                ev.nonclassical_outcomes += 1
            counterexample = (
                conjecture == CONJECTURE_ONE  # no solved run should exist at all
                or not agrees
            )
            if counterexample and ev.counterexample is None:
                ev.counterexample = quantum_grid_to_json(out.grid)
        ev.records.append(rec)
    return ev


def verify_two_solution_rigidity(
    trials: int, cfg: SolverConfig, workers: int = 1
) -> RigidityReport:
    """Solve the two-completion grid repeatedly; every solved outcome must
    coincide (cell fidelity >= 1 - 1e-6) with one of the two classical
    completions."""
    report = RigidityReport(trials, 0, 0, 0, 0)
    if trials == 0:
        return report
    g = two_solution_9x9()
    targets = [quantize(s) for s in two_solution_completions()]
    cl = sudoku_constraints(3)
    for out in solve_trials(g, cl, cfg, trials, workers=workers):
        if not out.solved:
            continue
        report.solved += 1
        if grids_match(out.grid, targets[0]):
            report.matches_first += 1
        elif grids_match(out.grid, targets[1]):
            report.matches_second += 1
        else:
            report.mismatches += 1
            if report.counterexample is None:
                report.counterexample = quantum_grid_to_json(out.grid)
    return report
