"""Alternating-normalization solver for quantum Sudoku grids.

One sweep visits every constraint in list order.  For a constraint, S is the
projector sum of its free (non-clue) cells and T the identity minus the clue
projectors; the free vectors are mapped by an interpolation between the
identity and the transformation R with R S R* = T that acts as the identity
on the support of S.  Clue cells never move.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .constraints import ConstraintList, sudoku_constraints
from .errors import InfeasibleClues, NotPSD, RankMismatch
from .grids import ClassicalGrid, QuantumGrid, normalize_grid, quantize, quantum_grid_to_json

PSD_TOL = 1e-9

SOLVED = "solved"
FAILURE = "failure"


@dataclass(frozen=True)
class SolverConfig:
    sigma: float = 0.6
    epsilon: float = 1e-8
    i_max: int = 500
    seed: int = 0
    rank_tol: float = 1e-12

    def __post_init__(self):
        if not 0.0 < self.sigma <= 1.0:
            raise ValueError(f"sigma must be in (0, 1], got {self.sigma}")
        if self.epsilon <= 0.0:
            raise ValueError("epsilon must be positive")
        if self.i_max < 1:
            raise ValueError("i_max must be >= 1")

    def with_seed(self, seed: int) -> "SolverConfig":
        return SolverConfig(self.sigma, self.epsilon, self.i_max, seed, self.rank_tol)


@dataclass
class _ConstraintPlan:
    """Per-constraint data that never changes during a run."""

    rows: np.ndarray
    cols: np.ndarray
    empty_rows: np.ndarray
    empty_cols: np.ndarray
    t_matrix: np.ndarray  # N x N, identity minus clue projectors
    t_vals: np.ndarray
    t_vecs: np.ndarray
    rank_t: int
    t_residual: float  # only meaningful when the constraint has no free cell


@dataclass
class SolverState:
    n: int
    clue_mask: np.ndarray  # (N, N) bool
    vectors: np.ndarray  # (N, N, N) complex, working vectors (any norm)
    iter: int
    rng: np.random.Generator
    plan: list[_ConstraintPlan] = field(default_factory=list, repr=False)
    rank_events: int = 0
    infeasible_constraints: list[int] = field(default_factory=list)

    @property
    def N(self) -> int:
        return self.n * self.n

    def as_grid(self) -> QuantumGrid:
        occupied = np.ones((self.N, self.N), dtype=bool)
        return QuantumGrid(self.n, self.vectors, occupied)


@dataclass
class SolverOutcome:
    status: str  # SOLVED or FAILURE
    grid: QuantumGrid  # final state, cell-normalized
    iterations: int
    final_error: float
    error_trace: list[float]
    rank_events: int = 0

    @property
    def solved(self) -> bool:
        return self.status == SOLVED

    def to_json(self) -> str:
        payload = json.dumps(
            {
                "status": self.status,
                "iterations": self.iterations,
                "final_error": self.final_error,
                "error_trace": self.error_trace,
                "grid": json.loads(quantum_grid_to_json(self.grid)),
            },
            separators=(",", ":"),
        )
        return payload


def _gaussian_vectors(rng: np.random.Generator, count: int, N: int) -> np.ndarray:
    """i.i.d. standard complex Gaussian entries (real/imag variance 1/2)."""
    return (rng.standard_normal((count, N)) + 1j * rng.standard_normal((count, N))) / np.sqrt(2.0)


def _build_plan(a: ClassicalGrid, cl: ConstraintList, epsilon: float) -> tuple[list[_ConstraintPlan], list[int]]:
    N = a.N
    eye = np.eye(N)
    plan = []
    infeasible = []
    for c in cl:
        rows, cols = c.index_arrays
        clues = a.entries[rows, cols]
        nz = clues[clues > 0]
        if len(np.unique(nz)) != len(nz):
            raise InfeasibleClues(f"constraint {c.id} repeats a clue symbol")
        t_diag = np.ones(N)
        t_diag[nz - 1] = 0.0
        t_matrix = np.diag(t_diag)
        empty = clues == 0
        p = _ConstraintPlan(
            rows=rows,
            cols=cols,
            empty_rows=rows[empty],
            empty_cols=cols[empty],
            t_matrix=t_matrix,
            t_vals=t_diag,
            t_vecs=eye,
            rank_t=int(t_diag.sum()),
            t_residual=float(np.linalg.norm(t_matrix)),
        )
        plan.append(p)
        if not empty.any() and p.t_residual >= epsilon:
            infeasible.append(c.id)
    return plan, infeasible


def initialize(a: ClassicalGrid, cfg: SolverConfig, cl: ConstraintList | None = None) -> SolverState:
    """Clue cells get their basis kets; empty cells i.i.d. complex Gaussian
    vectors from a generator seeded with cfg.seed.  Raises InfeasibleClues
    when a constraint repeats a clue symbol.
    """
    if cl is None:
        cl = sudoku_constraints(a.n)
    plan, infeasible = _build_plan(a, cl, cfg.epsilon)
    N = a.N
    rng = np.random.default_rng(cfg.seed)
    vectors = np.array(quantize(a).vectors)
    clue_mask = a.entries > 0
    empties = np.nonzero(~clue_mask)
    vectors[empties[0], empties[1], :] = _gaussian_vectors(rng, len(empties[0]), N)
    return SolverState(
        n=a.n,
        clue_mask=clue_mask,
        vectors=vectors,
        iter=0,
        rng=rng,
        plan=plan,
        infeasible_constraints=infeasible,
    )


def _half_powers(vals: np.ndarray, vecs: np.ndarray, rank_tol: float):
    """(M^{1/2}, M^{+1/2}, rank) from an eigen- or singular decomposition of a
    PSD matrix M = vecs diag(vals) vecs*.
    """
    top = vals.max(initial=0.0)
    if top <= 0.0:
        N = vecs.shape[0]
        return np.zeros((N, N)), np.zeros((N, N)), 0
    keep = vals > rank_tol * top
    rank = int(keep.sum())
    v = vecs[:, keep]
    s = np.sqrt(vals[keep])
    half = (v * s) @ v.conj().T
    pinv_half = (v / s) @ v.conj().T
    return half, pinv_half, rank


def _build_transformation(s_vals, s_vecs, t_vals, t_vecs, rank_t, rank_tol):
    s_half, s_pinv_half, rank_s = _half_powers(s_vals, s_vecs, rank_tol)
    if rank_s != rank_t:
        raise RankMismatch(f"rank(S)={rank_s} != rank(T)={rank_t}")
    N = s_vecs.shape[0]
    if rank_s == 0:
        return np.eye(N, dtype=complex)
    t_half, _, _ = _half_powers(t_vals, t_vecs, rank_tol)
    m = t_half @ s_half
    w, sv, vh = np.linalg.svd(m)
    keep = sv > rank_tol * sv.max(initial=0.0)
    u = w[:, keep] @ vh[keep, :]
    return t_half @ u @ s_pinv_half


def optimal_transformation(S: np.ndarray, T: np.ndarray, rank_tol: float = 1e-12) -> np.ndarray:
    """R with R S R* = T acting as the identity on the support of S when
    S = T.  S and T must be Hermitian PSD of equal rank at rank_tol.
    """
    S = np.asarray(S, dtype=complex)
    T = np.asarray(T, dtype=complex)
    s_vals, s_vecs = np.linalg.eigh((S + S.conj().T) / 2)
    t_vals, t_vecs = np.linalg.eigh((T + T.conj().T) / 2)
    for name, vals in (("S", s_vals), ("T", t_vals)):
        if vals.min(initial=0.0) < -PSD_TOL:
            raise NotPSD(f"{name} has eigenvalue {vals.min()}")
    s_vals = np.clip(s_vals, 0.0, None)
    t_vals = np.clip(t_vals, 0.0, None)
    top_t = t_vals.max(initial=0.0)
    rank_t = int((t_vals > rank_tol * top_t).sum()) if top_t > 0 else 0
    return _build_transformation(s_vals, s_vecs, t_vals, t_vecs, rank_t, rank_tol)


def sweep(state: SolverState, cl: ConstraintList | None = None, cfg: SolverConfig | None = None) -> SolverState:
    """One pass over all constraints, in list order, updating free cells in
    place.  Rank mismatches re-randomize the affected free cells and are
    counted in state.rank_events.
    """
    cfg = cfg or SolverConfig()
    if not state.plan:
        raise ValueError("state has no constraint plan; build it via initialize()")
    N = state.N
    eye = np.eye(N, dtype=complex)
    for p in state.plan:
        k = len(p.empty_rows)
        if k == 0:
            continue
        V = state.vectors[p.empty_rows, p.empty_cols, :]  # (k, N), rows are kets
        # S = sum of outer products; factor it through the thin SVD of V^T
        u, sv, _ = np.linalg.svd(V.T, full_matrices=False)
        s_vals = sv**2
        try:
            R = _build_transformation(s_vals, u, p.t_vals, p.t_vecs, p.rank_t, cfg.rank_tol)
        except RankMismatch:
            state.rank_events += 1
            state.vectors[p.empty_rows, p.empty_cols, :] = _gaussian_vectors(state.rng, k, N)
            continue
        r_step = cfg.sigma * R + (1.0 - cfg.sigma) * eye
        state.vectors[p.empty_rows, p.empty_cols, :] = V @ r_step.T
    state.iter += 1
    return state


def sinkhorn_error(state: SolverState, cl: ConstraintList | None = None) -> float:
    """Largest Frobenius residual || I - sum of cell projectors || over all
    constraints, evaluated on the raw working vectors.
    """
    if not state.plan:
        raise ValueError("state has no constraint plan; build it via initialize()")
    N = state.N
    eye = np.eye(N, dtype=complex)
    worst = 0.0
    for p in state.plan:
        V = state.vectors[p.rows, p.cols, :]
        gram = eye - V.T @ V.conj()
        worst = max(worst, float(np.linalg.norm(gram)))
    return worst


def solve(a: ClassicalGrid, cl: ConstraintList | None = None, cfg: SolverConfig | None = None) -> SolverOutcome:
    """Run sweeps until the error drops below cfg.epsilon (solved) or i_max
    sweeps elapse (failure).  Deterministic for a fixed seed.
    """
    cfg = cfg or SolverConfig()
    if cl is None:
        cl = sudoku_constraints(a.n)
    state = initialize(a, cfg, cl)
    err = sinkhorn_error(state)
    trace = [err]
    while err >= cfg.epsilon and state.iter < cfg.i_max:
        sweep(state, cl, cfg)
        err = sinkhorn_error(state)
        trace.append(err)
    status = SOLVED if err < cfg.epsilon else FAILURE
    grid = normalize_grid(state.as_grid())
    return SolverOutcome(
        status=status,
        grid=grid,
        iterations=state.iter,
        final_error=err,
        error_trace=trace,
        rank_events=state.rank_events,
    )


def solve_trials(
    a: ClassicalGrid,
    cl: ConstraintList | None,
    cfg: SolverConfig,
    trials: int,
    workers: int = 1,
) -> list[SolverOutcome]:
    """Independent runs with seeds cfg.seed + 0..trials-1, in trial order."""
    if cl is None:
        cl = sudoku_constraints(a.n)
    seeds = [cfg.seed + t for t in range(trials)]
    if workers <= 1:
        return [solve(a, cl, cfg.with_seed(s)) for s in seeds]
    from concurrent.futures import ProcessPoolExecutor

    args = [(a, cl, cfg.with_seed(s)) for s in seeds]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_solve_star, args, chunksize=max(1, trials // (4 * workers))))


def _solve_star(args):
    return solve(*args)
