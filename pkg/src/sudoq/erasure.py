"""Erasure-channel pipeline: codeword generation, symbol erasure, decoding
through the quantum solver, and recovery-rate simulation.

The channel is simulated at the symbol level: an erased cell is flagged
rather than embedded in the (N^2+1)-dimensional flag-ket space, since the
extra dimension carries no information usable by the decoder.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .classical import count_solutions, is_valid_square, shift_copy_square
from .errors import SudoqError
from .grids import ClassicalGrid, QuantumGrid, classify
from .sinkhorn import SolverConfig, solve

RESTART_SEED_STRIDE = 1_000_003


@dataclass(frozen=True)
class ChannelParams:
    p_erase: float
    seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.p_erase <= 1.0:
            raise ValueError(f"erasure probability must be in [0, 1], got {self.p_erase}")


@dataclass(frozen=True, eq=False)
class ReceivedGrid:
    """Channel output: every cell carries a symbol or the erasure flag (0)."""

    n: int
    entries: np.ndarray  # (N, N) int, 0 = erased

    def __post_init__(self):
        e = np.asarray(self.entries, dtype=int).copy()
        e.setflags(write=False)
        object.__setattr__(self, "entries", e)

    @property
    def N(self) -> int:
        return self.n * self.n

    def erased_count(self) -> int:
        return int(np.count_nonzero(self.entries == 0))

    def as_classical_grid(self) -> ClassicalGrid:
        return ClassicalGrid(self.n, self.entries)


@dataclass
class DecodeReport:
    decoded: Optional[QuantumGrid]
    classical: Optional[ClassicalGrid]
    exact_recovery: bool
    unique_completion: bool
    attempts: int = 0


def generate_codeword(n: int, seed: int) -> ClassicalGrid:
    """Random valid square: the shift-and-copy square scrambled by a symbol
    relabeling, row permutations within bands, and column permutations
    within stacks."""
    rng = np.random.default_rng(seed)
    base = shift_copy_square(n).entries
    relabel = np.zeros(n * n + 1, dtype=int)
    relabel[1:] = rng.permutation(n * n) + 1
    rows = np.concatenate([band * n + rng.permutation(n) for band in range(n)])
    cols = np.concatenate([stack * n + rng.permutation(n) for stack in range(n)])
    out = ClassicalGrid(n, relabel[base[rows][:, cols]])
    assert is_valid_square(out)
    return out


def erase(code: ClassicalGrid, ch: ChannelParams) -> ReceivedGrid:
    """Erase each cell independently with probability ch.p_erase."""
    if not is_valid_square(code):
        raise SudoqError("codeword must be a full valid square")
    rng = np.random.default_rng(ch.seed)
    lost = rng.random((code.N, code.N)) < ch.p_erase
    entries = np.where(lost, 0, code.entries)
    return ReceivedGrid(code.n, entries)


def decode(
    rx: ReceivedGrid,
    cfg: SolverConfig,
    original: Optional[ClassicalGrid] = None,
    restarts: int = 5,
) -> DecodeReport:
    """Treat erased cells as empty and run the solver, restarting with
    derived seeds a few times to separate solver non-convergence from
    information loss.  ``original`` (when supplied) is only used to score
    exact recovery."""
    puzzle = rx.as_classical_grid()
    unique = count_solutions(puzzle, cap=2).count == 1
    outcome = None
    attempts = 0
    for k in range(max(1, restarts)):
        attempts += 1
        outcome = solve(puzzle, cfg=cfg.with_seed(cfg.seed + k * RESTART_SEED_STRIDE))
        if outcome.solved:
            break
    if not outcome.solved:
        return DecodeReport(None, None, False, unique, attempts)
    verdict = classify(outcome.grid)
    classical = verdict.grid if verdict.is_classical else None
    exact = (
        classical is not None and original is not None and classical == original
    )
    if unique and original is not None and classical is not None and not exact:
        # a second classical completion would contradict the oracle count
        logging.getLogger(__name__).warning(
            "unique-completion decode disagrees with the transmitted codeword; "
            "conjecture counterexample candidate: %s", classical.entries.tolist()
        )
    return DecodeReport(outcome.grid, classical, exact, unique, attempts)


def simulate_channel(
    n: int,
    p_erase_grid: list[float],
    trials: int,
    cfg: SolverConfig,
) -> list[dict]:
    """Monte-Carlo recovery rates per erasure probability.

    Per-trial seeds derive from cfg.seed so identical inputs reproduce
    identical rows.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rows = []
    for p in p_erase_grid:
        decoded = exact = unique = 0
        for t in range(trials):
            code = generate_codeword(n, cfg.seed + 2 * t)
            rx = erase(code, ChannelParams(p, seed=cfg.seed + 2 * t + 1))
            report = decode(rx, cfg.with_seed(cfg.seed + t), original=code)
            decoded += report.decoded is not None
            exact += report.exact_recovery
            unique += report.unique_completion
        rows.append(
            {
                "n": n,
                "p_erase": p,
                "trials": trials,
                "decoded_rate": decoded / trials,
                "exact_rate": exact / trials,
                "unique_rate": unique / trials,
            }
        )
    return rows
