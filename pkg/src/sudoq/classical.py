"""Classical Sudoku oracle: backtracking enumeration, puzzle classification,
minimality tests, the shift-and-copy square, and the exhaustive symbol score.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .constraints import ConstraintList, sudoku_constraints
from .errors import BudgetExceeded
from .grids import ClassicalGrid

DEFAULT_SCORE_BUDGET = 10_000_000


class ClassicalClass(enum.Enum):
    UNSOLVABLE = "unsolvable"
    UNIQUE = "unique"
    MULTIPLE = "multiple"


@dataclass
class SolutionCount:
    """Result of counting classical completions, possibly capped."""

    count: int
    capped: bool
    solutions: list[ClassicalGrid] = field(default_factory=list)
    conflict: bool = False


def has_conflict(g: ClassicalGrid) -> bool:
    """True when some constraint already contains a repeated clue symbol."""
    for c in sudoku_constraints(g.n):
        rows, cols = c.index_arrays
        vals = g.entries[rows, cols]
        vals = vals[vals > 0]
        if len(np.unique(vals)) != len(vals):
            return True
    return False


def is_valid_square(g: ClassicalGrid) -> bool:
    """True for a completely filled grid satisfying every constraint."""
    if (g.entries == 0).any():
        return False
    full = frozenset(range(1, g.N + 1))
    for c in sudoku_constraints(g.n):
        rows, cols = c.index_arrays
        if frozenset(g.entries[rows, cols].tolist()) != full:
            return False
    return True


def _search(grid, n, cap, solutions, order):
    """Backtracking core.  ``order`` picks the next empty cell; symbols are
    always tried in ascending order so enumeration order is reproducible.
    """
    N = n * n
    count = 0

    row_used = [0] * N
    col_used = [0] * N
    blk_used = [0] * N
    for r in range(N):
        for c in range(N):
            v = grid[r][c]
            if v:
                bit = 1 << v
                row_used[r] |= bit
                col_used[c] |= bit
                blk_used[(r // n) * n + c // n] |= bit

    if order == "row":
        cells = [(r, c) for r in range(N) for c in range(N) if grid[r][c] == 0]
    elif order == "column":
        cells = [(r, c) for c in range(N) for r in range(N) if grid[r][c] == 0]
    else:
        cells = None  # most-constrained-first, chosen dynamically

    def candidates(r, c):
        used = row_used[r] | col_used[c] | blk_used[(r // n) * n + c // n]
        return [v for v in range(1, N + 1) if not used & (1 << v)]

    def pick_cell():
        best = None
        best_cands = None
        for r in range(N):
            for c in range(N):
                if grid[r][c]:
                    continue
                cand = candidates(r, c)
                if best is None or len(cand) < len(best_cands):
                    best, best_cands = (r, c), cand
                    if len(cand) <= 1:
                        return best, best_cands
        return best, best_cands

    def recurse(depth):
        nonlocal count
        if cells is not None:
            if depth == len(cells):
                count += 1
                if len(solutions) < cap:
                    solutions.append([row[:] for row in grid])
                return count >= cap
            r, c = cells[depth]
            cand = candidates(r, c)
        else:
            picked, cand = pick_cell()
            if picked is None:
                count += 1
                if len(solutions) < cap:
                    solutions.append([row[:] for row in grid])
                return count >= cap
            r, c = picked
        b = (r // n) * n + c // n
        for v in cand:
            bit = 1 << v
            grid[r][c] = v
            row_used[r] |= bit
            col_used[c] |= bit
            blk_used[b] |= bit
            done = recurse(depth + 1)
            grid[r][c] = 0
            row_used[r] &= ~bit
            col_used[c] &= ~bit
            blk_used[b] &= ~bit
            if done:
                return True
        return False

    recurse(0)
    return count


def count_solutions(g: ClassicalGrid, cap: int = 2, order: str = "row") -> SolutionCount:
    """Count classical completions of ``g``, capping the search at ``cap``.

    ``order`` is "row" (default, deterministic row-major scan), "column", or
    "most-constrained".  Grids with a repeated clue symbol in a constraint
    have zero solutions and come back with the conflict flag set.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if order not in ("row", "column", "most-constrained"):
        raise ValueError(f"unknown order {order!r}")
    if has_conflict(g):
        return SolutionCount(0, False, [], conflict=True)
    work = [list(row) for row in g.entries]
    sols: list[list[list[int]]] = []
    count = _search(work, g.n, cap, sols, order)
    return SolutionCount(
        count=count,
        capped=count >= cap,
        solutions=[ClassicalGrid(g.n, np.array(s)) for s in sols],
    )


def classify_classical(g: ClassicalGrid) -> ClassicalClass:
    sc = count_solutions(g, cap=2)
    if sc.count == 0:
        return ClassicalClass.UNSOLVABLE
    if sc.count == 1:
        return ClassicalClass.UNIQUE
    return ClassicalClass.MULTIPLE


def is_minimal(g: ClassicalGrid) -> bool:
    """Uniquely solvable, and removing any single clue destroys uniqueness."""
    if classify_classical(g) is not ClassicalClass.UNIQUE:
        return False
    for r, c in zip(*np.nonzero(g.entries)):
        reduced = g.with_entry(int(r), int(c), 0)
        if classify_classical(reduced) is ClassicalClass.UNIQUE:
            return False
    return True


def shift_copy_square(n: int) -> ClassicalGrid:
    """Fully filled valid square of side n^2 built from the cyclic Latin
    square S (S[i,j] = ((j - i) mod n) + 1) via
    G[(i,a),(b,j)] = S[i,j] + n (S[a,b] - 1).
    """
    if n < 1:
        raise ValueError("block side must be >= 1")
    N = n * n
    S = np.fromfunction(lambda i, j: (j - i) % n + 1, (n, n), dtype=int)
    G = np.zeros((N, N), dtype=int)
    for i in range(n):
        for a in range(n):
            for b in range(n):
                for j in range(n):
                    G[i * n + a, b * n + j] = S[i, j] + n * (S[a, b] - 1)
    return ClassicalGrid(n, G)


def count_complete_squares(n: int, order: str = "row") -> int:
    """Number of fully valid squares of side n^2 by exhaustive backtracking."""
    empty = ClassicalGrid(n, np.zeros((n * n, n * n), dtype=int))
    return count_solutions(empty, cap=10**9, order=order).count


def classical_score(g: ClassicalGrid, budget: int = DEFAULT_SCORE_BUDGET) -> float:
    """Minimum constraint error over ALL complete symbol fillings of the
    empty cells (the fillings need not satisfy any constraint).

    For basis kets the residual of a constraint with symbol multiplicities
    m_1..m_N is sqrt(sum_k (1 - m_k)^2), so the score is exact and cheap.
    """
    N = g.N
    empties = g.empty_cells()
    e = len(empties)
    if e and N ** e > budget:
        raise BudgetExceeded(f"{N}^{e} fillings exceed budget {budget}")
    cl = sudoku_constraints(g.n)
    cell_to_cons: dict[tuple[int, int], list[int]] = {cell: [] for cell in empties}
    base_counts = []
    for ci, c in enumerate(cl):
        counts = np.zeros(N + 1, dtype=int)
        for (r1, c1) in c.cells:
            r0, c0 = r1 - 1, c1 - 1
            v = g.entries[r0, c0]
            if v:
                counts[v] += 1
            elif (r0, c0) in cell_to_cons:
                cell_to_cons[(r0, c0)].append(ci)
        base_counts.append(counts)

    def error_for(counts_list):
        worst = 0.0
        for counts in counts_list:
            dev = 1.0 - counts[1:]
            worst = max(worst, math.sqrt(float(np.dot(dev, dev))))
        return worst

    if e == 0:
        return error_for(base_counts)

    best = math.inf
    for filling in product(range(1, N + 1), repeat=e):
        counts_list = [c.copy() for c in base_counts]
        for (cell, v) in zip(empties, filling):
            for ci in cell_to_cons[cell]:
                counts_list[ci][v] += 1
        best = min(best, error_for(counts_list))
    return best
