"""Constraint lists (hyperedges) for Latin and Sudoku boards, plus graph
exports.

Cells are addressed 1-based, matching the usual row/column numbering of the
puzzles; ``Constraint.index_arrays`` hands out the 0-based numpy view used by
the numerical code.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

import numpy as np

ROW = "row"
COL = "col"
BLOCK = "block"


@dataclass(frozen=True)
class Constraint:
    """One hyperedge: a set of exactly N cells that must carry an ONB."""

    id: int
    kind: str
    cells: tuple[tuple[int, int], ...]  # 1-based (row, col)

    def __post_init__(self):
        if len(set(self.cells)) != len(self.cells):
            raise ValueError("constraint cells must be pairwise distinct")

    @cached_property
    def index_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """0-based (rows, cols) arrays for numpy indexing."""
        arr = np.array(self.cells, dtype=int) - 1
        rows = arr[:, 0].copy()
        cols = arr[:, 1].copy()
        rows.setflags(write=False)
        cols.setflags(write=False)
        return rows, cols


@dataclass(frozen=True)
class ConstraintList:
    """Ordered family of constraints over an N x N board.

    ``n`` is the block side for Sudoku lists and None for Latin (rook) lists.
    """

    side: int  # board side N
    n: int | None
    constraints: tuple[Constraint, ...]

    def __iter__(self):
        return iter(self.constraints)

    def __len__(self):
        return len(self.constraints)


def latin_constraints(N: int) -> ConstraintList:
    """Rook constraints: N rows then N columns."""
    if N < 1:
        raise ValueError("board side must be >= 1")
    cons = []
    for i in range(1, N + 1):
        cons.append(Constraint(len(cons) + 1, ROW, tuple((i, j) for j in range(1, N + 1))))
    for j in range(1, N + 1):
        cons.append(Constraint(len(cons) + 1, COL, tuple((i, j) for i in range(1, N + 1))))
    return ConstraintList(N, None, tuple(cons))


def sudoku_constraints(n: int) -> ConstraintList:
    """Sudoku constraints of side N = n^2: rows, columns, then n x n blocks.

    Blocks are ordered band by band; block (I, J) holds the cells
    ((I-1)n + i, (J-1)n + j) for i, j in 1..n.
    """
    if n < 1:
        raise ValueError("block side must be >= 1")
    N = n * n
    cons = list(latin_constraints(N).constraints)
    for I in range(1, n + 1):
        for J in range(1, n + 1):
            cells = tuple(
                ((I - 1) * n + i, (J - 1) * n + j)
                for i in range(1, n + 1)
                for j in range(1, n + 1)
            )
            cons.append(Constraint(len(cons) + 1, BLOCK, cells))
    return ConstraintList(N, n, tuple(cons))


def export_tanner(cl: ConstraintList) -> str:
    """DOT text of the bipartite constraint/cell (Tanner) graph.

    Constraint nodes are C_i, cell nodes P_r_c; an edge joins them exactly
    when the cell belongs to the constraint.
    """
    lines = ["graph tanner {"]
    for c in cl:
        lines.append(f'  C_{c.id} [shape=box, label="C_{c.id}"];')
    for r in range(1, cl.side + 1):
        for col in range(1, cl.side + 1):
            lines.append(f'  P_{r}_{col} [shape=circle, label="P_{r}{col}"];')
    for c in cl:
        for (r, col) in c.cells:
            lines.append(f"  C_{c.id} -- P_{r}_{col};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def constraints_to_json(cl: ConstraintList) -> str:
    """Constraints as lists of [row, col] pairs."""
    data = {
        "side": cl.side,
        "n": cl.n,
        "constraints": [
            {"id": c.id, "kind": c.kind, "cells": [[r, col] for r, col in c.cells]}
            for c in cl
        ],
    }
    return json.dumps(data, separators=(",", ":"))
