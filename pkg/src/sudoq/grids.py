"""Grid domain types: classical symbol grids, quantum vector grids, and the
maps between them.

A classical grid holds symbols 1..N (0 = empty) on an N x N board, N = n^2.
A quantum grid holds one unit vector of C^N per occupied cell; the induced
rank-one projector is never materialized here, only inside the solver.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import (
    BadLength,
    BadToken,
    DimensionMismatch,
    NotFull,
    NotNormalized,
)

NORM_TOL = 1e-6
DEFAULT_CLASS_TOL = 1e-6
PHASE_TOL = 1e-12


@dataclass(frozen=True)
class GridDimension:
    """Board geometry: block side n, board side N = n^2."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"block side must be >= 1, got {self.n}")

    @property
    def N(self) -> int:
        return self.n * self.n


@dataclass(frozen=True, eq=False)
class ClassicalGrid:
    """N x N array of symbols in {0..N}, 0 meaning empty."""

    n: int
    entries: np.ndarray  # (N, N) int

    def __post_init__(self):
        N = self.N
        e = np.asarray(self.entries, dtype=int)
        if e.shape != (N, N):
            raise DimensionMismatch(f"expected {N}x{N} entries, got {e.shape}")
        if e.min() < 0 or e.max() > N:
            raise BadToken(f"symbols must lie in 0..{N}")
        e = e.copy()
        e.setflags(write=False)
        object.__setattr__(self, "entries", e)

    @property
    def N(self) -> int:
        return self.n * self.n

    @property
    def dim(self) -> GridDimension:
        return GridDimension(self.n)

    def clue_count(self) -> int:
        return int(np.count_nonzero(self.entries))

    def empty_cells(self) -> list[tuple[int, int]]:
        """0-based (row, col) positions of empty cells, row-major."""
        rs, cs = np.nonzero(self.entries == 0)
        return list(zip(rs.tolist(), cs.tolist()))

    def with_entry(self, r: int, c: int, value: int) -> "ClassicalGrid":
        e = self.entries.copy()
        e[r, c] = value
        return ClassicalGrid(self.n, e)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ClassicalGrid)
            and self.n == other.n
            and np.array_equal(self.entries, other.entries)
        )

    def __hash__(self):
        return hash((self.n, self.entries.tobytes()))


@dataclass(frozen=True, eq=False)
class QuantumGrid:
    """N x N board of cells, each empty or holding one vector of C^N.

    ``vectors`` has shape (N, N, N); unoccupied cells hold zeros and are
    flagged off in ``occupied``.
    """

    n: int
    vectors: np.ndarray  # (N, N, N) complex
    occupied: np.ndarray  # (N, N) bool

    def __post_init__(self):
        N = self.N
        v = np.asarray(self.vectors, dtype=complex)
        occ = np.asarray(self.occupied, dtype=bool)
        if v.shape != (N, N, N):
            raise DimensionMismatch(f"expected vectors of shape {(N, N, N)}, got {v.shape}")
        if occ.shape != (N, N):
            raise DimensionMismatch(f"expected occupancy of shape {(N, N)}, got {occ.shape}")
        v = v.copy()
        v[~occ] = 0.0
        v.setflags(write=False)
        occ = occ.copy()
        occ.setflags(write=False)
        object.__setattr__(self, "vectors", v)
        object.__setattr__(self, "occupied", occ)

    @property
    def N(self) -> int:
        return self.n * self.n

    @property
    def dim(self) -> GridDimension:
        return GridDimension(self.n)

    def cell(self, r: int, c: int) -> Optional[np.ndarray]:
        """Vector at 0-based (r, c), or None when the cell is empty."""
        if not self.occupied[r, c]:
            return None
        return self.vectors[r, c]

    def is_full(self) -> bool:
        return bool(self.occupied.all())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QuantumGrid)
            and self.n == other.n
            and np.array_equal(self.occupied, other.occupied)
            and np.array_equal(self.vectors, other.vectors)
        )


@dataclass(frozen=True)
class ClassicalityVerdict:
    """Outcome of testing whether a full quantum grid is (close to) classical.

    ``grid`` carries the argmax symbols when every cell passes the fidelity
    threshold, None otherwise.  ``max_fidelity`` is the per-cell best overlap
    with a computational-basis ket.
    """

    is_classical: bool
    grid: Optional[ClassicalGrid]
    max_fidelity: np.ndarray  # (N, N) float


# ---------------------------------------------------------------------------
# parsing / serialization


def parse_classical_grid(text: str, dim: GridDimension) -> ClassicalGrid:
    """Parse grid text in compact (one char per cell, N <= 9) or general
    (whitespace-separated tokens) form.  '.' and '0' both mean empty.
    """
    N = dim.N
    tokens = text.split()
    if N <= 9:
        # compact form: every non-whitespace character is one token
        chars = [ch for ch in text if not ch.isspace()]
        if not all(len(t) == 1 for t in tokens) or len(chars) == N * N:
            tokens = chars
    if len(tokens) != N * N:
        raise BadLength(f"expected {N * N} tokens, got {len(tokens)}")
    entries = np.zeros((N, N), dtype=int)
    for idx, tok in enumerate(tokens):
        if tok == ".":
            val = 0
        else:
            try:
                val = int(tok)
            except ValueError:
                raise BadToken(f"bad symbol {tok!r} at position {idx}") from None
        if not 0 <= val <= N:
            raise BadToken(f"symbol {val} out of range 0..{N} at position {idx}")
        entries[idx // N, idx % N] = val
    return ClassicalGrid(dim.n, entries)


def serialize_classical_grid(g: ClassicalGrid) -> str:
    """Canonical text form: N lines; compact characters for N <= 9,
    space-separated tokens otherwise.  Empty cells serialize as '.'.
    """
    N = g.N
    lines = []
    for r in range(N):
        toks = ["." if v == 0 else str(v) for v in g.entries[r]]
        lines.append("".join(toks) if N <= 9 else " ".join(toks))
    return "\n".join(lines) + "\n"


def quantum_grid_to_json(q: QuantumGrid) -> str:
    cells = []
    for r in range(q.N):
        for c in range(q.N):
            v = q.cell(r, c)
            if v is None:
                cells.append(None)
            else:
                cells.append([[float(a.real), float(a.imag)] for a in v])
    return json.dumps({"n": q.n, "cells": cells}, separators=(",", ":"))


def quantum_grid_from_json(text: str) -> QuantumGrid:
    data = json.loads(text)
    n = int(data["n"])
    N = n * n
    cells = data["cells"]
    if len(cells) != N * N:
        raise BadLength(f"expected {N * N} cells, got {len(cells)}")
    vectors = np.zeros((N, N, N), dtype=complex)
    occupied = np.zeros((N, N), dtype=bool)
    for idx, cell in enumerate(cells):
        if cell is None:
            continue
        if len(cell) != N:
            raise DimensionMismatch(f"cell {idx} has {len(cell)} amplitudes, expected {N}")
        r, c = divmod(idx, N)
        vectors[r, c] = [complex(re, im) for re, im in cell]
        occupied[r, c] = True
    return QuantumGrid(n, vectors, occupied)


# ---------------------------------------------------------------------------
# quantization and comparisons


def basis_ket(k: int, N: int) -> np.ndarray:
    """Computational basis ket |k>, 1-based symbol k in 1..N."""
    v = np.zeros(N, dtype=complex)
    v[k - 1] = 1.0
    return v


def quantize(g: ClassicalGrid) -> QuantumGrid:
    """Map symbol k to the basis ket |k> and empty cells to empty cells."""
    N = g.N
    vectors = np.zeros((N, N, N), dtype=complex)
    occupied = g.entries > 0
    rs, cs = np.nonzero(occupied)
    vectors[rs, cs, g.entries[rs, cs] - 1] = 1.0
    return QuantumGrid(g.n, vectors, occupied)


def cell_fidelity(x: np.ndarray, y: np.ndarray) -> float:
    """|<x, y>|^2 for unit vectors; 1 iff the projectors coincide."""
    x = np.asarray(x, dtype=complex)
    y = np.asarray(y, dtype=complex)
    if x.shape != y.shape:
        raise DimensionMismatch(f"vector shapes differ: {x.shape} vs {y.shape}")
    return float(abs(np.vdot(x, y)) ** 2)


def canonicalize_phase(v: np.ndarray) -> np.ndarray:
    """Rotate the global phase so the first significant amplitude is real
    positive.  Leaves the zero vector untouched.
    """
    v = np.asarray(v, dtype=complex)
    mag = np.abs(v)
    peak = mag.max()
    if peak <= 0.0:
        return v.copy()
    idx = int(np.argmax(mag > PHASE_TOL * peak))
    phase = v[idx] / abs(v[idx])
    return v / phase


def normalize_grid(q: QuantumGrid) -> QuantumGrid:
    """Scale every occupied cell to unit norm and canonical phase."""
    vectors = np.array(q.vectors)
    for r, c in zip(*np.nonzero(q.occupied)):
        v = vectors[r, c]
        nrm = np.linalg.norm(v)
        if nrm > 0:
            vectors[r, c] = canonicalize_phase(v / nrm)
    return QuantumGrid(q.n, vectors, q.occupied)


def classify(q: QuantumGrid, tau_class: float = DEFAULT_CLASS_TOL) -> ClassicalityVerdict:
    """Decide whether a full quantum grid is cell-wise close to a classical one.

    A cell is classical when its best fidelity to a computational-basis ket
    reaches 1 - tau_class; the verdict is classical only if every cell is.
    """
    if not q.is_full():
        raise NotFull("classification requires a completely filled grid")
    norms = np.linalg.norm(q.vectors, axis=2)
    if np.abs(norms - 1.0).max() > NORM_TOL:
        raise NotNormalized("all cells must be unit norm within 1e-6")
    fid = np.abs(q.vectors) ** 2  # fidelity to ket k is |amplitude_k|^2
    max_fid = fid.max(axis=2)
    symbols = fid.argmax(axis=2) + 1
    is_classical = bool((max_fid >= 1.0 - tau_class).all())
    grid = ClassicalGrid(q.n, symbols) if is_classical else None
    return ClassicalityVerdict(is_classical, grid, max_fid)
