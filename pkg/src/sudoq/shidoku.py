"""Exhaustive study of 4x4 (Shidoku) puzzles.

Re-derives the complete list of minimal 4-clue uniquely-solvable grids by
brute force and groups them into equivalence classes under the usual grid
symmetries (row/column permutations preserving bands and stacks, transpose,
symbol relabeling).
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from .classical import count_solutions
from .grids import ClassicalGrid
from .puzzles import minimal_4clue_4x4


@lru_cache(maxsize=None)
def all_complete_squares() -> np.ndarray:
    """All complete valid 4x4 squares as a (count, 16) int array, row-major."""
    empty = ClassicalGrid(2, np.zeros((4, 4), dtype=int))
    sc = count_solutions(empty, cap=10**9)
    return np.array([s.entries.reshape(16) for s in sc.solutions], dtype=int)


def _raw_minimal_4clue_grids() -> list[tuple[tuple[int, int], ...]]:
    """Every 4-clue grid with a unique completion whose 3-clue subgrids all
    have multiple completions.  Grids are ((cell, value), ...) with row-major
    cell indices 0..15.
    """
    squares = all_complete_squares()
    found = []
    for cells in combinations(range(16), 4):
        sub = squares[:, cells]
        counts = Counter(map(tuple, sub))
        for values, cnt in counts.items():
            if cnt != 1:
                continue
            # minimality: each 3-clue restriction must match >= 2 squares
            minimal = True
            for drop in range(4):
                keep = [k for k in range(4) if k != drop]
                mask = np.ones(len(squares), dtype=bool)
                for k in keep:
                    mask &= squares[:, cells[k]] == values[k]
                if int(mask.sum()) < 2:
                    minimal = False
                    break
            if minimal:
                found.append(tuple(zip(cells, values)))
    return found


def _symmetry_transforms():
    """All 3072 grid symmetries as (row order, col order, transpose, symbol map)."""
    line_orders = []
    for band in permutations(range(2)):
        for p0 in permutations(range(2)):
            for p1 in permutations(range(2)):
                within = (p0, p1)
                order = []
                for b in band:
                    order.extend(2 * b + k for k in within[b])
                line_orders.append(tuple(order))
    line_orders = sorted(set(line_orders))
    sym_maps = []
    for perm in permutations(range(1, 5)):
        m = np.zeros(5, dtype=int)
        m[1:] = perm
        sym_maps.append(m)
    return [
        (rows, cols, tr, sym)
        for rows in line_orders
        for cols in line_orders
        for tr in (False, True)
        for sym in sym_maps
    ]


def _apply(grid: np.ndarray, transform) -> np.ndarray:
    rows, cols, tr, sym = transform
    g = grid
    if tr:
        g = g.T
    g = g[np.array(rows)][:, np.array(cols)]
    return sym[g]


@lru_cache(maxsize=None)
def minimal_shidoku_grids() -> tuple[ClassicalGrid, ...]:
    """Representatives of the symmetry classes of minimal 4-clue grids.

    Each class is represented by its lexicographically smallest member,
    except the class containing the fixture from :mod:`sudoq.puzzles`, which
    is represented by that grid itself.  Representatives are ordered by the
    canonical key of their class.
    """
    transforms = _symmetry_transforms()
    raw = set()
    for clues in _raw_minimal_4clue_grids():
        g = np.zeros(16, dtype=int)
        for cell, v in clues:
            g[cell] = v
        raw.add(tuple(g))

    classes: dict[tuple, tuple] = {}  # canonical key -> smallest member
    seen: set[tuple] = set()
    for g in sorted(raw):
        if g in seen:
            continue
        arr = np.array(g, dtype=int).reshape(4, 4)
        orbit = {tuple(_apply(arr, t).reshape(16)) for t in transforms}
        if not orbit <= raw:
            raise AssertionError("symmetry orbit left the minimal-grid set")
        seen |= orbit
        key = min(orbit)
        classes[key] = key

    pinned = minimal_4clue_4x4()
    pinned_flat = tuple(pinned.entries.reshape(16))
    reps = []
    for key in sorted(classes):
        arr = np.array(key, dtype=int).reshape(4, 4)
        orbit = {tuple(_apply(arr, t).reshape(16)) for t in transforms}
        if pinned_flat in orbit:
            reps.append(pinned)
        else:
            reps.append(ClassicalGrid(2, np.array(key, dtype=int).reshape(4, 4)))
    return tuple(reps)


def minimal_shidoku_raw_count() -> int:
    """Number of minimal 4-clue grids before quotienting by symmetry."""
    return len({tuple(sorted(c)) for c in _raw_minimal_4clue_grids()})
