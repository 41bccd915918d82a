"""Named puzzle fixtures used by the experiment campaigns and the tests."""

from __future__ import annotations

import numpy as np

from .grids import ClassicalGrid, GridDimension, parse_classical_grid

# Hard 9x9 with a unique solution (norvig.com grid1); the benchmark used for
# the strength-parameter sweep.
BENCHMARK_9X9_TEXT = (
    "..3.2.6..9..3.5..1..18.64....81.29..7.......8..67.82....26.95..8..2.3..9..5.1.3.."
)

# 9x9 with exactly two classical completions: blanks at rows 1, 4, 7 and
# columns 2, 3; the missing 3x2 block is one of two classical patterns.
TWO_SOLUTION_9X9_TEXT = """
1..456789
456789123
789123456
2..564897
564897231
897231564
3..645978
645978312
978312645
"""

# The 3x2 blank patterns completing the grid above, in (row-block, col) order.
TWO_SOLUTION_COMPLETIONS = (
    ((2, 3), (3, 1), (1, 2)),
    ((3, 2), (1, 3), (2, 1)),
)

# 4x4 grid with no classical and no quantum solution; the symbol score is
# sqrt(2) while the best quantum error is 1.
UNSOLVABLE_4X4_TEXT = """
3.14
.432
1243
4321
"""

# 4x4 grid with two classical completions whose solution family also contains
# genuinely non-classical fillings: the missing block is [[x, y], [y, x]] for
# any orthonormal pair {x, y} of span{|1>, |2>}.
QUANTUM_FAMILY_4X4_TEXT = """
1234
34..
43..
2143
"""
# free cells of the family grid, 0-based (row, col), and the cross pattern:
# cell (1,2) == cell (2,3) and cell (1,3) == cell (2,2)
QUANTUM_FAMILY_FREE_CELLS = ((1, 2), (1, 3), (2, 2), (2, 3))

# Minimal 4-clue Shidoku grid; the one the iteration-count study singles out.
MINIMAL_4CLUE_4X4_TEXT = """
....
...1
.2..
3.4.
"""

# Codeword / received pair of the erasure-channel walkthrough: 8 of 16 cells
# erased.
ERASURE_DEMO_CODEWORD_TEXT = """
1234
3421
4312
2143
"""
ERASURE_DEMO_ERASED_CELLS = (
    (0, 0), (0, 3), (1, 1), (1, 2), (2, 1), (2, 2), (3, 0), (3, 3),
)


def _grid(text: str, n: int) -> ClassicalGrid:
    return parse_classical_grid(text, GridDimension(n))


def benchmark_9x9() -> ClassicalGrid:
    return _grid(BENCHMARK_9X9_TEXT, 3)


def two_solution_9x9() -> ClassicalGrid:
    return _grid(TWO_SOLUTION_9X9_TEXT, 3)


def two_solution_completions() -> list[ClassicalGrid]:
    """The two full squares completing :func:`two_solution_9x9`."""
    out = []
    for pattern in TWO_SOLUTION_COMPLETIONS:
        e = np.array(two_solution_9x9().entries)
        for k, (a, b) in enumerate(pattern):
            e[3 * k, 1], e[3 * k, 2] = a, b
        out.append(ClassicalGrid(3, e))
    return out


def unsolvable_4x4() -> ClassicalGrid:
    return _grid(UNSOLVABLE_4X4_TEXT, 2)


def quantum_family_4x4() -> ClassicalGrid:
    return _grid(QUANTUM_FAMILY_4X4_TEXT, 2)


def minimal_4clue_4x4() -> ClassicalGrid:
    return _grid(MINIMAL_4CLUE_4X4_TEXT, 2)


def erasure_demo_codeword() -> ClassicalGrid:
    return _grid(ERASURE_DEMO_CODEWORD_TEXT, 2)
