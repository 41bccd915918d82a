import json
from collections import Counter

import pytest

from sudoq.constraints import (
    BLOCK,
    COL,
    ROW,
    constraints_to_json,
    export_tanner,
    latin_constraints,
    sudoku_constraints,
)

# Edge set of the 4x4 Tanner graph: constraints C1..C12 (rows, cols, blocks)
# against cells (r, c).
EXPECTED_4X4_EDGES = {
    1: {(1, 1), (1, 2), (1, 3), (1, 4)},
    2: {(2, 1), (2, 2), (2, 3), (2, 4)},
    3: {(3, 1), (3, 2), (3, 3), (3, 4)},
    4: {(4, 1), (4, 2), (4, 3), (4, 4)},
    5: {(1, 1), (2, 1), (3, 1), (4, 1)},
    6: {(1, 2), (2, 2), (3, 2), (4, 2)},
    7: {(1, 3), (2, 3), (3, 3), (4, 3)},
    8: {(1, 4), (2, 4), (3, 4), (4, 4)},
    9: {(1, 1), (1, 2), (2, 1), (2, 2)},
    10: {(1, 3), (1, 4), (2, 3), (2, 4)},
    11: {(3, 1), (3, 2), (4, 1), (4, 2)},
    12: {(3, 3), (3, 4), (4, 3), (4, 4)},
}


class TestLatin:
    def test_counts(self):
        cl = latin_constraints(5)
        assert len(cl) == 10
        assert all(len(c.cells) == 5 for c in cl)

    def test_order_rows_then_cols(self):
        cl = latin_constraints(3)
        assert [c.kind for c in cl] == [ROW] * 3 + [COL] * 3
        assert set(cl.constraints[1].cells) == {(2, 1), (2, 2), (2, 3)}

    def test_n1(self):
        cl = latin_constraints(1)
        assert len(cl) == 2
        assert all(c.cells == ((1, 1),) for c in cl)

    def test_every_cell_twice(self):
        counts = Counter(cell for c in latin_constraints(4) for cell in c.cells)
        assert set(counts.values()) == {2}


class TestSudoku:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_counts_and_coverage(self, n):
        cl = sudoku_constraints(n)
        assert len(cl) == 3 * n * n
        counts = Counter(cell for c in cl for cell in c.cells)
        assert len(counts) == n**4
        assert set(counts.values()) == {3}

    def test_ordering(self):
        cl = sudoku_constraints(2)
        assert [c.kind for c in cl] == [ROW] * 4 + [COL] * 4 + [BLOCK] * 4

    def test_block_cells(self):
        cl = sudoku_constraints(2)
        assert set(cl.constraints[8].cells) == {(1, 1), (1, 2), (2, 1), (2, 2)}

    def test_edge_set_matches_reference(self):
        cl = sudoku_constraints(2)
        for c in cl:
            assert set(c.cells) == EXPECTED_4X4_EDGES[c.id]

    def test_restriction_to_rows_cols_is_latin(self):
        for n in (2, 3):
            sud = sudoku_constraints(n)
            lat = latin_constraints(n * n)
            rc = [c for c in sud if c.kind in (ROW, COL)]
            assert [c.cells for c in rc] == [c.cells for c in lat]

    def test_intersections(self):
        cl = sudoku_constraints(2)
        rows = [c for c in cl if c.kind == ROW]
        cols = [c for c in cl if c.kind == COL]
        blocks = [c for c in cl if c.kind == BLOCK]
        for r in rows:
            for c in cols:
                assert len(set(r.cells) & set(c.cells)) == 1
            for b in blocks:
                assert len(set(r.cells) & set(b.cells)) in (0, 2)


class TestExports:
    def count_edges(self, dot):
        return sum(1 for line in dot.splitlines() if " -- " in line)

    def test_tanner_4x4(self):
        dot = export_tanner(sudoku_constraints(2))
        assert self.count_edges(dot) == 48
        assert dot.count("[shape=box") == 12
        assert dot.count("[shape=circle") == 16

    def test_tanner_latin2(self):
        dot = export_tanner(latin_constraints(2))
        assert self.count_edges(dot) == 8
        assert dot.count("[shape=box") == 4
        assert dot.count("[shape=circle") == 4

    def test_tanner_9x9_edge_count(self):
        # 3n^2 constraints x n^2 cells each
        assert self.count_edges(export_tanner(sudoku_constraints(3))) == 243

    def test_json_export(self):
        data = json.loads(constraints_to_json(sudoku_constraints(2)))
        assert data["side"] == 4 and data["n"] == 2
        assert len(data["constraints"]) == 12
        assert data["constraints"][8]["cells"] == [[1, 1], [1, 2], [2, 1], [2, 2]]
