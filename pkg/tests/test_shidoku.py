import numpy as np

from sudoq.classical import is_minimal
from sudoq.grids import ClassicalGrid
from sudoq.puzzles import minimal_4clue_4x4
from sudoq.shidoku import (
    _apply,
    _symmetry_transforms,
    all_complete_squares,
    minimal_shidoku_grids,
)


def test_complete_square_count():
    assert len(all_complete_squares()) == 288


def test_thirteen_classes():
    assert len(minimal_shidoku_grids()) == 13


def test_pinned_grid_is_a_representative():
    assert any(g == minimal_4clue_4x4() for g in minimal_shidoku_grids())


def test_representatives_have_four_clues_and_are_minimal():
    for g in minimal_shidoku_grids():
        assert g.clue_count() == 4
        assert is_minimal(g)


def test_representatives_pairwise_inequivalent():
    transforms = _symmetry_transforms()
    grids = [g.entries for g in minimal_shidoku_grids()]
    canon = [min(tuple(_apply(g, t).reshape(16)) for t in transforms) for g in grids]
    assert len(set(canon)) == 13


def test_symmetry_preserves_minimality():
    rng = np.random.default_rng(0)
    transforms = _symmetry_transforms()
    g = minimal_4clue_4x4().entries
    for idx in rng.choice(len(transforms), size=5, replace=False):
        image = ClassicalGrid(2, _apply(g, transforms[idx]))
        assert is_minimal(image)
