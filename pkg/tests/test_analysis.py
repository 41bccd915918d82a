import numpy as np
import pytest

from sudoq.analysis import (
    grids_match,
    quantum_score_estimate,
    run_conjecture_campaign,
    sudoq_error,
    verify_two_solution_rigidity,
)
from sudoq.classical import shift_copy_square
from sudoq.errors import NotFull, WrongClass
from sudoq.grids import QuantumGrid, basis_ket, classify, quantize
from sudoq.puzzles import minimal_4clue_4x4, unsolvable_4x4
from sudoq.sinkhorn import SolverConfig


def plus_minus_completion():
    """The unsolvable grid filled with the |+>, |-> pair at its two holes."""
    g = unsolvable_4x4()
    vecs = np.array(quantize(g).vectors)
    vecs[0, 1] = (basis_ket(1, 4) + basis_ket(2, 4)) / np.sqrt(2)
    vecs[1, 0] = (basis_ket(1, 4) - basis_ket(2, 4)) / np.sqrt(2)
    return QuantumGrid(2, vecs, np.ones((4, 4), dtype=bool))


class TestSudoqError:
    def test_valid_square_zero(self):
        rep = sudoq_error(quantize(shift_copy_square(2)))
        assert rep.max_residual == 0.0
        assert len(rep.per_constraint) == 12

    def test_valid_9x9_zero(self):
        rep = sudoq_error(quantize(shift_copy_square(3)))
        assert rep.max_residual < 1e-12
        assert len(rep.per_constraint) == 27

    def test_partial_grid_rejected(self):
        with pytest.raises(NotFull):
            sudoq_error(quantize(unsolvable_4x4()))

    def test_plus_minus_completion_error_one(self):
        rep = sudoq_error(plus_minus_completion())
        assert rep.max_residual == pytest.approx(1.0, abs=1e-9)
        residuals = sorted(r for _, r in rep.per_constraint)
        # the block holding both free cells is exactly satisfied
        assert residuals[0] == pytest.approx(0.0, abs=1e-9)


class TestGridsMatch:
    def test_identical(self):
        q = quantize(shift_copy_square(2))
        assert grids_match(q, q)

    def test_global_phase(self):
        q = quantize(shift_copy_square(2))
        rotated = QuantumGrid(2, q.vectors * np.exp(0.7j), q.occupied)
        assert grids_match(q, rotated)

    def test_different(self):
        a = quantize(shift_copy_square(2))
        assert not grids_match(a, plus_minus_completion())

    def test_partial_never_matches(self):
        partial = quantize(unsolvable_4x4())
        assert not grids_match(partial, partial)


class TestScoreEstimate:
    def test_full_square_zero(self):
        est = quantum_score_estimate(shift_copy_square(2), 1, SolverConfig(seed=0))
        assert est.value == 0.0

    def test_unsolvable_grid_scores_one(self):
        est = quantum_score_estimate(unsolvable_4x4(), 3, SolverConfig(seed=0))
        assert est.value == pytest.approx(1.0, abs=1e-3)
        assert est.grid is not None
        assert sudoq_error(est.grid).max_residual == pytest.approx(est.value, abs=1e-6)

    def test_trials_validated(self):
        with pytest.raises(ValueError):
            quantum_score_estimate(unsolvable_4x4(), 0, SolverConfig(seed=0))


class TestCampaigns:
    def test_wrong_class_one(self):
        with pytest.raises(WrongClass):
            run_conjecture_campaign(minimal_4clue_4x4(), "one", 1, SolverConfig(seed=0))

    def test_wrong_class_two(self):
        with pytest.raises(WrongClass):
            run_conjecture_campaign(unsolvable_4x4(), "two", 1, SolverConfig(seed=0))

    def test_unknown_conjecture(self):
        with pytest.raises(ValueError):
            run_conjecture_campaign(unsolvable_4x4(), "three", 1, SolverConfig(seed=0))

    def test_conjecture_one_no_counterexample(self):
        ev = run_conjecture_campaign(unsolvable_4x4(), "one", 10, SolverConfig(seed=0))
        assert ev.trials == 10 and len(ev.records) == 10
        assert ev.solved == 0
        assert ev.counterexample is None

    def test_conjecture_two_classical_outcomes(self):
        ev = run_conjecture_campaign(
            minimal_4clue_4x4(), "two", 10, SolverConfig(seed=0), grid_id="G05"
        )
        assert ev.solved > 0
        assert ev.classical_outcomes == ev.solved
        assert ev.nonclassical_outcomes == 0
        assert ev.counterexample is None
        assert all(r.grid_id == "G05" for r in ev.records)
        solved_records = [r for r in ev.records if r.status == "solved"]
        assert all(r.classical and r.max_residual < 1e-7 for r in solved_records)


class TestRigidity:
    def test_zero_trials(self):
        rep = verify_two_solution_rigidity(0, SolverConfig(seed=0))
        assert rep.trials == 0 and rep.solved == 0

    def test_solved_runs_land_on_completions(self):
        rep = verify_two_solution_rigidity(5, SolverConfig(seed=0))
        assert rep.mismatches == 0 and rep.counterexample is None
        assert rep.matches_first + rep.matches_second == rep.solved


def test_classify_plus_minus_nonclassical():
    verdict = classify(plus_minus_completion())
    assert not verdict.is_classical
    assert verdict.max_fidelity[0, 1] == pytest.approx(0.5)
