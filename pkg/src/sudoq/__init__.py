"""Quantum Sudoku (SudoQ) toolkit: grids with vector entries, a Sinkhorn-like
alternating-normalization solver, classical oracles, conjecture-evidence
campaigns, and an erasure-code pipeline.
"""

from .analysis import (
    ConjectureEvidence,
    ErrorReport,
    RigidityReport,
    run_conjecture_campaign,
    sudoq_error,
    quantum_score_estimate,
    verify_two_solution_rigidity,
)
from .classical import (
    ClassicalClass,
    SolutionCount,
    classical_score,
    classify_classical,
    count_solutions,
    is_minimal,
    shift_copy_square,
)
from .constraints import (
    Constraint,
    ConstraintList,
    export_tanner,
    latin_constraints,
    sudoku_constraints,
)
from .erasure import ChannelParams, DecodeReport, ReceivedGrid, decode, erase, generate_codeword, simulate_channel
from .grids import (
    ClassicalGrid,
    ClassicalityVerdict,
    GridDimension,
    QuantumGrid,
    cell_fidelity,
    classify,
    parse_classical_grid,
    quantize,
    serialize_classical_grid,
)
from .shidoku import minimal_shidoku_grids
from .sinkhorn import (
    SolverConfig,
    SolverOutcome,
    initialize,
    optimal_transformation,
    sinkhorn_error,
    solve,
    solve_trials,
    sweep,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
