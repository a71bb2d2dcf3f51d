"""Token games on the integer grid: engines, strategies, and verifiers.

Two game families share a board (the non-negative quarter-plane), a token
starting at the origin, and a red/white cell coloring chosen by Alice:

* declaration games — Alice colors batches of cells red while both players
  shift the token under per-kind budgets; Alice wins if the token comes to
  rest on a red cell.  Bob's staircase strategies win whenever his budgets
  clear an exactly-evaluated threshold.
* the (r, a, b) game — Alice fixes at most r red cells up front; the token
  color dictates who must move, and the first player forced to move with an
  empty budget loses.  The winner has an exact closed form, verified here
  against brute force over every red set.
"""

from .cells import Cell, Player, PreconditionError, RuleViolation, ShiftKind
from .decl import DeclGameConfig, DeclGameState, FunctionGraph, Variant
from .rab import RabGameConfig, RabGameState
from .analysis import (
    ReductionResult,
    alice_lift,
    contains_triangle,
    rab_winner,
    reduce_no_triangle,
    reduce_triangle,
)
from .staircase import (
    Staircase,
    ShiftLedger,
    audit_ledger,
    choose_staircase,
    delta_parameter,
    diagonal_budget_condition,
    staircase_condition,
    staircase_contains,
    staircase_strategy,
    upright_budget_condition,
)
from .rab_strategies import (
    AliceBasisTriangle,
    AliceDiagonal,
    AliceKite,
    BobAlwaysUp,
    BobRecursive,
    kite_cells,
)
from .oracle import (
    BACKEND,
    min_alice_red_size,
    reduction_sweep,
    solve_fixed_R,
    solve_rab,
)
from .decl_micro import MicroMinimaxAlice, certify_bob_decl, solve_decl_micro
from .sfamily import SFamily, build_s_family
from .regimes import Regime, RegimeAudit, audit_parameters

__all__ = [name for name in dir() if not name.startswith("_")]
