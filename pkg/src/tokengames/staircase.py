"""Bob's staircase strategies for the declaration games, with audit machinery.

A staircase anchored at ``origin`` with step length f and offset ``index``
is the cell set {(x+i, y + floor(i/f) + index) : i >= 0}: horizontal steps
of length f climbing one row per step.  Staircases with a common anchor and
offsets 0..count-1 are pairwise disjoint, so one of them carries at most
1/count of the red cells.

Bob's strategy: pass until the first declaration; after every declaration
re-anchor at the token, pick the least-red staircase among ``delta`` of
them, climb into it, and then hold the token on white staircase cells:
re-align after Alice's shifts and flee rightward (climbing back on exits)
whenever the token is red.  Every shift is tallied in a ShiftLedger whose
counters admit closed-form bounds; the budget conditions below state exactly
when those bounds fit inside Bob's budgets.

All accept/reject arithmetic is integer-only (square both sides of every
root inequality); Fractions appear only in reports.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .cells import Cell, Player, ShiftKind
from .decl import (
    BatchAction,
    BobAction,
    DeclareAction,
    DeclGameConfig,
    DeclGameState,
    PassAction,
    Variant,
)
from .transcript import Transcript


@dataclass(frozen=True)
class Staircase:
    """One staircase: anchor cell, offset index, and step length."""

    origin: Cell
    index: int
    f: int

    def row_at(self, x: int) -> int | None:
        """Row of the staircase cell in column x (None left of the anchor)."""
        i = x - self.origin[0]
        if i < 0:
            return None
        return self.origin[1] + i // self.f + self.index

    def contains(self, cell: Cell) -> bool:
        return self.row_at(cell[0]) == cell[1]


def staircase_contains(stair: Staircase, cell: Cell) -> bool:
    """Membership test without materializing the infinite set."""
    return stair.contains(cell)


def red_count_per_staircase(origin: Cell, red, delta: int, f: int) -> list[int]:
    counts = [0] * delta
    ox, oy = origin
    for (x, y) in red:
        if x < ox:
            continue
        index = y - oy - (x - ox) // f
        if 0 <= index < delta:
            counts[index] += 1
    return counts


def choose_staircase(origin: Cell, red, delta: int, f: int) -> Staircase:
    """The staircase among offsets 0..delta-1 holding the fewest red cells;
    ties go to the smallest offset.  Disjointness pigeonholes the minimum to
    at most |red|/delta cells."""
    if delta < 1:
        raise ValueError("delta must be at least 1")
    counts = red_count_per_staircase(origin, red, delta, f)
    best = min(range(delta), key=lambda j: (counts[j], j))
    return Staircase(origin, best, f)


def delta_parameter(r: int, p: int, f: int) -> int:
    """ceil(sqrt(r*p/f)), at least 1: the number of candidate staircases."""
    if r < 1 or p < 1 or f < 1:
        raise ValueError("r, p, f must be positive")
    # smallest d with f*d*d >= r*p
    d = isqrt(r * p // f)
    while f * d * d < r * p:
        d += 1
    return max(1, d)


@dataclass(frozen=True)
class Inequality:
    """One exactly-evaluated budget inequality (compared via squares)."""

    name: str
    lhs: Fraction
    rhs_squared: Fraction  # square of the (irrational) right-hand side
    holds: bool

    @property
    def margin_squared(self) -> Fraction:
        """lhs^2 - rhs^2 (meaningful only when lhs >= 0)."""
        return self.lhs * self.lhs - self.rhs_squared


@dataclass(frozen=True)
class ConditionReport:
    holds: bool
    inequalities: tuple[Inequality, ...]


def _root_inequality(name: str, scaled_lhs: int, scaled_rhs_sq: int, f: int,
                     rhs_sq: Fraction) -> Inequality:
    """Checks lhs >= sqrt(rhs_sq) where scaled_lhs = lhs*f and
    scaled_rhs_sq = (f*sqrt(rhs_sq))^2, all integers."""
    holds = scaled_lhs >= 0 and scaled_lhs * scaled_lhs >= scaled_rhs_sq
    return Inequality(name, Fraction(scaled_lhs, f), rhs_sq, holds)


def upright_budget_condition(a_up: int, a_right: int, b_up: int, b_right: int,
                             r: int, p: int, f: int) -> ConditionReport:
    """Sufficient budgets for the up+right staircase strategy:

        b_right/f - a_up           >= sqrt(r p^3 / f)
        b_up - a_up - a_right/f    >= 2 sqrt(r p^3 / f)
    """
    if f < 1:
        raise ValueError("f must be positive")
    rhs_sq = Fraction(r * p**3, f)
    first = _root_inequality("right_budget", b_right - a_up * f, r * p**3 * f, f, rhs_sq)
    second = _root_inequality("up_budget", b_up * f - a_up * f - a_right,
                              4 * r * p**3 * f, f, 4 * rhs_sq)
    return ConditionReport(first.holds and second.holds, (first, second))


def diagonal_budget_condition(a_up: int, a_right: int, b_diag: int, b_right: int,
                              r: int, p: int, f: int) -> ConditionReport:
    """Sufficient budgets for the diagonal+right staircase strategy (f >= 2):

        b_right/f - a_up              >= sqrt(r p^3 / f)
        b_diag - 2 a_up - 2 a_right/f >= 4 sqrt(r p^3 / f)
    """
    if f < 2:
        raise ValueError("the diagonal strategy needs f >= 2")
    rhs_sq = Fraction(r * p**3, f)
    first = _root_inequality("right_budget", b_right - a_up * f, r * p**3 * f, f, rhs_sq)
    second = _root_inequality("diag_budget", b_diag * f - 2 * a_up * f - 2 * a_right,
                              16 * r * p**3 * f, f, 16 * rhs_sq)
    return ConditionReport(first.holds and second.holds, (first, second))


def staircase_condition(config: DeclGameConfig) -> ConditionReport:
    """The budget condition matching the config's variant."""
    if config.variant is Variant.UP_RIGHT:
        return upright_budget_condition(config.a_up, config.a_right,
                                        config.bob_budget_1, config.bob_budget_2,
                                        config.r, config.p, config.f)
    return diagonal_budget_condition(config.a_up, config.a_right,
                                     config.bob_budget_1, config.bob_budget_2,
                                     config.r, config.p, config.f)


@dataclass
class ShiftLedger:
    """Tally of Bob's shifts by purpose, plus a budget-breach flag."""

    avoid_right: int = 0         # rights fleeing red cells
    return_right: int = 0       # rights re-aligning after Alice's up
    select_vertical: int = 0    # up/diagonal shifts entering a chosen staircase
    step_end_vertical: int = 0  # up/diagonal shifts after leaving a step end
    select_per_declaration: list[int] = field(default_factory=list)
    breach: bool = False

    @property
    def rights(self) -> int:
        return self.avoid_right + self.return_right

    @property
    def verticals(self) -> int:
        return self.select_vertical + self.step_end_vertical


@dataclass(frozen=True)
class TurnPlan:
    """Deterministic result of planning one Bob turn from (state, memory)."""

    action: BobAction
    memory: tuple
    deltas: tuple[int, int, int, int]  # avoid, return, select, step_end
    select_now: int                    # select shifts this turn, -1 if no re-anchor
    breach: bool


FRESH_MEMORY: tuple = (0, None)  # (declarations seen, chosen Staircase | None)


class StaircaseBob:
    """Bob's staircase strategy for either declaration-game variant.

    The decision rule is the pure function :meth:`plan_turn` of the
    observable state and a tiny memory (declarations seen, chosen
    staircase); :meth:`act` threads that memory and maintains the ledger.
    If a required shift sequence does not fit the remaining budgets the
    whole turn degrades to a pass and the ledger is flagged; the audit, not
    the engine, judges the breach.
    """

    def __init__(self, config: DeclGameConfig):
        self.config = config
        self.delta = delta_parameter(config.r, config.p, config.f)
        self.ledger = ShiftLedger()
        self._memory: tuple = FRESH_MEMORY

    def memory(self) -> tuple:
        return self._memory

    def act(self, state: DeclGameState) -> BobAction:
        plan = self.plan_turn(state, self._memory)
        self._memory = plan.memory
        if plan.breach:
            self.ledger.breach = True
            return plan.action
        avoid, ret, select, step_end = plan.deltas
        self.ledger.avoid_right += avoid
        self.ledger.return_right += ret
        self.ledger.select_vertical += select
        self.ledger.step_end_vertical += step_end
        if plan.select_now >= 0:
            self.ledger.select_per_declaration.append(plan.select_now)
        return plan.action

    def plan_turn(self, state: DeclGameState, memory: tuple) -> TurnPlan:
        """Pure turn planner: no ledger side effects, so certification can
        branch over Alice lines with explicit memory instead of clones."""
        config = self.config
        decls_seen, stair = memory
        if state.declarations_used == 0:
            return TurnPlan(PassAction(), memory, (0, 0, 0, 0), -1, False)

        vertical = ShiftKind.UP if config.variant is Variant.UP_RIGHT else ShiftKind.DIAGONAL
        token = state.token
        left_1 = config.bob_budget_1 - state.bob_used_1   # vertical kind
        left_2 = config.bob_budget_2 - state.bob_used_2   # right
        kinds: list[ShiftKind] = []
        avoid = ret = select = step_end = 0
        select_now = -1
        breach = False

        def take(kind: ShiftKind) -> bool:
            nonlocal token, left_1, left_2
            if kind is ShiftKind.RIGHT:
                if left_2 == 0:
                    return False
                left_2 -= 1
            else:
                if left_1 == 0:
                    return False
                left_1 -= 1
            kinds.append(kind)
            dx, dy = kind.delta
            token = (token[0] + dx, token[1] + dy)
            return True

        if state.declarations_used > decls_seen:
            # Re-anchor: choose the least-red staircase at the current token
            # and climb into it.  With up shifts the offset equals the shift
            # count; with diagonals (f >= 2) each shift raises the offset
            # except every f-th, so strictly fewer than 2*delta are needed.
            decls_seen = state.declarations_used
            stair = choose_staircase(token, state.red, self.delta, config.f)
            select_now = 0

            def offset() -> int:
                return token[1] - stair.origin[1] - (token[0] - stair.origin[0]) // config.f

            while not breach and offset() < stair.index:
                if not take(vertical):
                    breach = True
                    break
                select += 1
                select_now += 1

        if stair is None:
            return TurnPlan(PassAction(), (decls_seen, stair), (0, 0, 0, 0), select_now, breach)

        def row_gap() -> int:
            """Token row minus staircase row in the token's column."""
            expected = stair.row_at(token[0])
            assert expected is not None  # the token never moves left of the anchor
            return token[1] - expected

        def align() -> bool:
            """Walk back onto the staircase; False on budget shortfall."""
            nonlocal ret, step_end
            while row_gap() > 0:  # above: Alice shifted up; walk right
                if not take(ShiftKind.RIGHT):
                    return False
                ret += 1
            while row_gap() < 0:  # left a step end rightward; climb
                if not take(vertical):
                    return False
                step_end += 1
            return True

        if not breach and not align():
            breach = True
        while not breach and token in state.red:
            if not take(ShiftKind.RIGHT):
                breach = True
                break
            avoid += 1
            if row_gap() < 0:
                if not take(vertical):
                    breach = True
                    break
                step_end += 1

        if breach:
            return TurnPlan(PassAction(), (decls_seen, stair), (0, 0, 0, 0), select_now, True)
        action: BobAction = BatchAction(tuple(kinds)) if kinds else PassAction()
        return TurnPlan(action, (decls_seen, stair), (avoid, ret, select, step_end),
                        select_now, False)


def staircase_strategy(config: DeclGameConfig) -> StaircaseBob:
    """Bob's staircase strategy for the config's variant."""
    return StaircaseBob(config)


@dataclass(frozen=True)
class BoundCheck:
    name: str
    observed: int
    bound: Fraction
    strict: bool   # observed strictly below the bound (budget rows: holds)
    weak: bool     # observed <= bound


@dataclass(frozen=True)
class AuditReport:
    checks: tuple[BoundCheck, ...]
    breach: bool
    final_token_white: bool

    @property
    def all_strict(self) -> bool:
        return not self.breach and all(c.strict for c in self.checks)

    @property
    def all_weak(self) -> bool:
        return not self.breach and all(c.weak for c in self.checks)

    def records(self) -> list[dict]:
        """Key/value records, one per bound."""
        return [
            {"bound": c.name, "closed_form": str(c.bound), "observed": c.observed,
             "pass": c.strict}
            for c in self.checks
        ]


class LedgerMismatch(ValueError):
    """Transcript shift totals disagree with the ledger."""


def audit_ledger(ledger: ShiftLedger, config: DeclGameConfig,
                 transcript: Transcript) -> AuditReport:
    """Compare ledger counters against their closed-form bounds.

    With Delta the staircase count and b' Bob's observed rights:
    avoid_right < (r p / Delta) p; return_right < a_up f; select_vertical <
    Delta p (up+right) or 2 Delta p (diagonal); step_end_vertical <
    (b' + a_right)/f, doubled and weakened to <= for the diagonal variant.
    Also checks the whole-budget inequalities the condition guarantees.
    Raises LedgerMismatch when the transcript's Bob shift totals do not
    reproduce the ledger.
    """
    bob_vertical = 0
    bob_right = 0
    for ev in transcript.events:
        if ev.player is Player.BOB and isinstance(ev.action, BatchAction):
            for kind in ev.action.kinds:
                if kind is ShiftKind.RIGHT:
                    bob_right += 1
                else:
                    bob_vertical += 1
    if bob_right != ledger.rights or bob_vertical != ledger.verticals:
        raise LedgerMismatch(
            f"transcript shifts (vertical={bob_vertical}, right={bob_right}) != "
            f"ledger (vertical={ledger.verticals}, right={ledger.rights})")

    r, p, f = config.r, config.p, config.f
    delta = delta_parameter(r, p, f)
    diagonal = config.variant is Variant.DIAGONAL
    b_prime = ledger.rights

    checks: list[BoundCheck] = []

    def counter(name: str, observed: int, bound: Fraction) -> None:
        checks.append(BoundCheck(name, observed, bound,
                                 strict=observed < bound, weak=observed <= bound))

    counter("avoid_right", ledger.avoid_right, Fraction(r * p, delta) * p)
    counter("return_right", ledger.return_right, Fraction(config.a_up * f))
    counter("select_vertical", ledger.select_vertical,
            Fraction((2 if diagonal else 1) * delta * p))
    step_bound = Fraction(b_prime + config.a_right, f)
    if diagonal:
        step_bound *= 2
    counter("step_end_vertical", ledger.step_end_vertical, step_bound)

    def budget(name: str, have: int, need: Fraction) -> None:
        ok = Fraction(have) >= need
        checks.append(BoundCheck(name, have, need, strict=ok, weak=ok))

    budget("right_budget_requirement", config.bob_budget_2,
           Fraction(r * p * p, delta) + config.a_up * f)
    if diagonal:
        budget("diag_budget_requirement", config.bob_budget_1,
               2 * Fraction(r * p * p, delta) / f + 2 * config.a_up
               + 2 * Fraction(config.a_right, f) + 2 * delta * p)
    else:
        budget("up_budget_requirement", config.bob_budget_1,
               Fraction(r * p * p, delta) / f + delta * p + config.a_up
               + Fraction(config.a_right, f))

    final_white = True
    if transcript.events:
        red: set[Cell] = set()
        for ev in transcript.events:
            if isinstance(ev.action, DeclareAction):
                red.update(ev.action.cells)
        final_white = transcript.events[-1].token not in red
    return AuditReport(tuple(checks), ledger.breach, final_white)
