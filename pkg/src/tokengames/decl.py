"""Declaration-game rules: state, legality, transitions, and play loop.

Two players alternate turns starting with Alice.  Alice may pass, make one
shift, or declare a batch of cells red (optionally combined with one shift).
Bob may pass or make a batch of one or more shifts, each charged against his
per-kind budget.  Alice wins if the token's final resting cell is red.

Variants differ in Bob's shift kinds: ``UP_RIGHT`` gives him up and right
shifts, ``DIAGONAL`` gives him diagonal and right shifts (and requires step
length f >= 2).  Alice always shifts up or right.

The endless game is finitized by quiescence: a bare Alice pass permanently
closes her declarations, and the game ends after two consecutive all-pass
rounds once declarations are closed or exhausted.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from typing import Protocol

from .cells import Cell, ORIGIN, Player, RuleViolation, ShiftKind, shifted, validate_cell
from .transcript import Transcript


class Variant(Enum):
    """Bob's shift kinds: up+right, or diagonal+right."""

    UP_RIGHT = "up_right"
    DIAGONAL = "diagonal"


@dataclass(frozen=True)
class FunctionGraph:
    """Declaration mode restricting each declaration to the graph of a partial
    map column -> row over a width x height window."""

    width: int
    height: int


@dataclass(frozen=True)
class DeclGameConfig:
    """Parameters of one declaration game.

    ``bob_budget_1`` is Bob's up budget in the UP_RIGHT variant and his
    diagonal budget in the DIAGONAL variant; ``bob_budget_2`` is his right
    budget in both.  ``r`` bounds cells per declaration, ``p`` bounds the
    number of declarations, ``f`` is the staircase step length used by Bob's
    strategies (and must be >= 2 in the DIAGONAL variant).
    """

    variant: Variant
    a_up: int
    a_right: int
    bob_budget_1: int
    bob_budget_2: int
    r: int
    p: int
    f: int = 1
    declaration_mode: FunctionGraph | None = None

    def __post_init__(self) -> None:
        for name in ("a_up", "a_right", "bob_budget_1", "bob_budget_2"):
            if getattr(self, name) < 0:
                raise RuleViolation(f"{name} must be non-negative")
        for name in ("r", "p", "f"):
            if getattr(self, name) < 1:
                raise RuleViolation(f"{name} must be positive")
        if self.variant is Variant.DIAGONAL and self.f < 2:
            raise RuleViolation("the DIAGONAL variant needs step length f >= 2")
        mode = self.declaration_mode
        if mode is not None and (mode.width < 1 or mode.height < 1):
            raise RuleViolation("FunctionGraph dimensions must be positive")

    @property
    def bob_kinds(self) -> tuple[ShiftKind, ShiftKind]:
        """(budget-1 kind, budget-2 kind) for this variant."""
        if self.variant is Variant.UP_RIGHT:
            return (ShiftKind.UP, ShiftKind.RIGHT)
        return (ShiftKind.DIAGONAL, ShiftKind.RIGHT)

    @property
    def total_shift_budget(self) -> int:
        return self.a_up + self.a_right + self.bob_budget_1 + self.bob_budget_2


@dataclass(frozen=True)
class PassAction:
    pass


@dataclass(frozen=True)
class ShiftAction:
    kind: ShiftKind


@dataclass(frozen=True)
class DeclareAction:
    cells: frozenset[Cell]
    shift: ShiftKind | None = None


@dataclass(frozen=True)
class BatchAction:
    kinds: tuple[ShiftKind, ...]


AliceAction = PassAction | ShiftAction | DeclareAction
BobAction = PassAction | BatchAction


@dataclass(frozen=True)
class DeclGameState:
    """Full observable state between turns.  Plain value; never mutated."""

    token: Cell
    red: frozenset[Cell]
    a_up_used: int
    a_right_used: int
    bob_used_1: int
    bob_used_2: int
    declarations_used: int
    quiet_rounds: int          # consecutive completed all-pass rounds
    round_quiet: bool          # no shift/declaration so far in the open round
    alice_closed: bool
    to_move: Player
    finished: bool

    def counters(self) -> dict[str, int]:
        return {
            "a_up_used": self.a_up_used,
            "a_right_used": self.a_right_used,
            "bob_used_1": self.bob_used_1,
            "bob_used_2": self.bob_used_2,
            "declarations_used": self.declarations_used,
            "red_size": len(self.red),
        }


class AliceStrategy(Protocol):
    def act(self, state: DeclGameState) -> AliceAction: ...


class BobStrategy(Protocol):
    def act(self, state: DeclGameState) -> BobAction: ...


def new_game(config: DeclGameConfig) -> DeclGameState:
    """Fresh game: token at the origin, empty red set, all counters zero."""
    return DeclGameState(
        token=ORIGIN,
        red=frozenset(),
        a_up_used=0,
        a_right_used=0,
        bob_used_1=0,
        bob_used_2=0,
        declarations_used=0,
        quiet_rounds=0,
        round_quiet=True,
        alice_closed=False,
        to_move=Player.ALICE,
        finished=False,
    )


def _check_declaration(config: DeclGameConfig, state: DeclGameState,
                       cells: frozenset[Cell]) -> None:
    if state.alice_closed:
        raise RuleViolation("declarations are closed (Alice passed)")
    if state.declarations_used >= config.p:
        raise RuleViolation(f"declaration budget exhausted (p={config.p})")
    if len(cells) > config.r:
        raise RuleViolation(f"declaration of {len(cells)} cells exceeds r={config.r}")
    for cell in cells:
        validate_cell(cell)
    mode = config.declaration_mode
    if mode is not None:
        columns = [c[0] for c in cells]
        if len(set(columns)) != len(columns):
            raise RuleViolation("function-graph declaration has two cells in one column")
        for x, y in cells:
            if x >= mode.width or y >= mode.height:
                raise RuleViolation(f"cell ({x},{y}) outside the {mode.width}x{mode.height} graph window")


def _alice_shift(config: DeclGameConfig, state: DeclGameState, kind: ShiftKind) -> DeclGameState:
    if kind is ShiftKind.UP:
        if state.a_up_used >= config.a_up:
            raise RuleViolation(f"Alice's up budget exhausted (a_up={config.a_up})")
        return replace(state, token=shifted(state.token, kind), a_up_used=state.a_up_used + 1)
    if kind is ShiftKind.RIGHT:
        if state.a_right_used >= config.a_right:
            raise RuleViolation(f"Alice's right budget exhausted (a_right={config.a_right})")
        return replace(state, token=shifted(state.token, kind), a_right_used=state.a_right_used + 1)
    raise RuleViolation(f"Alice may not shift {kind.value}")


def _bob_shift(config: DeclGameConfig, state: DeclGameState, kind: ShiftKind) -> DeclGameState:
    kind1, kind2 = config.bob_kinds
    if kind is kind1:
        if state.bob_used_1 >= config.bob_budget_1:
            raise RuleViolation(f"Bob's {kind.value} budget exhausted ({config.bob_budget_1})")
        return replace(state, token=shifted(state.token, kind), bob_used_1=state.bob_used_1 + 1)
    if kind is kind2:
        if state.bob_used_2 >= config.bob_budget_2:
            raise RuleViolation(f"Bob's {kind.value} budget exhausted ({config.bob_budget_2})")
        return replace(state, token=shifted(state.token, kind), bob_used_2=state.bob_used_2 + 1)
    raise RuleViolation(f"Bob may not shift {kind.value} in the {config.variant.value} variant")


def apply(config: DeclGameConfig, state: DeclGameState, player: Player,
          action: AliceAction | BobAction) -> DeclGameState:
    """Apply one turn.  Raises RuleViolation on any illegal action."""
    if state.finished:
        raise RuleViolation("game is finished")
    if player is not state.to_move:
        raise RuleViolation(f"it is {state.to_move.value}'s turn")

    quiet = state.round_quiet
    if player is Player.ALICE:
        if isinstance(action, PassAction):
            state = replace(state, alice_closed=True)
        elif isinstance(action, ShiftAction):
            state = _alice_shift(config, state, action.kind)
            quiet = False
        elif isinstance(action, DeclareAction):
            _check_declaration(config, state, action.cells)
            state = replace(state, red=state.red | action.cells,
                            declarations_used=state.declarations_used + 1)
            if action.shift is not None:
                state = _alice_shift(config, state, action.shift)
            quiet = False
        else:
            raise RuleViolation(f"not an Alice action: {action!r}")
        return replace(state, to_move=Player.BOB, round_quiet=quiet)

    # Bob's turn closes the round.
    if isinstance(action, PassAction):
        pass
    elif isinstance(action, BatchAction):
        if not action.kinds:
            raise RuleViolation("empty batch; pass instead")
        for kind in action.kinds:
            state = _bob_shift(config, state, kind)
        quiet = False
    else:
        raise RuleViolation(f"not a Bob action: {action!r}")

    quiet_rounds = state.quiet_rounds + 1 if quiet else 0
    finished = quiet_rounds >= 2 and (
        state.declarations_used >= config.p or state.alice_closed)
    return replace(state, to_move=Player.ALICE, round_quiet=True,
                   quiet_rounds=min(quiet_rounds, 2), finished=finished)


def winner(state: DeclGameState) -> Player:
    """Alice iff the resting cell is red.  Only valid on finished games."""
    if not state.finished:
        raise RuleViolation("game is not finished")
    return Player.ALICE if state.token in state.red else Player.BOB


def default_round_cap(config: DeclGameConfig) -> int:
    return 2 * (config.total_shift_budget + config.p) + 8


def config_summary(config: DeclGameConfig) -> dict:
    mode = config.declaration_mode
    return {
        "variant": config.variant.value,
        "a_up": config.a_up,
        "a_right": config.a_right,
        "bob_budget_1": config.bob_budget_1,
        "bob_budget_2": config.bob_budget_2,
        "r": config.r,
        "p": config.p,
        "f": config.f,
        "declaration_mode": None if mode is None else [mode.width, mode.height],
    }


def play(config: DeclGameConfig, alice: AliceStrategy, bob: BobStrategy,
         round_cap: int | None = None) -> Transcript:
    """Run one play to quiescence (or the round cap); never raises on bad
    strategy output — an illegal action forfeits for its author."""
    minimum = config.total_shift_budget + config.p + 2
    if round_cap is None:
        round_cap = default_round_cap(config)
    if round_cap < minimum:
        raise ValueError(f"round_cap {round_cap} below the quiescence guarantee {minimum}")

    state = new_game(config)
    transcript = Transcript("decl", config_summary(config))
    for round_index in range(round_cap):
        for strategy, who in ((alice, Player.ALICE), (bob, Player.BOB)):
            action = strategy.act(state)
            try:
                state = apply(config, state, who, action)
            except RuleViolation:
                transcript.add(round_index, who, action, state.token, state.counters())
                transcript.finish(who.other(), f"forfeit:{who.value}")
                return transcript
            transcript.add(round_index, who, action, state.token, state.counters())
            if state.finished:
                transcript.finish(winner(state), "quiescence")
                return transcript
    state = replace(state, finished=True)
    transcript.finish(winner(state), "round_cap")
    return transcript


def replay(config: DeclGameConfig, transcript: Transcript) -> DeclGameState:
    """Re-apply a transcript's actions, checking every recorded snapshot."""
    state = new_game(config)
    for ev in transcript.events:
        if transcript.outcome and transcript.outcome.reason == f"forfeit:{ev.player.value}" \
                and ev is transcript.events[-1]:
            break  # the forfeiting action was never applied
        state = apply(config, state, ev.player, ev.action)
        if state.token != ev.token or state.counters() != ev.counters:
            raise ValueError(f"replay diverged at round {ev.round_index}")
    return state
