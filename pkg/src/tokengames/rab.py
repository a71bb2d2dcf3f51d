"""The (r, a, b) fixed-red token game.

Alice's first move fixes a red set of at most r cells.  Afterwards the token
color decides who moves: Bob shifts from red cells, Alice from white ones,
always up or right.  Alice may move at most a times and Bob at most b times;
the first player required to move with an empty budget loses.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Protocol

from .cells import Cell, ORIGIN, Player, RuleViolation, ShiftKind, shifted, validate_cell
from .transcript import Transcript


@dataclass(frozen=True)
class RabGameConfig:
    r: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.r < 0 or self.a < 0 or self.b < 0:
            raise RuleViolation("r, a, b must be non-negative")


@dataclass(frozen=True)
class RabGameState:
    red: frozenset[Cell]
    token: Cell
    a_left: int
    b_left: int
    finished: bool
    loser: Player | None

    def counters(self) -> dict[str, int]:
        return {"a_left": self.a_left, "b_left": self.b_left}


def mover(state: RabGameState) -> Player:
    """Bob moves from red cells, Alice from white ones."""
    return Player.BOB if state.token in state.red else Player.ALICE


def _settle(state: RabGameState) -> RabGameState:
    """Mark the game finished when the player to move has no budget."""
    who = mover(state)
    budget = state.b_left if who is Player.BOB else state.a_left
    if budget == 0:
        return replace(state, finished=True, loser=who)
    return state


def new_game(config: RabGameConfig, red: Iterable[Cell]) -> RabGameState:
    """Start a play after Alice's declaration.  Cells outside the reachable
    triangle are accepted; the token can never visit them."""
    red_set = frozenset(validate_cell(c) for c in red)
    if len(red_set) > config.r:
        raise RuleViolation(f"{len(red_set)} red cells exceed r={config.r}")
    state = RabGameState(red=red_set, token=ORIGIN, a_left=config.a,
                         b_left=config.b, finished=False, loser=None)
    return _settle(state)


def step(state: RabGameState, kind: ShiftKind) -> RabGameState:
    """Shift the token up or right, charging whichever player must move."""
    if state.finished:
        raise RuleViolation("game is finished")
    if kind not in (ShiftKind.UP, ShiftKind.RIGHT):
        raise RuleViolation(f"only up/right shifts are legal, not {kind.value}")
    who = mover(state)
    if who is Player.BOB:
        if state.b_left == 0:
            raise RuleViolation("Bob has no moves left")
        state = replace(state, token=shifted(state.token, kind), b_left=state.b_left - 1)
    else:
        if state.a_left == 0:
            raise RuleViolation("Alice has no moves left")
        state = replace(state, token=shifted(state.token, kind), a_left=state.a_left - 1)
    return _settle(state)


class RabAliceStrategy(Protocol):
    def initial_red(self, config: RabGameConfig) -> Iterable[Cell]: ...
    def move(self, state: RabGameState) -> ShiftKind: ...


class RabBobStrategy(Protocol):
    def move(self, state: RabGameState) -> ShiftKind: ...


def config_summary(config: RabGameConfig) -> dict:
    return {"r": config.r, "a": config.a, "b": config.b}


def play(config: RabGameConfig, alice: RabAliceStrategy, bob: RabBobStrategy) -> Transcript:
    """Run one play.  Illegal strategy output forfeits for its author."""
    transcript = Transcript("rab", config_summary(config))
    try:
        red = frozenset(alice.initial_red(config))
        state = new_game(config, red)
    except RuleViolation:
        transcript.finish(Player.BOB, "forfeit:alice")
        return transcript
    transcript.add(0, Player.ALICE, red, state.token, state.counters())

    round_index = 1
    while not state.finished:
        who = mover(state)
        strategy = bob if who is Player.BOB else alice
        kind = strategy.move(state)
        try:
            state = step(state, kind)
        except RuleViolation:
            transcript.add(round_index, who, kind, state.token, state.counters())
            transcript.finish(who.other(), f"forfeit:{who.value}")
            return transcript
        transcript.add(round_index, who, kind, state.token, state.counters())
        round_index += 1

    assert state.loser is not None
    transcript.finish(state.loser.other(), "budget_exhausted")
    return transcript


def replay(config: RabGameConfig, transcript: Transcript) -> RabGameState:
    """Re-apply a transcript, checking every recorded snapshot."""
    events = transcript.events
    if not events:
        raise ValueError("empty rab transcript")
    state = new_game(config, events[0].action)
    if state.counters() != events[0].counters:
        raise ValueError("replay diverged at the declaration")
    for ev in events[1:]:
        state = step(state, ev.action)
        if state.token != ev.token or state.counters() != ev.counters:
            raise ValueError(f"replay diverged at round {ev.round_index}")
    return state
