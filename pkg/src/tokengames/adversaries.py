"""Adversary suite: scripted Alice opponents for exercising Bob strategies.

These are load generators for audits, not a soundness proof: only
``micro_minimax`` plays perfectly, and only at micro scale.  All adversaries
accept a seed and are deterministic given (config, seed).

* ``chaser`` — leads with one probe shift, then re-declares red cells one
  step ahead of the token along its current staircase while pushing with up
  shifts.  The probe spends an up before any declaration, so its
  post-declaration pushes stay strictly inside the response bounds.
* ``graph_random`` — declares uniformly random function-graph cells
  (one per column); never shifts.
* ``budget_burner`` — spends every shift in a seeded order before its first
  declaration, then declares blocks ahead of the token.
* ``micro_minimax`` — perfect play from the micro solver (micro scale only).
"""

from __future__ import annotations

import random

from .cells import Cell, ShiftKind
from .decl import (
    DeclareAction,
    DeclGameConfig,
    DeclGameState,
    PassAction,
    ShiftAction,
)
from .decl_micro import MicroMinimaxAlice, reachable_box

ADVERSARY_NAMES = ("chaser", "graph_random", "budget_burner", "micro_minimax")


class PassingAlice:
    """Passes every turn (closing declarations immediately)."""

    def act(self, state: DeclGameState):
        return PassAction()


class PassingBob:
    def act(self, state: DeclGameState):
        return PassAction()


class ChaserAlice:
    """Declare just ahead of the token and push it with up shifts."""

    def __init__(self, config: DeclGameConfig, seed: int = 0):
        self.config = config
        self.rng = random.Random(seed)
        self.probed = False

    def _ahead_cells(self, state: DeclGameState) -> frozenset[Cell]:
        tx, ty = state.token
        f = self.config.f
        cells = []
        for t in range(self.config.r):
            cell = (tx + 1 + t, ty + t // f)
            if cell in state.red:
                continue
            mode = self.config.declaration_mode
            if mode is not None and (cell[0] >= mode.width or cell[1] >= mode.height):
                continue
            cells.append(cell)
        return frozenset(cells)

    def act(self, state: DeclGameState):
        config = self.config
        up_left = config.a_up - state.a_up_used
        right_left = config.a_right - state.a_right_used
        if not self.probed:
            self.probed = True
            if state.declarations_used == 0 and up_left > 0:
                return ShiftAction(ShiftKind.UP)
        if state.declarations_used < config.p and not state.alice_closed:
            shift = None
            if up_left > 0:
                shift = ShiftKind.UP
            elif right_left > 0:
                shift = ShiftKind.RIGHT
            return DeclareAction(self._ahead_cells(state), shift)
        kinds = [ShiftKind.UP] * min(up_left, 1) + [ShiftKind.RIGHT] * min(right_left, 1)
        if kinds:
            return ShiftAction(self.rng.choice(kinds))
        return PassAction()


class GraphRandomAlice:
    """Random function-graph declarations, no shifts."""

    def __init__(self, config: DeclGameConfig, seed: int = 0):
        self.config = config
        self.rng = random.Random(seed)
        mode = config.declaration_mode
        if mode is not None:
            self.width, self.height = mode.width, mode.height
        else:
            self.width, self.height = reachable_box(config)

    def act(self, state: DeclGameState):
        config = self.config
        if state.declarations_used >= config.p or state.alice_closed:
            return PassAction()
        k = min(config.r, self.width)
        columns = self.rng.sample(range(self.width), k)
        cells = frozenset((x, self.rng.randrange(self.height)) for x in columns)
        return DeclareAction(cells)


class BudgetBurnerAlice:
    """Exhaust all shifts (seeded order) before declaring anything."""

    def __init__(self, config: DeclGameConfig, seed: int = 0):
        self.config = config
        rng = random.Random(seed)
        plan = [ShiftKind.UP] * config.a_up + [ShiftKind.RIGHT] * config.a_right
        rng.shuffle(plan)
        self.plan = plan
        self.step = 0

    def _block(self, state: DeclGameState) -> frozenset[Cell]:
        tx, ty = state.token
        config = self.config
        mode = config.declaration_mode
        cells: list[Cell] = []
        if mode is not None:
            for t in range(config.r):
                cell = (tx + 1 + t, ty)
                if cell[0] < mode.width and cell[1] < mode.height and cell not in state.red:
                    cells.append(cell)
            return frozenset(cells)
        side = 1
        while side * side < config.r:
            side += 1
        for i in range(side):
            for j in range(side):
                if len(cells) == config.r:
                    break
                cell = (tx + 1 + i, ty + j)
                if cell not in state.red:
                    cells.append(cell)
        return frozenset(cells)

    def act(self, state: DeclGameState):
        if self.step < len(self.plan):
            kind = self.plan[self.step]
            self.step += 1
            return ShiftAction(kind)
        if state.declarations_used < self.config.p and not state.alice_closed:
            return DeclareAction(self._block(state))
        return PassAction()


def adversary_suite(name: str, config: DeclGameConfig, seed: int = 0,
                    window: tuple[int, int] = (6, 6)):
    """Construct a named adversary.  ``micro_minimax`` is only available
    under the micro solver's window and cap preconditions."""
    if name == "chaser":
        return ChaserAlice(config, seed)
    if name == "graph_random":
        return GraphRandomAlice(config, seed)
    if name == "budget_burner":
        return BudgetBurnerAlice(config, seed)
    if name == "micro_minimax":
        return MicroMinimaxAlice(config, window)
    raise ValueError(f"unknown adversary {name!r}; choose from {ADVERSARY_NAMES}")
