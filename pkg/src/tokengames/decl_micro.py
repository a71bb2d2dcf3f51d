"""Exhaustive micro-scale solver for the declaration games.

Solves the finitized declaration game perfectly inside a window that
contains every cell the token can reach, so a strategy certified here is
certified against *all* opponent behaviors at this scale.  Alice's
declaration branching is pruned to cells still reachable under the
remaining shift budgets (declaring anywhere else cannot change the limit
cell) and to the window; Bob's turn batches are canonicalized to per-kind
shift counts, which determine the resulting state exactly.

The solver drives the engine's own ``apply`` so there is a single rules
implementation.
"""

from __future__ import annotations

from itertools import combinations

from . import decl
from .cells import Cell, Player, RuleViolation, ShiftKind
from .decl import (
    BatchAction,
    DeclareAction,
    DeclGameConfig,
    DeclGameState,
    PassAction,
    ShiftAction,
    Variant,
)


class CapExceeded(RuntimeError):
    """The solve visited more states than the configured cap."""


class WindowTooSmall(ValueError):
    """The window cannot contain every reachable cell."""


def reachable_box(config: DeclGameConfig) -> tuple[int, int]:
    """Width and height of the cell box reachable from the origin."""
    diag = config.bob_budget_1 if config.variant is Variant.DIAGONAL else 0
    up = config.bob_budget_1 if config.variant is Variant.UP_RIGHT else 0
    width = 1 + config.a_right + config.bob_budget_2 + diag
    height = 1 + config.a_up + up + diag
    return width, height


class MicroSolver:
    """Memoized perfect-play solver for one declaration-game config."""

    def __init__(self, config: DeclGameConfig, window: tuple[int, int] = (6, 6),
                 cap: int = 5_000_000):
        need_w, need_h = reachable_box(config)
        if window[0] < need_w or window[1] < need_h:
            raise WindowTooSmall(
                f"window {window} cannot hold the reachable {need_w}x{need_h} box")
        self.config = config
        self.window = window
        self.cap = cap
        self._memo: dict[DeclGameState, Player] = {}
        self._graph_mode = config.declaration_mode is not None

    # -- action enumeration ------------------------------------------------

    def _alice_shift_kinds(self, state: DeclGameState) -> list[ShiftKind]:
        kinds = []
        if state.a_up_used < self.config.a_up:
            kinds.append(ShiftKind.UP)
        if state.a_right_used < self.config.a_right:
            kinds.append(ShiftKind.RIGHT)
        return kinds

    def _declarable(self, state: DeclGameState) -> list[Cell]:
        config = self.config
        tx, ty = state.token
        dx = (config.a_right - state.a_right_used) \
            + (config.bob_budget_2 - state.bob_used_2)
        dy = config.a_up - state.a_up_used
        spare_1 = config.bob_budget_1 - state.bob_used_1
        if config.variant is Variant.DIAGONAL:
            dx += spare_1
            dy += spare_1
        else:
            dy += spare_1
        cells = []
        for x in range(tx, min(tx + dx, self.window[0] - 1) + 1):
            for y in range(ty, min(ty + dy, self.window[1] - 1) + 1):
                if (x, y) not in state.red:
                    cells.append((x, y))
        cells.sort(key=lambda c: (c[0] + c[1], c))
        return cells

    def _declarations(self, state: DeclGameState) -> list[frozenset[Cell]]:
        pool = self._declarable(state)
        batches: list[frozenset[Cell]] = [frozenset()]
        for size in range(1, min(self.config.r, len(pool)) + 1):
            for combo in combinations(pool, size):
                if self._graph_mode and len({c[0] for c in combo}) != size:
                    continue
                batches.append(frozenset(combo))
        return batches

    def alice_actions(self, state: DeclGameState) -> list:
        actions: list = []
        shift_kinds = self._alice_shift_kinds(state)
        if state.declarations_used < self.config.p and not state.alice_closed:
            for cells in self._declarations(state):
                actions.append(DeclareAction(cells))
                for kind in shift_kinds:
                    actions.append(DeclareAction(cells, kind))
        for kind in shift_kinds:
            actions.append(ShiftAction(kind))
        actions.append(PassAction())
        return actions

    def bob_actions(self, state: DeclGameState) -> list:
        config = self.config
        kind1, kind2 = config.bob_kinds
        left1 = config.bob_budget_1 - state.bob_used_1
        left2 = config.bob_budget_2 - state.bob_used_2
        actions: list = [PassAction()]
        for k1 in range(left1 + 1):
            for k2 in range(left2 + 1):
                if k1 + k2 == 0:
                    continue
                actions.append(BatchAction((kind1,) * k1 + (kind2,) * k2))
        return actions

    # -- solving -----------------------------------------------------------

    def value(self, state: DeclGameState) -> Player:
        if state.finished:
            return decl.winner(state)
        cached = self._memo.get(state)
        if cached is not None:
            return cached
        if len(self._memo) >= self.cap:
            raise CapExceeded(f"more than {self.cap} states")
        player = state.to_move
        actions = self.alice_actions(state) if player is Player.ALICE \
            else self.bob_actions(state)
        result = player.other()
        for action in actions:
            child = decl.apply(self.config, state, player, action)
            if self.value(child) is player:
                result = player
                break
        self._memo[state] = result
        return result

    def winner(self) -> Player:
        return self.value(decl.new_game(self.config))


def solve_decl_micro(config: DeclGameConfig, window: tuple[int, int] = (6, 6),
                     cap: int = 5_000_000) -> Player:
    """Perfect-play winner of the finitized declaration game."""
    return MicroSolver(config, window, cap).winner()


class MicroMinimaxAlice:
    """Perfect-play Alice backed by a MicroSolver (shared or private)."""

    def __init__(self, config: DeclGameConfig, window: tuple[int, int] = (6, 6),
                 solver: MicroSolver | None = None):
        self.solver = solver if solver is not None else MicroSolver(config, window)
        self.config = config

    def act(self, state: DeclGameState):
        for action in self.solver.alice_actions(state):
            child = decl.apply(self.config, state, Player.ALICE, action)
            if self.solver.value(child) is Player.ALICE:
                return action
        return PassAction()


def certify_bob_decl(config: DeclGameConfig, bob, window: tuple[int, int] = (6, 6),
                     cap: int = 5_000_000) -> bool:
    """True iff ``bob`` wins against every window-restricted Alice behavior.

    ``bob`` must expose the pure planner ``plan_turn(state, memory)`` and
    ``memory()`` (see StaircaseBob), so lines can branch without cloning.
    """
    solver = MicroSolver(config, window, cap)  # reused for Alice's action menu
    memo: dict[tuple, bool] = {}

    def bob_wins_all(state: DeclGameState, memory: tuple) -> bool:
        if state.finished:
            return decl.winner(state) is Player.BOB
        key = (state, memory)
        cached = memo.get(key)
        if cached is not None:
            return cached
        if len(memo) >= cap:
            raise CapExceeded(f"more than {cap} certification states")
        if state.to_move is Player.ALICE:
            result = all(
                bob_wins_all(decl.apply(config, state, Player.ALICE, action), memory)
                for action in solver.alice_actions(state))
        else:
            plan = bob.plan_turn(state, memory)
            try:
                child = decl.apply(config, state, Player.BOB, plan.action)
            except RuleViolation:
                result = False
            else:
                result = bob_wins_all(child, plan.memory)
        memo[key] = result
        return result

    return bob_wins_all(decl.new_game(config), bob.memory())
