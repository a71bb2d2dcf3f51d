"""Constructive strategies for the (r, a, b) fixed-red game.

Every strategy guards its parameter domain (PreconditionError otherwise) and
is verified against exhaustive opposition in the test suite:

* ``BobAlwaysUp``      — b >= r: shift up from every red cell.
* ``AliceDiagonal``    — a > b > ... : red diagonal prefix, return the token.
* ``AliceBasisTriangle`` — a = 0, r >= (b+1)(b+2)/2: redden the whole
  triangle T_b up front.
* ``AliceKite``        — Alice-winning parameters with b >= a: a diagonal
  tail of length a plus the largest full triangle at (a, a).
* ``BobRecursive``     — any Bob-winning parameters: play a mental
  (r-1, a-1, b-1) game on a reduced red set and relay moves, peeling one
  level per budget unit down to the a = 0 base case.
"""

from __future__ import annotations

from .analysis import rab_winner, reduce_red_set
from .cells import Cell, Player, PreconditionError, ShiftKind, cell_sum, triangle_cells, triangle_size
from .rab import RabGameConfig, RabGameState


class BobAlwaysUp:
    """Shift up on every Bob turn.  Winning whenever b >= r: each red cell
    in a fixed column row is visited at most once."""

    def __init__(self, config: RabGameConfig, strict: bool = True):
        if strict and config.b < config.r:
            raise PreconditionError(f"always-up needs b >= r, got b={config.b} < r={config.r}")
        self.config = config

    def move(self, state: RabGameState) -> ShiftKind:
        return ShiftKind.UP


class _DiagonalReturner:
    """Shared Alice move rule: push the token back onto the main diagonal."""

    red: frozenset[Cell]

    def move(self, state: RabGameState) -> ShiftKind:
        x, y = state.token
        if x == y + 1 and (x, x) in state.red:
            return ShiftKind.UP
        if y == x + 1 and (y, y) in state.red:
            return ShiftKind.RIGHT
        return ShiftKind.UP  # no red target reachable; play out the line


class AliceDiagonal(_DiagonalReturner):
    """Declare the diagonal prefix {(i, i) : i < r} and return every push.

    Needs a > b and r > b: Bob's b pushes each cost Alice one return and
    strand him on a red diagonal cell with nothing left.
    """

    def __init__(self, config: RabGameConfig):
        if not (config.a > config.b and config.r > config.b):
            raise PreconditionError(
                f"diagonal strategy needs a > b and r > b, got {config}")
        self.config = config

    def initial_red(self, config: RabGameConfig) -> frozenset[Cell]:
        return frozenset((i, i) for i in range(config.r))


class AliceBasisTriangle:
    """Declare all of T_b on the first move; never shift.

    Needs a = 0 and r >= (b+1)(b+2)/2: Bob exhausts b inside the red
    triangle.
    """

    def __init__(self, config: RabGameConfig):
        need = triangle_size(config.b)
        if config.a != 0 or config.r < need:
            raise PreconditionError(
                f"basis triangle needs a=0 and r >= {need}, got {config}")
        self.config = config

    def initial_red(self, config: RabGameConfig) -> frozenset[Cell]:
        return frozenset(triangle_cells(config.b))

    def move(self, state: RabGameState) -> ShiftKind:
        return ShiftKind.UP  # unreachable when the precondition holds


def kite_cells(r: int, a: int, b: int) -> frozenset[Cell]:
    """Tail {(i, i) : i < a} plus the largest full triangle at (a, a) whose
    s(s+1)/2 cells fit in r - a."""
    tail = {(i, i) for i in range(a)}
    s = 0
    while (s + 1) * (s + 2) // 2 <= r - a:
        s += 1
    if s == 0:
        return frozenset(tail)
    triangle = set(triangle_cells(2 * a + s - 1, (a, a)))
    return frozenset(tail | triangle)


class AliceKite(_DiagonalReturner):
    """Build a kite (diagonal tail plus a triangle at its top) and spend all
    shifts returning the token to the tail.

    Covers every Alice-winning parameter point with b >= a: escaping the
    kite costs Bob a + s moves, and Alice-winning parameters force
    s >= b - a + 1.  With a = 0 this degenerates to the basis triangle.
    """

    def __init__(self, config: RabGameConfig):
        if rab_winner(config.r, config.a, config.b) is not Player.ALICE:
            raise PreconditionError(f"{config} is not Alice-winning")
        if config.b < config.a:
            raise PreconditionError("the kite strategy needs b >= a")
        self.config = config

    def initial_red(self, config: RabGameConfig) -> frozenset[Cell]:
        return kite_cells(config.r, config.a, config.b)


class StrategyInvariantError(AssertionError):
    """The recursive strategy observed a position its analysis rules out."""


class _Level:
    """One level of the mental-game tower: the (a, b) game on ``red``.

    ``move`` is consulted only when the token sits on this level's red set.
    While the level's mental game below is live, moves relay to it; the
    stopping events (token on a removed cell, or this level's Alice out of
    moves) switch the level to a one-shot escape or an endgame walk to the
    nearest white cell of the triangle over the token.
    """

    def __init__(self, red: frozenset[Cell], a: int, b: int):
        self.n = a + b
        self.red = frozenset(c for c in red if cell_sum(c) <= self.n)
        self.a = a
        self.b = b
        self.endgame_target: Cell | None = None
        self.escape_done = False
        self.child: _Level | None = None
        self.removed: frozenset[Cell] = frozenset()
        if a > 0 and self.red:
            result = reduce_red_set(self.red, self.n)
            self.case = result.case
            self.removed = result.removed
            self.child = _Level(result.r_prime, a - 1, b - 1)
        else:
            self.case = "base"

    def clone(self) -> "_Level":
        copy = object.__new__(_Level)
        copy.n, copy.red, copy.a, copy.b = self.n, self.red, self.a, self.b
        copy.endgame_target = self.endgame_target
        copy.escape_done = self.escape_done
        copy.case, copy.removed = self.case, self.removed
        copy.child = self.child.clone() if self.child is not None else None
        return copy

    def _step_toward(self, token: Cell, target: Cell) -> ShiftKind:
        if token[0] < target[0]:
            return ShiftKind.RIGHT
        if token[1] < target[1]:
            return ShiftKind.UP
        raise StrategyInvariantError(f"walk target {target} behind token {token}")

    def move(self, token: Cell, alice_moves: int) -> ShiftKind:
        if token not in self.red:
            raise StrategyInvariantError(f"consulted off red set at {token}")
        if self.endgame_target is not None:
            return self._step_toward(token, self.endgame_target)
        if self.case == "no_triangle" and token in self.removed:
            # One shift off the farthest rank of red cells; the token's
            # coordinate sum passes the whole set and never returns.
            if self.escape_done:
                raise StrategyInvariantError("token returned beyond the farthest rank")
            self.escape_done = True
            return ShiftKind.UP
        if alice_moves >= self.a:
            # This level's Alice is out of moves: walk to the nearest white
            # cell of the triangle over the token (one exists: the red set
            # contains no full triangle covering it).
            candidates = [c for c in triangle_cells(self.n, token) if c not in self.red]
            if not candidates:
                raise StrategyInvariantError(f"no white cell over {token} in T_{self.n}")
            self.endgame_target = min(candidates, key=lambda c: (cell_sum(c), c))
            return self._step_toward(token, self.endgame_target)
        if self.child is not None and token in self.child.red:
            return self.child.move(token, alice_moves)
        raise StrategyInvariantError(
            f"relay impossible at {token}: not in the mental red set")


class BobRecursive:
    """Bob's constructive strategy for every Bob-winning parameter point.

    Builds the mental-game tower lazily from Alice's observed first move.
    With strict=False the guard is skipped and the strategy plays a legal
    best-effort descent even on Alice-winning parameters.
    """

    def __init__(self, config: RabGameConfig, strict: bool = True):
        if strict and rab_winner(config.r, config.a, config.b) is not Player.BOB:
            raise PreconditionError(f"{config} is not Bob-winning")
        self.config = config
        self.strict = strict
        self._tower: _Level | None = None

    def clone(self) -> "BobRecursive":
        copy = object.__new__(BobRecursive)
        copy.config = self.config
        copy.strict = self.strict
        copy._tower = self._tower.clone() if self._tower is not None else None
        return copy

    def move(self, state: RabGameState) -> ShiftKind:
        if self._tower is None:
            self._tower = _Level(state.red, self.config.a, self.config.b)
        alice_moves = self.config.a - state.a_left
        try:
            return self._tower.move(state.token, alice_moves)
        except StrategyInvariantError:
            if self.strict:
                raise
            return ShiftKind.UP
