"""Shared board primitives: cells, shift kinds, players, and triangles.

The board is the quarter-plane of lattice points with non-negative
coordinates.  Cells are plain ``(x, y)`` tuples so they can live in sets and
bitmask tables without wrapper overhead.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable, Iterator

Cell = tuple[int, int]

ORIGIN: Cell = (0, 0)


class RuleViolation(ValueError):
    """An action that the game rules reject."""


class PreconditionError(ValueError):
    """A strategy or solver was invoked outside its supported parameter domain."""


class Player(Enum):
    ALICE = "alice"
    BOB = "bob"

    def other(self) -> "Player":
        return Player.BOB if self is Player.ALICE else Player.ALICE


class ShiftKind(Enum):
    """Token shifts: up (0,+1), right (+1,0), diagonal (+1,+1)."""

    UP = "up"
    RIGHT = "right"
    DIAGONAL = "diagonal"

    @property
    def delta(self) -> Cell:
        return _DELTAS[self]


_DELTAS = {
    ShiftKind.UP: (0, 1),
    ShiftKind.RIGHT: (1, 0),
    ShiftKind.DIAGONAL: (1, 1),
}


def shifted(cell: Cell, kind: ShiftKind) -> Cell:
    dx, dy = kind.delta
    return (cell[0] + dx, cell[1] + dy)


def cell_sum(cell: Cell) -> int:
    return cell[0] + cell[1]


def validate_cell(cell: Cell) -> Cell:
    """Check that ``cell`` is a pair of non-negative integers."""
    x, y = cell
    if not (isinstance(x, int) and isinstance(y, int)) or x < 0 or y < 0:
        raise RuleViolation(f"not a board cell: {cell!r}")
    return (x, y)


def triangle_cells(n: int, vertex: Cell = ORIGIN) -> Iterator[Cell]:
    """Cells (i, j) with i >= k, j >= l and i + j <= n, for vertex (k, l).

    Empty when k + l > n.  Iteration order: by coordinate sum, then by x.
    """
    k, l = vertex
    for s in range(k + l, n + 1):
        for x in range(k, s - l + 1):
            yield (x, s - x)


def triangle_size(n: int, vertex: Cell = ORIGIN) -> int:
    k, l = vertex
    m = n - k - l
    if m < 0:
        return 0
    return (m + 1) * (m + 2) // 2


def in_triangle(cell: Cell, n: int, vertex: Cell = ORIGIN) -> bool:
    x, y = cell
    return x >= vertex[0] and y >= vertex[1] and x + y <= n


def mirror(cells: Iterable[Cell]) -> frozenset[Cell]:
    """Reflect a cell set across the main diagonal."""
    return frozenset((y, x) for x, y in cells)
