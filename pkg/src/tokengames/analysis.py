"""Closed-form winner formula and red-set reductions for the (r, a, b) game.

The winner formula is exact integer arithmetic.  The reductions shrink a red
set R for the (a, b) game into a first move R' for the mental (a-1, b-1)
game, preserving the winner; they are the machinery behind the recursive Bob
strategy and are verified exhaustively against the brute-force solver.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cells import Cell, Player, cell_sum, triangle_cells


def rab_winner(r: int, a: int, b: int) -> Player:
    """Perfect-play winner of the (r, a, b) game, in closed form.

    Bob wins iff b >= r, or b >= a and (b-a+1)(b-a+2)/2 > r-a; Alice wins
    otherwise.
    """
    if r < 0 or a < 0 or b < 0:
        raise ValueError("r, a, b must be non-negative")
    if b >= r:
        return Player.BOB
    if b >= a and (b - a + 1) * (b - a + 2) // 2 > r - a:
        return Player.BOB
    return Player.ALICE


def contains_triangle(red: frozenset[Cell] | set[Cell], n: int) -> Cell | None:
    """Smallest (lexicographic) vertex v with a non-empty triangle
    T_n(v) wholly inside ``red``, or None.

    A triangle's vertex lies inside it, so only cells of ``red`` with
    coordinate sum <= n are candidate vertices.
    """
    for vertex in sorted(red):
        if cell_sum(vertex) > n:
            continue
        if all(cell in red for cell in triangle_cells(n, vertex)):
            return vertex
    return None


@dataclass(frozen=True)
class ReductionResult:
    case: str                  # "no_triangle" | "triangle"
    r_prime: frozenset[Cell]
    removed: frozenset[Cell]   # no_triangle case only
    pink: frozenset[Cell]      # triangle case only


def reduce_no_triangle(red: frozenset[Cell] | set[Cell], n: int) -> ReductionResult:
    """Drop every cell of ``red`` at the maximal coordinate sum.

    Only valid when ``red`` contains no triangle T_n(v); shrinks any
    non-empty set by at least one cell.
    """
    if contains_triangle(red, n) is not None:
        raise ValueError("red set contains a triangle; use reduce_triangle")
    if not red:
        return ReductionResult("no_triangle", frozenset(), frozenset(), frozenset())
    far = max(cell_sum(c) for c in red)
    removed = frozenset(c for c in red if cell_sum(c) == far)
    return ReductionResult("no_triangle", frozenset(red) - removed, removed, frozenset())


def contained_triangle_union(red: frozenset[Cell] | set[Cell], n: int) -> frozenset[Cell]:
    """Union of all triangles T_n(v) wholly inside ``red``."""
    union: set[Cell] = set()
    for vertex in sorted(red):
        if cell_sum(vertex) > n or vertex in union:
            continue
        cells = list(triangle_cells(n, vertex))
        if all(cell in red for cell in cells):
            union.update(cells)
    return frozenset(union)


def reduce_triangle(red: frozenset[Cell] | set[Cell], n: int,
                    reachable_bound: int | None = None) -> ReductionResult:
    """Keep the reachable part of ``red`` and add the pink ring.

    ``reachable_bound`` is the board bound a+b of the smaller game (n-2 by
    default).  A cell outside ``red`` with coordinate sum <= reachable_bound
    is pink iff one step up or right lands inside some triangle T_n(v)
    contained in ``red``.  The result is strictly smaller than ``red``: each
    pink cell's diagonal meets a distinct unreachable red cell.
    """
    if reachable_bound is None:
        reachable_bound = n - 2
    if contains_triangle(red, n) is None:
        raise ValueError("red set contains no triangle; use reduce_no_triangle")
    union = contained_triangle_union(red, n)
    pink: set[Cell] = set()
    for cell in triangle_cells(reachable_bound):
        if cell in red:
            continue
        x, y = cell
        if (x + 1, y) in union or (x, y + 1) in union:
            pink.add(cell)
    reachable = frozenset(c for c in red if cell_sum(c) <= reachable_bound)
    return ReductionResult("triangle", reachable | frozenset(pink), frozenset(), frozenset(pink))


def reduce_red_set(red: frozenset[Cell] | set[Cell], n: int) -> ReductionResult:
    """Apply whichever reduction matches ``red``."""
    if contains_triangle(red, n) is None:
        return reduce_no_triangle(red, n)
    return reduce_triangle(red, n)


def pink_diagonal_witness(pink_cell: Cell, red: frozenset[Cell] | set[Cell],
                          n: int, reachable_bound: int | None = None) -> Cell | None:
    """First cell on {(i+t, j+t) | t >= 1} that is red and unreachable."""
    if reachable_bound is None:
        reachable_bound = n - 2
    x, y = pink_cell
    t = 1
    while x + y + 2 * t <= n:
        cell = (x + t, y + t)
        if cell in red and cell_sum(cell) > reachable_bound:
            return cell
        t += 1
    return None


def alice_lift(red: frozenset[Cell] | set[Cell]) -> frozenset[Cell]:
    """Lift an Alice first move of the (r, a, b) game into the
    (r+1, a+1, b+1) game: shift by (1, 1) and add the origin."""
    return frozenset((x + 1, y + 1) for x, y in red) | {(0, 0)}
