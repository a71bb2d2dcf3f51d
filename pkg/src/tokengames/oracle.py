"""Ground-truth exhaustive solvers for the (r, a, b) game.

The hot kernels (fixed-red minimax, ascending subset enumeration, and the
reduction sweep) live in the compiled ``tokengames._kernels`` extension when
it is importable, with a pure-Python fallback of identical behavior.
``BACKEND`` records which one is active.
"""

from __future__ import annotations

from math import comb
from typing import Iterable

from .cells import Cell, Player
from . import _kernels_py

try:
    from . import _kernels as _impl  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on the build environment
    _impl = _kernels_py

BACKEND: str = _impl.BACKEND

cell_index = _kernels_py.cell_index
board_size = _kernels_py.board_size
board_cells = _kernels_py.board_cells

DEFAULT_ENUMERATION_CAP = 5_000_000


class EnumerationCapExceeded(RuntimeError):
    """The requested subset enumeration is larger than the configured cap."""


def _impl_for(n: int):
    """Compiled kernels fit boards in a 64-bit mask; larger boards fall back
    to the pure twin, whose masks are arbitrary-precision ints."""
    return _impl if board_size(n) <= 63 else _kernels_py


def mask_of(red: Iterable[Cell], n: int) -> int:
    """Bitmask of the cells of ``red`` that lie on the board T_n."""
    mask = 0
    for x, y in red:
        if x + y <= n:
            mask |= 1 << cell_index(x, y)
    return mask


def cells_of(mask: int, n: int) -> frozenset[Cell]:
    return frozenset(c for i, c in enumerate(board_cells(n)) if (mask >> i) & 1)


def solve_fixed_R(red: Iterable[Cell], a: int, b: int) -> Player:
    """Perfect-play winner once Alice's red set is fixed.

    Red cells outside T_{a+b} can never be visited and are ignored.
    """
    n = a + b
    alice = _impl_for(n).solve_fixed(n, mask_of(red, n), a, b)
    return Player.ALICE if alice else Player.BOB


def solve_fixed_R_reference(red: Iterable[Cell], a: int, b: int) -> Player:
    """Set-based reference implementation of :func:`solve_fixed_R`.

    Kept independent of the bitmask kernels; used to cross-check both
    backends in the test suite.
    """
    red_set = frozenset(red)
    memo: dict[tuple[Cell, int, int], Player] = {}

    def winner(token: Cell, a_left: int, b_left: int) -> Player:
        key = (token, a_left, b_left)
        cached = memo.get(key)
        if cached is not None:
            return cached
        x, y = token
        if token in red_set:
            if b_left == 0:
                result = Player.ALICE
            else:
                children = (winner((x + 1, y), a_left, b_left - 1),
                            winner((x, y + 1), a_left, b_left - 1))
                result = Player.BOB if Player.BOB in children else Player.ALICE
        else:
            if a_left == 0:
                result = Player.BOB
            else:
                children = (winner((x + 1, y), a_left - 1, b_left),
                            winner((x, y + 1), a_left - 1, b_left))
                result = Player.ALICE if Player.ALICE in children else Player.BOB
        memo[key] = result
        return result

    return winner((0, 0), a, b)


def enumeration_size(r: int, a: int, b: int) -> int:
    ncells = board_size(a + b)
    return sum(comb(ncells, k) for k in range(min(r, ncells) + 1))


def min_alice_red_size(a: int, b: int, max_r: int | None = None) -> tuple[int, frozenset[Cell]]:
    """Smallest |R| <= max_r winning for Alice, with its colex-first witness.

    Returns (-1, empty set) when no red set of size up to max_r wins.
    """
    n = a + b
    if max_r is None:
        max_r = board_size(n)
    k, mask = _impl_for(n).min_alice_size(a, b, max_r)
    return k, cells_of(mask, n)


def solve_rab(r: int, a: int, b: int, cap: int | None = DEFAULT_ENUMERATION_CAP
              ) -> tuple[Player, frozenset[Cell] | None]:
    """Exhaustive winner of the (r, a, b) game over all red sets.

    Alice wins iff some R <= T_{a+b} with |R| <= r wins the fixed-red game;
    returns the winner and a minimal witness R for Alice (None for Bob).
    Raises EnumerationCapExceeded when the subset count overruns ``cap``.
    """
    total = enumeration_size(r, a, b)
    if cap is not None and total > cap:
        raise EnumerationCapExceeded(
            f"(r={r}, a={a}, b={b}) needs {total} red sets; cap is {cap}")
    k, witness = min_alice_red_size(a, b, max_r=r)
    if k < 0:
        return Player.BOB, None
    return Player.ALICE, witness


def reduction_sweep(n: int) -> tuple[int, int, int, int]:
    """Exhaustive triangle-reduction check over all red sets on T_n.

    See :func:`tokengames._kernels_py.reduction_sweep`.
    """
    return _impl.reduction_sweep(n)


def find_red_monotonicity_counterexample(
        max_sum: int, max_r: int, cap_per_pair: int = 200_000,
) -> tuple[frozenset[Cell], frozenset[Cell], int, int] | None:
    """Search for R <= R' (|R'| <= max_r) where Alice wins with R but loses
    with R'.

    Whether adding red cells can ever hurt Alice is deliberately not asserted
    anywhere; this utility exposes the search.  Returns (R, R', a, b) or
    None.
    """
    for total in range(max_sum + 1):
        for a in range(total + 1):
            b = total - a
            n = a + b
            ncells = board_size(n)
            seen = 0
            winners: dict[int, bool] = {}
            solver = _impl_for(n).solve_fixed
            for k in range(min(max_r, ncells) + 1):
                for mask in _kernels_py.iter_masks(ncells, k):
                    winners[mask] = bool(solver(n, mask, a, b))
                    seen += 1
                    if seen > cap_per_pair:
                        break
                if seen > cap_per_pair:
                    break
            for mask, alice in winners.items():
                if not alice:
                    continue
                for i in range(ncells):
                    sup = mask | (1 << i)
                    if sup != mask and sup in winners and not winners[sup]:
                        return (cells_of(mask, n), cells_of(sup, n), a, b)
    return None
