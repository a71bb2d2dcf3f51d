"""Pure-Python fallback for the hot verification kernels.

Same API as the compiled ``tokengames._kernels`` extension; selected at
import time by :mod:`tokengames.oracle` when the extension is unavailable.

Boards are triangles T_n = {(x, y) : x, y >= 0, x + y <= n} with the
canonical cell index ``(x+y)(x+y+1)/2 + x`` (by coordinate sum, then x), so
red sets are integer bitmasks and subset enumeration is Gosper's hack
(ascending mask value = colexicographic order per size).
"""

from __future__ import annotations

BACKEND = "pure"


def cell_index(x: int, y: int) -> int:
    s = x + y
    return s * (s + 1) // 2 + x


def board_size(n: int) -> int:
    return (n + 1) * (n + 2) // 2


def board_cells(n: int) -> list[tuple[int, int]]:
    return [(x, s - x) for s in range(n + 1) for x in range(s + 1)]


def _gosper_next(mask: int) -> int:
    u = mask & -mask
    v = mask + u
    return v | (((mask ^ v) // u) >> 2)


def iter_masks(ncells: int, k: int):
    """All ncells-bit masks of popcount k, ascending (colex on index sets)."""
    if k == 0:
        yield 0
        return
    if k > ncells:
        return
    mask = (1 << k) - 1
    limit = 1 << ncells
    while mask < limit:
        yield mask
        mask = _gosper_next(mask)


def solve_fixed(n: int, red_mask: int, a: int, b: int) -> bool:
    """Perfect-play winner of the fixed-red game on T_n: True iff Alice wins.

    The mover at a red cell is Bob, at a white cell Alice; a mover with an
    exhausted budget loses.  Budgets a, b must satisfy a + b <= n so the
    token stays on the indexed board.
    """
    memo: dict[tuple[int, int, int], bool] = {}

    def alice_wins(x: int, y: int, a_left: int) -> bool:
        s = x + y
        red = s <= n and (red_mask >> cell_index(x, y)) & 1
        key = (x, y, a_left)
        cached = memo.get(key)
        if cached is not None:
            return cached
        b_left = b - (s - (a - a_left))
        if red:
            if b_left == 0:
                result = True
            else:
                result = (alice_wins(x + 1, y, a_left)
                          and alice_wins(x, y + 1, a_left))
        else:
            if a_left == 0:
                result = False
            else:
                result = (alice_wins(x + 1, y, a_left - 1)
                          or alice_wins(x, y + 1, a_left - 1))
        memo[key] = result
        return result

    return alice_wins(0, 0, a)


def min_alice_size(a: int, b: int, max_r: int) -> tuple[int, int]:
    """Smallest red-set size <= max_r that wins for Alice on T_{a+b}.

    Returns (size, witness_mask), or (-1, 0) when every red set of size up
    to max_r loses.  Enumeration is by size ascending, colex within a size,
    so the witness is deterministic and minimal.
    """
    n = a + b
    ncells = board_size(n)
    for k in range(0, min(max_r, ncells) + 1):
        for mask in iter_masks(ncells, k):
            if solve_fixed(n, mask, a, b):
                return k, mask
    return -1, 0


def _triangle_mask(n: int, vertex: tuple[int, int]) -> int:
    k, l = vertex
    mask = 0
    for s in range(k + l, n + 1):
        for x in range(k, s - l + 1):
            mask |= 1 << cell_index(x, s - x)
    return mask


def _sweep_tables(n: int):
    cells = board_cells(n)
    tri_masks = [_triangle_mask(n, v) for v in cells]
    far_mask = 0
    for (x, y) in cells:
        if x + y > n - 2:
            far_mask |= 1 << cell_index(x, y)
    pink_candidates = []  # (bit, adjacency mask, diagonal-far mask, line id)
    for (x, y) in cells:
        if x + y > n - 2:
            continue
        adj = (1 << cell_index(x + 1, y)) | (1 << cell_index(x, y + 1))
        diag_far = 0
        t = 1
        while x + y + 2 * t <= n:
            if x + y + 2 * t > n - 2:
                diag_far |= 1 << cell_index(x + t, y + t)
            t += 1
        pink_candidates.append((1 << cell_index(x, y), adj, diag_far, x - y + n))
    return cells, tri_masks, far_mask, pink_candidates


def reduction_sweep(n: int) -> tuple[int, int, int, int]:
    """Check the triangle-case reduction over every red set R <= T_n.

    For each R containing some triangle T_n(v), verifies that the reduced
    set is strictly smaller (|pink| < |unreachable red|), that each pink
    cell's diagonal {(i+t, j+t) : t >= 1} meets an unreachable red cell, and
    that the pink diagonals are pairwise disjoint.

    Returns (boards_with_triangle, shrink_violations,
    diagonal_witness_violations, diagonal_disjoint_violations).
    """
    cells, tri_masks, far_mask, pink_candidates = _sweep_tables(n)
    ncells = len(cells)
    with_triangle = 0
    bad_shrink = 0
    bad_witness = 0
    bad_disjoint = 0
    for mask in range(1 << ncells):
        if mask & far_mask == 0:
            continue  # a contained triangle always includes base-row cells
        union = 0
        for tm in tri_masks:
            if mask & tm == tm:
                union |= tm
        if union == 0:
            continue
        with_triangle += 1
        pink_count = 0
        lines_seen = 0
        for bit, adj, diag_far, line in pink_candidates:
            if mask & bit:
                continue
            if union & adj:
                pink_count += 1
                if mask & diag_far == 0:
                    bad_witness += 1
                line_bit = 1 << line
                if lines_seen & line_bit:
                    bad_disjoint += 1
                lines_seen |= line_bit
        unreachable = bin(mask & far_mask).count("1")
        if pink_count >= unreachable:
            bad_shrink += 1
    return with_triangle, bad_shrink, bad_witness, bad_disjoint
