# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled verification kernels.

Behavior-identical to :mod:`tokengames._kernels_py` (the pure-Python
fallback); see that module for the documented reference semantics.  Boards
are triangles T_n with cell index (x+y)(x+y+1)/2 + x; red sets are 64-bit
masks; per-size subset enumeration is Gosper's hack (colex order).
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil

ctypedef unsigned long long u64

BACKEND = "compiled"


cdef inline int cell_index_c(int x, int y) nogil:
    cdef int s = x + y
    return s * (s + 1) / 2 + x


def cell_index(int x, int y):
    return cell_index_c(x, y)


def board_size(int n):
    return (n + 1) * (n + 2) // 2


def board_cells(int n):
    return [(x, s - x) for s in range(n + 1) for x in range(s + 1)]


cdef int _solve_rec(int n, u64 red_mask, int a, int b,
                    int x, int y, int a_left, signed char* memo) nogil:
    """1 = Alice wins, 2 = Bob wins, from token (x, y)."""
    cdef int s = x + y
    cdef int idx = -1
    cdef bint red = 0
    cdef int key = -1
    cdef int b_left, result
    if s <= n:
        idx = cell_index_c(x, y)
        red = (red_mask >> idx) & 1
        key = idx * (a + 1) + a_left
        if memo[key] != 0:
            return memo[key]
    b_left = b - (s - (a - a_left))
    if red:
        if b_left == 0:
            result = 1
        else:
            if _solve_rec(n, red_mask, a, b, x + 1, y, a_left, memo) == 1 and \
               _solve_rec(n, red_mask, a, b, x, y + 1, a_left, memo) == 1:
                result = 1
            else:
                result = 2
    else:
        if a_left == 0:
            result = 2
        else:
            if _solve_rec(n, red_mask, a, b, x + 1, y, a_left - 1, memo) == 1 or \
               _solve_rec(n, red_mask, a, b, x, y + 1, a_left - 1, memo) == 1:
                result = 1
            else:
                result = 2
    if key >= 0:
        memo[key] = result
    return result


def solve_fixed(int n, object red_mask, int a, int b):
    cdef u64 mask = red_mask
    cdef int memo_len = (n + 1) * (n + 2) / 2 * (a + 1)
    cdef signed char* memo = <signed char*> malloc(memo_len)
    if memo == NULL:
        raise MemoryError
    memset(memo, 0, memo_len)
    cdef int result = _solve_rec(n, mask, a, b, 0, 0, a, memo)
    free(memo)
    return result == 1


def min_alice_size(int a, int b, int max_r):
    cdef int n = a + b
    cdef int ncells = (n + 1) * (n + 2) / 2
    if ncells > 63:
        raise ValueError(f"board T_{n} does not fit a 64-bit mask")
    cdef int cap = max_r if max_r < ncells else ncells
    cdef int memo_len = ncells * (a + 1)
    cdef signed char* memo = <signed char*> malloc(memo_len)
    if memo == NULL:
        raise MemoryError
    cdef u64 mask, u, v
    cdef u64 limit = (<u64>1) << ncells
    cdef int k
    try:
        memset(memo, 0, memo_len)
        if _solve_rec(n, 0, a, b, 0, 0, a, memo) == 1:
            return 0, 0
        for k in range(1, cap + 1):
            mask = ((<u64>1) << k) - 1
            while mask < limit:
                memset(memo, 0, memo_len)
                if _solve_rec(n, mask, a, b, 0, 0, a, memo) == 1:
                    return k, mask
                u = mask & (0 - mask)
                v = mask + u
                mask = v | (((mask ^ v) / u) >> 2)
        return -1, 0
    finally:
        free(memo)


def reduction_sweep(int n):
    cdef int ncells = (n + 1) * (n + 2) / 2
    if ncells > 28:
        raise ValueError(f"reduction sweep over T_{n} is 2^{ncells} boards; refusing")

    from tokengames._kernels_py import _sweep_tables
    cells, tri_masks_py, far_mask_py, pink_py = _sweep_tables(n)

    cdef int ntris = len(tri_masks_py)
    cdef int npink = len(pink_py)
    cdef u64* tri_masks = <u64*> malloc(ntris * sizeof(u64))
    cdef u64* pink_bit = <u64*> malloc(npink * sizeof(u64))
    cdef u64* pink_adj = <u64*> malloc(npink * sizeof(u64))
    cdef u64* pink_diag = <u64*> malloc(npink * sizeof(u64))
    cdef u64* pink_line = <u64*> malloc(npink * sizeof(u64))
    if tri_masks == NULL or pink_bit == NULL or pink_adj == NULL \
            or pink_diag == NULL or pink_line == NULL:
        raise MemoryError
    cdef int i
    for i in range(ntris):
        tri_masks[i] = tri_masks_py[i]
    for i in range(npink):
        pink_bit[i] = pink_py[i][0]
        pink_adj[i] = pink_py[i][1]
        pink_diag[i] = pink_py[i][2]
        pink_line[i] = (<u64>1) << pink_py[i][3]

    cdef u64 far_mask = far_mask_py
    cdef u64 limit = (<u64>1) << ncells
    cdef u64 mask = 0
    cdef u64 union_mask, lines_seen
    cdef unsigned long long with_triangle = 0, bad_shrink = 0
    cdef unsigned long long bad_witness = 0, bad_disjoint = 0
    cdef int pink_count, unreachable

    with nogil:
        while mask < limit:
            if mask & far_mask:
                union_mask = 0
                for i in range(ntris):
                    if (mask & tri_masks[i]) == tri_masks[i]:
                        union_mask |= tri_masks[i]
                if union_mask:
                    with_triangle += 1
                    pink_count = 0
                    lines_seen = 0
                    for i in range(npink):
                        if mask & pink_bit[i]:
                            continue
                        if union_mask & pink_adj[i]:
                            pink_count += 1
                            if (mask & pink_diag[i]) == 0:
                                bad_witness += 1
                            if lines_seen & pink_line[i]:
                                bad_disjoint += 1
                            lines_seen |= pink_line[i]
                    unreachable = __builtin_popcountll(mask & far_mask)
                    if pink_count >= unreachable:
                        bad_shrink += 1
            mask += 1

    free(tri_masks)
    free(pink_bit)
    free(pink_adj)
    free(pink_diag)
    free(pink_line)
    return with_triangle, bad_shrink, bad_witness, bad_disjoint
