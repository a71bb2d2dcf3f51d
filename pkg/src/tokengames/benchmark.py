"""Benchmark the compiled kernels against the pure-Python fallback.

Run with ``python -m tokengames.benchmark``.  Each case runs on both
implementations, checks they return identical results, and reports the
speedup.  ``--quick`` trims the case sizes.
"""

from __future__ import annotations

import argparse
import time

from . import _kernels_py

try:
    from . import _kernels  # type: ignore[attr-defined]
except ImportError:
    _kernels = None


def _time(fn, *args) -> tuple[float, object]:
    start = time.perf_counter()
    result = fn(*args)
    return time.perf_counter() - start, result


def _case_solve_fixed(impl, n: int, size: int):
    total_alice = 0
    for mask in _kernels_py.iter_masks(_kernels_py.board_size(n), size):
        if impl.solve_fixed(n, mask, n // 2, n - n // 2):
            total_alice += 1
    return total_alice


def cases(quick: bool):
    yield ("solve_fixed over red sets", _case_solve_fixed,
           (4, 2) if quick else (5, 3))
    yield ("min_alice_size", lambda impl, a, b, r: impl.min_alice_size(a, b, r),
           (1, 2, 4) if quick else (2, 3, 8))
    yield ("reduction_sweep", lambda impl, n: impl.reduction_sweep(n),
           (3,) if quick else (4,))


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true")
    args = parser.parse_args(argv)

    if _kernels is None:
        print("compiled kernels unavailable; nothing to compare")
        return 1

    print(f"{'case':34} {'pure':>10} {'compiled':>10} {'speedup':>9}")
    for name, fn, params in cases(args.quick):
        pure_t, pure_result = _time(fn, _kernels_py, *params)
        fast_t, fast_result = _time(fn, _kernels, *params)
        if pure_result != fast_result:
            print(f"{name:34} RESULT MISMATCH: {pure_result} != {fast_result}")
            return 1
        speedup = pure_t / fast_t if fast_t > 0 else float("inf")
        print(f"{name:34} {pure_t:9.3f}s {fast_t:9.3f}s {speedup:8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
