"""Greedy construction of separated pair families.

An S-family with separation d is a sequence of pairs (n, n+c) in which all
components of distinct pairs differ by at least d, and every offset c is
served infinitely often.  Offsets are drawn from the staggered sequence
0, 0 1, 0 1 2, 0 1 2 3, ... so each value recurs forever; for each offset
the smallest admissible n is chosen greedily.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


def offset_sequence() -> Iterator[int]:
    """0; 0 1; 0 1 2; 0 1 2 3; ... — every value appears infinitely often."""
    block = 0
    while True:
        yield from range(block + 1)
        block += 1


@dataclass(frozen=True)
class SFamily:
    d: int
    pairs: tuple[tuple[int, int], ...]

    def components(self) -> list[int]:
        return [x for pair in self.pairs for x in pair]

    def separation_ok(self) -> bool:
        """All four cross-differences between distinct pairs are >= d."""
        for i, (n1, m1) in enumerate(self.pairs):
            for n2, m2 in self.pairs[i + 1:]:
                if min(abs(n1 - n2), abs(n1 - m2), abs(m1 - n2), abs(m1 - m2)) < self.d:
                    return False
        return True


def build_s_family(d: int, count: int) -> SFamily:
    """First ``count`` pairs of the greedy d-separated family."""
    if d < 1:
        raise ValueError("separation d must be at least 1")
    if count < 0:
        raise ValueError("count must be non-negative")
    taken: list[int] = []
    pairs: list[tuple[int, int]] = []
    offsets = offset_sequence()
    while len(pairs) < count:
        c = next(offsets)
        n = 0
        while any(abs(n - t) < d or abs(n + c - t) < d for t in taken):
            n += 1
        pairs.append((n, n + c))
        taken.extend((n, n + c))
    return SFamily(d, tuple(pairs))
