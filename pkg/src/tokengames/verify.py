"""Exhaustive verification of the (r, a, b) winner formula, with reports.

For every budget pair (a, b) the shared scan finds the minimal Alice-winning
red-set size once; each (r, a, b) verdict then falls out by comparison, and
the witness is the colex-first minimal red set.  Pairs fan out across worker
processes (override the count with the TOKENGAMES_JOBS environment
variable); results merge deterministically by sorted keys.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .analysis import rab_winner
from .cells import Cell, Player
from .oracle import BACKEND, min_alice_red_size

JOBS_ENV_VAR = "TOKENGAMES_JOBS"


@dataclass(frozen=True)
class VerifyRow:
    r: int
    a: int
    b: int
    predicted: Player
    solved: Player
    witness: frozenset[Cell] | None

    @property
    def agree(self) -> bool:
        return self.predicted is self.solved

    def record(self) -> dict:
        return {
            "r": self.r, "a": self.a, "b": self.b,
            "predicted": self.predicted.value, "solved": self.solved.value,
            "agree": self.agree,
            "witness": sorted(map(list, self.witness)) if self.witness else None,
        }


@dataclass
class VerifyReport:
    max_sum: int
    max_r: int
    rows: list[VerifyRow]
    elapsed: float
    jobs: int
    backend: str

    @property
    def mismatches(self) -> list[VerifyRow]:
        return [row for row in self.rows if not row.agree]

    def summary(self) -> dict:
        return {
            "max_sum": self.max_sum,
            "max_r": self.max_r,
            "triples": len(self.rows),
            "mismatches": [row.record() for row in self.mismatches],
            "mismatch_count": len(self.mismatches),
            "elapsed_s": round(self.elapsed, 3),
            "jobs": self.jobs,
            "backend": self.backend,
        }


def default_jobs() -> int:
    override = os.environ.get(JOBS_ENV_VAR)
    if override:
        return max(1, int(override))
    return min(8, os.cpu_count() or 1)


def _pair_scan(args: tuple[int, int, int]) -> tuple[int, int, int, list[list[int]] | None]:
    a, b, max_r = args
    k, witness = min_alice_red_size(a, b, max_r)
    cells = sorted(map(list, witness)) if k >= 0 else None
    return a, b, k, cells


def verify_rab(max_sum: int, max_r: int, jobs: int | None = None) -> VerifyReport:
    """Compare the closed-form winner with brute force for every (r, a, b)
    with a + b <= max_sum and r <= max_r."""
    start = time.perf_counter()
    if jobs is None:
        jobs = default_jobs()
    pairs = [(a, total - a, max_r)
             for total in range(max_sum + 1) for a in range(total + 1)]
    if jobs > 1 and len(pairs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            scans = list(pool.map(_pair_scan, pairs))
    else:
        scans = [_pair_scan(item) for item in pairs]

    rows: list[VerifyRow] = []
    for a, b, k, witness_cells in sorted(scans):
        witness = frozenset(tuple(c) for c in witness_cells) if witness_cells else None
        for r in range(max_r + 1):
            alice = k >= 0 and k <= r
            rows.append(VerifyRow(
                r=r, a=a, b=b,
                predicted=rab_winner(r, a, b),
                solved=Player.ALICE if alice else Player.BOB,
                witness=witness if alice else None,
            ))
    rows.sort(key=lambda row: (row.a + row.b, row.a, row.r))
    return VerifyReport(max_sum, max_r, rows, time.perf_counter() - start,
                        jobs, BACKEND)


def write_report(report: VerifyReport, out_dir: str | Path) -> tuple[Path, Path]:
    """Write one summary record plus machine-readable per-triple rows.

    Timing stays on stdout; the files carry only run-independent content so
    identical flags produce byte-identical reports.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    summary_path = out / "summary.json"
    rows_path = out / "rows.jsonl"
    stable = {k: v for k, v in report.summary().items() if k != "elapsed_s"}
    summary_path.write_text(json.dumps(stable, sort_keys=True) + "\n",
                            encoding="utf-8")
    with rows_path.open("w", encoding="utf-8") as fh:
        for row in report.rows:
            fh.write(json.dumps(row.record(), sort_keys=True) + "\n")
    return summary_path, rows_path
