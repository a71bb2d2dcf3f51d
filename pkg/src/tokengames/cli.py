"""Command-line interface.

Subcommands: ``play`` (one game between named strategies), ``verify-rab``
(closed-form winner vs. brute force), ``solve`` (single oracle query),
``audit`` (regime budget derivation and condition verdict), ``sfamily``
(greedy separated pairs), ``sweep`` (parameter grid to CSV), and
``interactive`` (play a seat at the terminal).

Exit status: 0 on success, 1 on verification mismatch or a strategy guard
error, 2 on flag errors (argparse).  Identical flags and seeds produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import decl, rab
from .adversaries import ADVERSARY_NAMES, PassingAlice, PassingBob, adversary_suite
from .cells import Player, PreconditionError
from .decl_micro import solve_decl_micro
from .interactive import run_interactive_decl, run_interactive_rab
from .oracle import BACKEND, solve_rab
from .rab_strategies import (
    AliceBasisTriangle,
    AliceDiagonal,
    AliceKite,
    BobAlwaysUp,
    BobRecursive,
)
from .regimes import Regime, audit_parameters
from .sfamily import build_s_family
from .staircase import staircase_strategy
from .verify import verify_rab, write_report

RAB_ALICE = ("kite", "diagonal", "basis")
RAB_BOB = ("always-up", "recursive")
DECL_ALICE = ADVERSARY_NAMES + ("pass",)
DECL_BOB = ("staircase", "pass")


def _decl_config(args) -> decl.DeclGameConfig:
    mode = None
    if args.graph is not None:
        mode = decl.FunctionGraph(args.graph[0], args.graph[1])
    return decl.DeclGameConfig(
        variant=decl.Variant(args.variant.replace("-", "_")),
        a_up=args.a_up, a_right=args.a_right,
        bob_budget_1=args.b1, bob_budget_2=args.b2,
        r=args.r, p=args.p, f=args.f, declaration_mode=mode)


def _add_decl_flags(parser: argparse.ArgumentParser) -> None:
    # --r is shared with the rab game: cells per declaration here.
    parser.add_argument("--variant", choices=["up-right", "diagonal"], default="up-right")
    parser.add_argument("--a-up", type=int, default=0)
    parser.add_argument("--a-right", type=int, default=0)
    parser.add_argument("--b1", type=int, default=2,
                        help="Bob's up budget (up-right) or diagonal budget (diagonal)")
    parser.add_argument("--b2", type=int, default=1, help="Bob's right budget")
    parser.add_argument("--p", type=int, default=1, help="number of declarations")
    parser.add_argument("--f", type=int, default=1, help="staircase step length")
    parser.add_argument("--graph", type=int, nargs=2, metavar=("WIDTH", "HEIGHT"),
                        help="restrict declarations to a function graph")


def _rab_alice(name: str, config: rab.RabGameConfig):
    if name == "kite":
        return AliceKite(config)
    if name == "diagonal":
        return AliceDiagonal(config)
    return AliceBasisTriangle(config)


def _rab_bob(name: str, config: rab.RabGameConfig):
    if name == "always-up":
        return BobAlwaysUp(config, strict=False)
    return BobRecursive(config, strict=False)


def cmd_play(args) -> int:
    if args.game == "rab":
        config = rab.RabGameConfig(args.r, args.a, args.b)
        try:
            alice = _rab_alice(args.alice, config)
        except PreconditionError as exc:
            print(f"error: alice strategy {args.alice!r}: {exc}", file=sys.stderr)
            return 1
        transcript = rab.play(config, alice, _rab_bob(args.bob, config))
    else:
        config = _decl_config(args)
        alice = PassingAlice() if args.alice == "pass" \
            else adversary_suite(args.alice, config, seed=args.seed,
                                 window=tuple(args.window))
        bob = PassingBob() if args.bob == "pass" else staircase_strategy(config)
        transcript = decl.play(config, alice, bob, round_cap=args.round_cap)
    outcome = transcript.outcome
    print(f"winner: {outcome.winner.value} ({outcome.reason}) "
          f"after {len(transcript.events)} events")
    if args.transcript:
        transcript.write(args.transcript)
        print(f"transcript: {args.transcript}")
    return 0


def cmd_verify_rab(args) -> int:
    report = verify_rab(args.max_sum, args.max_r, jobs=args.jobs)
    print(json.dumps(report.summary(), sort_keys=True))
    if args.out:
        summary_path, rows_path = write_report(report, args.out)
        print(f"report: {summary_path} {rows_path}", file=sys.stderr)
    return 0 if not report.mismatches else 1


def cmd_solve(args) -> int:
    if args.game == "rab":
        winner, witness = solve_rab(args.r, args.a, args.b, cap=args.cap)
        record = {"r": args.r, "a": args.a, "b": args.b, "winner": winner.value,
                  "witness": sorted(map(list, witness)) if witness else None}
    else:
        config = _decl_config(args)
        winner = solve_decl_micro(config, window=tuple(args.window))
        record = {**decl.config_summary(config), "winner": winner.value}
    print(json.dumps(record, sort_keys=True))
    return 0


def cmd_audit(args) -> int:
    audit = audit_parameters(Regime(args.regime), args.n, args.c, args.d, args.e)
    print(json.dumps(audit.summary(), sort_keys=True))
    print("verdict:", "condition holds" if audit.holds else "condition fails")
    return 0


def cmd_sfamily(args) -> int:
    family = build_s_family(args.d, args.count)
    print(" ".join(f"({n},{m})" for n, m in family.pairs))
    return 0


def cmd_sweep(args) -> int:
    report = verify_rab(args.max_sum, args.max_r, jobs=args.jobs)
    rows = [row.record() for row in report.rows]
    fields = ["r", "a", "b", "predicted", "solved", "agree"]
    if args.out:
        path = Path(args.out)
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", newline="", encoding="utf-8") as fh:
            writer = csv.DictWriter(fh, fieldnames=fields, extrasaction="ignore")
            writer.writeheader()
            writer.writerows(rows)
        print(f"wrote {len(rows)} rows to {path}")
    else:
        writer = csv.DictWriter(sys.stdout, fieldnames=fields, extrasaction="ignore")
        writer.writeheader()
        writer.writerows(rows)
    return 0 if not report.mismatches else 1


def cmd_interactive(args) -> int:
    seat = Player(args.seat)
    if args.game == "rab":
        config = rab.RabGameConfig(args.r, args.a, args.b)
        if seat is Player.ALICE:
            opponent = _rab_bob(args.opponent or "recursive", config)
        else:
            name = args.opponent or ("kite" if args.b >= args.a else "diagonal")
            try:
                opponent = _rab_alice(name, config)
            except PreconditionError as exc:
                print(f"error: opponent {name!r}: {exc}", file=sys.stderr)
                return 1
        run_interactive_rab(config, seat, opponent)
    else:
        config = _decl_config(args)
        if seat is Player.ALICE:
            opponent = staircase_strategy(config)
        else:
            opponent = PassingAlice() if (args.opponent or "chaser") == "pass" \
                else adversary_suite(args.opponent or "chaser", config, seed=args.seed)
        run_interactive_decl(config, seat, opponent)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tokengames",
        description=f"token games on the grid (oracle backend: {BACKEND})")
    sub = parser.add_subparsers(dest="command", required=True)

    play = sub.add_parser("play", help="run one game between named strategies")
    play.add_argument("--game", choices=["rab", "decl"], required=True)
    play.add_argument("--r", type=int, default=8)
    play.add_argument("--a", type=int, default=2)
    play.add_argument("--b", type=int, default=4)
    play.add_argument("--alice", default=None)
    play.add_argument("--bob", default=None)
    play.add_argument("--seed", type=int, default=0)
    play.add_argument("--round-cap", type=int, default=None)
    play.add_argument("--window", type=int, nargs=2, default=[6, 6])
    play.add_argument("--transcript", help="write the play as JSON lines")
    _add_decl_flags(play)
    play.set_defaults(func=cmd_play)

    verify = sub.add_parser("verify-rab", help="winner formula vs brute force")
    verify.add_argument("--max-sum", type=int, default=5)
    verify.add_argument("--max-r", type=int, default=8)
    verify.add_argument("--jobs", type=int, default=None)
    verify.add_argument("--out", help="directory for summary.json and rows.jsonl")
    verify.set_defaults(func=cmd_verify_rab)

    solve = sub.add_parser("solve", help="one exhaustive oracle query")
    solve.add_argument("--game", choices=["rab", "decl"], default="rab")
    solve.add_argument("--r", type=int, default=3)
    solve.add_argument("--a", type=int, default=0)
    solve.add_argument("--b", type=int, default=1)
    solve.add_argument("--cap", type=int, default=5_000_000)
    solve.add_argument("--window", type=int, nargs=2, default=[6, 6])
    _add_decl_flags(solve)
    solve.set_defaults(func=cmd_solve)

    audit = sub.add_parser("audit", help="derive regime budgets and check the condition")
    audit.add_argument("--regime", choices=[r.value for r in Regime], required=True)
    audit.add_argument("--n", type=int, required=True)
    audit.add_argument("--c", type=int, default=0)
    audit.add_argument("--d", type=int, required=True)
    audit.add_argument("--e", type=int, required=True)
    audit.set_defaults(func=cmd_audit)

    sfam = sub.add_parser("sfamily", help="greedy separated pair family")
    sfam.add_argument("--d", type=int, required=True)
    sfam.add_argument("--count", type=int, required=True)
    sfam.set_defaults(func=cmd_sfamily)

    sweep = sub.add_parser("sweep", help="grid sweep of the winner formula to CSV")
    sweep.add_argument("--max-sum", type=int, default=4)
    sweep.add_argument("--max-r", type=int, default=6)
    sweep.add_argument("--jobs", type=int, default=None)
    sweep.add_argument("--out", help="CSV path (stdout when omitted)")
    sweep.set_defaults(func=cmd_sweep)

    inter = sub.add_parser("interactive", help="play a seat at the terminal")
    inter.add_argument("--game", choices=["rab", "decl"], required=True)
    inter.add_argument("--seat", choices=["alice", "bob"], required=True)
    inter.add_argument("--opponent", default=None)
    inter.add_argument("--r", type=int, default=3)
    inter.add_argument("--a", type=int, default=0)
    inter.add_argument("--b", type=int, default=1)
    inter.add_argument("--seed", type=int, default=0)
    _add_decl_flags(inter)
    inter.set_defaults(func=cmd_interactive)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    defaults = {"play": {"alice": "kite", "bob": "recursive"}}
    if args.command == "play":
        if args.alice is None:
            args.alice = defaults["play"]["alice"] if args.game == "rab" else "chaser"
        if args.bob is None:
            args.bob = defaults["play"]["bob"] if args.game == "rab" else "staircase"
        pool = RAB_ALICE if args.game == "rab" else DECL_ALICE
        if args.alice not in pool:
            print(f"error: --alice must be one of {pool}", file=sys.stderr)
            return 2
        pool = RAB_BOB if args.game == "rab" else DECL_BOB
        if args.bob not in pool:
            print(f"error: --bob must be one of {pool}", file=sys.stderr)
            return 2
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
