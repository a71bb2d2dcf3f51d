"""Play transcripts: ordered event logs, serialization, and parsing.

Serialized form is line-delimited JSON with three record kinds::

    {"kind": "config", "game": "decl"|"rab", ...config fields...}
    {"kind": "event", "round": int, "player": "alice"|"bob",
     "action": {...}, "token": [x, y], "counters": {...}}
    {"kind": "outcome", "winner": "alice"|"bob", "reason": str}

Action objects: {"type": "pass"} | {"type": "shift", "kind": k}
| {"type": "declare", "cells": [[x, y], ...], "shift": k|null}
| {"type": "batch", "kinds": [k, ...]} with k in {"up", "right", "diagonal"}.

Keys are emitted sorted, so identical plays serialize byte-identically.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .cells import Cell, Player, ShiftKind


@dataclass(frozen=True)
class Event:
    round_index: int
    player: Player
    action: Any
    token: Cell
    counters: dict[str, int]


@dataclass(frozen=True)
class Outcome:
    winner: Player
    reason: str


@dataclass
class Transcript:
    """Ordered event log of one play, replayable and serializable."""

    game: str
    config: dict[str, Any]
    events: list[Event] = field(default_factory=list)
    outcome: Outcome | None = None

    def add(self, round_index: int, player: Player, action: Any, token: Cell,
            counters: dict[str, int]) -> None:
        self.events.append(Event(round_index, player, action, token, dict(counters)))

    def finish(self, winner: Player, reason: str) -> None:
        self.outcome = Outcome(winner, reason)

    @property
    def winner(self) -> Player:
        if self.outcome is None:
            raise ValueError("transcript has no outcome")
        return self.outcome.winner

    def to_lines(self) -> list[str]:
        head = {"kind": "config", "game": self.game, **self.config}
        lines = [json.dumps(head, sort_keys=True)]
        for ev in self.events:
            lines.append(json.dumps({
                "kind": "event",
                "round": ev.round_index,
                "player": ev.player.value,
                "action": action_to_obj(ev.action),
                "token": list(ev.token),
                "counters": ev.counters,
            }, sort_keys=True))
        if self.outcome is not None:
            lines.append(json.dumps({
                "kind": "outcome",
                "winner": self.outcome.winner.value,
                "reason": self.outcome.reason,
            }, sort_keys=True))
        return lines

    def write(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("\n".join(self.to_lines()) + "\n")


def action_to_obj(action: Any) -> dict[str, Any]:
    from . import decl  # local import to avoid a cycle

    if isinstance(action, decl.PassAction):
        return {"type": "pass"}
    if isinstance(action, decl.ShiftAction):
        return {"type": "shift", "kind": action.kind.value}
    if isinstance(action, decl.DeclareAction):
        return {
            "type": "declare",
            "cells": sorted([list(c) for c in action.cells]),
            "shift": action.shift.value if action.shift else None,
        }
    if isinstance(action, decl.BatchAction):
        return {"type": "batch", "kinds": [k.value for k in action.kinds]}
    if isinstance(action, ShiftKind):  # bare shift in the fixed-red game
        return {"type": "shift", "kind": action.value}
    if isinstance(action, frozenset):  # initial red declaration
        return {"type": "declare", "cells": sorted([list(c) for c in action]), "shift": None}
    raise TypeError(f"unknown action: {action!r}")


def action_from_obj(obj: dict[str, Any]) -> Any:
    from . import decl

    kind = obj["type"]
    if kind == "pass":
        return decl.PassAction()
    if kind == "shift":
        return decl.ShiftAction(ShiftKind(obj["kind"]))
    if kind == "declare":
        shift = ShiftKind(obj["shift"]) if obj.get("shift") else None
        return decl.DeclareAction(frozenset(tuple(c) for c in obj["cells"]), shift)
    if kind == "batch":
        return decl.BatchAction(tuple(ShiftKind(k) for k in obj["kinds"]))
    raise ValueError(f"unknown action record: {obj!r}")


def parse_lines(lines: list[str]) -> tuple[dict[str, Any], list[dict[str, Any]], dict[str, Any]]:
    """Split serialized transcript lines into (config, events, outcome) records."""
    config: dict[str, Any] | None = None
    outcome: dict[str, Any] | None = None
    events: list[dict[str, Any]] = []
    for line in lines:
        line = line.strip()
        if not line:
            continue
        rec = json.loads(line)
        if rec["kind"] == "config":
            config = rec
        elif rec["kind"] == "event":
            events.append(rec)
        elif rec["kind"] == "outcome":
            outcome = rec
        else:
            raise ValueError(f"unknown record kind: {rec['kind']}")
    if config is None or outcome is None:
        raise ValueError("transcript is missing config or outcome records")
    return config, events, outcome
