"""Terminal play: text board rendering and interactive move loops.

Board rendering character set (documented contract): ``.`` white cell,
``r`` red cell, ``T`` token on a white cell, ``@`` token on a red cell.
Rows print top-down from the highest shown y; columns left to right from
x = 0.  Moves are validated by the exact engine rules; illegal input
re-prompts instead of mutating anything.
"""

from __future__ import annotations

from typing import Callable, Iterable

from . import decl, rab
from .cells import Cell, Player, RuleViolation, ShiftKind

PROMPT_HELP_DECL = (
    "moves: pass | up | right | declare X,Y[;X,Y...] [up|right]   (Alice)\n"
    "       pass | shifts like 'u r r' (up/right) or 'd r' (diagonal/right) (Bob)"
)
PROMPT_HELP_RAB = "moves: u (up) | r (right)"

_KIND_LETTERS = {"u": ShiftKind.UP, "r": ShiftKind.RIGHT, "d": ShiftKind.DIAGONAL,
                 "up": ShiftKind.UP, "right": ShiftKind.RIGHT,
                 "diagonal": ShiftKind.DIAGONAL}


def _read_stdin(prompt: str) -> str:
    return input(prompt)  # resolved at call time so tests can monkeypatch input


def render_board(token: Cell, red: Iterable[Cell], width: int | None = None,
                 height: int | None = None) -> str:
    red_set = set(red)
    cells = red_set | {token}
    if width is None:
        width = max(x for x, _ in cells) + 2
    if height is None:
        height = max(y for _, y in cells) + 2
    rows = []
    for y in range(height - 1, -1, -1):
        row = []
        for x in range(width):
            cell = (x, y)
            if cell == token:
                row.append("@" if cell in red_set else "T")
            else:
                row.append("r" if cell in red_set else ".")
        rows.append(" ".join(row))
    return "\n".join(rows)


def parse_cells(text: str) -> frozenset[Cell]:
    cells = set()
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        x, y = chunk.split(",")
        cells.add((int(x), int(y)))
    return frozenset(cells)


def parse_decl_action(line: str, player: Player):
    words = line.strip().lower().split()
    if not words or words[0] in ("pass", "p"):
        return decl.PassAction()
    if player is Player.ALICE:
        if words[0] == "declare":
            if len(words) < 2:
                raise ValueError("declare needs cells like 1,0;2,1")
            shift = _KIND_LETTERS[words[2]] if len(words) > 2 else None
            return decl.DeclareAction(parse_cells(words[1]), shift)
        if words[0] in _KIND_LETTERS:
            return decl.ShiftAction(_KIND_LETTERS[words[0]])
        raise ValueError(f"unknown move {line!r}")
    kinds = tuple(_KIND_LETTERS[w] for w in words if w in _KIND_LETTERS)
    if len(kinds) != len(words):
        raise ValueError(f"unknown move {line!r}")
    return decl.BatchAction(kinds)


def parse_rab_move(line: str) -> ShiftKind:
    word = line.strip().lower()
    if word in _KIND_LETTERS and _KIND_LETTERS[word] is not ShiftKind.DIAGONAL:
        return _KIND_LETTERS[word]
    raise ValueError(f"unknown move {line!r}; use u or r")


class HumanDecl:
    """Reads one declaration-game action per turn from ``read_line``."""

    def __init__(self, player: Player, read_line: Callable[[str], str] = _read_stdin,
                 write: Callable[[str], None] = print):
        self.player = player
        self.read_line = read_line
        self.write = write

    def act(self, state: decl.DeclGameState):
        self.write(render_board(state.token, state.red))
        self.write(f"counters: {state.counters()}")
        while True:
            try:
                return parse_decl_action(
                    self.read_line(f"{self.player.value} move> "), self.player)
            except (ValueError, KeyError) as exc:
                self.write(f"bad move: {exc}")
                self.write(PROMPT_HELP_DECL)


class HumanRabAlice:
    def __init__(self, read_line: Callable[[str], str] = _read_stdin,
                 write: Callable[[str], None] = print):
        self.read_line = read_line
        self.write = write

    def initial_red(self, config: rab.RabGameConfig) -> frozenset[Cell]:
        while True:
            try:
                cells = parse_cells(self.read_line(
                    f"red cells (at most {config.r}) like 0,0;1,1> "))
                if len(cells) > config.r:
                    raise ValueError(f"{len(cells)} cells exceed r={config.r}")
                return cells
            except ValueError as exc:
                self.write(f"bad declaration: {exc}")

    def move(self, state: rab.RabGameState) -> ShiftKind:
        return _prompt_rab_move(self, state)


class HumanRabBob:
    def __init__(self, read_line: Callable[[str], str] = _read_stdin,
                 write: Callable[[str], None] = print):
        self.read_line = read_line
        self.write = write

    def move(self, state: rab.RabGameState) -> ShiftKind:
        return _prompt_rab_move(self, state)


def _prompt_rab_move(human, state: rab.RabGameState) -> ShiftKind:
    human.write(render_board(state.token, state.red))
    human.write(f"budgets: {state.counters()}")
    while True:
        try:
            return parse_rab_move(human.read_line("move (u/r)> "))
        except ValueError as exc:
            human.write(f"bad move: {exc}")
            human.write(PROMPT_HELP_RAB)


def run_interactive_decl(config: decl.DeclGameConfig, seat: Player, opponent,
                         read_line: Callable[[str], str] = _read_stdin,
                         write: Callable[[str], None] = print) -> Player:
    """Interactive declaration game; the engine enforces all legality, so a
    rejected human move simply re-prompts."""
    human = HumanDecl(seat, read_line, write)
    state = decl.new_game(config)
    cap = decl.default_round_cap(config)
    for _ in range(cap):
        for who in (Player.ALICE, Player.BOB):
            actor = human if who is seat else opponent
            while True:
                action = actor.act(state)
                try:
                    state = decl.apply(config, state, who, action)
                    break
                except RuleViolation as exc:
                    if actor is human:
                        write(f"illegal: {exc}")
                        continue
                    write(f"opponent forfeits: {exc}")
                    return who.other()
            if state.finished:
                result = decl.winner(state)
                write(f"winner: {result.value}")
                return result
    write("round cap reached")
    from dataclasses import replace
    result = decl.winner(replace(state, finished=True))
    write(f"winner: {result.value}")
    return result


def run_interactive_rab(config: rab.RabGameConfig, seat: Player, opponent,
                        read_line: Callable[[str], str] = _read_stdin,
                        write: Callable[[str], None] = print) -> Player:
    if seat is Player.ALICE:
        alice = HumanRabAlice(read_line, write)
        bob = opponent
    else:
        alice = opponent
        bob = HumanRabBob(read_line, write)
    while True:
        try:
            red = frozenset(alice.initial_red(config))
            state = rab.new_game(config, red)
            break
        except RuleViolation as exc:
            if seat is Player.ALICE:
                write(f"illegal: {exc}")
                continue
            write(f"opponent forfeits: {exc}")
            return Player.BOB
    while not state.finished:
        who = rab.mover(state)
        actor = bob if who is Player.BOB else alice
        while True:
            kind = actor.move(state)
            try:
                state = rab.step(state, kind)
                break
            except RuleViolation as exc:
                if (who is seat):
                    write(f"illegal: {exc}")
                    continue
                write(f"opponent forfeits: {exc}")
                return who.other()
    assert state.loser is not None
    result = state.loser.other()
    write(render_board(state.token, state.red))
    write(f"winner: {result.value}")
    return result
