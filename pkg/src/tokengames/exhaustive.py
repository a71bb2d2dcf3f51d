"""Exhaustive opposition for (r, a, b)-game strategies.

These walkers certify a fixed strategy against *every* behavior of the other
player at desk scale: every red set for Alice (when certifying Bob) and
every shift at every decision point.  Strategies are cloned at branch points
so private memory cannot leak across lines.
"""

from __future__ import annotations

import copy
from dataclasses import dataclass
from typing import Callable, Iterable

from . import rab
from .cells import Cell, Player, ShiftKind
from .oracle import board_size, cells_of
from ._kernels_py import iter_masks


@dataclass
class CertificationResult:
    plays: int
    losses: int
    first_loss: tuple[frozenset[Cell], list[ShiftKind]] | None

    @property
    def clean(self) -> bool:
        return self.losses == 0


def _clone(strategy):
    clone = getattr(strategy, "clone", None)
    if clone is not None:
        return clone()
    return copy.deepcopy(strategy)


def _walk_vs_all(config: rab.RabGameConfig, state: rab.RabGameState,
                 strategy, strategy_player: Player,
                 line: list[ShiftKind], result: CertificationResult,
                 stop_early: bool) -> None:
    while not state.finished:
        who = rab.mover(state)
        if who is strategy_player:
            state = rab.step(state, strategy.move(state))
        else:
            # Branch over both opposing shifts.
            for kind in (ShiftKind.RIGHT, ShiftKind.UP):
                if stop_early and result.losses:
                    return
                _walk_vs_all(config, rab.step(state, kind), _clone(strategy),
                             strategy_player, line + [kind], result, stop_early)
            return
    result.plays += 1
    assert state.loser is not None
    if state.loser is strategy_player:
        result.losses += 1
        if result.first_loss is None:
            result.first_loss = (state.red, list(line))


def certify_bob_strategy(config: rab.RabGameConfig,
                         bob_factory: Callable[[rab.RabGameConfig], object],
                         red_sets: Iterable[frozenset[Cell]] | None = None,
                         stop_early: bool = True) -> CertificationResult:
    """Run a Bob strategy against every red set of size <= r on the board
    triangle and every Alice shift sequence; count Bob losses."""
    result = CertificationResult(0, 0, None)
    if red_sets is None:
        red_sets = all_red_sets(config)
    for red in red_sets:
        state = rab.new_game(config, red)
        _walk_vs_all(config, state, bob_factory(config), Player.BOB, [], result, stop_early)
        if stop_early and result.losses:
            break
    return result


def certify_alice_strategy(config: rab.RabGameConfig,
                           alice_factory: Callable[[rab.RabGameConfig], object],
                           stop_early: bool = True) -> CertificationResult:
    """Run an Alice strategy (her declared red set and returns) against
    every Bob shift sequence; count Alice losses."""
    result = CertificationResult(0, 0, None)
    alice = alice_factory(config)
    state = rab.new_game(config, frozenset(alice.initial_red(config)))
    _walk_vs_all(config, state, _clone(alice), Player.ALICE, [], result, stop_early)
    return result


def all_red_sets(config: rab.RabGameConfig) -> Iterable[frozenset[Cell]]:
    """Every red set of size <= r on T_{a+b}, size-ascending, colex within."""
    n = config.a + config.b
    ncells = board_size(n)
    for k in range(min(config.r, ncells) + 1):
        for mask in iter_masks(ncells, k):
            yield cells_of(mask, n)


__all__ = [
    "CertificationResult",
    "all_red_sets",
    "certify_alice_strategy",
    "certify_bob_strategy",
]
