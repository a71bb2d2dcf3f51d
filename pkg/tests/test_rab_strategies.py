"""Named (r, a, b) strategies: guards, shapes, and certified wins."""

import pytest

from tokengames import rab
from tokengames.cells import Player, PreconditionError, triangle_cells
from tokengames.exhaustive import certify_alice_strategy, certify_bob_strategy
from tokengames.rab import RabGameConfig
from tokengames.rab_strategies import (
    AliceBasisTriangle,
    AliceDiagonal,
    AliceKite,
    BobAlwaysUp,
    BobRecursive,
    kite_cells,
)


def test_guards():
    with pytest.raises(PreconditionError):
        BobAlwaysUp(RabGameConfig(2, 0, 1))          # b < r
    with pytest.raises(PreconditionError):
        AliceDiagonal(RabGameConfig(1, 2, 1))        # r = b + 0? needs r > b: r=1,b=1
    with pytest.raises(PreconditionError):
        AliceDiagonal(RabGameConfig(3, 1, 1))        # needs a > b
    with pytest.raises(PreconditionError):
        AliceBasisTriangle(RabGameConfig(5, 0, 2))   # 5 < 6
    with pytest.raises(PreconditionError):
        AliceBasisTriangle(RabGameConfig(6, 1, 2))   # a != 0
    with pytest.raises(PreconditionError):
        AliceKite(RabGameConfig(4, 2, 4))            # Bob-winning parameters
    with pytest.raises(PreconditionError):
        AliceKite(RabGameConfig(9, 3, 2))            # Alice wins but b < a
    with pytest.raises(PreconditionError):
        BobRecursive(RabGameConfig(8, 2, 4))         # Alice-winning parameters


def test_always_up_wins_when_b_matches_r():
    config = RabGameConfig(2, 2, 2)
    result = certify_bob_strategy(config, lambda c: BobAlwaysUp(c))
    assert result.clean and result.plays > 0


def test_always_up_empty_red_never_moves():
    transcript = rab.play(RabGameConfig(0, 2, 1),
                          _FixedAlice(frozenset()), BobAlwaysUp(RabGameConfig(0, 2, 1)))
    assert transcript.winner is Player.BOB
    assert all(ev.player is Player.ALICE for ev in transcript.events)


def test_always_up_loses_outside_precondition():
    # b=1 < r=2: the column pair {(0,0),(0,1)} beats the always-up rule.
    config = RabGameConfig(2, 0, 1)
    result = certify_bob_strategy(config, lambda c: BobAlwaysUp(c, strict=False),
                                  red_sets=[frozenset({(0, 0), (0, 1)})])
    assert result.losses > 0


class _FixedAlice:
    def __init__(self, red):
        self.red = red

    def initial_red(self, config):
        return self.red

    def move(self, state):
        from tokengames.cells import ShiftKind
        return ShiftKind.UP


def test_diagonal_wins_certified():
    config = RabGameConfig(3, 2, 1)
    result = certify_alice_strategy(config, lambda c: AliceDiagonal(c))
    assert result.clean and result.plays > 0


def test_basis_triangle_shapes_and_wins():
    config = RabGameConfig(6, 0, 2)
    alice = AliceBasisTriangle(config)
    assert alice.initial_red(config) == frozenset(triangle_cells(2))
    assert certify_alice_strategy(config, lambda c: AliceBasisTriangle(c)).clean


def test_kite_cells_fig_shape():
    # (8, 2, 4): tail (0,0),(1,1) plus the six-cell triangle rooted at (2,2).
    cells = kite_cells(8, 2, 4)
    assert cells == {(0, 0), (1, 1),
                     (2, 2), (3, 2), (2, 3), (4, 2), (3, 3), (2, 4)}
    assert len(cells) <= 8


def test_kite_uses_at_most_r_cells_and_absorbs_b():
    for r, a, b in [(8, 2, 4), (4, 1, 2), (3, 1, 1), (10, 0, 3)]:
        if rab_winner_is_alice(r, a, b) and b >= a:
            cells = kite_cells(r, a, b)
            assert len(cells) <= r
            s = max((x + y for (x, y) in cells if x >= a), default=2 * a - 1) - 2 * a + 1
            assert s >= b - a + 1


def rab_winner_is_alice(r, a, b):
    from tokengames.analysis import rab_winner
    return rab_winner(r, a, b) is Player.ALICE


def test_kite_wins_certified():
    for r, a, b in [(8, 2, 4), (6, 0, 2), (3, 2, 2), (7, 1, 3)]:
        config = RabGameConfig(r, a, b)
        result = certify_alice_strategy(config, lambda c: AliceKite(c))
        assert result.clean, (r, a, b, result.first_loss)


def test_kite_with_a_zero_matches_basis_triangle():
    config = RabGameConfig(6, 0, 2)
    assert AliceKite(config).initial_red(config) == \
        AliceBasisTriangle(config).initial_red(config)


def test_recursive_bob_base_case():
    config = RabGameConfig(2, 0, 1)
    assert certify_bob_strategy(config, lambda c: BobRecursive(c)).clean


def test_recursive_bob_inductive_case():
    config = RabGameConfig(3, 1, 2)
    assert certify_bob_strategy(config, lambda c: BobRecursive(c)).clean


def test_recursive_bob_deeper_tower():
    config = RabGameConfig(4, 2, 3)
    assert certify_bob_strategy(config, lambda c: BobRecursive(c)).clean


def test_recursive_bob_lenient_mode_plays_out_losing_games():
    config = RabGameConfig(8, 2, 4)
    transcript = rab.play(config, AliceKite(config), BobRecursive(config, strict=False))
    assert transcript.winner is Player.ALICE
    assert transcript.outcome.reason == "budget_exhausted"
