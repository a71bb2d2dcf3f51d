"""Declaration-game rules: legality, termination, winners, replay."""

import pytest

from tokengames import decl
from tokengames.cells import Player, RuleViolation, ShiftKind
from tokengames.decl import (
    BatchAction,
    DeclareAction,
    DeclGameConfig,
    FunctionGraph,
    PassAction,
    ShiftAction,
    Variant,
)

UP, RIGHT, DIAG = ShiftKind.UP, ShiftKind.RIGHT, ShiftKind.DIAGONAL


def upright(**kw) -> DeclGameConfig:
    base = dict(variant=Variant.UP_RIGHT, a_up=1, a_right=1,
                bob_budget_1=2, bob_budget_2=2, r=2, p=2, f=1)
    base.update(kw)
    return DeclGameConfig(**base)


class ScriptedStrategy:
    def __init__(self, actions):
        self.actions = list(actions)

    def act(self, state):
        return self.actions.pop(0) if self.actions else PassAction()


def test_new_game_initial_state():
    state = decl.new_game(upright())
    assert state.token == (0, 0)
    assert state.red == frozenset()
    assert state.counters() == {
        "a_up_used": 0, "a_right_used": 0, "bob_used_1": 0, "bob_used_2": 0,
        "declarations_used": 0, "red_size": 0}
    assert state.to_move is Player.ALICE
    assert not state.finished


def test_diagonal_variant_requires_f_at_least_2():
    with pytest.raises(RuleViolation):
        DeclGameConfig(Variant.DIAGONAL, 0, 0, 1, 1, r=1, p=1, f=1)
    DeclGameConfig(Variant.DIAGONAL, 0, 0, 1, 1, r=1, p=1, f=2)


def test_function_graph_dimensions_validated():
    with pytest.raises(RuleViolation):
        upright(declaration_mode=FunctionGraph(0, 3))
    with pytest.raises(RuleViolation):
        upright(declaration_mode=FunctionGraph(3, -1))


def test_declare_adds_red_and_counts():
    config = upright()
    state = decl.new_game(config)
    state = decl.apply(config, state, Player.ALICE, DeclareAction(frozenset({(0, 0)})))
    assert state.red == frozenset({(0, 0)})
    assert state.declarations_used == 1
    assert state.to_move is Player.BOB


def test_bob_batch_over_budget_rejected():
    config = upright(bob_budget_2=1)
    state = decl.new_game(config)
    state = decl.apply(config, state, Player.ALICE, PassAction())
    with pytest.raises(RuleViolation):
        decl.apply(config, state, Player.BOB, BatchAction((RIGHT, RIGHT)))


def test_alice_shift_over_budget_rejected():
    config = upright(a_up=0)
    state = decl.new_game(config)
    with pytest.raises(RuleViolation):
        decl.apply(config, state, Player.ALICE, ShiftAction(UP))


def test_declaration_budget_and_size_enforced():
    config = upright(r=2, p=1)
    state = decl.new_game(config)
    with pytest.raises(RuleViolation):
        decl.apply(config, state, Player.ALICE,
                   DeclareAction(frozenset({(0, 0), (1, 0), (0, 1)})))
    state = decl.apply(config, state, Player.ALICE, DeclareAction(frozenset({(0, 0)})))
    state = decl.apply(config, state, Player.BOB, PassAction())
    with pytest.raises(RuleViolation):
        decl.apply(config, state, Player.ALICE, DeclareAction(frozenset({(1, 1)})))


def test_declare_after_bare_pass_is_closed():
    config = upright()
    state = decl.new_game(config)
    state = decl.apply(config, state, Player.ALICE, PassAction())
    state = decl.apply(config, state, Player.BOB, PassAction())
    assert state.alice_closed
    with pytest.raises(RuleViolation):
        decl.apply(config, state, Player.ALICE, DeclareAction(frozenset({(0, 0)})))
    # Shifts stay legal after closing.
    decl.apply(config, state, Player.ALICE, ShiftAction(RIGHT))


def test_wrong_turn_and_variant_kind_errors():
    config = upright()
    state = decl.new_game(config)
    with pytest.raises(RuleViolation):
        decl.apply(config, state, Player.BOB, PassAction())
    state = decl.apply(config, state, Player.ALICE, PassAction())
    with pytest.raises(RuleViolation):  # no diagonal for Bob in the up-right variant
        decl.apply(config, state, Player.BOB, BatchAction((DIAG,)))

    diag_config = DeclGameConfig(Variant.DIAGONAL, 1, 1, 2, 2, r=1, p=1, f=2)
    state = decl.new_game(diag_config)
    with pytest.raises(RuleViolation):  # Alice never shifts diagonally
        decl.apply(diag_config, state, Player.ALICE, ShiftAction(DIAG))
    state = decl.apply(diag_config, state, Player.ALICE, PassAction())
    with pytest.raises(RuleViolation):  # no up for Bob in the diagonal variant
        decl.apply(diag_config, state, Player.BOB, BatchAction((UP,)))
    decl.apply(diag_config, state, Player.BOB, BatchAction((DIAG, RIGHT)))


def test_empty_batch_rejected():
    config = upright()
    state = decl.new_game(config)
    state = decl.apply(config, state, Player.ALICE, PassAction())
    with pytest.raises(RuleViolation):
        decl.apply(config, state, Player.BOB, BatchAction(()))


def test_function_graph_mode_declaration_rules():
    config = upright(declaration_mode=FunctionGraph(4, 4), r=3)
    state = decl.new_game(config)
    with pytest.raises(RuleViolation):  # two cells in one column
        decl.apply(config, state, Player.ALICE,
                   DeclareAction(frozenset({(1, 0), (1, 2)})))
    with pytest.raises(RuleViolation):  # outside the window
        decl.apply(config, state, Player.ALICE, DeclareAction(frozenset({(4, 0)})))
    decl.apply(config, state, Player.ALICE,
               DeclareAction(frozenset({(0, 1), (1, 3), (2, 0)})))


def test_red_set_bounded_by_r_times_p():
    config = upright(r=4, p=2, a_up=0, a_right=0)
    state = decl.new_game(config)
    cells1 = frozenset({(0, 0), (1, 0), (2, 0), (3, 0)})
    cells2 = frozenset({(0, 1), (1, 1), (2, 1), (3, 1)})
    state = decl.apply(config, state, Player.ALICE, DeclareAction(cells1))
    state = decl.apply(config, state, Player.BOB, PassAction())
    state = decl.apply(config, state, Player.ALICE, DeclareAction(cells2))
    assert len(state.red) == config.r * config.p == 8
    assert len(state.red) <= config.r * state.declarations_used
    state = decl.apply(config, state, Player.BOB, PassAction())
    with pytest.raises(RuleViolation):
        decl.apply(config, state, Player.ALICE, DeclareAction(frozenset({(5, 5)})))


def test_winner_requires_finished_state():
    state = decl.new_game(upright())
    with pytest.raises(RuleViolation):
        decl.winner(state)


def test_all_pass_play_ends_white_bob_wins():
    config = upright()
    transcript = decl.play(config, ScriptedStrategy([]), ScriptedStrategy([]))
    assert transcript.winner is Player.BOB
    assert transcript.outcome.reason == "quiescence"
    assert len(transcript.events) == 4  # two all-pass rounds


def test_declared_origin_wins_for_alice():
    config = upright()
    alice = ScriptedStrategy([DeclareAction(frozenset({(0, 0)}))])
    transcript = decl.play(config, alice, ScriptedStrategy([]))
    assert transcript.winner is Player.ALICE


def test_bob_flees_single_red_cell():
    config = upright()
    alice = ScriptedStrategy([DeclareAction(frozenset({(0, 0)}))])
    bob = ScriptedStrategy([BatchAction((RIGHT,))])
    transcript = decl.play(config, alice, bob)
    assert transcript.winner is Player.BOB
    assert transcript.events[-1].token == (1, 0)


def test_illegal_strategy_action_forfeits():
    config = upright(a_up=0)
    alice = ScriptedStrategy([ShiftAction(UP)])
    transcript = decl.play(config, alice, ScriptedStrategy([]))
    assert transcript.winner is Player.BOB
    assert transcript.outcome.reason == "forfeit:alice"


def test_round_cap_precondition():
    config = upright()
    with pytest.raises(ValueError):
        decl.play(config, ScriptedStrategy([]), ScriptedStrategy([]), round_cap=3)


def test_replay_reproduces_snapshots():
    config = upright()
    alice = ScriptedStrategy([
        DeclareAction(frozenset({(0, 0), (1, 1)}), RIGHT),
        ShiftAction(UP),
    ])
    bob = ScriptedStrategy([BatchAction((RIGHT, UP)), BatchAction((UP,))])
    transcript = decl.play(config, alice, bob)
    final = decl.replay(config, transcript)
    assert final.token == transcript.events[-1].token
    assert final.counters() == transcript.events[-1].counters
