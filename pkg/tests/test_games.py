"""Game solvers on hand-sized fixtures.

Verdicts marked "oracle" were produced once by ``tests/oracle.py`` and frozen.
"""

import pytest

from conftest import K3, K4, cnf, graph, make
from npsgames.errors import CapExceeded, MalformedGame, MalformedNesting
from npsgames.games import (
    GLOBAL,
    LOCAL,
    TOP,
    AdjustableGame,
    AdjustablePlay,
    InterdictionGame,
    InterdictionPlay,
    SelectionGame,
    SelectionPlay,
    TwoStageCostGame,
    replay_strategy,
    solve_adjustable,
    solve_interdiction_cost,
    solve_interdiction_simple,
    solve_protection_interdiction,
    solve_selection,
    solve_two_stage_cost,
    unit_cost_encoding,
    zero_one_encoding,
)

# -- selection -----------------------------------------------------------------------


def test_selection_single_move():
    g = SelectionGame(cnf("sat-v", 1, (1,)), (0b1,))
    v = solve_selection(g)
    assert v.first_player_wins and v.root_move() == 0b1


def test_selection_exclusive_or_lost():
    g = SelectionGame(cnf("sat-v", 2, (1, 2), (-1, -2)), (0b01, 0b10))
    assert not solve_selection(g).first_player_wins


@pytest.mark.parametrize("k", [1, 3])
def test_selection_contradiction(k):
    parts = (0b1,) + (0,) * (k - 1)
    assert not solve_selection(SelectionGame(cnf("sat-v", 1, (1,), (-1,)), parts)).first_player_wins


@pytest.mark.parametrize(
    "clauses,n,parts,expected",
    [
        # oracle
        ([(1, 2, 3), (-1, -2), (2, -3)], 3, (1, 2, 4), False),
        ([(1, -2), (2, 3), (-1, -3)], 3, (5, 2), True),
        ([(1, 2), (3, 4), (-1, -3)], 4, (1, 2, 4, 8), True),
        ([(1, 2), (3, 4), (-1, -3)], 4, (2, 1, 8, 4), True),
    ],
)
def test_selection_frozen(clauses, n, parts, expected):
    g = SelectionGame(cnf("sat-v", n, *clauses), parts)
    v = solve_selection(g)
    assert v.first_player_wins is expected
    assert replay_strategy(SelectionPlay(g), v)


def test_selection_rejects_bad_partition():
    base = cnf("sat-v", 2, (1, 2))
    with pytest.raises(MalformedGame):
        SelectionGame(base, (0b01, 0b01))
    with pytest.raises(MalformedGame):
        SelectionGame(base, (0b01,))
    with pytest.raises(MalformedGame):
        SelectionGame(base, ())


def test_selection_cap():
    g = SelectionGame(cnf("sat-v", 6, (1, 2)), (0b111111,))
    with pytest.raises(CapExceeded):
        solve_selection(g, cap=4)


# -- one-shot interdiction ------------------------------------------------------------


def test_clique_blocked_by_one_vertex():
    base = make("clique-v", graph=graph(3, K3), k=3)
    v = solve_interdiction_simple(base, 0b111, 1)
    assert v.first_player_wins and v.details["blocker"] == 0b001


def test_zero_budget_blocks_only_no_instances():
    assert not solve_interdiction_simple(cnf("sat-v", 1, (1,)), 0b1, 0).first_player_wins
    assert solve_interdiction_simple(cnf("sat-v", 1, (1,), (-1,)), 0b1, 0).first_player_wins


def test_nothing_vulnerable():
    assert not solve_interdiction_simple(cnf("sat-v", 2, (1, 2)), 0, 5).first_player_wins


def test_empty_solution_cannot_be_hit():
    # the empty assignment satisfies (~x1), so no blocker meets it
    assert not solve_interdiction_cost(cnf("sat-v", 1, (-1,)), [0], 0).first_player_wins
    assert solve_interdiction_cost(cnf("sat-v", 1, (1,)), [0], 0).first_player_wins


@pytest.mark.parametrize(
    "costs,threshold,expected",
    # oracle, over (x1 | x2) & (~x1 | x3) whose solutions are {x2}, {x1,x3}, {x2,x3}, {x1,x2,x3}
    [((1, 1, 1), 0, False), ((1, -1, 2), 0, True), ((2, 2, 2), 1, False), ((0, 0, 0), 0, True), ((5, -3, 1), -2, True)],
)
def test_cost_interdiction_frozen(costs, threshold, expected):
    base = cnf("sat-v", 3, (1, 2), (-1, 3))
    assert solve_interdiction_cost(base, costs, threshold).first_player_wins is expected


def test_unit_cost_encoding_matches():
    base = make("vertex-cover", graph=graph(4, [(0, 1), (1, 2), (2, 3)]), k=2)
    for vulnerable in (0b0110, 0b1111, 0b0001):
        for budget in range(4):
            costs, t = unit_cost_encoding(base, vulnerable, budget)
            assert (
                solve_interdiction_cost(base, costs, t).first_player_wins
                == solve_interdiction_simple(base, vulnerable, budget).first_player_wins
            )


# -- protection interdiction ------------------------------------------------------------


@pytest.mark.parametrize(
    "clauses,nested,gp,gb,mode,expected",
    [
        # oracle
        ([(1, 2), (3,)], (0b011,), 1, 1, GLOBAL, False),
        ([(1, 2), (2, 3)], (0b001, 0b111), 1, 1, GLOBAL, True),
        ([(1, 2), (2, 3)], (0b001, 0b111), 1, 1, LOCAL, True),
        ([(1, 2), (2, 3)], (0b001, 0b111), 1, 2, GLOBAL, False),
        ([(1, 2), (-1, 3), (2, -3)], (0b001, 0b011, 0b111), 1, 1, GLOBAL, False),
        ([(1, 2), (-1, 3), (2, -3)], (0b001, 0b011, 0b111), 0, 1, GLOBAL, True),
    ],
)
def test_protection_frozen(clauses, nested, gp, gb, mode, expected):
    g = InterdictionGame(cnf("sat-v", 3, *clauses), nested, gp, gb, mode)
    v = solve_protection_interdiction(g)
    assert v.first_player_wins is expected
    assert replay_strategy(InterdictionPlay(g), v)


def test_two_moves_match_simple_interdiction():
    base = cnf("sat-v", 3, (1, 2), (2, 3))
    for c1 in (0b011, 0b111, 0b010):
        for gb in range(3):
            g = InterdictionGame(base, (c1,), 0, gb)
            assert solve_protection_interdiction(g).first_player_wins == solve_interdiction_simple(base, c1, gb).first_player_wins


def test_blocker_without_budget():
    yes, no = cnf("sat-v", 2, (1, 2)), cnf("sat-v", 1, (1,), (-1,))
    assert not solve_protection_interdiction(InterdictionGame(yes, (0b11,), 0, 0)).first_player_wins
    assert solve_protection_interdiction(InterdictionGame(no, (0b1,), 0, 0)).first_player_wins


def test_protector_with_free_hand():
    yes, no = cnf("sat-v", 2, (1, 2)), cnf("sat-v", 1, (1,), (-1,))
    assert solve_protection_interdiction(InterdictionGame(yes, (0b11, 0b11), 9, 0)).first_player_wins
    assert not solve_protection_interdiction(InterdictionGame(no, (0b1, 0b1), 9, 0)).first_player_wins


def test_nesting_checked():
    base = cnf("sat-v", 2, (1, 2))
    with pytest.raises(MalformedNesting):
        InterdictionGame(base, (0b11, 0b01), 1, 1)
    with pytest.raises(MalformedNesting):
        InterdictionGame(base, (0b100,), 1, 1)
    with pytest.raises(MalformedGame):
        InterdictionGame(base, (), 1, 1)
    with pytest.raises(MalformedGame):
        InterdictionGame(base, (0b1,), -1, 1)
    with pytest.raises(MalformedGame):
        InterdictionGame(base, (0b1,), 1, 1, "per-turn")


def test_local_mode_caps_each_move():
    play = InterdictionPlay(InterdictionGame(cnf("sat-v", 3, (1, 2, 3)), (0b111,), 0, 1, LOCAL))
    assert all(bin(m).count("1") <= 1 for m in play.moves(play.initial()))
    assert not play.legal(play.initial(), 0b011)


# -- adjustable ------------------------------------------------------------------------------


def _k4_game(budget: int, vulnerable: int = 0b010100) -> AdjustableGame:
    # stage one offers edges 0-1 and 1-2; the rest arrive in stage two
    base = make("uham-cycle", graph=graph(4, K4))
    return AdjustableGame(base, (0b001001, 0b110110), vulnerable, budget)


@pytest.mark.parametrize("budget,expected", [(0, True), (1, False), (2, False)])  # oracle
def test_adjustable_tour_toy(budget, expected):
    g = _k4_game(budget)
    v = solve_adjustable(g)
    assert v.first_player_wins is expected
    assert replay_strategy(AdjustablePlay(g), v)


def test_adjustable_nothing_vulnerable_is_feasibility():
    assert solve_adjustable(_k4_game(3, vulnerable=0)).first_player_wins
    empty = make("uham-cycle", graph=graph(4, [(0, 1), (1, 2), (2, 3)]))
    assert not solve_adjustable(AdjustableGame(empty, (0b011, 0b100), 0, 0)).first_player_wins


def test_adjustable_block_steps_limited_to_vulnerable():
    play = AdjustablePlay(_k4_game(1))
    state = play.play(play.initial(), 0b001001)
    assert set(play.moves(state)) == {0, 0b000100, 0b010000, 0b010100}
    assert not play.legal(state, 0b100000)


def test_adjustable_checks():
    base = make("uham-cycle", graph=graph(4, K4))
    with pytest.raises(MalformedGame):
        AdjustableGame(base, (0b001001, 0b010110), 0, 0)
    with pytest.raises(MalformedGame):
        AdjustableGame(base, (0b111111,), 1 << 6, 0)
    with pytest.raises(MalformedGame):
        AdjustableGame(base, (0b111111,), 0, -1)


# -- two-stage cost form -----------------------------------------------------------------------


@pytest.mark.parametrize(
    "c1,low,high,threshold,budget,expected,value",
    [
        # oracle verdicts; values checked by hand
        ((5, 5), (1, 1), (3, 3), 2, 1, True, 1),
        ((5, 5), (1, 1), (3, 3), 2, 2, False, 3),
        ((5, 5), (1, 1), (3, 3), 3, 2, True, 3),
        ((2, 5), (1, 1), (3, 3), 2, 2, True, 2),
    ],
)
def test_two_stage_frozen(c1, low, high, threshold, budget, expected, value):
    g = TwoStageCostGame(cnf("sat-v", 2, (1, 2)), c1, low, high, threshold, budget)
    v = solve_two_stage_cost(g)
    assert v.first_player_wins is expected
    assert v.details["value"] == value


def test_two_stage_infeasible_is_top():
    g = TwoStageCostGame(cnf("sat-v", 1, (1,), (-1,)), (0,), (0,), (0,), 100, 0)
    v = solve_two_stage_cost(g)
    assert not v.first_player_wins and v.details["value"] == "TOP"
    assert TOP > 10**18


def test_two_stage_flat_costs_ignore_budget():
    base = cnf("sat-v", 2, (1, 2))
    verdicts = {
        solve_two_stage_cost(TwoStageCostGame(base, (2, 2), (1, 1), (1, 1), 1, b)).first_player_wins for b in range(3)
    }
    assert verdicts == {True}


def test_two_stage_full_budget_is_worst_case():
    base = cnf("sat-v", 2, (1, 2))
    worst = solve_two_stage_cost(TwoStageCostGame(base, (5, 5), (1, 1), (3, 3), 3, 2))
    plain = solve_two_stage_cost(TwoStageCostGame(base, (5, 5), (3, 3), (3, 3), 3, 0))
    assert worst.details["value"] == plain.details["value"] == 3


@pytest.mark.parametrize("budget", [0, 1, 2])
def test_zero_one_encoding_matches(budget):
    g = _k4_game(budget)
    assert solve_two_stage_cost(zero_one_encoding(g)).first_player_wins == solve_adjustable(g).first_player_wins


def test_zero_one_encoding_needs_two_stages():
    base = make("uham-cycle", graph=graph(4, K4))
    with pytest.raises(MalformedGame):
        zero_one_encoding(AdjustableGame(base, (0b111111,), 0, 0))


def test_two_stage_cost_lengths():
    with pytest.raises(MalformedGame):
        TwoStageCostGame(cnf("sat-v", 2, (1, 2)), (1,), (1, 1), (1, 1), 0, 0)


# -- memo and threads -------------------------------------------------------------------


def test_memo_and_threads_agree():
    g = InterdictionGame(cnf("sat-v", 3, (1, 2), (-1, 3), (2, -3)), (0b001, 0b011, 0b111), 1, 1)
    base = solve_protection_interdiction(g)
    again = solve_protection_interdiction(g, memoize=False)
    threaded = solve_protection_interdiction(g, threads=3)
    assert base.first_player_wins == again.first_player_wins == threaded.first_player_wins
    assert again.nodes >= base.nodes
    assert solve_protection_interdiction(g).nodes == base.nodes
