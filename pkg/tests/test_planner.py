from __future__ import annotations

import math
import random

import pytest

from blockwords.planner import (
    ASTAR,
    BFS,
    PlannerParams,
    Policy,
    action_dist,
    heuristic,
    step_loglik,
    trajectory_loglik,
)
from blockwords.world import (
    Action,
    BlockSet,
    WorldState,
    apply,
    goal_satisfied,
    legal_actions,
    spellable,
)
from oracles import bfs_optimal_cost, state_space_size


def random_state(rnd: random.Random, n: int, allow_held: bool = True) -> WorldState:
    ids = list(range(n))
    rnd.shuffle(ids)
    held = ids.pop() if allow_held and n > 1 and rnd.random() < 0.3 else None
    towers = []
    while ids:
        k = rnd.randint(1, len(ids))
        towers.append(tuple(ids[:k]))
        ids = ids[k:]
    return WorldState(towers=tuple(towers), held=held)


def random_instances(count: int, seed: int = 0, pool: str = "inkpta"):
    rnd = random.Random(seed)
    made = 0
    while made < count:
        n = rnd.randint(3, 5)
        letters = "".join(rnd.choice(pool) for _ in range(n))
        blocks = BlockSet.from_letters(letters)
        state = random_state(rnd, n)
        words = ["ink", "pin", "kit", "tin", "kin", "nit", "pit", "tip", "nip",
                 "ant", "tan", "pan", "nap", "pat", "tap", "pint", "knit", "pink",
                 "paint", "inapt"]
        options = [w for w in words if spellable(w, blocks.letter_counts)]
        if not options:
            continue
        goal = rnd.choice(options)
        made += 1
        yield state, goal, blocks


def converge(policy: Policy, state: WorldState, max_iters: int = 80) -> float:
    previous = -1.0
    for _ in range(max_iters):
        policy.update(state)
        value = policy.value(state)
        if value == previous:
            break
        previous = value
    return value


def test_heuristic_zero_iff_satisfied(pinkt_blocks):
    done = WorldState(towers=((0, 1, 2, 3), (4,)))
    assert heuristic(done, "pink", pinkt_blocks) == 0
    for state, goal, blocks in random_instances(60, seed=5):
        h = heuristic(state, goal, blocks)
        assert (h == 0) == goal_satisfied(state, goal, blocks)


def test_heuristic_all_on_table_example():
    blocks = BlockSet.from_letters("inkp")
    state = WorldState.all_on_table(range(4))
    assert heuristic(state, "ink", blocks) == 4
    assert bfs_optimal_cost(state, "ink", blocks) == 4


def test_heuristic_counts_burying_blocks(pinkt_blocks):
    # towers [[t,p],[i,n,k]]: p must move and t rests on top of it
    state = WorldState(towers=((4, 0), (1, 2, 3)))
    h = heuristic(state, "pink", pinkt_blocks)
    assert h == 4
    assert bfs_optimal_cost(state, "pink", pinkt_blocks) >= h


def test_heuristic_admissible_on_random_instances():
    for state, goal, blocks in random_instances(120, seed=11):
        optimal = bfs_optimal_cost(state, goal, blocks)
        if optimal is None:
            continue
        assert heuristic(state, goal, blocks) <= optimal


def test_heuristic_rejects_unspellable():
    blocks = BlockSet.from_letters("ink")
    with pytest.raises(ValueError):
        heuristic(WorldState.all_on_table(range(3)), "pink", blocks)


def test_zero_budget_leaves_table_empty(pinkt_blocks):
    state = WorldState.all_on_table(range(5))
    policy = Policy("ink", pinkt_blocks, PlannerParams(budget=0))
    policy.update(state)
    assert policy.value(state) == heuristic(state, "ink", pinkt_blocks)
    assert policy.value_table == {}


def test_goal_state_pinned_to_zero(pinkt_blocks):
    done = WorldState(towers=((1, 2, 3), (0,), (4,)))
    policy = Policy("ink", pinkt_blocks, PlannerParams(budget=50))
    policy.update(done)
    assert policy.value(done) == 0.0


@pytest.mark.parametrize("strategy", [BFS, ASTAR])
def test_converged_values_equal_bfs_optimum(strategy):
    for state, goal, blocks in random_instances(25, seed=23):
        optimal = bfs_optimal_cost(state, goal, blocks)
        if optimal is None:
            continue
        budget = state_space_size(state) + 1
        policy = Policy(goal, blocks, PlannerParams(budget=budget, strategy=strategy))
        assert converge(policy, state) == optimal


def test_value_monotonic_across_updates():
    rnd = random.Random(2)
    for state, goal, blocks in random_instances(15, seed=31):
        policy = Policy(goal, blocks, PlannerParams(budget=12))
        watched: dict = {}
        current = state
        for _ in range(12):
            policy.update(current)
            for key, value in watched.items():
                assert policy.value_table.get(key, value) >= value - 1e-12
            watched = dict(policy.value_table)
            actions = legal_actions(current)
            current = apply(current, rnd.choice(actions))


def test_greedy_rollout_reaches_goal_optimally(pinkt_blocks):
    state = WorldState.all_on_table(range(5))
    optimal = bfs_optimal_cost(state, "pink", pinkt_blocks)
    policy = Policy("pink", pinkt_blocks, PlannerParams(budget=2000))
    converge(policy, state)
    current, steps = state, 0
    while not goal_satisfied(current, "pink", pinkt_blocks) and steps < 50:
        q = policy.q_values(current)
        best = min(q.values())
        action = sorted(a for a, v in q.items() if v == best)[0]
        current = apply(current, action)
        policy.update(current)
        steps += 1
    assert goal_satisfied(current, "pink", pinkt_blocks)
    assert steps == optimal


def test_action_dist_values(pinkt_blocks):
    state = WorldState(towers=((2, 3),), held=1)  # holding i over [n,k]
    policy = Policy("ink", pinkt_blocks, PlannerParams(budget=500))
    converge(policy, state)
    dist = action_dist(policy, state, beta=1.0)
    assert sum(dist.values()) == pytest.approx(1.0, abs=1e-12)
    # stacking i on n finishes the word; it must dominate
    assert max(dist, key=dist.get) == Action("stack", 1, 2)


def test_action_dist_boltzmann_formula():
    # two actions with costs 2 and 4 at beta=1: P(best) = 1/(1+e^-2)
    class Fixed:
        def q_values(self, state):
            return {Action("pick-up", 0): 2.0, Action("pick-up", 1): 4.0}

    dist = action_dist(Fixed(), None, beta=1.0)
    assert dist[Action("pick-up", 0)] == pytest.approx(1 / (1 + math.exp(-2)))


def test_action_dist_beta_zero_uniform(pinkt_blocks):
    state = WorldState.all_on_table(range(5))
    policy = Policy("ink", pinkt_blocks, PlannerParams(budget=100))
    policy.update(state)
    dist = action_dist(policy, state, beta=0.0)
    for p in dist.values():
        assert p == pytest.approx(1 / len(dist))


def test_action_dist_shift_invariance(pinkt_blocks):
    state = WorldState.all_on_table(range(5))
    policy = Policy("ink", pinkt_blocks, PlannerParams(budget=200))
    policy.update(state)
    base = action_dist(policy, state, beta=1.3)

    q = policy.q_values(state)

    class Shifted:
        def q_values(self, _):
            return {a: v + 17.0 for a, v in q.items()}

    shifted = action_dist(Shifted(), state, beta=1.3)
    for action in base:
        assert shifted[action] == pytest.approx(base[action], abs=1e-12)


def test_trajectory_loglik_empty_and_forced(pinkt_blocks):
    state = WorldState.all_on_table(range(5))
    total, _ = trajectory_loglik("ink", state, [], pinkt_blocks, PlannerParams())
    assert total == 0.0
    # a single five-high tower leaves exactly one legal action (unstack the
    # top), so its log likelihood is 0 at any beta
    forced = WorldState(towers=((4, 0, 1, 2, 3),))
    for beta in (0.3, 1.0, 4.0):
        total, _ = trajectory_loglik(
            "ink",
            forced,
            [Action("unstack", 4, 0)],
            pinkt_blocks,
            PlannerParams(beta=beta, budget=0),
        )
        assert total == 0.0


def test_trajectory_loglik_matches_stepwise(pinkt_blocks):
    params = PlannerParams(budget=40, cadence=2)
    state = WorldState(towers=((2, 3), (0,), (4,), (1,)))
    actions = [Action("pick-up", 1), Action("stack", 1, 2), Action("pick-up", 0)]
    total, policy = trajectory_loglik("pink", state, actions, pinkt_blocks, params)

    fresh = Policy("pink", pinkt_blocks, params)
    check, current = 0.0, state
    for step, action in enumerate(actions, start=1):
        check += step_loglik(fresh, current, action, step, params)
        current = apply(current, action)
    assert total == pytest.approx(check, abs=1e-12)
    assert policy.value_table == fresh.value_table


def test_burying_action_penalizes_goal(pinkt_blocks, engine_cache, bundled_scenarios):
    """Stacking t on p hurts 'pink' far more than 'ink'."""
    scenario = bundled_scenarios["pink"]
    params = PlannerParams()
    pink_ll, _ = trajectory_loglik(
        "pink", scenario.initial, list(scenario.actions), pinkt_blocks, params
    )
    ink_ll, _ = trajectory_loglik(
        "ink", scenario.initial, list(scenario.actions), pinkt_blocks, params
    )
    # likelihood ratio moves strongly against pink once p is buried
    assert pink_ll - ink_ll < -1.0

    prefix = list(scenario.actions[:2])  # before the burying move
    pink_before, _ = trajectory_loglik("pink", scenario.initial, prefix, pinkt_blocks, params)
    ink_before, _ = trajectory_loglik("ink", scenario.initial, prefix, pinkt_blocks, params)
    assert (pink_ll - pink_before) < (ink_ll - ink_before)
