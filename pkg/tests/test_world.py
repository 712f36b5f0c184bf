from __future__ import annotations

from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blockwords.world import (
    Action,
    Block,
    BlockSet,
    IllegalActionError,
    InvalidWordError,
    WorldState,
    apply,
    goal_satisfied,
    legal_actions,
    spellable,
    tower_reading,
)


@pytest.fixture
def ink_blocks():
    # ids: 0=i 1=n 2=k
    return BlockSet.from_letters("ink")


def test_three_singles_give_three_pickups(ink_blocks):
    state = WorldState.all_on_table([0, 1, 2])
    actions = legal_actions(state)
    assert actions == [Action("pick-up", 0), Action("pick-up", 1), Action("pick-up", 2)]


def test_holding_gives_putdown_and_stacks(ink_blocks):
    # holding i with one remaining tower [n, k]
    state = WorldState(towers=((1, 2),), held=0)
    actions = legal_actions(state)
    assert actions == [Action("put-down", 0), Action("stack", 0, 1)]


def test_zero_blocks_no_actions():
    state = WorldState(towers=(), held=None)
    assert legal_actions(state) == []


def test_stack_onto_tower(pinkt_blocks):
    # towers [[n,k]] held=i -> stack(i, n) -> [[i,n,k]]
    state = WorldState(towers=((2, 3),), held=1)
    nxt = apply(state, Action("stack", 1, 2))
    assert nxt.towers == ((1, 2, 3),)
    assert nxt.held is None
    assert pinkt_blocks.word(nxt.towers[0]) == "ink"


def test_unstack_is_inverse_of_stack():
    # towers [[t,p]] -> unstack(t, p) -> [[p]], holding t
    state = WorldState(towers=((0, 1),), held=None)
    nxt = apply(state, Action("unstack", 0, 1))
    assert nxt.towers == ((1,),)
    assert nxt.held == 0


def test_pickup_of_buried_block_is_illegal():
    state = WorldState(towers=((1, 0),), held=None)  # 1 sits on 0
    with pytest.raises(IllegalActionError):
        apply(state, Action("pick-up", 0))


def test_pickup_putdown_restores_table_state():
    state = WorldState.all_on_table([0, 1, 2])
    held = apply(state, Action("pick-up", 1))
    back = apply(held, Action("put-down", 1))
    assert sorted(back.towers) == sorted(state.towers)
    assert back.held is None


def test_tower_reading(pinkt_blocks):
    state = WorldState(towers=((1, 2, 3), (0,)), held=4)
    assert tower_reading(state, 0, pinkt_blocks) == "ink"
    assert tower_reading(state, 1, pinkt_blocks) == "p"
    with pytest.raises(IndexError):
        tower_reading(state, 2, pinkt_blocks)


def test_goal_satisfied_exact_match_only(pinkt_blocks):
    assert goal_satisfied(WorldState(towers=((0, 1, 2, 3), (4,))), "pink", pinkt_blocks)
    # junk above the word defeats the exact-match goal test
    assert not goal_satisfied(WorldState(towers=((4, 0, 1, 2, 3),)), "pink", pinkt_blocks)
    # held block defeats it too
    assert not goal_satisfied(WorldState(towers=((0, 1, 2, 3),), held=4), "pink", pinkt_blocks)
    # a second tower elsewhere is fine
    assert goal_satisfied(WorldState(towers=((1, 2, 3), (0,)), held=None), "ink", pinkt_blocks)


def test_spellable():
    letters = Counter("pinkt")
    assert spellable("pink", letters)
    assert not spellable("kink", letters)  # needs two k's
    with pytest.raises(InvalidWordError):
        spellable("ab", letters)
    with pytest.raises(InvalidWordError):
        spellable("", letters)


def test_goal_satisfied_implies_spellable(pinkt_blocks):
    state = WorldState(towers=((0, 1, 2, 3), (4,)))
    assert goal_satisfied(state, "pink", pinkt_blocks)
    assert spellable("pink", pinkt_blocks.letter_counts)


def test_block_validation():
    with pytest.raises(ValueError):
        Block(0, "A")
    with pytest.raises(ValueError):
        BlockSet([Block(0, "a"), Block(0, "b")])
    with pytest.raises(ValueError):
        WorldState(towers=((0,), (0,)))
    with pytest.raises(ValueError):
        WorldState(towers=((),))


@st.composite
def world_states(draw):
    n = draw(st.integers(min_value=1, max_value=6))
    ids = list(range(n))
    hold = draw(st.booleans()) and n > 1
    held = ids.pop() if hold else None
    towers = []
    while ids:
        k = draw(st.integers(min_value=1, max_value=len(ids)))
        towers.append(tuple(ids[:k]))
        ids = ids[k:]
    return WorldState(towers=tuple(towers), held=held)


@settings(max_examples=200, deadline=None)
@given(world_states(), st.randoms(use_true_random=False))
def test_apply_preserves_invariants_and_blocks(state, rnd):
    actions = legal_actions(state)
    assert len(set(actions)) == len(actions)
    assert actions == sorted(actions)
    if not actions:
        return
    action = rnd.choice(actions)
    nxt = apply(state, action)  # WorldState invariants checked in __post_init__
    assert nxt.block_ids() == state.block_ids()
