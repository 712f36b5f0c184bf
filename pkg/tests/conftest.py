from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from blockwords.harness import (
    BUNDLED_SCENARIOS,
    EngineCache,
    MethodSpec,
    load_bundled_lexicon,
)
from blockwords.lexicon import Lexicon
from blockwords.scenario import Move, build_scenario
from blockwords.world import BlockSet, WorldState


@pytest.fixture(scope="session")
def bundled_lexicon():
    return load_bundled_lexicon()


@pytest.fixture(scope="session")
def engine_cache(bundled_lexicon):
    return EngineCache(bundled_lexicon)


@pytest.fixture(scope="session")
def bundled_scenarios():
    from blockwords.scenario import load_scenario_dir

    return {s.id: s for s in load_scenario_dir(BUNDLED_SCENARIOS)}


@pytest.fixture
def tiny_lexicon():
    return Lexicon({"ink": 30.0, "pink": 220.0, "kin": 6.0})


@pytest.fixture
def pinkt_blocks():
    # ids: 0=p 1=i 2=n 3=k 4=t
    return BlockSet.from_letters("pinkt")


def make_mini_scenario(
    name: str,
    letters: str,
    towers: list[tuple[int, ...]],
    moves: list[tuple[int, int | None]],
    true_word: str,
    condition: str = "bottom_up_friendly",
):
    blocks = BlockSet.from_letters(letters)
    placed = {b for t in towers for b in t}
    all_towers = list(towers) + [(i,) for i in range(len(letters)) if i not in placed]
    initial = WorldState(towers=tuple(all_towers))
    move_objs = [Move(b, d) for b, d in moves]
    points = [2 * (i + 1) for i in range(len(move_objs))]
    return build_scenario(
        id=name,
        condition=condition,
        blocks=blocks,
        initial=initial,
        moves=move_objs,
        judgment_points=points,
        true_word=true_word,
    )


@pytest.fixture(scope="session")
def small_fixture_scenarios(bundled_scenarios):
    """Five scenarios with <= 5 blocks and <= 30-word supports for the
    oracle-equivalence and convergence suites.

    Their traces leave every letter reachable early on, so the proposal can
    eventually surface every posterior-relevant word (no coverage floor).
    """
    # letters "pinkt": ids 0=p 1=i 2=n 3=k 4=t; "aftre": 0=a 1=f 2=t 3=r 4=e
    knit = make_mini_scenario(
        "knit-mini", "pinkt", [], [(1, 4), (2, 1), (3, 2)], "knit"
    )
    tin = make_mini_scenario(
        "tin-mini", "pinkt", [(0, 2)], [(0, 3), (1, 2), (4, 1)], "tin"
    )
    rate = make_mini_scenario(
        "rate-mini", "aftre", [(1, 2)], [(1, None), (2, 4), (0, 2), (3, 0)], "rate"
    )
    return [
        knit,
        bundled_scenarios["aft"],
        bundled_scenarios["barn"],
        tin,
        rate,
    ]


@pytest.fixture(scope="session")
def exact_spec():
    return MethodSpec(method="exact")
