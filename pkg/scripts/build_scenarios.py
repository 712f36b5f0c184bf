#!/usr/bin/env python3
"""Author the 16 bundled scenarios (4 per condition) and write them to
src/blockwords/data/scenarios/. The pink, stake, mother, drains, and chump
layouts are reconstructions of published storyboards; the rest are original
but follow the same condition designs. Run from the repository root.
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from blockwords.scenario import Move, build_scenario, expand_move, save_scenario
from blockwords.world import BlockSet, WorldState, apply


def make(
    name: str,
    condition: str,
    letters: str,
    towers: list[str],
    moves: list[tuple[str, str | None]],
    true_word: str,
    reconstructed: bool = False,
):
    """letters: one char per block, index = block id. towers: strings of
    letters top-to-bottom using each block exactly once (unlisted letters
    start alone on the table). moves: (block letter, dest letter or None)."""
    blocks = BlockSet.from_letters(letters)
    remaining = list(range(len(letters)))

    def grab(letter: str) -> int:
        for b in remaining:
            if letters[b] == letter:
                remaining.remove(b)
                return b
        raise ValueError(f"{name}: no unused block for letter {letter!r}")

    tower_ids = [tuple(grab(ch) for ch in tower) for tower in towers]
    tower_ids += [(b,) for b in list(remaining)]
    initial = WorldState(towers=tuple(tower_ids))

    # Moves name blocks by letter; with duplicate letters the first matching
    # *movable* block is used, which suffices for these fixtures.
    state = initial
    move_objs = []
    for letter, dest in moves:
        subject = None
        for tower in state.towers:
            if letters[tower[0]] == letter:
                subject = tower[0]
                break
        if subject is None:
            raise ValueError(f"{name}: no movable block with letter {letter!r}")
        dest_id = None
        if dest is not None:
            for tower in state.towers:
                if letters[tower[0]] == dest and tower[0] != subject:
                    dest_id = tower[0]
                    break
            if dest_id is None:
                raise ValueError(f"{name}: no tower top with letter {dest!r}")
        move = Move(subject, dest_id)
        move_objs.append(move)
        for action in expand_move(state, move):
            state = apply(state, action)

    judgment_points = [2 * (i + 1) for i in range(len(move_objs))]
    return build_scenario(
        id=name,
        condition=condition,
        blocks=blocks,
        initial=initial,
        moves=move_objs,
        judgment_points=judgment_points,
        true_word=true_word,
        reconstructed=reconstructed,
    )


SCENARIOS = [
    # --- bottom-up friendly: words stacked more-or-less linearly
    make(
        "drains", "bottom_up_friendly", "drainspe",
        towers=[],
        moves=[("n", "s"), ("i", "p"), ("i", "n"), ("a", "i"), ("r", "a"), ("d", "r")],
        true_word="drains", reconstructed=True,
    ),
    make(
        "song", "bottom_up_friendly", "songtea",
        towers=[],
        moves=[("n", "g"), ("o", "n"), ("s", "o")],
        true_word="song",
    ),
    make(
        "plane", "bottom_up_friendly", "planedsi",
        towers=[],
        moves=[("n", "e"), ("a", "n"), ("l", "a"), ("p", "l")],
        true_word="plane",
    ),
    make(
        "forest", "bottom_up_friendly", "forestmad",
        towers=[],
        moves=[("s", "t"), ("e", "s"), ("r", "e"), ("o", "r"), ("f", "o")],
        true_word="forest",
    ),
    # --- irrational alternatives: bottom-up guesses get contradicted
    make(
        "pink", "irrational_alternatives", "pinkt",
        towers=["nk"],
        moves=[("i", "n"), ("t", "p")],
        true_word="knit", reconstructed=True,
    ),
    make(
        "stake", "irrational_alternatives", "stakemf",
        towers=["mt"],
        moves=[("k", "e"), ("a", "k"), ("m", "f"), ("t", "a"), ("s", "t")],
        true_word="stake", reconstructed=True,
    ),
    make(
        "crane", "irrational_alternatives", "craneb",
        towers=["rb"],
        moves=[("n", "e"), ("a", "n"), ("r", "a"), ("c", "r")],
        true_word="crane",
    ),
    make(
        "store", "irrational_alternatives", "storeh",
        towers=["th"],
        moves=[("r", "e"), ("o", "r"), ("t", "o"), ("s", "t")],
        true_word="store",
    ),
    # --- garden paths: early actions suggest the wrong word
    make(
        "mother", "garden_path", "motherausc",
        towers=["oe", "tr"],
        moves=[("o", "m"), ("t", "o"), ("e", "r"), ("h", "e"), ("t", "h"), ("o", "t"), ("m", "o")],
        true_word="mother", reconstructed=True,
    ),
    make(
        "carpet", "garden_path", "carpets",
        towers=["sp"],
        moves=[("s", "e"), ("s", None), ("e", "t"), ("p", "e"), ("r", "p"), ("a", "r"), ("c", "a")],
        true_word="carpet",
    ),
    make(
        "candle", "garden_path", "candleus",
        towers=["dl", "ne"],
        moves=[("n", "s"), ("d", "u"), ("l", "e"), ("d", "l"), ("n", "d"), ("a", "n"), ("c", "a")],
        true_word="candle",
    ),
    make(
        "barn", "garden_path", "barno",
        towers=["oa"],
        moves=[("r", "n"), ("o", "r"), ("o", None), ("a", "r"), ("b", "a")],
        true_word="barn",
    ),
    # --- uncommon words: rare goals behind common distractors
    make(
        "chump", "uncommon_words", "chumpjb",
        towers=["jp"],
        moves=[("j", "b"), ("m", "p"), ("u", "m"), ("h", "u"), ("c", "h")],
        true_word="chump", reconstructed=True,
    ),
    make(
        "aft", "uncommon_words", "aftre",
        towers=[],
        moves=[("f", "t"), ("a", "f")],
        true_word="aft",
    ),
    make(
        "wizard", "uncommon_words", "wizardse",
        towers=[],
        moves=[("r", "d"), ("a", "r"), ("z", "a"), ("i", "z"), ("w", "i")],
        true_word="wizard",
    ),
    make(
        "banish", "uncommon_words", "banishte",
        towers=[],
        moves=[("s", "h"), ("i", "s"), ("n", "i"), ("a", "n"), ("b", "a")],
        true_word="banish",
    ),
]


def main() -> None:
    root = Path(__file__).resolve().parent.parent
    dest = root / "src" / "blockwords" / "data" / "scenarios"
    dest.mkdir(parents=True, exist_ok=True)
    for scenario in SCENARIOS:
        path = dest / f"{scenario.id}.json"
        save_scenario(scenario, path)
        print(
            f"{scenario.id:8s} {scenario.condition:24s} blocks={len(scenario.blocks)} "
            f"actions={len(scenario.actions)} true={scenario.true_word}"
        )


if __name__ == "__main__":
    main()
