"""Scenario files: initial block layout, a recorded move sequence, judgment
points, and the word actually being spelled.

Traces are recorded at visible-movement granularity: each move names a block
and where it lands (another block's top, or the table). Replay expands a move
into the two primitive actions the agent model sees - the acquisition
(pick-up or unstack, inferred from where the block currently sits) followed by
the placement (stack or put-down). Judgment point indices refer to the
expanded primitive trace.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .world import (
    PICK_UP,
    PUT_DOWN,
    STACK,
    UNSTACK,
    Action,
    Block,
    BlockSet,
    WorldState,
    apply,
    spellable,
    validate_word,
)

CONDITIONS = (
    "bottom_up_friendly",
    "irrational_alternatives",
    "garden_path",
    "uncommon_words",
)


class ScenarioError(ValueError):
    """A scenario file violates the schema or describes an illegal trace."""


@dataclass(frozen=True)
class Move:
    """One visible block movement: ``block`` ends up on ``dest`` (None = table)."""

    block: int
    dest: int | None


@dataclass(frozen=True)
class Scenario:
    id: str
    condition: str
    blocks: BlockSet
    initial: WorldState
    moves: tuple[Move, ...]
    judgment_points: tuple[int, ...]
    true_word: str
    reconstructed: bool = False
    actions: tuple[Action, ...] = ()
    states: tuple[WorldState, ...] = ()

    @property
    def final_state(self) -> WorldState:
        return self.states[-1]


def expand_move(state: WorldState, move: Move) -> tuple[Action, Action]:
    """The (acquire, place) primitive pair realizing one recorded move."""
    if state.held is not None:
        raise ScenarioError("moves must start with an empty hand")
    acquire = None
    for tower in state.towers:
        if tower[0] == move.block:
            acquire = (
                Action(PICK_UP, move.block)
                if len(tower) == 1
                else Action(UNSTACK, move.block, tower[1])
            )
            break
    if acquire is None:
        raise ScenarioError(f"block {move.block} is buried; move is not replayable")
    place = (
        Action(PUT_DOWN, move.block)
        if move.dest is None
        else Action(STACK, move.block, move.dest)
    )
    return acquire, place


def build_scenario(
    id: str,
    condition: str,
    blocks: BlockSet,
    initial: WorldState,
    moves: list[Move] | tuple[Move, ...],
    judgment_points: list[int] | tuple[int, ...],
    true_word: str,
    reconstructed: bool = False,
) -> Scenario:
    """Validate the pieces and expand moves into the primitive trace."""
    if condition not in CONDITIONS:
        raise ScenarioError(f"unknown condition {condition!r}")
    validate_word(true_word)
    if not spellable(true_word, blocks.letter_counts):
        raise ScenarioError(f"true word {true_word!r} is not spellable from the blocks")
    if initial.block_ids() != {b.id for b in blocks}:
        raise ScenarioError("initial state must place exactly the scenario blocks")

    actions: list[Action] = []
    states = [initial]
    for move in moves:
        try:
            for action in expand_move(states[-1], move):
                actions.append(action)
                states.append(apply(states[-1], action))
        except ScenarioError:
            raise
        except ValueError as exc:
            raise ScenarioError(f"illegal move {move}: {exc}") from exc

    points = tuple(judgment_points)
    if any(b <= a for a, b in zip(points, points[1:])):
        raise ScenarioError("judgment points must be strictly increasing")
    if points and not (1 <= points[0] and points[-1] <= len(actions)):
        raise ScenarioError(
            f"judgment points must lie in 1..{len(actions)}, got {points}"
        )
    return Scenario(
        id=id,
        condition=condition,
        blocks=blocks,
        initial=initial,
        moves=tuple(moves),
        judgment_points=points,
        true_word=true_word,
        reconstructed=reconstructed,
        actions=tuple(actions),
        states=tuple(states),
    )


def scenario_to_dict(scenario: Scenario) -> dict:
    return {
        "id": scenario.id,
        "condition": scenario.condition,
        "reconstructed": scenario.reconstructed,
        "true_word": scenario.true_word,
        "blocks": [{"id": b.id, "letter": b.letter} for b in scenario.blocks],
        "initial_towers": [list(t) for t in scenario.initial.towers],
        "moves": [{"block": m.block, "to": m.dest} for m in scenario.moves],
        "judgment_points": list(scenario.judgment_points),
    }


def scenario_from_dict(data: dict) -> Scenario:
    try:
        blocks = BlockSet(Block(b["id"], b["letter"]) for b in data["blocks"])
        initial = WorldState(
            towers=tuple(tuple(t) for t in data["initial_towers"]), held=None
        )
        moves = [Move(m["block"], m["to"]) for m in data["moves"]]
        return build_scenario(
            id=data["id"],
            condition=data["condition"],
            blocks=blocks,
            initial=initial,
            moves=moves,
            judgment_points=data["judgment_points"],
            true_word=data["true_word"],
            reconstructed=bool(data.get("reconstructed", False)),
        )
    except KeyError as exc:
        raise ScenarioError(f"scenario is missing required field {exc}") from exc
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ScenarioError):
            raise
        raise ScenarioError(str(exc)) from exc


def save_scenario(scenario: Scenario, path: str | Path) -> None:
    """Write the canonical form; loading it back reproduces the bytes."""
    payload = json.dumps(scenario_to_dict(scenario), indent=2) + "\n"
    tmp = Path(path).with_suffix(".tmp")
    tmp.write_text(payload, encoding="utf-8")
    tmp.replace(path)


def load_scenario(path: str | Path) -> Scenario:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{path}: not valid JSON: {exc}") from exc
    try:
        return scenario_from_dict(data)
    except ScenarioError as exc:
        raise ScenarioError(f"{path}: {exc}") from exc


def load_scenario_dir(directory: str | Path) -> list[Scenario]:
    return [load_scenario(p) for p in sorted(Path(directory).glob("*.json"))]
