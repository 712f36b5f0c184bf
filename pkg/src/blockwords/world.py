"""Block Words domain: lettered blocks, towers, a hand, and word goals.

States are immutable; every operation here is a pure function, so states and
actions can be shared freely across threads and cached by identity-free
canonical keys. A tower is stored top-to-bottom, and a tower "reads" as the
word spelled from its top block down to its bottom block.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

WORD_MIN_LEN = 3
WORD_MAX_LEN = 8

PICK_UP = "pick-up"
PUT_DOWN = "put-down"
STACK = "stack"
UNSTACK = "unstack"

ACTION_KINDS = (PICK_UP, PUT_DOWN, STACK, UNSTACK)


class IllegalActionError(ValueError):
    """Raised when an action's precondition does not hold in a state."""


class InvalidWordError(ValueError):
    """Raised for goal strings outside the 3-8 lowercase a-z format."""


def validate_word(word: str) -> str:
    if not (WORD_MIN_LEN <= len(word) <= WORD_MAX_LEN):
        raise InvalidWordError(
            f"word must be {WORD_MIN_LEN}-{WORD_MAX_LEN} letters, got {word!r}"
        )
    if not word.isascii() or not word.islower() or not word.isalpha():
        raise InvalidWordError(f"word must be lowercase a-z, got {word!r}")
    return word


@dataclass(frozen=True)
class Block:
    id: int
    letter: str

    def __post_init__(self) -> None:
        if len(self.letter) != 1 or not ("a" <= self.letter <= "z"):
            raise ValueError(f"block letter must be a single a-z char, got {self.letter!r}")


class BlockSet:
    """The blocks of one scenario: an id -> letter table plus letter tallies."""

    def __init__(self, blocks: Iterable[Block]):
        blocks = tuple(blocks)
        ids = [b.id for b in blocks]
        if len(set(ids)) != len(ids):
            raise ValueError("block ids must be unique")
        self.blocks = blocks
        self._letters: dict[int, str] = {b.id: b.letter for b in blocks}
        self.letter_counts: Counter[str] = Counter(b.letter for b in blocks)
        self.distinct_letters: tuple[str, ...] = tuple(sorted(self.letter_counts))

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __eq__(self, other) -> bool:
        return isinstance(other, BlockSet) and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash(self.blocks)

    def letter(self, block_id: int) -> str:
        return self._letters[block_id]

    def word(self, block_ids: Iterable[int]) -> str:
        return "".join(self._letters[b] for b in block_ids)

    @classmethod
    def from_letters(cls, letters: Iterable[str]) -> "BlockSet":
        return cls(Block(i, letter) for i, letter in enumerate(letters))


@dataclass(frozen=True)
class WorldState:
    """Towers of block ids (each top-to-bottom) plus an optionally held block."""

    towers: tuple[tuple[int, ...], ...]
    held: int | None = None

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for tower in self.towers:
            if not tower:
                raise ValueError("towers may not be empty")
            seen.update(tower)
        total = sum(len(t) for t in self.towers) + (self.held is not None)
        if len(seen) + (self.held is not None) != total or (self.held in seen):
            raise ValueError("each block must appear exactly once across towers and hand")

    def block_ids(self) -> frozenset[int]:
        ids = set()
        for tower in self.towers:
            ids.update(tower)
        if self.held is not None:
            ids.add(self.held)
        return frozenset(ids)

    def canonical(self) -> tuple:
        """Hashable key that ignores tower presentation order."""
        cached = getattr(self, "_canonical", None)
        if cached is None:
            cached = (tuple(sorted(self.towers)), self.held)
            object.__setattr__(self, "_canonical", cached)
        return cached

    @classmethod
    def all_on_table(cls, block_ids: Iterable[int]) -> "WorldState":
        return cls(towers=tuple((b,) for b in block_ids), held=None)


@dataclass(frozen=True, order=True)
class Action:
    kind: str
    subject: int
    target: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in ACTION_KINDS:
            raise ValueError(f"unknown action kind {self.kind!r}")
        needs_target = self.kind in (STACK, UNSTACK)
        if needs_target != (self.target is not None):
            raise ValueError(f"{self.kind} target mismatch: {self}")


def legal_actions(state: WorldState) -> list[Action]:
    """All actions whose preconditions hold, in a fixed deterministic order."""
    actions: list[Action] = []
    if state.held is None:
        for tower in state.towers:
            top = tower[0]
            if len(tower) == 1:
                actions.append(Action(PICK_UP, top))
            else:
                actions.append(Action(UNSTACK, top, tower[1]))
    else:
        actions.append(Action(PUT_DOWN, state.held))
        for tower in state.towers:
            actions.append(Action(STACK, state.held, tower[0]))
    actions.sort()
    return actions


@lru_cache(maxsize=1 << 17)
def successors(state: WorldState) -> tuple[tuple[Action, "WorldState"], ...]:
    """(action, next state) for every legal action; cached because planners
    re-expand the same small state spaces constantly."""
    return tuple((a, apply(state, a)) for a in legal_actions(state))


def apply(state: WorldState, action: Action) -> WorldState:
    """Deterministic successor state; raises IllegalActionError on bad preconditions."""
    towers = state.towers
    if action.kind == PICK_UP:
        if state.held is not None:
            raise IllegalActionError(f"cannot pick up {action.subject}: hand is full")
        if (action.subject,) not in towers:
            raise IllegalActionError(
                f"cannot pick up {action.subject}: not alone on the table"
            )
        rest = tuple(t for t in towers if t != (action.subject,))
        return WorldState(rest, action.subject)
    if action.kind == UNSTACK:
        if state.held is not None:
            raise IllegalActionError(f"cannot unstack {action.subject}: hand is full")
        for i, tower in enumerate(towers):
            if len(tower) >= 2 and tower[0] == action.subject:
                if tower[1] != action.target:
                    raise IllegalActionError(
                        f"{action.subject} sits on {tower[1]}, not {action.target}"
                    )
                new = towers[:i] + (tower[1:],) + towers[i + 1 :]
                return WorldState(new, action.subject)
        raise IllegalActionError(f"cannot unstack {action.subject}: not a tower top")
    if action.kind == PUT_DOWN:
        if state.held != action.subject:
            raise IllegalActionError(f"not holding {action.subject}")
        return WorldState(towers + ((action.subject,),), None)
    # STACK
    if state.held != action.subject:
        raise IllegalActionError(f"not holding {action.subject}")
    for i, tower in enumerate(towers):
        if tower[0] == action.target:
            new = towers[:i] + (((action.subject,) + tower),) + towers[i + 1 :]
            return WorldState(new, None)
    raise IllegalActionError(f"cannot stack on {action.target}: not a tower top")


def tower_reading(state: WorldState, tower_index: int, blocks: BlockSet) -> str:
    """Letters of a tower read top-to-bottom."""
    return blocks.word(state.towers[tower_index])


def goal_satisfied(state: WorldState, goal: str, blocks: BlockSet) -> bool:
    """True iff the hand is empty and some tower spells the goal exactly."""
    if state.held is not None:
        return False
    return any(blocks.word(t) == goal for t in state.towers)


def spellable(goal: str, letters: Counter[str] | Mapping[str, int]) -> bool:
    """True iff the goal's letter multiset is contained in the available letters."""
    validate_word(goal)
    need = Counter(goal)
    return all(letters.get(ch, 0) >= n for ch, n in need.items())
