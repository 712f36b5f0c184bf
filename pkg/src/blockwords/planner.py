"""Boundedly rational agent model: budgeted real-time heuristic search over
per-goal value tables, and the Boltzmann action distribution it induces.

Each goal hypothesis owns a Policy whose value table stores estimated
cost-to-goal for canonicalized states. A policy update expands a bounded
neighborhood of the current state (breadth-first, or A*-style around its
neighbors) and sweeps Bellman backups over it, so value estimates sharpen
where the agent actually is. Action costs are all 1.
"""

from __future__ import annotations

import heapq
import itertools
import math
from collections import Counter, deque
from dataclasses import dataclass

from .world import (
    Action,
    BlockSet,
    WorldState,
    apply,
    goal_satisfied,
    legal_actions,
    spellable,
    successors,
)

BFS = "bfs"
ASTAR = "astar"

# Cap on brute-force letter-to-block assignments inside the heuristic; beyond
# it we drop the burial term, which only loosens the bound.
_MAX_ASSIGNMENTS = 256


@dataclass(frozen=True)
class PlannerParams:
    beta: float = 1.0
    budget: int = 100
    cadence: int = 2
    strategy: str = BFS

    def __post_init__(self) -> None:
        if self.strategy not in (BFS, ASTAR):
            raise ValueError(f"strategy must be {BFS!r} or {ASTAR!r}")
        if self.budget < 0 or self.cadence < 1:
            raise ValueError("budget must be >= 0 and cadence >= 1")


def _settled_len(tower_word: str, goal: str) -> int:
    """Longest k such that the tower's bottom k blocks spell the goal's last k letters."""
    for k in range(min(len(tower_word), len(goal)), 0, -1):
        if tower_word[-k:] == goal[-k:]:
            return k
    return 0


def heuristic(state: WorldState, goal: str, blocks: BlockSet) -> int:
    """Admissible cost-to-goal estimate: 2 per block that still has to move,
    plus 1 if a block is in hand.

    A goal block is settled when it and everything beneath it already spell
    the right word suffix at the bottom of a tower. Everything piled above a
    settled region must move, as must one block per missing goal letter plus
    whatever is piled on top of those. Tower choice and letter-to-block
    assignment are minimized so the estimate never exceeds the true cost,
    even with duplicate letters.
    """
    if goal_satisfied(state, goal, blocks):
        return 0
    held_flag = int(state.held is not None)
    held_letter = blocks.letter(state.held) if state.held is not None else None
    if not spellable(goal, Counter(blocks.letter(b) for b in _all_ids(state))):
        raise ValueError(f"goal {goal!r} is not spellable in this state")

    above: dict[int, frozenset[int]] = {}
    for tower in state.towers:
        for i, b in enumerate(tower):
            above[b] = frozenset(tower[:i])

    bases: list[tuple[frozenset[int], int, frozenset[int]]] = [(frozenset(), 0, frozenset())]
    for tower in state.towers:
        k = _settled_len(blocks.word(tower), goal)
        if k > 0:
            settled = frozenset(tower[len(tower) - k :])
            bases.append((settled, k, frozenset(tower[: len(tower) - k])))

    best = math.inf
    for settled, k, above_settled in bases:
        needed = list(goal[: len(goal) - k])
        if held_letter is not None and held_letter in needed:
            needed.remove(held_letter)
        candidates = []
        for letter in needed:
            cands = [
                b
                for b in above
                if blocks.letter(b) == letter and b not in settled
            ]
            candidates.append(cands)
        n_combos = math.prod(len(c) for c in candidates) if candidates else 1
        if n_combos == 0:
            continue  # letters locked in the settled region; another base must serve
        if n_combos > _MAX_ASSIGNMENTS:
            # Too many duplicate-letter assignments: keep only the guaranteed
            # terms (needed moves + clearing the base).
            best = min(best, len(needed) + len(above_settled))
            continue
        for combo in itertools.product(*candidates) if candidates else [()]:
            if len(set(combo)) != len(combo):
                continue
            assigned = set(combo)
            extra = set()
            for b in combo:
                if b not in above_settled:
                    extra |= above[b]
            extra -= assigned | above_settled
            best = min(best, len(needed) + len(above_settled) + len(extra))
    if not math.isfinite(best):
        best = 0
    return 2 * int(best) + held_flag


def _all_ids(state: WorldState):
    for tower in state.towers:
        yield from tower
    if state.held is not None:
        yield state.held


class Policy:
    """Per-goal value table refined by budgeted real-time heuristic search."""

    def __init__(self, goal: str, blocks: BlockSet, params: PlannerParams):
        self.goal = goal
        self.blocks = blocks
        self.params = params
        self.value_table: dict[tuple, float] = {}
        self.last_update_step = -1
        self._h_cache: dict[tuple, int] = {}

    def heuristic_value(self, state: WorldState) -> float:
        key = state.canonical()
        h = self._h_cache.get(key)
        if h is None:
            h = heuristic(state, self.goal, self.blocks)
            self._h_cache[key] = h
        return h

    def value(self, state: WorldState) -> float:
        """Stored value with heuristic fallback; 0 at goal states."""
        if goal_satisfied(state, self.goal, self.blocks):
            return 0.0
        stored = self.value_table.get(state.canonical())
        return stored if stored is not None else self.heuristic_value(state)

    def q_values(self, state: WorldState) -> dict[Action, float]:
        """Q(s, a) = 1 + V(apply(s, a)) for every legal action."""
        return {a: 1.0 + self.value(nxt) for a, nxt in successors(state)}

    def update(self, state: WorldState) -> "Policy":
        """One bounded search-and-backup pass around ``state``.

        Expands up to ``budget`` states (BFS frontier from the state, or an
        A*-style lookahead seeded at each neighbor), then Bellman-backs-up the
        expanded set deepest-first. Values never decrease.
        """
        if goal_satisfied(state, self.goal, self.blocks):
            self.value_table[state.canonical()] = 0.0
            return self
        if self.params.strategy == BFS:
            expanded = self._expand_bfs(state)
        else:
            expanded = self._expand_astar(state)
        # Deepest states first so frontier information flows inward in one sweep.
        order = sorted(range(len(expanded)), key=lambda i: (-expanded[i][1], -i))
        for i in order:
            s = expanded[i][0]
            key = s.canonical()
            backup = min(1.0 + self.value(nxt) for _a, nxt in successors(s))
            current = self.value_table.get(key)
            if current is None:
                current = float(self.heuristic_value(s))
            self.value_table[key] = max(current, backup)
        return self

    def _expand_bfs(self, state: WorldState) -> list[tuple[WorldState, int]]:
        expanded: list[tuple[WorldState, int]] = []
        seen = {state.canonical()}
        queue: deque[tuple[WorldState, int]] = deque([(state, 0)])
        budget = self.params.budget
        while queue and budget > 0:
            s, depth = queue.popleft()
            if goal_satisfied(s, self.goal, self.blocks):
                continue
            budget -= 1
            expanded.append((s, depth))
            for _a, nxt in successors(s):
                key = nxt.canonical()
                if key not in seen:
                    seen.add(key)
                    queue.append((nxt, depth + 1))
        return expanded

    def _expand_astar(self, state: WorldState) -> list[tuple[WorldState, int]]:
        expanded: list[tuple[WorldState, int]] = []
        counter = itertools.count()
        heap: list[tuple[float, int, WorldState, int]] = []
        seen = {state.canonical()}
        for _a, nxt in successors(state):
            key = nxt.canonical()
            if key not in seen:
                seen.add(key)
                heapq.heappush(heap, (1.0 + self.value(nxt), next(counter), nxt, 1))
        budget = self.params.budget
        while heap and budget > 0:
            _f, _c, s, g = heapq.heappop(heap)
            if goal_satisfied(s, self.goal, self.blocks):
                continue
            budget -= 1
            expanded.append((s, g))
            for _a, nxt in successors(s):
                key = nxt.canonical()
                if key not in seen:
                    seen.add(key)
                    heapq.heappush(heap, (g + 1.0 + self.value(nxt), next(counter), nxt, g + 1))
        expanded.append((state, 0))
        return expanded


def action_dist(policy: Policy, state: WorldState, beta: float) -> dict[Action, float]:
    """Boltzmann distribution exp(-beta * Q) over legal actions."""
    q = policy.q_values(state)
    if not q:
        raise ValueError("state has no legal actions")
    lowest = min(q.values())
    weights = {a: math.exp(-beta * (v - lowest)) for a, v in q.items()}
    total = sum(weights.values())
    return {a: w / total for a, w in weights.items()}


def step_loglik(
    policy: Policy, state: WorldState, action: Action, step: int, params: PlannerParams
) -> float:
    """Advance the policy on its cadence and score one observed action."""
    if (step - 1) % params.cadence == 0:
        policy.update(state)
        policy.last_update_step = step
    dist = action_dist(policy, state, params.beta)
    if action not in dist:
        raise ValueError(f"action {action} is not legal here")
    return math.log(dist[action])


def trajectory_loglik(
    goal: str,
    initial: WorldState,
    actions: list[Action],
    blocks: BlockSet,
    params: PlannerParams,
) -> tuple[float, Policy]:
    """Log probability of an action trace under one goal, plus the policy for reuse."""
    policy = Policy(goal, blocks, params)
    total = 0.0
    state = initial
    for step, action in enumerate(actions, start=1):
        total += step_loglik(policy, state, action, step, params)
        state = apply(state, action)
    return total, policy
