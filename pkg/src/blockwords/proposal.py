"""Bottom-up goal proposals: guess complete words from the towers on the board.

Every strategy ultimately picks some partial word (a tower reading, real or
hypothetical) and auto-completes it through the n-gram under trie and
letter-availability constraints. The returned aux_weight is the completion
probability conditional on the chosen tower/branch; the tower choice itself is
auxiliary randomness, compensated downstream by unbiased importance weights.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .lexicon import CharNGram, Trie, sample_completion
from .world import STACK, UNSTACK, Action, BlockSet, WorldState

ANY_TOWER = "any_tower"
LAST_TOWER = "last_tower"
NEXT_TOWER = "next_tower"
LAST_AND_NEXT = "last_and_next"

STRATEGIES = (ANY_TOWER, LAST_TOWER, NEXT_TOWER, LAST_AND_NEXT)


class NoFeasibleProposalError(ValueError):
    """No tower reading can be completed into any dictionary word."""


@dataclass(frozen=True)
class ProposalConfig:
    strategy: str
    ngram: CharNGram
    trie: Trie
    blocks: BlockSet

    def __post_init__(self) -> None:
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown proposal strategy {self.strategy!r}")


@dataclass
class ProposalSample:
    """One sampled goal with its importance-weight denominator.

    ``completion_prob`` is the trie-constrained completion probability given
    the branch actually taken; ``reach_mass`` is the total probability of the
    branches that could have produced this word at all. Their product is the
    unbiased-density-sampler weight: E[aux_weight^-1 | word] equals the
    inverse marginal proposal probability of the word.
    """

    word: str
    aux_weight: float
    branch_trace: list[str] = field(default_factory=list)
    completion_prob: float = 1.0
    reach_mass: float = 1.0


@dataclass(frozen=True)
class Branch:
    """One leaf of the strategy's branch mixture: complete ``reading`` using
    letters outside ``used``, entered with probability ``prob``."""

    label: str
    reading: str
    used: tuple[int, ...]
    prob: float


def _available_letters(blocks: BlockSet, used: tuple[int, ...]) -> Counter[str]:
    counts = Counter(blocks.letter_counts)
    for b in used:
        counts[blocks.letter(b)] -= 1
    return +counts


def _feasible(config: ProposalConfig, reading: str, used: tuple[int, ...]) -> bool:
    node = config.trie.walk(reading[::-1])
    if node is None:
        return False
    return node.completable(_available_letters(config.blocks, used))


def _complete(
    config: ProposalConfig,
    reading: str,
    used: tuple[int, ...],
    rng: np.random.Generator,
    trace: list[str],
) -> ProposalSample:
    word, q = sample_completion(
        config.ngram, reading, _available_letters(config.blocks, used), config.trie, rng
    )
    return ProposalSample(word, q, trace)


def _random_tower_prob(config: ProposalConfig, height: int) -> float:
    """Chance that ``height`` uniform draws over the scenario's distinct block
    letters reproduce some particular tower; the word-likeness benchmark."""
    return (1.0 / len(config.blocks.distinct_letters)) ** height


def _weighted_pick(rng: np.random.Generator, weights: list[float]) -> int:
    arr = np.asarray(weights, dtype=float)
    total = arr.sum()
    if total <= 0:
        arr = np.ones(len(arr))
        total = arr.sum()
    return int(rng.choice(len(arr), p=arr / total))


def propose_any_tower(
    state: WorldState,
    config: ProposalConfig,
    rng: np.random.Generator,
    trace: list[str] | None = None,
) -> ProposalSample:
    """Pick a completable tower with probability proportional to how word-like
    it reads, then complete it."""
    trace = [] if trace is None else trace
    trace.append(ANY_TOWER)
    feasible = [
        (tower, config.ngram.sequence_prob(config.blocks.word(tower)))
        for tower in state.towers
        if _feasible(config, config.blocks.word(tower), tower)
    ]
    if not feasible:
        raise NoFeasibleProposalError("no tower reading can be completed")
    idx = _weighted_pick(rng, [w for _, w in feasible])
    tower = feasible[idx][0]
    trace.append(f"tower:{config.blocks.word(tower)}")
    return _complete(config, config.blocks.word(tower), tower, rng, trace)


def _stacked_tower(state: WorldState, action: Action) -> tuple[int, ...] | None:
    if action.kind != STACK:
        return None
    for tower in state.towers:
        if tower[0] == action.subject:
            return tower
    return None


def propose_last_tower(
    state: WorldState,
    action: Action,
    config: ProposalConfig,
    rng: np.random.Generator,
    trace: list[str] | None = None,
    fall_to_next: bool = False,
) -> ProposalSample:
    """Try to complete the tower the agent just stacked onto.

    Falls back (to any-tower, or to next-tower when ``fall_to_next``) if the
    action wasn't a stack, the new tower can't be completed, or a coin flip
    weighted by word-likeness against random-blocks chance says it isn't
    word-like enough.
    """
    trace = [] if trace is None else trace

    def fall(reason: str) -> ProposalSample:
        trace.append(reason)
        if fall_to_next:
            return propose_next_tower(state, action, config, rng, trace=trace)
        return propose_any_tower(state, config, rng, trace=trace)

    tower = _stacked_tower(state, action)
    if tower is None:
        return fall("last:not_stack")
    reading = config.blocks.word(tower)
    p_last = config.ngram.sequence_prob(reading)
    p_rand = _random_tower_prob(config, len(reading))
    gate = p_last / (p_last + p_rand) if p_last + p_rand > 0 else 0.0
    if not _feasible(config, reading, tower) or rng.random() >= gate:
        return fall("last:gate_fail")
    trace.append("last:complete")
    return _complete(config, reading, tower, rng, trace)


def _next_tower_candidates(
    state: WorldState, action: Action, config: ProposalConfig
) -> list[tuple[str, tuple[int, ...]]]:
    """Hypothetical towers from placing a just-uncovered (or held) block onto
    an existing tower top: (reading, block ids used) pairs."""
    source: tuple[int, ...] = ()
    for tower in state.towers:
        if tower[0] == action.target:
            source = tower
            break
    movable = list(source)
    if state.held == action.subject:
        movable.append(action.subject)
    candidates = []
    for block in movable:
        for tower in state.towers:
            if block in tower:
                continue  # a buried block can't land on its own tower
            reading = config.blocks.letter(block) + config.blocks.word(tower)
            candidates.append((reading, (block,) + tower))
    return candidates


def propose_next_tower(
    state: WorldState,
    action: Action,
    config: ProposalConfig,
    rng: np.random.Generator,
    trace: list[str] | None = None,
) -> ProposalSample:
    """After an unstack, guess that a block from the dug-into tower is headed
    for some other tower top; complete the best-looking such placement."""
    trace = [] if trace is None else trace
    if action.kind != UNSTACK:
        trace.append("next:not_unstack")
        return propose_any_tower(state, config, rng, trace=trace)
    scored = [
        (reading, used, config.ngram.sequence_prob(reading))
        for reading, used in _next_tower_candidates(state, action, config)
        if _feasible(config, reading, used)
    ]
    if not scored:
        trace.append("next:no_candidates")
        return propose_any_tower(state, config, rng, trace=trace)
    best = max(scored, key=lambda item: item[2])
    p_rand = _random_tower_prob(config, len(best[0]))
    gate = best[2] / (best[2] + p_rand) if best[2] + p_rand > 0 else 0.0
    if rng.random() >= gate:
        trace.append("next:gate_fail")
        return propose_any_tower(state, config, rng, trace=trace)
    idx = _weighted_pick(rng, [s for _, _, s in scored])
    reading, used, _ = scored[idx]
    trace.append(f"next:candidate:{reading}")
    return _complete(config, reading, used, rng, trace)


def propose_last_and_next(
    state: WorldState,
    action: Action,
    config: ProposalConfig,
    rng: np.random.Generator,
    trace: list[str] | None = None,
) -> ProposalSample:
    """last-tower, except both of its failure modes route to next-tower."""
    return propose_last_tower(
        state, action, config, rng, trace=trace, fall_to_next=True
    )


def _any_branches(
    state: WorldState, config: ProposalConfig, weight: float
) -> list[Branch]:
    if weight <= 0:
        return []
    feasible = [
        (tower, config.ngram.sequence_prob(config.blocks.word(tower)))
        for tower in state.towers
        if _feasible(config, config.blocks.word(tower), tower)
    ]
    if not feasible:
        return []  # the sampler fails here; this mass is lost, not redistributed
    total = sum(w for _, w in feasible)
    shares = (
        [w / total for _, w in feasible]
        if total > 0
        else [1.0 / len(feasible)] * len(feasible)
    )
    return [
        Branch(ANY_TOWER, config.blocks.word(tower), tower, weight * share)
        for (tower, _), share in zip(feasible, shares)
    ]


def _next_branches(
    state: WorldState, action: Action, config: ProposalConfig, weight: float
) -> list[Branch]:
    if weight <= 0:
        return []
    if action.kind != UNSTACK:
        return _any_branches(state, config, weight)
    scored = [
        (reading, used, config.ngram.sequence_prob(reading))
        for reading, used in _next_tower_candidates(state, action, config)
        if _feasible(config, reading, used)
    ]
    if not scored:
        return _any_branches(state, config, weight)
    best = max(scored, key=lambda item: item[2])
    p_rand = _random_tower_prob(config, len(best[0]))
    gate = best[2] / (best[2] + p_rand) if best[2] + p_rand > 0 else 0.0
    total = sum(s for _, _, s in scored)
    shares = (
        [s / total for _, _, s in scored]
        if total > 0
        else [1.0 / len(scored)] * len(scored)
    )
    branches = [
        Branch(NEXT_TOWER, reading, used, weight * gate * share)
        for (reading, used, _), share in zip(scored, shares)
    ]
    return branches + _any_branches(state, config, weight * (1.0 - gate))


def _last_branches(
    state: WorldState,
    action: Action,
    config: ProposalConfig,
    weight: float,
    fall_to_next: bool,
) -> list[Branch]:
    def fall(mass: float) -> list[Branch]:
        if fall_to_next:
            return _next_branches(state, action, config, mass)
        return _any_branches(state, config, mass)

    tower = _stacked_tower(state, action)
    if tower is None:
        return fall(weight)
    reading = config.blocks.word(tower)
    p_last = config.ngram.sequence_prob(reading)
    p_rand = _random_tower_prob(config, len(reading))
    gate = p_last / (p_last + p_rand) if p_last + p_rand > 0 else 0.0
    if not _feasible(config, reading, tower):
        gate = 0.0
    branches = []
    if gate > 0:
        branches.append(Branch(LAST_TOWER, reading, tower, weight * gate))
    return branches + fall(weight * (1.0 - gate))


def branch_mixture(
    state: WorldState, action: Action, config: ProposalConfig
) -> list[Branch]:
    """The exact distribution over completion branches that propose() samples.

    Probabilities may sum to less than 1: the remainder is the chance the
    sampler finds nothing completable and the slot stays empty.
    """
    if config.strategy == ANY_TOWER:
        return _any_branches(state, config, 1.0)
    if config.strategy == LAST_TOWER:
        return _last_branches(state, action, config, 1.0, fall_to_next=False)
    if config.strategy == NEXT_TOWER:
        return _next_branches(state, action, config, 1.0)
    return _last_branches(state, action, config, 1.0, fall_to_next=True)


def reach_mass(word: str, branches: list[Branch], config: ProposalConfig) -> float:
    """Total probability of the branches whose completion could emit ``word``:
    the word must extend the branch reading using only letters still free."""
    total = 0.0
    for branch in branches:
        if not word.endswith(branch.reading):
            continue
        prefix = Counter(word[: len(word) - len(branch.reading)])
        available = _available_letters(config.blocks, branch.used)
        if all(available.get(ch, 0) >= n for ch, n in prefix.items()):
            total += branch.prob
    return total


def propose(
    state: WorldState,
    action: Action,
    config: ProposalConfig,
    rng: np.random.Generator,
    branches: list[Branch] | None = None,
) -> ProposalSample:
    """Draw one goal hypothesis from the configured strategy.

    ``branches`` may carry a precomputed branch_mixture for the same
    (state, action) to avoid recomputing it per draw.
    """
    if config.strategy == ANY_TOWER:
        sample = propose_any_tower(state, config, rng)
    elif config.strategy == LAST_TOWER:
        sample = propose_last_tower(state, action, config, rng)
    elif config.strategy == NEXT_TOWER:
        sample = propose_next_tower(state, action, config, rng)
    else:
        sample = propose_last_and_next(state, action, config, rng)
    if branches is None:
        branches = branch_mixture(state, action, config)
    sample.completion_prob = sample.aux_weight
    sample.reach_mass = reach_mass(sample.word, branches, config)
    sample.aux_weight = sample.completion_prob * sample.reach_mass
    return sample
