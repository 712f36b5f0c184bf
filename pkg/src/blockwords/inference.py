"""Three ways to infer the word being spelled: exact enumerative inverse
planning, the open-ended particle filter that injects bottom-up proposals,
and pure proposal sampling with no planning at all.

Particle weights live in log space on the unnormalized joint scale
P(g, actions so far), so freshly proposed hypotheses (weighted by prior x
likelihood / proposal) are directly commensurable with particles that have
survived resampling. Snapshots normalize on the way out.

All randomness is drawn from counter-based streams keyed by
(seed, step, slot), so runs are bit-reproducible regardless of evaluation
order and sessions can be rolled back by replay.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .lexicon import GoalPrior
from .planner import PlannerParams, Policy, step_loglik, trajectory_loglik
from .proposal import NoFeasibleProposalError, ProposalConfig, branch_mixture, propose
from .scenario import Scenario
from .world import Action, WorldState, apply

_RESAMPLE_SLOT = 1 << 20

PROPOSAL_WEIGHTING_COUNTS = "counts"
PROPOSAL_WEIGHTING_PRIOR = "prior"


@dataclass(frozen=True)
class InferenceConfig:
    prior: GoalPrior
    proposal: ProposalConfig
    planner: PlannerParams = PlannerParams()
    proposal_only_weighting: str = PROPOSAL_WEIGHTING_COUNTS


@dataclass
class Particle:
    goal: str
    policy: Policy
    log_weight: float
    cum_loglik: float


@dataclass(frozen=True)
class PosteriorSnapshot:
    step: int
    probs: dict[str, float]
    unique_count: int
    evaluations: int
    degenerate: bool = False

    def top(self, k: int = 5) -> list[tuple[str, float]]:
        return sorted(self.probs.items(), key=lambda kv: (-kv[1], kv[0]))[:k]


@dataclass
class ParticleCollection:
    n_target: int
    seed: int
    initial: WorldState
    state: WorldState
    step: int = 0
    particles: list[Particle] = field(default_factory=list)
    history: list[Action] = field(default_factory=list)
    evaluations: int = 0
    degenerate: bool = False

    def snapshot(self) -> PosteriorSnapshot:
        finite = [p for p in self.particles if math.isfinite(p.log_weight)]
        if not finite:
            return PosteriorSnapshot(
                self.step, {}, len(self.particles), self.evaluations, degenerate=True
            )
        peak = max(p.log_weight for p in finite)
        raw = {p.goal: math.exp(p.log_weight - peak) for p in finite}
        total = sum(raw.values())
        return PosteriorSnapshot(
            self.step,
            {g: w / total for g, w in raw.items()},
            len(finite),
            self.evaluations,
        )


def _stream(seed: int, step: int, slot: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence((seed, step, slot)))


def _log_sum_exp(values: list[float]) -> float:
    finite = [v for v in values if math.isfinite(v)]
    if not finite:
        return -math.inf
    peak = max(finite)
    return peak + math.log(sum(math.exp(v - peak) for v in finite))


def resample(particles: list[Particle], n: int, rng: np.random.Generator) -> list[Particle]:
    """Systematic resampling down to n particles.

    Each survivor's copy count is its normalized weight times n, up to the
    rounding inherent in stratified positions; copies share the total weight
    equally so the collection's unnormalized mass is preserved.
    """
    log_weights = [p.log_weight for p in particles]
    total = _log_sum_exp(log_weights)
    if not math.isfinite(total):
        raise ValueError("cannot resample: all particle weights are zero")
    probs = np.array([math.exp(lw - total) if math.isfinite(lw) else 0.0 for lw in log_weights])
    probs /= probs.sum()
    positions = (rng.random() + np.arange(n)) / n
    indices = np.searchsorted(np.cumsum(probs), positions, side="right")
    indices = np.minimum(indices, len(particles) - 1)
    copy_weight = total - math.log(n)
    return [
        Particle(
            goal=particles[i].goal,
            policy=particles[i].policy,
            log_weight=copy_weight,
            cum_loglik=particles[i].cum_loglik,
        )
        for i in indices
    ]


def coalesce(particles: list[Particle]) -> list[Particle]:
    """Merge particles with identical goals by summing their weights."""
    merged: dict[str, Particle] = {}
    for p in particles:
        kept = merged.get(p.goal)
        if kept is None:
            merged[p.goal] = Particle(p.goal, p.policy, p.log_weight, p.cum_loglik)
        else:
            kept.log_weight = _log_sum_exp([kept.log_weight, p.log_weight])
    return list(merged.values())


def sips_init(scenario: Scenario, n: int, seed: int) -> ParticleCollection:
    if n < 1:
        raise ValueError("particle count must be >= 1")
    return ParticleCollection(
        n_target=n, seed=seed, initial=scenario.initial, state=scenario.initial
    )


def sips_step(
    collection: ParticleCollection, action: Action, config: InferenceConfig
) -> ParticleCollection:
    """One filtering step: propose, weigh newcomers over the full history,
    reweight incumbents by the newest action, resample, coalesce."""
    step = collection.step + 1
    prev_state = collection.state
    next_state = apply(prev_state, action)
    full_history = collection.history + [action]
    blocks = config.proposal.blocks

    tracked = {p.goal for p in collection.particles}
    newcomers: list[Particle] = []
    branches = branch_mixture(next_state, action, config.proposal)
    for slot in range(collection.n_target):
        rng = _stream(collection.seed, step, slot)
        try:
            sample = propose(next_state, action, config.proposal, rng, branches=branches)
        except NoFeasibleProposalError:
            continue
        word = sample.word
        if word in tracked:
            continue  # already carried by an incumbent on the same likelihood path
        tracked.add(word)
        loglik, policy = trajectory_loglik(
            word, collection.initial, full_history, blocks, config.planner
        )
        collection.evaluations += step
        newcomers.append(Particle(word, policy, config.prior.log(word) + loglik, loglik))

    for p in collection.particles:
        increment = step_loglik(p.policy, prev_state, action, step, config.planner)
        collection.evaluations += 1
        p.log_weight += increment
        p.cum_loglik += increment

    # Every particle now carries its exact joint weight
    # log P(g) + log P(a_{1:t} | g); resampling prunes the tracked goal set
    # proportionally to those weights, and coalescing dedups, after which the
    # exact weights are restored (goal identity determines the weight here,
    # so copy counts carry no extra information).
    merged = collection.particles + newcomers
    if any(math.isfinite(p.log_weight) for p in merged):
        survivors = resample(merged, collection.n_target, _stream(collection.seed, step, _RESAMPLE_SLOT))
        kept = coalesce(survivors)
        by_goal = {p.goal: p for p in merged}
        for p in kept:
            p.log_weight = config.prior.log(p.goal) + by_goal[p.goal].cum_loglik
            p.cum_loglik = by_goal[p.goal].cum_loglik
        collection.particles = kept
        collection.degenerate = False
    else:
        # Every hypothesis has zero weight: keep them unnormalized and let
        # future steps propose fresh goals.
        collection.particles = coalesce(merged)
        collection.degenerate = True

    collection.step = step
    collection.state = next_state
    collection.history = full_history
    return collection


def sips_run(
    scenario: Scenario, n: int, config: InferenceConfig, seed: int
) -> list[PosteriorSnapshot]:
    """Fold the filter over the trace; one snapshot per judgment point."""
    collection = sips_init(scenario, n, seed)
    wanted = set(scenario.judgment_points)
    snapshots = []
    for action in scenario.actions:
        sips_step(collection, action, config)
        if collection.step in wanted:
            snapshots.append(collection.snapshot())
    return snapshots


def exact_infer(scenario: Scenario, config: InferenceConfig) -> list[PosteriorSnapshot]:
    """Enumerative inverse planning over every spellable dictionary word."""
    support = config.prior.support
    if not support:
        raise ValueError("goal prior has empty support")
    blocks = config.proposal.blocks
    policies = {g: Policy(g, blocks, config.planner) for g in support}
    cum_loglik = {g: 0.0 for g in support}
    evaluations = 0
    state = scenario.initial
    wanted = set(scenario.judgment_points)
    snapshots = []
    for step, action in enumerate(scenario.actions, start=1):
        for g in support:
            cum_loglik[g] += step_loglik(policies[g], state, action, step, config.planner)
            evaluations += 1
        state = apply(state, action)
        if step in wanted:
            scores = {g: config.prior.log(g) + cum_loglik[g] for g in support}
            peak = max(scores.values())
            raw = {g: math.exp(s - peak) for g, s in scores.items()}
            total = sum(raw.values())
            snapshots.append(
                PosteriorSnapshot(
                    step,
                    {g: v / total for g, v in raw.items()},
                    len(support),
                    evaluations,
                )
            )
    return snapshots


def proposal_only_run(
    scenario: Scenario, n: int, config: InferenceConfig, seed: int
) -> list[PosteriorSnapshot]:
    """Fresh guesses at each judgment point from the latest state and action
    alone; no memory, no planning."""
    if n < 1:
        raise ValueError("sample count must be >= 1")
    snapshots = []
    for point in scenario.judgment_points:
        state = scenario.states[point]
        action = scenario.actions[point - 1]
        branches = branch_mixture(state, action, config.proposal)
        weights: dict[str, float] = {}
        for slot in range(n):
            rng = _stream(seed, point, slot)
            try:
                sample = propose(state, action, config.proposal, rng, branches=branches)
            except NoFeasibleProposalError:
                continue
            weights[sample.word] = weights.get(sample.word, 0.0) + 1.0
        if config.proposal_only_weighting == PROPOSAL_WEIGHTING_PRIOR:
            weights = {w: c * config.prior[w] for w, c in weights.items()}
        total = sum(weights.values())
        if total <= 0:
            snapshots.append(PosteriorSnapshot(point, {}, 0, 0, degenerate=True))
            continue
        snapshots.append(
            PosteriorSnapshot(
                point,
                {w: c / total for w, c in weights.items()},
                len(weights),
                0,
            )
        )
    return snapshots
