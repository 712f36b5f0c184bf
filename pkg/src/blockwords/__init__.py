"""Open-ended goal inference for Block Words.

A library for inferring which word an agent is spelling out of lettered
blocks, before the word is finished and without a fixed candidate list.
Exact enumerative inverse planning, a bottom-up proposal sampler, and the
particle filter that combines them all share one boundedly rational agent
model.
"""

from .inference import (
    InferenceConfig,
    Particle,
    ParticleCollection,
    PosteriorSnapshot,
    coalesce,
    exact_infer,
    proposal_only_run,
    resample,
    sips_init,
    sips_run,
    sips_step,
)
from .lexicon import (
    CharNGram,
    GoalPrior,
    Lexicon,
    Trie,
    goal_prior,
    sample_completion,
    temper,
    train_ngram,
)
from .metrics import (
    CostLedger,
    accuracy,
    bonus,
    human_distribution,
    iou,
    net_reward,
    overlap,
    pearson,
    run_variance,
    tvd,
)
from .planner import PlannerParams, Policy, action_dist, heuristic, trajectory_loglik
from .proposal import (
    ProposalConfig,
    ProposalSample,
    propose,
    propose_any_tower,
    propose_last_and_next,
    propose_last_tower,
    propose_next_tower,
)
from .scenario import Scenario, build_scenario, load_scenario, save_scenario
from .world import (
    Action,
    Block,
    BlockSet,
    WorldState,
    apply,
    goal_satisfied,
    legal_actions,
    spellable,
    tower_reading,
)

__version__ = "0.1.0"
