"""Similarity, accuracy, variance, and cost measures for comparing goal
distributions across inference methods and human guesses.

A goal distribution is a plain ``dict[str, float]``; everything here treats
missing words as zero mass. Empty distributions are legal inputs and flow
through as flagged/degenerate values rather than raising.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

GoalDistribution = dict[str, float]


@dataclass
class CostLedger:
    """Per-step cumulative particle evaluations and tracked-hypothesis counts."""

    evaluations: list[int] = field(default_factory=list)
    tracked: list[int] = field(default_factory=list)

    def record(self, evaluations: int, tracked: int) -> None:
        if self.evaluations and evaluations < self.evaluations[-1]:
            raise ValueError("cumulative evaluations must be non-decreasing")
        self.evaluations.append(evaluations)
        self.tracked.append(tracked)

    @property
    def total_evaluations(self) -> int:
        return self.evaluations[-1] if self.evaluations else 0


def _union_vectors(p: GoalDistribution, q: GoalDistribution) -> tuple[np.ndarray, np.ndarray]:
    words = sorted(set(p) | set(q))
    return (
        np.array([p.get(w, 0.0) for w in words]),
        np.array([q.get(w, 0.0) for w in words]),
    )


def iou(p: GoalDistribution, q: GoalDistribution) -> float | None:
    """Jaccard index of two distributions: sum-min over sum-max.

    None when both distributions are empty (undefined).
    """
    if not p and not q:
        return None
    pv, qv = _union_vectors(p, q)
    denom = np.maximum(pv, qv).sum()
    return float(np.minimum(pv, qv).sum() / denom)


def overlap(p: GoalDistribution, q: GoalDistribution) -> float:
    """Sum of pointwise minima; 1 for identical distributions."""
    pv, qv = _union_vectors(p, q)
    return float(np.minimum(pv, qv).sum()) if len(pv) else 0.0


def tvd(p: GoalDistribution, q: GoalDistribution) -> float:
    """Total variation distance, half the L1 difference."""
    pv, qv = _union_vectors(p, q)
    return float(0.5 * np.abs(pv - qv).sum()) if len(pv) else 0.0


def pearson(p: GoalDistribution, q: GoalDistribution) -> float | None:
    """Correlation of the probability vectors over the union support.

    None (flagged undefined) when either vector is constant.
    """
    pv, qv = _union_vectors(p, q)
    if len(pv) < 2 or np.allclose(pv, pv[0]) or np.allclose(qv, qv[0]):
        return None
    return float(np.corrcoef(pv, qv)[0, 1])


def accuracy(snapshot_probs: GoalDistribution, true_word: str) -> float:
    """Probability assigned to the true goal (0 when absent)."""
    return float(snapshot_probs.get(true_word, 0.0))


def run_variance(
    runs: Sequence[Sequence[GoalDistribution]], true_word: str
) -> tuple[list[float], float]:
    """Spread of repeated stochastic runs over the same scenario.

    Returns the per-step total variance (variance of each goal's probability
    across runs, summed over goals) and the standard deviation across runs of
    mean accuracy.
    """
    if len(runs) < 2:
        raise ValueError("need at least two runs to measure variance")
    steps = len(runs[0])
    if any(len(r) != steps for r in runs):
        raise ValueError("all runs must cover the same judgment points")
    per_step = []
    for t in range(steps):
        words = sorted({w for run in runs for w in run[t]})
        if not words:
            per_step.append(0.0)
            continue
        matrix = np.array([[run[t].get(w, 0.0) for w in words] for run in runs])
        per_step.append(float(matrix.var(axis=0, ddof=0).sum()))
    accuracies = [float(np.mean([accuracy(dist, true_word) for dist in run])) for run in runs]
    return per_step, float(np.std(accuracies, ddof=0))


def net_reward(accuracies: Iterable[float], ledger: CostLedger, cost_ratio: float) -> float:
    """Summed accuracy reward minus cost_ratio times total particle evaluations."""
    if cost_ratio < 0:
        raise ValueError("cost ratio must be >= 0")
    return float(sum(accuracies)) - cost_ratio * ledger.total_evaluations


def net_reward_curve(
    accuracies: Sequence[float], ledger: CostLedger, cost_ratios: Sequence[float]
) -> list[tuple[float, float]]:
    return [(c, net_reward(accuracies, ledger, c)) for c in cost_ratios]


def human_distribution(guesses: Sequence[str]) -> GoalDistribution:
    """Uniform 1/n over the distinct guesses; empty input gives the (flagged)
    empty distribution."""
    distinct = sorted(set(guesses))
    if not distinct:
        return {}
    share = 1.0 / len(distinct)
    return {g: share for g in distinct}


def bonus(guesses: Sequence[str], true_word: str) -> float:
    """Accuracy bonus in dollars: $0.1/n when the true word is among n guesses."""
    distinct = set(guesses)
    if not distinct or true_word not in distinct:
        return 0.0
    return 0.1 / len(distinct)


def mean_distribution(distributions: Sequence[GoalDistribution]) -> GoalDistribution:
    """Pointwise average; used for mean-human and mean-run distributions."""
    if not distributions:
        return {}
    words = sorted({w for d in distributions for w in d})
    n = len(distributions)
    out = {w: sum(d.get(w, 0.0) for d in distributions) / n for w in words}
    return {w: v for w, v in out.items() if v > 0}


def bootstrap_ci(
    values: Sequence[float],
    n_resamples: int = 1000,
    level: float = 0.95,
    seed: int = 0,
) -> tuple[float, float]:
    """Percentile bootstrap interval for the mean of ``values``."""
    arr = np.asarray(values, dtype=float)
    if arr.size == 0:
        return (math.nan, math.nan)
    rng = np.random.default_rng(seed)
    means = rng.choice(arr, size=(n_resamples, arr.size), replace=True).mean(axis=1)
    lo, hi = np.quantile(means, [(1 - level) / 2, 1 - (1 - level) / 2])
    return float(lo), float(hi)
