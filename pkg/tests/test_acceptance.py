"""Acceptance suite: one test per release criterion, each printing a
PASS/FAIL line with the measured values (run with -s or -v to see them).

These are the binding checks for the whole engine: exactness of enumerative
inference against an independent oracle, particle-filter convergence,
planner optimality, the qualitative garden-path signatures, cost orderings,
variance scaling, metric identities, and the resource-rationality crossover.
"""

from __future__ import annotations

import math
import random
import time

import numpy as np
import pytest

from blockwords.harness import (
    BUNDLED_HUMAN_FIXTURE,
    HumanResponseSet,
    MethodSpec,
    export_results,
    run_experiment,
)
from blockwords.inference import exact_infer, proposal_only_run, sips_run
from blockwords.metrics import iou, mean_distribution, overlap, tvd
from blockwords.planner import ASTAR, BFS, PlannerParams, Policy
from blockwords.world import BlockSet, WorldState, spellable
from oracles import (
    bfs_optimal_cost,
    brute_force_posteriors,
    proposal_marginal,
    state_space_size,
)

SEEDS = 50


def report(name: str, passed: bool, detail: str) -> None:
    print(f"\nACCEPTANCE {'PASS' if passed else 'FAIL'}: {name} - {detail}")
    assert passed, f"{name}: {detail}"


@pytest.fixture(scope="module")
def configs(engine_cache, small_fixture_scenarios, exact_spec):
    return {s.id: engine_cache.config(s, exact_spec) for s in small_fixture_scenarios}


@pytest.fixture(scope="module")
def exact_snapshots(small_fixture_scenarios, configs):
    return {s.id: exact_infer(s, configs[s.id]) for s in small_fixture_scenarios}


@pytest.fixture(scope="module")
def sips_finals(small_fixture_scenarios, configs):
    """Final-step snapshots for every fixture x N x seed used below."""
    runs: dict[tuple[str, int], list[dict[str, float]]] = {}
    for scenario in small_fixture_scenarios:
        config = configs[scenario.id]
        for n in (2, 10, 50, 200):
            runs[(scenario.id, n)] = [
                sips_run(scenario, n, config, seed)[-1].probs for seed in range(SEEDS)
            ]
    return runs


def test_criterion_oracle_equivalence_exact(small_fixture_scenarios, configs, exact_snapshots):
    """exact_infer equals the independent prior x Boltzmann product to 1e-9."""
    assert len(small_fixture_scenarios) == 5
    worst = 0.0
    start = time.perf_counter()
    for scenario in small_fixture_scenarios:
        assert len(scenario.blocks) <= 5
        config = configs[scenario.id]
        assert len(config.prior.support) <= 30
        oracle = brute_force_posteriors(scenario, config.prior.probs, config.planner)
        for snap, expected in zip(exact_snapshots[scenario.id], oracle):
            assert set(snap.probs) == set(expected)
            for word, p in expected.items():
                worst = max(worst, abs(snap.probs[word] - p))
    elapsed = time.perf_counter() - start
    report(
        "oracle-equivalence-exact",
        worst < 1e-9,
        f"max |Δp| = {worst:.2e} over 5 fixtures (tol 1e-9, {elapsed:.1f}s)",
    )


def test_criterion_smc_convergence(small_fixture_scenarios, exact_snapshots, sips_finals):
    """Mean N=200 final snapshot within TVD 0.05 of exact; TVD shrinks with N."""
    tvd_by_n = {n: [] for n in (2, 10, 50, 200)}
    for scenario in small_fixture_scenarios:
        exact = exact_snapshots[scenario.id][-1].probs
        for n in tvd_by_n:
            mean = mean_distribution(sips_finals[(scenario.id, n)])
            tvd_by_n[n].append(tvd(mean, exact))
    final_tvds = tvd_by_n[200]
    curve = [float(np.mean(tvd_by_n[n])) for n in (2, 10, 50, 200)]
    inversions = sum(1 for a, b in zip(curve, curve[1:]) if b > a)
    ok = max(final_tvds) < 0.05 and inversions <= 1
    report(
        "smc-convergence",
        ok,
        f"N=200 TVDs {[round(v, 4) for v in final_tvds]} (tol 0.05); "
        f"mean TVD curve over N(2,10,50,200) = {[round(v, 4) for v in curve]} "
        f"({inversions} inversions, <=1 allowed)",
    )


def _random_planner_instance(rnd: random.Random):
    n = rnd.randint(3, 5)
    letters = "".join(rnd.choice("inkpta") for _ in range(n))
    blocks = BlockSet.from_letters(letters)
    ids = list(range(n))
    rnd.shuffle(ids)
    towers = []
    while ids:
        k = rnd.randint(1, len(ids))
        towers.append(tuple(ids[:k]))
        ids = ids[k:]
    state = WorldState(towers=tuple(towers))
    words = ["ink", "pin", "kit", "tin", "kin", "nit", "pit", "tip", "nip", "ant",
             "tan", "pan", "nap", "pat", "tap", "pint", "knit", "pink", "paint"]
    options = [w for w in words if spellable(w, blocks.letter_counts)]
    if not options:
        return None
    return state, rnd.choice(options), blocks


def test_criterion_planner_optimality():
    """Converged search values equal breadth-first optimal costs exactly."""
    rnd = random.Random(2024)
    instances = []
    while len(instances) < 100:
        item = _random_planner_instance(rnd)
        if item is None:
            continue
        if bfs_optimal_cost(item[0], item[1], item[2]) is None:
            continue
        instances.append(item)
    start = time.perf_counter()
    mismatches = 0
    for state, goal, blocks in instances:
        optimal = bfs_optimal_cost(state, goal, blocks)
        budget = state_space_size(state) + 1
        for strategy in (BFS, ASTAR):
            policy = Policy(goal, blocks, PlannerParams(budget=budget, strategy=strategy))
            previous = -1.0
            for _ in range(100):
                policy.update(state)
                value = policy.value(state)
                if value == previous:
                    break
                previous = value
            if value != optimal:
                mismatches += 1
    elapsed = time.perf_counter() - start
    report(
        "planner-optimality",
        mismatches == 0,
        f"{len(instances)} instances x 2 strategies, {mismatches} mismatches ({elapsed:.1f}s)",
    )


def test_criterion_garden_path_signatures(
    bundled_scenarios, engine_cache, exact_spec, configs, exact_snapshots
):
    """pink: exact drops 'pink' at the burying step, the proposal does not;
    stake: exact and SIPS rank take above make/fake, the proposal does not."""
    pink = bundled_scenarios["pink"]
    pink_config = engine_cache.config(pink, exact_spec)
    pink_exact = exact_infer(pink, pink_config)
    exact_before = pink_exact[0].probs.get("pink", 0.0)
    exact_after = pink_exact[1].probs.get("pink", 0.0)

    def marginal_at(scenario, config, point):
        return proposal_marginal(
            scenario.states[point], scenario.actions[point - 1], config.proposal
        )

    prop_before = marginal_at(pink, pink_config, 2).get("pink", 0.0)
    prop_after = marginal_at(pink, pink_config, 4).get("pink", 0.0)
    pink_ok = exact_after < exact_before and prop_after >= prop_before

    stake = bundled_scenarios["stake"]
    stake_config = engine_cache.config(stake, exact_spec)
    m_on_f = 6  # judgment point after the m-onto-f movement
    stake_exact = exact_infer(stake, stake_config)
    exact_at = next(s.probs for s in stake_exact if s.step == m_on_f)
    sips_at = mean_distribution(
        [
            next(s.probs for s in sips_run(stake, 10, stake_config, seed) if s.step == m_on_f)
            for seed in range(SEEDS)
        ]
    )
    prop_at = marginal_at(stake, stake_config, m_on_f)

    def ranks_take_first(dist) -> bool:
        return dist.get("take", 0.0) > dist.get("make", 0.0) and dist.get(
            "take", 0.0
        ) > dist.get("fake", 0.0)

    stake_ok = (
        ranks_take_first(exact_at)
        and ranks_take_first(sips_at)
        and not ranks_take_first(prop_at)
    )
    report(
        "garden-path-signatures",
        pink_ok and stake_ok,
        f"pink exact {exact_before:.3f}->{exact_after:.3f} (must drop), "
        f"proposal {prop_before:.3f}->{prop_after:.3f} (must not drop); "
        f"stake@t6 exact take/make/fake = "
        f"{exact_at.get('take', 0):.3f}/{exact_at.get('make', 0):.3f}/{exact_at.get('fake', 0):.3f}, "
        f"sips = {sips_at.get('take', 0):.3f}/{sips_at.get('make', 0):.3f}/{sips_at.get('fake', 0):.3f}, "
        f"proposal = {prop_at.get('take', 0):.3f}/{prop_at.get('make', 0):.3f}/{prop_at.get('fake', 0):.3f}",
    )


def test_criterion_cost_runtime_ordering(bundled_scenarios, engine_cache, exact_spec):
    """proposal-only < SIPS(2) < SIPS(50) < exact per action, with margins."""
    scenario = bundled_scenarios["forest"]
    config = engine_cache.config(scenario, exact_spec)
    assert len(config.prior.support) >= 150
    actions = len(scenario.actions)

    def per_action(fn) -> float:
        start = time.perf_counter()
        fn()
        return (time.perf_counter() - start) / actions

    t_proposal = per_action(lambda: proposal_only_run(scenario, 2, config, 0))
    t_sips2 = per_action(lambda: sips_run(scenario, 2, config, 0))
    t_sips50 = per_action(lambda: sips_run(scenario, 50, config, 0))
    t_exact = per_action(lambda: exact_infer(scenario, config))
    ordered = t_proposal < t_sips2 < t_sips50 < t_exact
    margins = t_sips2 / t_proposal >= 50 and t_exact / t_sips2 >= 10
    report(
        "cost-runtime-ordering",
        ordered and margins,
        f"per action on {scenario.id} ({len(config.prior.support)} words): "
        f"proposal {t_proposal * 1e3:.2f}ms < sips2 {t_sips2 * 1e3:.0f}ms < "
        f"sips50 {t_sips50 * 1e3:.0f}ms < exact {t_exact * 1e3:.0f}ms; "
        f"sips2/proposal = {t_sips2 / t_proposal:.0f}x (>=50), "
        f"exact/sips2 = {t_exact / t_sips2:.1f}x (>=10)",
    )


def test_criterion_variance_scaling(
    small_fixture_scenarios, configs, exact_snapshots, sips_finals
):
    """Accuracy std falls at least 2x from N=2 to N=50; exact variance is 0."""
    std2, std50 = [], []
    for scenario in small_fixture_scenarios:
        config = configs[scenario.id]
        acc2 = [
            np.mean([s.probs.get(scenario.true_word, 0.0) for s in sips_run(scenario, 2, config, seed)])
            for seed in range(100)  # M = max(10, 200/N) = 100
        ]
        acc50 = [
            np.mean([s.probs.get(scenario.true_word, 0.0) for s in sips_run(scenario, 50, config, seed)])
            for seed in range(10)  # M = max(10, 200/N) = 10
        ]
        std2.append(float(np.std(acc2)))
        std50.append(float(np.std(acc50)))
    ratio = float(np.mean(std2)) / max(float(np.mean(std50)), 1e-12)

    exact_std = 0.0
    for scenario in small_fixture_scenarios:
        first = exact_snapshots[scenario.id]
        second = exact_infer(scenario, configs[scenario.id])
        accs = []
        for snaps in (first, second):
            accs.append(np.mean([s.probs.get(scenario.true_word, 0.0) for s in snaps]))
        exact_std = max(exact_std, float(np.std(accs)))
    report(
        "variance-scaling",
        ratio >= 2.0 and exact_std == 0.0,
        f"mean accuracy std N=2 {np.mean(std2):.4f} vs N=50 {np.mean(std50):.4f} "
        f"(ratio {ratio:.2f}x, >=2 required); exact std = {exact_std}",
    )


def test_criterion_metric_identities():
    """overlap + tvd = 1 to 1e-12 on 1e4 random pairs; iou(P,P) = 1."""
    rng = np.random.default_rng(99)
    worst_identity = 0.0
    worst_self = 0.0
    for _ in range(10_000):
        n_p, n_q = rng.integers(1, 8, size=2)
        words = [f"w{i}a{i}" for i in range(8)]
        p_raw = rng.random(n_p)
        q_raw = rng.random(n_q)
        p = dict(zip(rng.permutation(words)[:n_p], p_raw / p_raw.sum()))
        q = dict(zip(rng.permutation(words)[:n_q], q_raw / q_raw.sum()))
        worst_identity = max(worst_identity, abs(overlap(p, q) + tvd(p, q) - 1.0))
        worst_self = max(worst_self, abs(iou(p, p) - 1.0))
    report(
        "metric-identities",
        worst_identity < 1e-12 and worst_self < 1e-12,
        f"max |overlap+tvd-1| = {worst_identity:.2e}, max |iou(P,P)-1| = {worst_self:.2e} "
        f"over 10000 pairs (tol 1e-12)",
    )


def test_criterion_resource_rationality_curve(
    small_fixture_scenarios, configs, exact_snapshots, sips_finals
):
    """Net-reward curves for exact and SIPS(2) cross at c* > 0; affine in c."""
    exact_acc = exact_evals = 0.0
    sips_acc = sips_evals = 0.0
    for scenario in small_fixture_scenarios:
        config = configs[scenario.id]
        snaps = exact_snapshots[scenario.id]
        exact_acc += sum(s.probs.get(scenario.true_word, 0.0) for s in snaps)
        exact_evals += snaps[-1].evaluations
        per_seed_acc, per_seed_ev = [], []
        for seed in range(SEEDS):
            run = sips_run(scenario, 2, config, seed)
            per_seed_acc.append(sum(s.probs.get(scenario.true_word, 0.0) for s in run))
            per_seed_ev.append(run[-1].evaluations)
        sips_acc += float(np.mean(per_seed_acc))
        sips_evals += float(np.mean(per_seed_ev))

    def net(acc, evals, c):
        return acc - c * evals

    crossing = (exact_acc - sips_acc) / (exact_evals - sips_evals)
    beyond = crossing * 2
    dominates = net(sips_acc, sips_evals, beyond) > net(exact_acc, exact_evals, beyond)
    before = crossing / 2
    exact_better_cheap = net(exact_acc, exact_evals, before) > net(sips_acc, sips_evals, before)

    # affinity: second difference of the curve vanishes
    cs = [0.0, crossing, 2 * crossing]
    values = [net(exact_acc, exact_evals, c) for c in cs]
    second_diff = abs((values[2] - values[1]) - (values[1] - values[0]))
    report(
        "resource-rationality-curve",
        crossing > 0 and dominates and exact_better_cheap and second_diff < 1e-9,
        f"exact acc {exact_acc:.3f} @ {exact_evals:.0f} evals vs sips2 acc {sips_acc:.3f} "
        f"@ {sips_evals:.0f} evals; crossing c* = {crossing:.2e} > 0, "
        f"sips dominates at 2c*, affinity residual {second_diff:.1e}",
    )


def test_criterion_human_metrics_end_to_end(
    bundled_scenarios, bundled_lexicon, tmp_path
):
    """Human-similarity metrics compute end-to-end on the bundled synthetic
    fixture with hand-verified IoU, through the same export used for runs."""
    human = HumanResponseSet.load(BUNDLED_HUMAN_FIXTURE)
    hand = iou(human.mean_distribution("pink", 2), {"ink": 0.5, "pink": 0.5})
    records = run_experiment(
        [bundled_scenarios["pink"]],
        [MethodSpec(method="exact")],
        bundled_lexicon,
        seed=0,
    )
    written = export_results(records, tmp_path, human_data=human)
    iou_file = [p for p in written if p.name == "iou.csv"]
    ok = hand == pytest.approx(5 / 7) and iou_file and iou_file[0].read_text().count("\n") > 1
    report(
        "human-metrics-end-to-end",
        bool(ok),
        f"hand-computed IoU = {hand:.6f} (expected {5 / 7:.6f}); "
        f"iou.csv exported with model-vs-human rows",
    )
