"""Experiment harness: assemble engines for scenarios, run the method grid
with reproducible seeds, ingest human guess data, and export analysis tables.

Everything here writes plain JSON/CSV; plotting is out of scope. File writes
go through a temp-file rename so partial output never lands at the target
path.
"""

from __future__ import annotations

import csv
import json
import time
from dataclasses import dataclass, field, replace
from itertools import product
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .inference import (
    InferenceConfig,
    PosteriorSnapshot,
    exact_infer,
    proposal_only_run,
    sips_run,
)
from .lexicon import (
    DEFAULT_ORDER,
    DEFAULT_TERMINATION_BIAS,
    DEFAULT_WORD_TEMPERATURE,
    CharNGram,
    Lexicon,
    Trie,
    goal_prior,
    train_ngram,
)
from .metrics import (
    CostLedger,
    GoalDistribution,
    accuracy,
    bootstrap_ci,
    human_distribution,
    iou,
    mean_distribution,
    net_reward,
    run_variance,
)
from .planner import PlannerParams
from .proposal import LAST_AND_NEXT, ProposalConfig
from .scenario import Scenario
from .world import spellable

EXACT = "exact"
SIPS = "sips"
PROPOSAL_ONLY = "proposal_only"
METHODS = (EXACT, SIPS, PROPOSAL_ONLY)

DATA_DIR = Path(__file__).parent / "data"
BUNDLED_WORDS = DATA_DIR / "words.tsv"
BUNDLED_SCENARIOS = DATA_DIR / "scenarios"
BUNDLED_HUMAN_FIXTURE = DATA_DIR / "human_synthetic.json"


def n_trials(n_particles: int) -> int:
    """Repeated-trial protocol for stochastic methods."""
    return max(10, 200 // n_particles)


@dataclass(frozen=True)
class MethodSpec:
    """One inference method plus every knob that defines a run."""

    method: str
    n_particles: int = 2
    beta: float = 1.0
    budget: int = 100
    cadence: int = 2
    strategy: str = "bfs"
    proposal: str = LAST_AND_NEXT
    word_temperature: float = DEFAULT_WORD_TEMPERATURE
    termination_bias: float = DEFAULT_TERMINATION_BIAS
    ngram_order: int = DEFAULT_ORDER

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")

    @property
    def label(self) -> str:
        if self.method == EXACT:
            return f"exact[{self.strategy}]"
        return f"{self.method}[N={self.n_particles}]"

    def planner_params(self) -> PlannerParams:
        return PlannerParams(
            beta=self.beta,
            budget=self.budget,
            cadence=self.cadence,
            strategy=self.strategy,
        )


class EngineCache:
    """Builds and memoizes the per-scenario inference configuration.

    The n-gram is fit on the same tempered frequencies as the prior, i.e. on
    the scenario's spellable support, so proposal statistics reflect the words
    actually in play.
    """

    def __init__(self, lexicon: Lexicon):
        self.lexicon = lexicon
        self._configs: dict[tuple, InferenceConfig] = {}

    def config(self, scenario: Scenario, spec: MethodSpec) -> InferenceConfig:
        key = (
            scenario.id,
            spec.word_temperature,
            spec.termination_bias,
            spec.ngram_order,
            spec.proposal,
            spec.planner_params(),
        )
        if key not in self._configs:
            prior = goal_prior(
                self.lexicon, scenario.blocks.letter_counts, spec.word_temperature
            )
            supported = Lexicon({w: self.lexicon.entries[w] for w in prior.support})
            ngram = train_ngram(
                supported,
                order=spec.ngram_order,
                word_temperature=spec.word_temperature,
                termination_bias=spec.termination_bias,
            )
            self._configs[key] = InferenceConfig(
                prior=prior,
                proposal=ProposalConfig(
                    strategy=spec.proposal,
                    ngram=ngram,
                    trie=Trie.from_words(prior.support),
                    blocks=scenario.blocks,
                ),
                planner=spec.planner_params(),
            )
        return self._configs[key]


@dataclass
class RunRecord:
    scenario_id: str
    condition: str
    true_word: str
    method: str
    label: str
    params: dict
    seed: int
    snapshots: list[PosteriorSnapshot]
    seconds_per_action: float
    error: str | None = None

    def ledger(self) -> CostLedger:
        ledger = CostLedger()
        for snap in self.snapshots:
            ledger.record(snap.evaluations, snap.unique_count)
        return ledger

    def accuracies(self) -> list[float]:
        return [accuracy(s.probs, self.true_word) for s in self.snapshots]

    def to_dict(self) -> dict:
        return {
            "scenario_id": self.scenario_id,
            "condition": self.condition,
            "true_word": self.true_word,
            "method": self.method,
            "label": self.label,
            "params": self.params,
            "seed": self.seed,
            "seconds_per_action": self.seconds_per_action,
            "error": self.error,
            "snapshots": [
                {
                    "step": s.step,
                    "probs": s.probs,
                    "unique_count": s.unique_count,
                    "evaluations": s.evaluations,
                    "degenerate": s.degenerate,
                }
                for s in self.snapshots
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "RunRecord":
        snaps = [
            PosteriorSnapshot(
                step=s["step"],
                probs=s["probs"],
                unique_count=s["unique_count"],
                evaluations=s["evaluations"],
                degenerate=s["degenerate"],
            )
            for s in data["snapshots"]
        ]
        return cls(
            scenario_id=data["scenario_id"],
            condition=data["condition"],
            true_word=data["true_word"],
            method=data["method"],
            label=data["label"],
            params=data["params"],
            seed=data["seed"],
            snapshots=snaps,
            seconds_per_action=data["seconds_per_action"],
            error=data.get("error"),
        )


def run_one(
    scenario: Scenario, spec: MethodSpec, seed: int, cache: EngineCache
) -> RunRecord:
    config = cache.config(scenario, spec)
    params = {
        "n_particles": spec.n_particles,
        "beta": spec.beta,
        "budget": spec.budget,
        "cadence": spec.cadence,
        "strategy": spec.strategy,
        "proposal": spec.proposal,
        "word_temperature": spec.word_temperature,
        "termination_bias": spec.termination_bias,
    }
    start = time.perf_counter()
    error = None
    try:
        if spec.method == EXACT:
            snapshots = exact_infer(scenario, config)
        elif spec.method == SIPS:
            snapshots = sips_run(scenario, spec.n_particles, config, seed)
        else:
            snapshots = proposal_only_run(scenario, spec.n_particles, config, seed)
    except Exception as exc:  # per-run failures are recorded, not fatal
        snapshots = []
        error = f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    return RunRecord(
        scenario_id=scenario.id,
        condition=scenario.condition,
        true_word=scenario.true_word,
        method=spec.method,
        label=spec.label,
        params=params,
        seed=seed,
        snapshots=snapshots,
        seconds_per_action=elapsed / max(1, len(scenario.actions)),
        error=error,
    )


def run_experiment(
    scenarios: Sequence[Scenario],
    specs: Sequence[MethodSpec],
    lexicon: Lexicon,
    seed: int = 0,
    trials: int | None = None,
) -> list[RunRecord]:
    """Cartesian product of scenarios x method specs.

    Stochastic methods repeat for max(10, 200/N) trials (or ``trials`` if
    given) with consecutive seeds; exact inference runs once per scenario.
    """
    cache = EngineCache(lexicon)
    records = []
    for scenario, spec in product(scenarios, specs):
        if spec.method == EXACT:
            seeds = [seed]
        else:
            m = trials if trials is not None else n_trials(spec.n_particles)
            seeds = [seed + i for i in range(m)]
        for s in seeds:
            records.append(run_one(scenario, spec, s, cache))
    return records


def save_records(records: Sequence[RunRecord], path: str | Path) -> None:
    payload = json.dumps([r.to_dict() for r in records], indent=1) + "\n"
    tmp = Path(path).with_suffix(".tmp")
    tmp.write_text(payload, encoding="utf-8")
    tmp.replace(path)


def load_records(path: str | Path) -> list[RunRecord]:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    return [RunRecord.from_dict(d) for d in data]


# ---------------------------------------------------------------------------
# Human guess data


@dataclass
class HumanResponseSet:
    """Guess lists per participant, scenario, and judgment point."""

    # participant -> scenario id -> {judgment point -> guesses}
    responses: dict[str, dict[str, dict[int, list[str]]]] = field(default_factory=dict)

    def add(self, participant: str, scenario_id: str, point: int, guesses: list[str]) -> None:
        by_scenario = self.responses.setdefault(participant, {})
        by_scenario.setdefault(scenario_id, {})[point] = list(guesses)

    def validated(self, scenarios: dict[str, Scenario]) -> "HumanResponseSet":
        """Drop guesses that fail the 3-8-letter / available-letter rules."""
        out = HumanResponseSet()
        for participant, by_scenario in self.responses.items():
            for sid, points in by_scenario.items():
                scenario = scenarios.get(sid)
                if scenario is None:
                    continue
                letters = scenario.blocks.letter_counts
                for point, guesses in points.items():
                    keep = []
                    for g in guesses:
                        try:
                            if spellable(g, letters):
                                keep.append(g)
                        except ValueError:
                            pass
                    out.add(participant, sid, point, keep)
        return out

    def excluded_participants(
        self,
        scenario_id: str,
        drop_never_updated: bool = True,
        drop_add_only: bool = True,
    ) -> set[str]:
        """The paper's two exclusion rules, per scenario response."""
        excluded = set()
        for participant, by_scenario in self.responses.items():
            points = by_scenario.get(scenario_id)
            if not points or len(points) < 2:
                continue
            ordered = [points[p] for p in sorted(points)]
            sets = [set(g) for g in ordered]
            if drop_never_updated and all(s == sets[0] for s in sets):
                excluded.add(participant)
                continue
            grew = all(a <= b for a, b in zip(sets, sets[1:]))
            if drop_add_only and grew and sets[0] != sets[-1]:
                excluded.add(participant)
        return excluded

    def mean_distribution(
        self,
        scenario_id: str,
        point: int,
        drop_never_updated: bool = True,
        drop_add_only: bool = True,
    ) -> GoalDistribution:
        excluded = self.excluded_participants(
            scenario_id, drop_never_updated, drop_add_only
        )
        dists = []
        for participant, by_scenario in self.responses.items():
            if participant in excluded:
                continue
            guesses = by_scenario.get(scenario_id, {}).get(point)
            if guesses:
                dists.append(human_distribution(guesses))
        return mean_distribution(dists)

    def to_dict(self) -> dict:
        return {
            "participants": [
                {
                    "id": participant,
                    "responses": [
                        {
                            "scenario_id": sid,
                            "judgments": [
                                {"point": p, "guesses": guesses}
                                for p, guesses in sorted(points.items())
                            ],
                        }
                        for sid, points in sorted(by_scenario.items())
                    ],
                }
                for participant, by_scenario in sorted(self.responses.items())
            ]
        }

    @classmethod
    def from_dict(cls, data: dict) -> "HumanResponseSet":
        out = cls()
        for part in data["participants"]:
            for resp in part["responses"]:
                for judgment in resp["judgments"]:
                    out.add(
                        part["id"],
                        resp["scenario_id"],
                        int(judgment["point"]),
                        list(judgment["guesses"]),
                    )
        return out

    @classmethod
    def load(cls, path: str | Path) -> "HumanResponseSet":
        return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))

    def save(self, path: str | Path) -> None:
        payload = json.dumps(self.to_dict(), indent=1) + "\n"
        tmp = Path(path).with_suffix(".tmp")
        tmp.write_text(payload, encoding="utf-8")
        tmp.replace(path)


def import_osf_csv(path: str | Path) -> HumanResponseSet:
    """Adapter for OSF-style CSV exports.

    Accepts one row per (participant, scenario, judgment point) with the guess
    list in a single delimited cell. Column names are matched automatically:
    participant/subject/worker, scenario/stimulus, timestep/judgment/point,
    guesses/words/answers. Guess delimiters ';', '|', and ',' all work.
    """
    aliases = {
        "participant": ("participant", "participant_id", "subject", "worker_id", "pid"),
        "scenario": ("scenario", "scenario_id", "stimulus", "problem"),
        "point": ("point", "judgment", "judgment_point", "timestep", "step", "t"),
        "guesses": ("guesses", "guess_list", "words", "answers", "responses"),
    }
    out = HumanResponseSet()
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise ValueError(f"{path}: empty CSV")
        columns = {}
        lowered = {name.lower().strip(): name for name in reader.fieldnames}
        for key, options in aliases.items():
            for option in options:
                if option in lowered:
                    columns[key] = lowered[option]
                    break
            if key not in columns:
                raise ValueError(f"{path}: no column for {key!r} (have {reader.fieldnames})")
        for row in reader:
            raw = row[columns["guesses"]] or ""
            for delim in (";", "|"):
                raw = raw.replace(delim, ",")
            guesses = [g.strip().lower() for g in raw.split(",") if g.strip()]
            out.add(
                str(row[columns["participant"]]).strip(),
                str(row[columns["scenario"]]).strip(),
                int(float(row[columns["point"]])),
                guesses,
            )
    return out


# ---------------------------------------------------------------------------
# Grid search


def grid_search(
    grid: dict[str, Sequence],
    objective: str,
    scenarios: Sequence[Scenario],
    lexicon: Lexicon,
    base: MethodSpec | None = None,
    human_data: HumanResponseSet | None = None,
    seed: int = 0,
    trials: int | None = None,
) -> list[dict]:
    """Evaluate every grid combination; rows sorted by objective, best first.

    ``objective`` is ``iou_vs_humans`` (needs human data) or ``accuracy``.
    The grid maps MethodSpec field names to value lists.
    """
    if objective not in ("iou_vs_humans", "accuracy"):
        raise ValueError(f"unknown objective {objective!r}")
    if objective == "iou_vs_humans" and human_data is None:
        raise ValueError("iou_vs_humans requires human data")
    base = base or MethodSpec(method=EXACT)
    keys = sorted(grid)
    rows = []
    for values in product(*(grid[k] for k in keys)):
        spec = replace(base, **dict(zip(keys, values)))
        records = run_experiment(scenarios, [spec], lexicon, seed=seed, trials=trials)
        scores = []
        for record in records:
            if record.error:
                continue
            if objective == "accuracy":
                scores.extend(record.accuracies())
            else:
                for snap in record.snapshots:
                    human = human_data.mean_distribution(record.scenario_id, snap.step)
                    value = iou(snap.probs, human)
                    if value is not None:
                        scores.append(value)
        row = dict(zip(keys, values))
        row["objective"] = objective
        row["score"] = float(np.mean(scores)) if scores else float("nan")
        row["n_scores"] = len(scores)
        rows.append(row)
    rows.sort(key=lambda r: (-(r["score"] if r["score"] == r["score"] else -1e18)))
    return rows


def save_table(rows: Sequence[dict], path: str | Path) -> None:
    if not rows:
        Path(path).write_text("", encoding="utf-8")
        return
    fields = list(rows[0].keys())
    tmp = Path(path).with_suffix(".tmp")
    with open(tmp, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=fields)
        writer.writeheader()
        writer.writerows(rows)
    tmp.replace(path)


# ---------------------------------------------------------------------------
# Result export


def _group_records(records: Sequence[RunRecord]) -> dict[tuple[str, str], list[RunRecord]]:
    grouped: dict[tuple[str, str], list[RunRecord]] = {}
    for r in records:
        if r.error is None:
            grouped.setdefault((r.scenario_id, r.label), []).append(r)
    return grouped


def export_results(
    records: Sequence[RunRecord],
    out_dir: str | Path,
    human_data: HumanResponseSet | None = None,
    cost_ratios: Sequence[float] | None = None,
    top_k: int = 5,
) -> list[Path]:
    """Write the per-figure data tables; returns the paths written."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    if cost_ratios is None:
        cost_ratios = [0.0, 1e-5, 1e-4, 1e-3, 1e-2, 1e-1]
    grouped = _group_records(records)
    written: list[Path] = []

    accuracy_rows = []
    storyboard_rows = []
    variance_rows = []
    efficiency_rows = []
    reward_rows = []
    iou_rows = []
    for (scenario_id, label), runs in sorted(grouped.items()):
        condition = runs[0].condition
        true_word = runs[0].true_word
        per_run_acc = [float(np.mean(r.accuracies())) for r in runs if r.snapshots]
        ci = bootstrap_ci(per_run_acc) if per_run_acc else (float("nan"),) * 2
        accuracy_rows.append(
            {
                "scenario": scenario_id,
                "condition": condition,
                "method": label,
                "mean_accuracy": float(np.mean(per_run_acc)) if per_run_acc else float("nan"),
                "accuracy_std": float(np.std(per_run_acc)) if per_run_acc else float("nan"),
                "ci_low": ci[0],
                "ci_high": ci[1],
                "trials": len(runs),
                "seconds_per_action": float(np.mean([r.seconds_per_action for r in runs])),
            }
        )

        steps = sorted({s.step for r in runs for s in r.snapshots})
        by_step: dict[int, list[GoalDistribution]] = {t: [] for t in steps}
        for r in runs:
            for s in r.snapshots:
                by_step[s.step].append(s.probs)
        for t in steps:
            mean_dist = mean_distribution(by_step[t])
            for rank, (word, prob) in enumerate(
                sorted(mean_dist.items(), key=lambda kv: (-kv[1], kv[0]))[:top_k], 1
            ):
                storyboard_rows.append(
                    {
                        "scenario": scenario_id,
                        "condition": condition,
                        "method": label,
                        "step": t,
                        "rank": rank,
                        "word": word,
                        "probability": prob,
                        "is_true_word": word == true_word,
                    }
                )
            if human_data is not None:
                human = human_data.mean_distribution(scenario_id, t)
                value = iou(mean_dist, human)
                if value is not None:
                    iou_rows.append(
                        {
                            "scenario": scenario_id,
                            "condition": condition,
                            "method": label,
                            "step": t,
                            "iou": value,
                        }
                    )
            efficiency_rows.append(
                {
                    "scenario": scenario_id,
                    "condition": condition,
                    "method": label,
                    "step": t,
                    "mean_unique_tracked": float(
                        np.mean([
                            s.unique_count
                            for r in runs
                            for s in r.snapshots
                            if s.step == t
                        ])
                    ),
                }
            )

        if len(runs) >= 2:
            series = [[s.probs for s in r.snapshots] for r in runs]
            if len({len(s) for s in series}) == 1:
                per_step, acc_std = run_variance(series, true_word)
                variance_rows.append(
                    {
                        "scenario": scenario_id,
                        "condition": condition,
                        "method": label,
                        "total_variance": float(np.sum(per_step)),
                        "accuracy_std": acc_std,
                    }
                )

        for c in cost_ratios:
            nets = [
                net_reward(r.accuracies(), r.ledger(), c) for r in runs if r.snapshots
            ]
            if not nets:
                continue
            reward_rows.append(
                {
                    "scenario": scenario_id,
                    "condition": condition,
                    "method": label,
                    "cost_ratio": c,
                    "mean_net_reward": float(np.mean(nets)),
                    "q10": float(np.quantile(nets, 0.10)),
                    "q90": float(np.quantile(nets, 0.90)),
                }
            )

    tables = {
        "accuracy.csv": accuracy_rows,
        "storyboard.csv": storyboard_rows,
        "variance.csv": variance_rows,
        "sample_efficiency.csv": efficiency_rows,
        "net_reward.csv": reward_rows,
    }
    if human_data is not None:
        tables["iou.csv"] = iou_rows
    for name, rows in tables.items():
        path = out / name
        save_table(rows, path)
        written.append(path)
    return written


def load_bundled_lexicon() -> Lexicon:
    return Lexicon.load(BUNDLED_WORDS)
