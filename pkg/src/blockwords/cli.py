"""Command-line interface.

Subcommands: run (execute inference over scenarios), fit (grid search),
export (analysis tables from run records), validate (check scenario files),
ngram (build and save the character model), serve (live HTTP service).
Exit codes: 0 success, 1 validation error, 2 runtime failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .harness import (
    BUNDLED_SCENARIOS,
    EXACT,
    METHODS,
    HumanResponseSet,
    MethodSpec,
    export_results,
    grid_search,
    import_osf_csv,
    load_bundled_lexicon,
    load_records,
    run_experiment,
    save_records,
    save_table,
)
from .lexicon import Lexicon, train_ngram
from .proposal import STRATEGIES
from .scenario import ScenarioError, load_scenario, load_scenario_dir


def _add_model_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--method", choices=METHODS, default=EXACT)
    parser.add_argument("--n-particles", type=int, default=2)
    parser.add_argument("--beta", type=float, default=1.0)
    parser.add_argument("--budget", type=int, default=100)
    parser.add_argument("--cadence", type=int, default=2)
    parser.add_argument("--strategy", choices=["bfs", "astar"], default="bfs")
    parser.add_argument("--proposal", choices=list(STRATEGIES), default="last_and_next")
    parser.add_argument("--tw", type=float, default=4.0, help="word temperature")
    parser.add_argument("--epsilon", type=float, default=0.05, help="termination bias")


def _spec_from_args(args: argparse.Namespace) -> MethodSpec:
    return MethodSpec(
        method=args.method,
        n_particles=args.n_particles,
        beta=args.beta,
        budget=args.budget,
        cadence=args.cadence,
        strategy=args.strategy,
        proposal=args.proposal,
        word_temperature=args.tw,
        termination_bias=args.epsilon,
    )


def _load_scenarios(args: argparse.Namespace):
    if args.scenario:
        return [load_scenario(p) for p in args.scenario]
    directory = args.scenario_dir or BUNDLED_SCENARIOS
    scenarios = load_scenario_dir(directory)
    if not scenarios:
        raise ScenarioError(f"no scenario files in {directory}")
    return scenarios


def _lexicon(args: argparse.Namespace) -> Lexicon:
    if getattr(args, "dictionary", None):
        return Lexicon.load(args.dictionary)
    return load_bundled_lexicon()


def cmd_run(args: argparse.Namespace) -> int:
    scenarios = _load_scenarios(args)
    spec = _spec_from_args(args)
    records = run_experiment(
        scenarios, [spec], _lexicon(args), seed=args.seed, trials=args.trials
    )
    save_records(records, args.out)
    failures = [r for r in records if r.error]
    for r in failures:
        print(f"run failed: {r.scenario_id} seed={r.seed}: {r.error}", file=sys.stderr)
    print(f"wrote {len(records)} records to {args.out}")
    return 2 if len(failures) == len(records) and records else 0


def cmd_fit(args: argparse.Namespace) -> int:
    grid = json.loads(Path(args.grid).read_text(encoding="utf-8"))
    human = None
    if args.human_data:
        path = Path(args.human_data)
        human = (
            import_osf_csv(path)
            if path.suffix.lower() == ".csv"
            else HumanResponseSet.load(path)
        )
    rows = grid_search(
        grid,
        args.objective,
        _load_scenarios(args),
        _lexicon(args),
        base=_spec_from_args(args),
        human_data=human,
        seed=args.seed,
        trials=args.trials,
    )
    save_table(rows, args.out)
    best = rows[0] if rows else {}
    print(f"wrote {len(rows)} rows to {args.out}; best: {best}")
    return 0


def cmd_export(args: argparse.Namespace) -> int:
    records = []
    for path in args.records:
        records.extend(load_records(path))
    human = None
    if args.human_data:
        path = Path(args.human_data)
        human = (
            import_osf_csv(path)
            if path.suffix.lower() == ".csv"
            else HumanResponseSet.load(path)
        )
    written = export_results(records, args.out_dir, human_data=human)
    for path in written:
        print(f"wrote {path}")
    return 0


def cmd_validate(args: argparse.Namespace) -> int:
    status = 0
    for path in args.files:
        try:
            scenario = load_scenario(path)
        except ScenarioError as exc:
            print(f"INVALID {path}: {exc}")
            status = 1
        else:
            print(
                f"ok {path}: id={scenario.id} condition={scenario.condition} "
                f"actions={len(scenario.actions)} true_word={scenario.true_word}"
            )
    return status


def cmd_ngram(args: argparse.Namespace) -> int:
    lexicon = Lexicon.load(args.dictionary) if args.dictionary else load_bundled_lexicon()
    model = train_ngram(
        lexicon, order=args.order, word_temperature=args.tw, termination_bias=args.epsilon
    )
    model.save(args.out)
    print(f"trained order-{args.order} model on {len(lexicon)} words -> {args.out}")
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    from .liveapi import serve

    serve(host=args.host, port=args.port, lexicon=_lexicon(args))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="blockwords", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run inference over scenarios")
    p_run.add_argument("--scenario", action="append", help="scenario file (repeatable)")
    p_run.add_argument("--scenario-dir", help="directory of scenario files")
    p_run.add_argument("--dictionary", help="word list file (default: bundled)")
    _add_model_flags(p_run)
    p_run.add_argument("--seed", type=int, default=0)
    p_run.add_argument("--trials", type=int, default=None)
    p_run.add_argument("--out", required=True, help="output records JSON")
    p_run.set_defaults(func=cmd_run)

    p_fit = sub.add_parser("fit", help="grid search over model parameters")
    p_fit.add_argument("--grid", required=True, help="JSON file: param -> value list")
    p_fit.add_argument(
        "--objective", choices=["iou_vs_humans", "accuracy"], default="accuracy"
    )
    p_fit.add_argument("--human-data", help="human responses (JSON or OSF-style CSV)")
    p_fit.add_argument("--scenario", action="append")
    p_fit.add_argument("--scenario-dir")
    p_fit.add_argument("--dictionary")
    _add_model_flags(p_fit)
    p_fit.add_argument("--seed", type=int, default=0)
    p_fit.add_argument("--trials", type=int, default=None)
    p_fit.add_argument("--out", required=True, help="output CSV")
    p_fit.set_defaults(func=cmd_fit)

    p_export = sub.add_parser("export", help="export analysis tables from records")
    p_export.add_argument("records", nargs="+", help="records JSON files")
    p_export.add_argument("--human-data")
    p_export.add_argument("--out-dir", required=True)
    p_export.set_defaults(func=cmd_export)

    p_validate = sub.add_parser("validate", help="validate scenario files")
    p_validate.add_argument("files", nargs="+")
    p_validate.set_defaults(func=cmd_validate)

    p_ngram = sub.add_parser("ngram", help="build and save the character model")
    p_ngram.add_argument("--dictionary")
    p_ngram.add_argument("--order", type=int, default=5)
    p_ngram.add_argument("--tw", type=float, default=4.0)
    p_ngram.add_argument("--epsilon", type=float, default=0.05)
    p_ngram.add_argument("--out", required=True)
    p_ngram.set_defaults(func=cmd_ngram)

    p_serve = sub.add_parser("serve", help="run the live inference service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--dictionary")
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ScenarioError, ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # noqa: BLE001 - runtime failures exit 2
        print(f"runtime failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
