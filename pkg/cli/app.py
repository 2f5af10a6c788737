"""Command line interface for NameChar.

    python main.py dict build|inspect ...
    python main.py name features|score ...
    python main.py namchar train|predict|inspect ...
    python main.py pipeline train|classify|evaluate ...
    python main.py stats ttest ...

JSON results go to stdout (or --out); progress and summaries go to stderr.
Exit codes: 0 success, 1 usage error, 2 data error.
"""

import argparse
import logging
import sys
from typing import List, Optional

from config.run import ENGINES, SCORINGS, ConfigError, RunConfig
from config.settings import NAMCHAR_CONFIG, NAMECHAR_DATA_DIR, PIPELINE_CONFIG
from corpus.custom_format import serialize_custom
from corpus.name_db import NameDb
from corpus.registry import get_format_descriptions, load_paths
from namefeat.features import extract
from nameproc.normalize import normalize_token
from pipeline.threshold import PipelineModel, classify, evaluate, evaluate_holdout, train
from pipeline.users import read_users_jsonl
from score.dictionary import gender_score
from score.histogram import score_histogram, write_histogram_csv
from score.namchar import NamCharModel, inspect_namchar, namchar_predict, namchar_score, train_namchar
from stats.hypothesis import paired_ttest
from utils.json_output import read_json, write_json

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """Argument parser that reports usage errors instead of exiting."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _say(message: str) -> None:
    print(message, file=sys.stderr)


# ---------------------------------------------------------------- helpers

def _config(args, training: bool = False) -> RunConfig:
    return RunConfig(
        db_paths=getattr(args, "db", None) or [NAMECHAR_DATA_DIR],
        db_format=getattr(args, "format", None),
        encoding=getattr(args, "encoding", None),
        model_path=getattr(args, "model", None),
        namchar_model_path=getattr(args, "namchar_model", None),
        k=getattr(args, "k", PIPELINE_CONFIG["k"]),
        tau=getattr(args, "tau", PIPELINE_CONFIG["tau"]),
        seed=getattr(args, "seed", None),
        engine=getattr(args, "engine", NAMCHAR_CONFIG["engine"]),
        scoring=getattr(args, "scoring", PIPELINE_CONFIG["scoring"]),
        strict=not getattr(args, "permissive", False),
        out_path=getattr(args, "out", None),
        report_path=getattr(args, "report", None),
    ).validate(training=training)


def _load_db(config: RunConfig) -> NameDb:
    return load_paths(config.db_paths, config.db_format, config.encoding)


def _load_namchar(path: Optional[str]) -> Optional[NamCharModel]:
    return NamCharModel.from_dict(read_json(path)) if path else None


def _read_users(path: str, strict: bool):
    with open(path, "r", encoding="utf-8") as f:
        return read_users_jsonl(f, strict=strict)


def _read_numbers(path: str) -> List[float]:
    values = []
    with open(path, "r", encoding="utf-8") as f:
        for line_number, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                values.append(float(line))
            except ValueError:
                raise ValueError(f"{path}, line {line_number}: not a number: {line.strip()!r}") from None
    return values


# ---------------------------------------------------------------- dict

def cmd_dict_build(args) -> int:
    config = _config(args)
    db = _load_db(config)
    with open(args.out, "w", encoding="utf-8") as f:
        rows = serialize_custom(db, f)
    write_json(db.summary())
    _say(f"✅ Wrote {rows} names to {args.out}")
    return EXIT_OK


def cmd_dict_inspect(args) -> int:
    config = _config(args)
    db = _load_db(config)
    summary = db.summary()
    write_json(summary, config.out_path)
    _say(f"📊 {summary['distinct_names']} distinct names, {summary['keys']} lookup keys")
    return EXIT_OK


# ---------------------------------------------------------------- name

def cmd_name_features(args) -> int:
    token = normalize_token(args.token).replace(" ", "")
    if not token:
        raise ValueError(f"No letters in {args.token!r}")
    write_json({"token": token, **extract(token).to_dict()}, getattr(args, "out", None))
    return EXIT_OK


def cmd_name_score(args) -> int:
    config = _config(args)
    db = _load_db(config)
    namchar = _load_namchar(config.model_path)
    if namchar is not None:
        score = namchar_score(db, namchar, args.name)
    else:
        score = gender_score(db, args.name, preprocess=not args.raw)
    write_json({"name": args.name, **score.to_dict()}, config.out_path)
    _say(f"🔎 {args.name}: {score.value:+.3f} ({score.provenance.value})")
    return EXIT_OK


# ---------------------------------------------------------------- namchar

def cmd_namchar_train(args) -> int:
    config = _config(args, training=True)
    db = _load_db(config)
    grid = [(args.gamma, args.cost)] if args.gamma is not None and args.cost is not None else None
    model = train_namchar(db, engine=config.engine, seed=config.seed, grid=grid,
                          folds=args.folds, repeats=args.repeats, max_names=args.max_names)
    write_json(model.to_dict(), config.out_path)
    _say(f"✅ Trained NamChar ({config.engine}) on {model.metadata.get('names')} names")
    return EXIT_OK


def cmd_namchar_inspect(args) -> int:
    config = _config(args)
    db = _load_db(config)
    result = inspect_namchar(db)
    write_json(result, config.out_path)
    _say(f"📊 {result['names']} gendered names ({result['female']} female, {result['male']} male)")
    return EXIT_OK


def cmd_namchar_predict(args) -> int:
    model = NamCharModel.from_dict(read_json(args.model))
    rows = []
    for token in args.tokens:
        label, p_female = namchar_predict(model, token)
        rows.append({"token": token, "label": label.value, "p_female": p_female})
    write_json(rows, getattr(args, "out", None))
    return EXIT_OK


# ---------------------------------------------------------------- pipeline

def cmd_pipeline_train(args) -> int:
    config = _config(args, training=True)
    db = _load_db(config)
    namchar = _load_namchar(config.namchar_model_path)
    users = _read_users(args.corpus, config.strict)
    model = train(users, db, namchar, k=config.k, tau=config.tau, scoring=config.scoring, seed=config.seed)
    write_json(model.to_dict(), config.out_path)
    _say(f"✅ Trained threshold classifier on {model.metadata['users']} users")
    return EXIT_OK


def cmd_pipeline_classify(args) -> int:
    config = _config(args)
    db = _load_db(config)
    model = PipelineModel.from_dict(read_json(config.model_path))
    namchar = _load_namchar(config.namchar_model_path)
    users = _read_users(args.corpus, config.strict)

    results = [(u, classify(model, u, db, namchar)) for u in users]
    rows = [{
        "user_id": u.user_id,
        "label": r.label.value,
        "stage": r.stage,
        "score": r.score.value,
        "provenance": r.score.provenance.value,
    } for u, r in results]
    write_json(rows, config.out_path)

    if config.report_path:
        write_json(evaluate(model, users, db, namchar), config.report_path)
    if args.histogram:
        with open(args.histogram, "w", encoding="utf-8") as f:
            write_histogram_csv(score_histogram([r.score.value for _, r in results]), f)

    stage1 = sum(1 for _, r in results if r.stage == 1)
    _say(f"✅ Classified {len(results)} users ({stage1} in step 1, {len(results) - stage1} in step 2)")
    return EXIT_OK


def cmd_pipeline_evaluate(args) -> int:
    config = _config(args)
    db = _load_db(config)
    model = PipelineModel.from_dict(read_json(config.model_path))
    namchar = _load_namchar(config.namchar_model_path)
    users = _read_users(args.corpus, config.strict)
    if args.holdout:
        result = evaluate_holdout(model, users, db, namchar, folds=args.folds, repeats=args.repeats)
        write_json(result, config.out_path)
        cv = result["stage2"]["cv"] or {}
        _say(f"📊 {result['n']} held-out users, step-2 CV accuracy {cv.get('accuracy_mean')}")
        return EXIT_OK
    result = evaluate(model, users, db, namchar)
    write_json(result, config.out_path)
    overall = result["overall"] or {}
    _say(f"📊 {result['n']} users, accuracy {overall.get('acc')}")
    return EXIT_OK


# ---------------------------------------------------------------- stats

def cmd_stats_ttest(args) -> int:
    result = paired_ttest(_read_numbers(args.a), _read_numbers(args.b))
    write_json(result.to_dict(), getattr(args, "out", None))
    _say(f"📊 t = {result.t:.4f}, df = {result.df}, p = {result.p:.4g}")
    return EXIT_OK


# ---------------------------------------------------------------- parser

def _add_db(p) -> None:
    p.add_argument("--db", nargs="+", help=f"Dictionary files or directories (default: {NAMECHAR_DATA_DIR})")
    formats = get_format_descriptions()
    p.add_argument("--format", choices=sorted(formats),
                   help="Force a dictionary format: " + "; ".join(f"{k} ({v})" for k, v in sorted(formats.items())))
    p.add_argument("--encoding", help="Override the format's default encoding")


def _add_out(p) -> None:
    p.add_argument("--out", help="Write JSON here instead of stdout")


def build_parser() -> _Parser:
    parser = _Parser(prog="namechar", description="Gender inference from names and tweets")
    groups = parser.add_subparsers(dest="group")

    # dict
    dict_parser = groups.add_parser("dict", help="Name dictionaries")
    dict_cmds = dict_parser.add_subparsers(dest="command")
    p = dict_cmds.add_parser("build", help="Merge dictionaries into one canonical TSV")
    _add_db(p)
    p.add_argument("--out", required=True, help="Target TSV file")
    p.set_defaults(handler=cmd_dict_build)
    p = dict_cmds.add_parser("inspect", help="Category counts per source")
    _add_db(p)
    _add_out(p)
    p.set_defaults(handler=cmd_dict_inspect)

    # name
    name_parser = groups.add_parser("name", help="Single names")
    name_cmds = name_parser.add_subparsers(dest="command")
    p = name_cmds.add_parser("features", help="Name characteristics of one token")
    p.add_argument("token")
    _add_out(p)
    p.set_defaults(handler=cmd_name_features)
    p = name_cmds.add_parser("score", help="Gender score of a name")
    p.add_argument("name")
    _add_db(p)
    scoring = p.add_mutually_exclusive_group()
    scoring.add_argument("--model", help="NamChar model for names no dictionary knows")
    scoring.add_argument("--raw", action="store_true", help="Skip transliteration and symbol removal")
    _add_out(p)
    p.set_defaults(handler=cmd_name_score)

    # namchar
    namchar_parser = groups.add_parser("namchar", help="Name-character classifier")
    namchar_cmds = namchar_parser.add_subparsers(dest="command")
    p = namchar_cmds.add_parser("train", help="Train on the dictionary's gendered names")
    _add_db(p)
    p.add_argument("--engine", choices=ENGINES, default=NAMCHAR_CONFIG["engine"])
    p.add_argument("--seed", type=int)
    p.add_argument("--gamma", type=float, help="Fixed gamma (skips the grid search with --cost)")
    p.add_argument("--cost", type=float, help="Fixed cost (skips the grid search with --gamma)")
    p.add_argument("--folds", type=int, default=NAMCHAR_CONFIG["folds"])
    p.add_argument("--repeats", type=int, default=NAMCHAR_CONFIG["repeats"])
    p.add_argument("--max-names", type=int, default=NAMCHAR_CONFIG["max_names"])
    _add_out(p)
    p.set_defaults(handler=cmd_namchar_train)
    p = namchar_cmds.add_parser("inspect", help="Variable summary and logistic fits per predictor set")
    _add_db(p)
    _add_out(p)
    p.set_defaults(handler=cmd_namchar_inspect)
    p = namchar_cmds.add_parser("predict", help="Predict gender for name tokens")
    p.add_argument("tokens", nargs="+")
    p.add_argument("--model", required=True)
    _add_out(p)
    p.set_defaults(handler=cmd_namchar_predict)

    # pipeline
    pipeline_parser = groups.add_parser("pipeline", help="Threshold Classifier over user records")
    pipeline_cmds = pipeline_parser.add_subparsers(dest="command")
    p = pipeline_cmds.add_parser("train", help="Train the two-step classifier")
    p.add_argument("--corpus", required=True, help="JSONL user records")
    _add_db(p)
    p.add_argument("--k", type=int, default=PIPELINE_CONFIG["k"])
    p.add_argument("--tau", type=float, default=PIPELINE_CONFIG["tau"])
    p.add_argument("--scoring", choices=SCORINGS, default=PIPELINE_CONFIG["scoring"])
    p.add_argument("--namchar-model", help="NamChar model, required for --scoring namchar")
    p.add_argument("--seed", type=int)
    p.add_argument("--permissive", action="store_true", help="Skip invalid user lines instead of failing")
    _add_out(p)
    p.set_defaults(handler=cmd_pipeline_train)
    for command, handler, help_text in (("classify", cmd_pipeline_classify, "Label users"),
                                        ("evaluate", cmd_pipeline_evaluate, "Score labels against ground truth")):
        p = pipeline_cmds.add_parser(command, help=help_text)
        p.add_argument("--model", required=True)
        p.add_argument("--corpus", required=True)
        _add_db(p)
        p.add_argument("--namchar-model")
        p.add_argument("--permissive", action="store_true")
        _add_out(p)
        if command == "classify":
            p.add_argument("--report", help="Also write the evaluation report here")
            p.add_argument("--histogram", help="Write the gender score histogram as CSV")
        else:
            p.add_argument("--holdout", action="store_true",
                           help="Evaluate each step on the half held out from parameter search")
            p.add_argument("--folds", type=int, default=PIPELINE_CONFIG["eval_folds"])
            p.add_argument("--repeats", type=int, default=PIPELINE_CONFIG["eval_repeats"])
        p.set_defaults(handler=handler)

    # stats
    stats_parser = groups.add_parser("stats", help="Statistical tests")
    stats_cmds = stats_parser.add_subparsers(dest="command")
    p = stats_cmds.add_parser("ttest", help="Paired t-test on two files of numbers")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    _add_out(p)
    p.set_defaults(handler=cmd_stats_ttest)

    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """Parse ``argv`` and dispatch; returns the process exit code."""
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    if not argv:
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        _say(f"❌ {e}")
        return EXIT_USAGE
    except SystemExit as e:       # --help
        return e.code if isinstance(e.code, int) else EXIT_OK

    handler = getattr(args, "handler", None)
    if handler is None:
        parser.print_usage(sys.stderr)
        _say(f"❌ Missing command for '{args.group}'" if args.group else "❌ Missing command group")
        return EXIT_USAGE

    try:
        return handler(args)
    except ConfigError as e:
        _say(f"❌ {e}")
        return EXIT_USAGE
    except (ValueError, OSError, KeyError) as e:
        logger.debug("Command failed", exc_info=True)
        _say(f"❌ Error: {e}")
        return EXIT_DATA
