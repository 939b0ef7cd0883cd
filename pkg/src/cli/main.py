"""
lintaglab command line

Subcommands: split, tag, fit-errors, corrupt, encode, decode, eval, sweep, stats.
Exit codes: 0 success, 1 usage error, 2 data error, 3 tolerance failure.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from ..config import get_settings, setup_logging
from ..encodings import (
    EncodingId,
    RepairStats,
    format_label_file,
    get_encoding,
    labeled_to_treebank,
    read_label_file,
    round_trip_rates,
)
from ..errors import DataError, ToleranceError
from ..evals import attachment_scores
from ..experiments import load_sweep_config, run_sweep
from ..tagging import (
    BaselineTagger,
    ErrorModel,
    TaggerModel,
    TagCorrupter,
    build_plan,
    fit_error_model,
    read_predictions,
    tagging_accuracy,
)
from ..treebank import read_conllu, resplit, treebank_stats, write_conllu, write_conllu_file

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_TOLERANCE = 3


class UsageError(Exception):
    pass


class LabArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting so main() controls the exit code"""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _emit(text: str, out: Optional[Path]):
    if out is None:
        sys.stdout.write(text)
        return
    out = Path(out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, 'w', encoding='utf-8') as f:
        f.write(text)
    logger.info(f"Wrote {out}")


def _dump(data, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(data, indent=2, ensure_ascii=False) + "\n"
    return "".join(f"{key}\t{value}\n" for key, value in data.items())


# ==========================================
# SUBCOMMANDS
# ==========================================

def cmd_split(args) -> int:
    tb = read_conllu(args.file)
    out_dir = Path(args.out) if args.out else Path(args.file).parent
    for split in resplit(tb, ratios=args.ratios, seed=args.seed):
        write_conllu_file(split, out_dir / f"{split.name}.conllu")
        print(f"{split.name}\t{len(split)}")
    return EXIT_OK


def cmd_tag(args) -> int:
    tb = read_conllu(args.input)
    if args.model:
        tagger = BaselineTagger(TaggerModel.load(args.model))
    else:
        tagger = BaselineTagger()
        tagger.train(read_conllu(args.train))
    if args.save_model:
        tagger.model.save(args.save_model)

    tagged = tb.with_tags(tagger.tag(tb))
    accuracy = tagging_accuracy(tb, tagged)
    logger.info(f"Baseline tagger accuracy on {tb.name}: {accuracy:.4f}")
    _emit(write_conllu(tagged), args.out)
    if args.out:
        print(f"accuracy\t{accuracy:.6f}")
    return EXIT_OK


def cmd_fit_errors(args) -> int:
    gold = read_conllu(args.gold)
    model = fit_error_model(gold, read_predictions(args.predictions, gold))
    _emit(model.to_json() + "\n", args.out)
    return EXIT_OK


def cmd_corrupt(args) -> int:
    gold = read_conllu(args.gold)
    if args.model:
        model = ErrorModel.load(args.model)
    elif args.predictions:
        model = fit_error_model(gold, read_predictions(args.predictions, gold))
    else:
        raise UsageError("corrupt: one of --model or --predictions is required")

    plan = build_plan(model, args.accuracy)
    corrupter = TagCorrupter(model, tolerance=args.tolerance, max_attempts=args.max_attempts)
    result = corrupter.corrupt(gold, plan, seed=args.seed, calibration=not args.no_calibration)
    _emit(write_conllu(result.treebank), args.out)

    report = {
        "file": str(args.gold),
        "target_accuracy": args.accuracy,
        "achieved_accuracy": round(result.achieved_accuracy, 6),
        "target_errors": result.target_errors,
        "corrupted": result.corrupted_tokens,
        "attempts": result.attempts,
        "seed": result.seed,
    }
    reports = [report]
    for in_path, out_path in args.apply_to or []:
        split = read_conllu(in_path)
        applied = corrupter.corrupt(split, plan, seed=args.seed, calibration=False)
        write_conllu_file(applied.treebank, out_path)
        reports.append({
            "file": str(in_path),
            "target_accuracy": args.accuracy,
            "achieved_accuracy": round(applied.achieved_accuracy, 6),
            "target_errors": applied.target_errors,
            "corrupted": applied.corrupted_tokens,
            "attempts": applied.attempts,
            "seed": applied.seed,
        })

    # stdout carries the corrupted file when --out is absent
    stream = sys.stdout if args.out else sys.stderr
    for item in reports:
        if args.format == "json":
            stream.write(json.dumps(item) + "\n")
        else:
            stream.write(
                f"{item['file']}\ttarget={item['target_accuracy']:.4f}\t"
                f"achieved={item['achieved_accuracy']:.4f}\tcorrupted={item['corrupted']}\t"
                f"attempts={item['attempts']}\n"
            )
    return EXIT_OK


def cmd_encode(args) -> int:
    tb = read_conllu(args.input)
    kwargs = {"projectivize": True} if args.projectivize and args.encoding == EncodingId.ARC_HYBRID else {}
    encoding = get_encoding(args.encoding, **kwargs)
    encoded = encoding.encode_treebank(tb, skip_unencodable=args.skip_nonprojective)
    kept = [i for i, e in enumerate(encoded) if e is not None]
    if len(kept) < len(tb):
        skipped = [i for i, e in enumerate(encoded) if e is None]
        logger.warning(f"Skipped {len(skipped)} non-projective sentences: {skipped}")
    text = format_label_file(tb.with_sentences([tb[i] for i in kept]), [encoded[i] for i in kept])
    _emit(text, args.out)
    return EXIT_OK


def cmd_decode(args) -> int:
    labeled = read_label_file(args.labels, args.encoding)
    template = read_conllu(args.template) if args.template else labeled_to_treebank(labeled)
    if args.tags:
        tags = read_conllu(args.tags).tags()
    else:
        tags = [list(s.tags) for s in labeled]
    encoding = get_encoding(args.encoding)
    decoded, repairs = encoding.decode_treebank([s.encoded for s in labeled], template, tags=tags)
    if repairs != RepairStats():
        logger.warning(f"Decoding repaired {repairs.total} problems: {repairs.to_dict()}")
    _emit(write_conllu(decoded), args.out)
    return EXIT_OK


def cmd_eval(args) -> int:
    result = attachment_scores(read_conllu(args.gold), read_conllu(args.predicted))
    text = result.to_json() + "\n" if args.format == "json" else result.to_line() + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_sweep(args) -> int:
    config = load_sweep_config(args.config)
    overrides = {}
    if args.out:
        overrides["output"] = Path(args.out)
    if args.tolerance is not None:
        overrides["tolerance"] = args.tolerance
    if args.seed is not None:
        overrides["master_seed"] = args.seed
    if args.workers is not None:
        overrides["workers"] = args.workers
    if overrides:
        config = config.model_copy(update=overrides)

    report = run_sweep(config)
    sys.stdout.write(report.to_json() + "\n" if args.format == "json" else report.to_csv())
    return EXIT_OK


def cmd_stats(args) -> int:
    tb = read_conllu(args.input, skip_invalid=True)
    data = treebank_stats(tb).to_dict()
    data["invalid_sentences"] = len(tb.issues)
    rates = round_trip_rates(tb)
    if args.format == "json":
        data["round_trip"] = rates
        _emit(_dump(data, "json"), args.out)
    else:
        for name, rate in rates.items():
            data[f"round_trip_{name}"] = f"{rate['exact_rate']:.6f}"
            data[f"arc_rate_{name}"] = f"{rate['arc_rate']:.6f}"
        _emit(_dump(data, "csv"), args.out)
    return EXIT_OK


# ==========================================
# PARSER
# ==========================================

def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()

    common = LabArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="Random seed")
    common.add_argument("--tolerance", type=float, default=None, help="Relative tolerance on the target error count")
    common.add_argument("--out", type=Path, default=None, help="Output file or directory (stdout if omitted)")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--log-level", default=settings.log_level)

    parser = LabArgumentParser(prog="lintaglab", description="PoS-tag robustness of dependency linearizations")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("split", parents=[common], help="Re-split a treebank 60/10/30")
    p.add_argument("file", type=Path)
    p.add_argument("--ratios", type=float, nargs=3, default=(0.6, 0.1, 0.3), metavar=("TRAIN", "DEV", "TEST"))
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("tag", parents=[common], help="Tag a treebank with the baseline tagger")
    p.add_argument("input", type=Path)
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--train", type=Path, help="Gold treebank to train on")
    source.add_argument("--model", type=Path, help="Saved tagger model")
    p.add_argument("--save-model", type=Path)
    p.set_defaults(func=cmd_tag)

    p = sub.add_parser("fit-errors", parents=[common], help="Fit an error model from predicted tags")
    p.add_argument("gold", type=Path)
    p.add_argument("predictions", type=Path)
    p.set_defaults(func=cmd_fit_errors)

    p = sub.add_parser("corrupt", parents=[common], help="Corrupt tags to a target accuracy")
    p.add_argument("gold", type=Path)
    p.add_argument("--accuracy", type=float, required=True)
    p.add_argument("--model", type=Path, help="Error model JSON")
    p.add_argument("--predictions", type=Path, help="Predicted tags to fit the error model from")
    p.add_argument("--max-attempts", type=int, default=settings.max_attempts)
    p.add_argument("--no-calibration", action="store_true", help="Ignore recorded real-error positions")
    p.add_argument("--apply-to", nargs=2, action="append", type=Path, metavar=("IN", "OUT"),
                   help="Apply the same plan to another split")
    p.set_defaults(func=cmd_corrupt)

    encodings = [e.value for e in EncodingId]
    p = sub.add_parser("encode", parents=[common], help="Write a label file")
    p.add_argument("input", type=Path)
    p.add_argument("--encoding", choices=encodings, required=True)
    p.add_argument("--skip-nonprojective", action="store_true")
    p.add_argument("--projectivize", action="store_true", help="Lift non-projective arcs (ah_tb)")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", parents=[common], help="Decode a label file to CoNLL-U")
    p.add_argument("labels", type=Path)
    p.add_argument("--encoding", choices=encodings, required=True)
    p.add_argument("--tags", type=Path, help="CoNLL-U file whose tags drive head selection")
    p.add_argument("--template", type=Path, help="CoNLL-U file providing the other columns")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("eval", parents=[common], help="UAS/LAS of a predicted treebank")
    p.add_argument("gold", type=Path)
    p.add_argument("predicted", type=Path)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("sweep", parents=[common], help="Run an accuracy sweep")
    p.add_argument("config", type=Path)
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("stats", parents=[common], help="Treebank statistics and round-trip rates")
    p.add_argument("input", type=Path)
    p.set_defaults(func=cmd_stats)

    return parser


def _apply_defaults(args):
    settings = get_settings()
    if args.command != "sweep":
        if args.seed is None:
            args.seed = 0
        if args.tolerance is None:
            args.tolerance = settings.tolerance
    if getattr(args, "encoding", None) is not None:
        args.encoding = EncodingId.parse(args.encoding)
    return args


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the CLI

    Args:
        argv: Arguments without the program name (sys.argv[1:] if None)

    Returns:
        Process exit code
    """
    parser = build_parser()
    try:
        args = _apply_defaults(parser.parse_args(argv))
    except UsageError as e:
        sys.stderr.write(f"{parser.format_usage()}{e}\n")
        return EXIT_USAGE
    except SystemExit as e:
        # --help
        return EXIT_OK if not e.code else EXIT_USAGE

    setup_logging(args.log_level)
    try:
        return args.func(args)
    except UsageError as e:
        sys.stderr.write(f"{e}\n")
        return EXIT_USAGE
    except ToleranceError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_TOLERANCE
    except (DataError, OSError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_DATA


def run(argv: Optional[List[str]] = None):
    sys.exit(main(argv))
