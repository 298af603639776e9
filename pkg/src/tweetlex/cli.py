"""Command-line front end: classify a corpus, or sanity-check wordlists.

Exit codes: 0 success (including runs that found no sentiment words),
2 bad usage or invalid option values, 3 unreadable input file,
4 unusable lexicon, 5 unwritable output path, 6 source unavailable.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from .aggregate import aggregate
from .corpus import DEFAULT_LIMIT, CorpusSource, QueryFilter, fetch, parse_utc
from .errors import (
    CorpusEmpty,
    FileUnreadable,
    PathUnwritable,
    SourceUnavailable,
    UnusableLexicon,
)
from .lexicon import bundled_lexicon_dir, load_lexicon
from .report import render_summary, write_csv
from .scoring import DEFAULT_SPELL_THRESHOLD, score_tweet

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_UNREADABLE = 3
EXIT_BAD_LEXICON = 4
EXIT_UNWRITABLE = 5
EXIT_SOURCE = 6


@dataclass(frozen=True)
class RunConfig:
    """Everything one classification run needs, resolved and validated."""

    query: QueryFilter
    corpus: Path
    positive_path: Path
    negative_path: Path
    negators_path: Path
    limit: int = DEFAULT_LIMIT
    spell_correct: bool = False
    spell_threshold: float = DEFAULT_SPELL_THRESHOLD
    out_csv: Path | None = None


def _fail(code: int, message) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def run_classify(config: RunConfig) -> int:
    """Fetch, score, aggregate, report; returns the process exit code."""
    for path in (
        config.corpus,
        config.positive_path,
        config.negative_path,
        config.negators_path,
    ):
        if not Path(path).is_file():
            return _fail(EXIT_UNREADABLE, f"no such file: {path}")
    if config.out_csv is not None:
        parent = Path(config.out_csv).resolve().parent
        if not parent.is_dir():
            return _fail(EXIT_UNWRITABLE, f"output directory missing: {parent}")

    try:
        lexicon = load_lexicon(
            config.positive_path, config.negative_path, config.negators_path
        )
    except FileUnreadable as exc:
        return _fail(EXIT_UNREADABLE, exc)
    except UnusableLexicon as exc:
        return _fail(EXIT_BAD_LEXICON, exc)

    source = CorpusSource(config.corpus)
    try:
        tweets = fetch(source, config.query, config.limit)
    except FileUnreadable as exc:
        return _fail(EXIT_UNREADABLE, exc)
    except SourceUnavailable as exc:
        return _fail(EXIT_SOURCE, exc)
    except CorpusEmpty:
        print(f"note: corpus {config.corpus} has no valid records", file=sys.stderr)
        tweets = []
    if source.skipped:
        print(
            f"note: skipped {source.skipped} malformed corpus lines", file=sys.stderr
        )

    scores = [
        score_tweet(
            tweet,
            lexicon,
            spell_correct=config.spell_correct,
            spell_threshold=config.spell_threshold,
        )
        for tweet in tweets
    ]
    result = aggregate(scores, config.query.keyword)
    print(render_summary(result))

    if config.out_csv is not None:
        try:
            rows = write_csv(tweets, scores, config.out_csv)
        except PathUnwritable as exc:
            return _fail(EXIT_UNWRITABLE, exc)
        print(f"note: wrote {rows} detail rows to {config.out_csv}", file=sys.stderr)
    return EXIT_OK


def run_lexicon_check(positive_path, negative_path, negators_path) -> int:
    """Load the lexicon and print per-list counts and the conflict count."""
    try:
        lexicon = load_lexicon(positive_path, negative_path, negators_path)
    except FileUnreadable as exc:
        return _fail(EXIT_UNREADABLE, exc)
    except UnusableLexicon as exc:
        return _fail(EXIT_BAD_LEXICON, exc)
    summary = lexicon.source_summary
    print(f"positive words:    {summary.positive}")
    print(f"negative words:    {summary.negative}")
    print(f"negators:          {summary.negators}")
    print(f"conflicts removed: {summary.conflicts}")
    print(f"total sentiment words: {summary.positive + summary.negative}")
    return EXIT_OK


def _utc_arg(value: str):
    try:
        return parse_utc(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad timestamp {value!r}: {exc}")


def _bbox_arg(value: str):
    parts = value.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(
            "bbox must be minlat,minlon,maxlat,maxlon"
        )
    try:
        return tuple(float(part) for part in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bbox has non-numeric parts: {value!r}")


def _add_lexicon_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--lexicon-dir",
        type=Path,
        default=bundled_lexicon_dir(),
        help="directory holding positive.txt, negative.txt, negators.txt "
        "(default: bundled wordlists)",
    )
    parser.add_argument("--positive-words", type=Path, help="override positive list")
    parser.add_argument("--negative-words", type=Path, help="override negative list")
    parser.add_argument("--negators", type=Path, help="override negator list")


def _lexicon_paths(args) -> tuple[Path, Path, Path]:
    base = args.lexicon_dir
    return (
        args.positive_words or base / "positive.txt",
        args.negative_words or base / "negative.txt",
        args.negators or base / "negators.txt",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tweetlex",
        description="Score short social-media posts against sentiment wordlists.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    classify = sub.add_parser(
        "classify", help="classify a corpus and print a sentiment summary"
    )
    classify.add_argument("--query", required=True, help="keyword, hashtag, or phrase")
    classify.add_argument(
        "--source",
        choices=["corpus"],
        default="corpus",
        help="tweet source kind (only 'corpus' is built in)",
    )
    classify.add_argument(
        "--corpus", type=Path, required=True, help="JSON-lines corpus file"
    )
    classify.add_argument(
        "--since", type=_utc_arg, help="keep tweets at or after this time (ISO-8601)"
    )
    classify.add_argument(
        "--until", type=_utc_arg, help="keep tweets strictly before this time"
    )
    classify.add_argument(
        "--bbox",
        type=_bbox_arg,
        help="keep located tweets inside minlat,minlon,maxlat,maxlon",
    )
    classify.add_argument(
        "--limit",
        type=int,
        default=DEFAULT_LIMIT,
        help=f"maximum tweets to score (default {DEFAULT_LIMIT})",
    )
    _add_lexicon_flags(classify)
    classify.add_argument(
        "--spell-correct",
        action="store_true",
        help="map unknown tokens to their closest lexicon word before scoring",
    )
    classify.add_argument(
        "--spell-threshold",
        type=float,
        default=DEFAULT_SPELL_THRESHOLD,
        metavar="RATIO",
        help=f"similarity ratio for --spell-correct (default {DEFAULT_SPELL_THRESHOLD})",
    )
    classify.add_argument(
        "--out-csv", type=Path, help="write a per-tweet detail CSV here"
    )

    check = sub.add_parser("lexicon-check", help="load wordlists and print counts")
    _add_lexicon_flags(check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "lexicon-check":
        return run_lexicon_check(*_lexicon_paths(args))

    if not 0.0 <= args.spell_threshold <= 1.0:
        return _fail(EXIT_USAGE, "--spell-threshold must be within [0, 1]")
    if args.limit <= 0:
        return _fail(EXIT_USAGE, "--limit must be positive")
    try:
        query = QueryFilter(
            keyword=args.query, since=args.since, until=args.until, bbox=args.bbox
        )
    except ValueError as exc:
        return _fail(EXIT_USAGE, exc)
    positive_path, negative_path, negators_path = _lexicon_paths(args)
    config = RunConfig(
        query=query,
        corpus=args.corpus,
        positive_path=positive_path,
        negative_path=negative_path,
        negators_path=negators_path,
        limit=args.limit,
        spell_correct=args.spell_correct,
        spell_threshold=args.spell_threshold,
        out_csv=args.out_csv,
    )
    return run_classify(config)


if __name__ == "__main__":
    sys.exit(main())
