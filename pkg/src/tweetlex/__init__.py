"""tweetlex: wordlist-based sentiment scoring for short social posts."""

from .aggregate import AggregateResult, aggregate
from .corpus import (
    DEFAULT_LIMIT,
    CorpusSource,
    MockSource,
    QueryFilter,
    Tweet,
    fetch,
    filter_tweets,
    parse_utc,
    read_corpus,
)
from .errors import (
    CorpusEmpty,
    DroppedEntriesWarning,
    EmptyWordlistWarning,
    FileUnreadable,
    PathUnwritable,
    SequenceMismatch,
    SourceUnavailable,
    TweetlexError,
    UnusableLexicon,
)
from .lexicon import (
    NEGATIVE,
    NEUTRAL,
    POSITIVE,
    Lexicon,
    SourceSummary,
    bundled_lexicon_dir,
    load_bundled_lexicon,
    load_lexicon,
    load_wordlist,
)
from .report import decode_matches, encode_matches, render_summary, write_csv
from .scoring import (
    DEFAULT_SPELL_THRESHOLD,
    Match,
    TweetScore,
    normalize,
    score_tweet,
    suggest_correction,
    tokenize,
)

__version__ = "0.1.0"

__all__ = [
    "AggregateResult",
    "CorpusEmpty",
    "CorpusSource",
    "DEFAULT_LIMIT",
    "DEFAULT_SPELL_THRESHOLD",
    "DroppedEntriesWarning",
    "EmptyWordlistWarning",
    "FileUnreadable",
    "Lexicon",
    "Match",
    "MockSource",
    "NEGATIVE",
    "NEUTRAL",
    "PathUnwritable",
    "POSITIVE",
    "QueryFilter",
    "SequenceMismatch",
    "SourceSummary",
    "SourceUnavailable",
    "Tweet",
    "TweetScore",
    "TweetlexError",
    "UnusableLexicon",
    "aggregate",
    "bundled_lexicon_dir",
    "decode_matches",
    "encode_matches",
    "fetch",
    "filter_tweets",
    "load_bundled_lexicon",
    "load_lexicon",
    "load_wordlist",
    "normalize",
    "parse_utc",
    "read_corpus",
    "render_summary",
    "score_tweet",
    "suggest_correction",
    "tokenize",
    "write_csv",
]
