"""Wordlist loading and polarity lookups.

Three plain-text lists drive the classifier: positive words, negative
words, and negators ("reverse terms" such as "not" that invert the
word right after them). List files hold one token per line in UTF-8;
blank lines and lines starting with ';' are ignored, and entries are
lowercased on load. This is the same layout the Hu & Liu opinion
lexicon ships in, so those files can be dropped in directly.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from pathlib import Path

from .errors import (
    DroppedEntriesWarning,
    EmptyWordlistWarning,
    FileUnreadable,
    UnusableLexicon,
)

POSITIVE = "positive"
NEGATIVE = "negative"
NEUTRAL = "neutral"

COMMENT_PREFIX = ";"

_DATA_DIR = Path(__file__).resolve().parent / "data"


@dataclass(frozen=True)
class SourceSummary:
    """Diagnostics collected while loading the three wordlists."""

    positive: int
    negative: int
    negators: int
    conflicts: int  # tokens found in both sentiment lists, removed from both
    duplicates: int  # repeated entries within a single file
    dropped: int  # entries rejected because they contain whitespace


@dataclass(frozen=True)
class Lexicon:
    """Immutable sentiment vocabulary; safe to share across workers."""

    positive_words: frozenset[str]
    negative_words: frozenset[str]
    negators: frozenset[str]
    source_summary: SourceSummary

    def polarity_of(self, token: str) -> str:
        """Classify a normalized token as positive, negative, or neutral."""
        if token in self.positive_words:
            return POSITIVE
        if token in self.negative_words:
            return NEGATIVE
        return NEUTRAL

    def is_negator(self, token: str) -> bool:
        return token in self.negators

    @property
    def usable(self) -> bool:
        """True when at least one sentiment word is available."""
        return bool(self.positive_words or self.negative_words)

    def all_words(self) -> frozenset[str]:
        """Every known token, including negators (spell-correction pool)."""
        return self.positive_words | self.negative_words | self.negators


def _read_tokens(path) -> tuple[set[str], int, int]:
    """Read one wordlist file; returns (tokens, duplicates, dropped)."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise FileUnreadable(f"cannot read wordlist {path}: {exc}") from exc
    tokens: set[str] = set()
    duplicates = dropped = 0
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith(COMMENT_PREFIX):
            continue
        token = line.lower()
        if any(ch.isspace() for ch in token):
            dropped += 1
            continue
        if token in tokens:
            duplicates += 1
            continue
        tokens.add(token)
    return tokens, duplicates, dropped


def load_wordlist(path) -> set[str]:
    """Load one wordlist file into a set of normalized tokens.

    Duplicates are dropped silently; an empty result triggers an
    EmptyWordlistWarning but is not an error.
    """
    tokens, _, _ = _read_tokens(path)
    if not tokens:
        warnings.warn(
            f"wordlist {path} contains no usable tokens", EmptyWordlistWarning
        )
    return tokens


def load_lexicon(positive_path, negative_path, negators_path) -> Lexicon:
    """Load the three wordlists and resolve cross-list conflicts.

    A token listed as both positive and negative carries no usable
    polarity for binary counting, so it is removed from both sides and
    reported in the source summary. Negator entries containing
    whitespace cannot match a single token and are ignored with a
    warning. Raises UnusableLexicon when no sentiment words survive.
    """
    positive, pos_dup, pos_drop = _read_tokens(positive_path)
    negative, neg_dup, neg_drop = _read_tokens(negative_path)
    negators, rev_dup, rev_drop = _read_tokens(negators_path)

    for path, tokens in (
        (positive_path, positive),
        (negative_path, negative),
        (negators_path, negators),
    ):
        if not tokens:
            warnings.warn(
                f"wordlist {path} contains no usable tokens", EmptyWordlistWarning
            )
    if rev_drop:
        warnings.warn(
            f"{rev_drop} negator entries contain whitespace and were ignored",
            DroppedEntriesWarning,
        )

    conflicts = positive & negative
    positive -= conflicts
    negative -= conflicts
    if not positive and not negative:
        raise UnusableLexicon(
            "no sentiment words left after loading "
            f"{positive_path} and {negative_path}"
        )

    summary = SourceSummary(
        positive=len(positive),
        negative=len(negative),
        negators=len(negators),
        conflicts=len(conflicts),
        duplicates=pos_dup + neg_dup + rev_dup,
        dropped=pos_drop + neg_drop + rev_drop,
    )
    return Lexicon(
        positive_words=frozenset(positive),
        negative_words=frozenset(negative),
        negators=frozenset(negators),
        source_summary=summary,
    )


def bundled_lexicon_dir() -> Path:
    """Directory holding the wordlists that ship with the package."""
    return _DATA_DIR


def load_bundled_lexicon() -> Lexicon:
    """Load the bundled positive/negative/negator lists."""
    return load_lexicon(
        _DATA_DIR / "positive.txt",
        _DATA_DIR / "negative.txt",
        _DATA_DIR / "negators.txt",
    )
