"""Corpus-level aggregation of per-tweet scores into percentage shares."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .scoring import TweetScore


@dataclass(frozen=True)
class AggregateResult:
    """Totals and percentage shares for one classified topic."""

    topic: str
    tweets_scored: int
    total_positive: int
    total_negative: int
    positivity_pct: float
    negativity_pct: float
    no_signal: bool


def aggregate(scores: Iterable[TweetScore], topic: str) -> AggregateResult:
    """Sum per-tweet counts and convert them to percentage shares.

    Each share is one hundred divided by the total number of sentiment
    words found, times that side's count, so the two always sum to 100.
    When nothing matched the division is undefined; both shares are
    reported as 0.0 and no_signal is set instead of raising.
    """
    scores = list(scores)
    total_positive = sum(score.positive_count for score in scores)
    total_negative = sum(score.negative_count for score in scores)
    found = total_positive + total_negative
    if found:
        # multiply before dividing so shares never round above 100
        positivity = 100.0 * total_positive / found
        negativity = 100.0 * total_negative / found
    else:
        positivity = negativity = 0.0
    return AggregateResult(
        topic=topic,
        tweets_scored=len(scores),
        total_positive=total_positive,
        total_negative=total_negative,
        positivity_pct=positivity,
        negativity_pct=negativity,
        no_signal=found == 0,
    )
