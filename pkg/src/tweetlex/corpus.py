"""Tweet records, corpus files, query filters, and tweet sources.

A corpus is a JSON-lines file standing in for a live platform query:
one object per line with fields ``id``, ``created_at`` (ISO-8601,
naive values taken as UTC), ``username``, ``text``, and optional
``lat``/``lon``. Malformed lines are skipped and counted rather than
aborting the read.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Iterable

from .errors import CorpusEmpty, FileUnreadable

log = logging.getLogger(__name__)

DEFAULT_LIMIT = 500


def parse_utc(value: str) -> datetime:
    """Parse an ISO-8601 timestamp into an aware UTC datetime."""
    if value.endswith(("Z", "z")):
        value = value[:-1] + "+00:00"
    stamp = datetime.fromisoformat(value)
    if stamp.tzinfo is None:
        stamp = stamp.replace(tzinfo=timezone.utc)
    return stamp.astimezone(timezone.utc)


@dataclass(frozen=True)
class Tweet:
    """One post: id, UTC timestamp, author, raw text, optional (lat, lon)."""

    id: str
    created_at: datetime
    username: str
    text: str
    location: tuple[float, float] | None = None

    def __post_init__(self):
        if not self.id:
            raise ValueError("tweet id must be non-empty")
        if self.created_at.tzinfo is None:
            raise ValueError("created_at must be timezone-aware")
        if self.location is not None:
            lat, lon = self.location
            if not (-90.0 <= lat <= 90.0) or not (-180.0 <= lon <= 180.0):
                raise ValueError(f"location out of range: {self.location}")


@dataclass(frozen=True)
class QueryFilter:
    """Keyword plus optional time window and geographic bounding box.

    The keyword is matched case-insensitively as a raw-text substring,
    so hashtags and multi-word phrases match exactly as typed. ``since``
    is inclusive, ``until`` exclusive. ``bbox`` is
    (min_lat, min_lon, max_lat, max_lon) with inclusive edges; tweets
    without a location never match when a bbox is set.
    """

    keyword: str
    since: datetime | None = None
    until: datetime | None = None
    bbox: tuple[float, float, float, float] | None = None

    def __post_init__(self):
        if not self.keyword:
            raise ValueError("keyword must be non-empty")
        if self.since is not None and self.until is not None:
            if not self.since < self.until:
                raise ValueError("since must be strictly before until")
        if self.bbox is not None:
            min_lat, min_lon, max_lat, max_lon = self.bbox
            if min_lat > max_lat or min_lon > max_lon:
                raise ValueError("bbox must be (min_lat, min_lon, max_lat, max_lon)")

    def matches(self, tweet: Tweet) -> bool:
        if self.keyword.lower() not in tweet.text.lower():
            return False
        if self.since is not None and tweet.created_at < self.since:
            return False
        if self.until is not None and tweet.created_at >= self.until:
            return False
        if self.bbox is not None:
            if tweet.location is None:
                return False
            lat, lon = tweet.location
            min_lat, min_lon, max_lat, max_lon = self.bbox
            if not (min_lat <= lat <= max_lat and min_lon <= lon <= max_lon):
                return False
        return True


def _tweet_from_record(obj) -> Tweet:
    """Build a Tweet from one decoded JSON value; raises on bad records."""
    if not isinstance(obj, dict):
        raise TypeError("record must be a JSON object")
    for field in ("id", "created_at", "username", "text"):
        if not isinstance(obj.get(field), str):
            raise ValueError(f"record field {field!r} missing or not a string")
    lat, lon = obj.get("lat"), obj.get("lon")
    if (lat is None) != (lon is None):
        raise ValueError("lat and lon must appear together")
    if lat is None:
        location = None
    else:
        for value in (lat, lon):
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ValueError(f"lat/lon must be numbers, got {value!r}")
        location = (float(lat), float(lon))
    return Tweet(
        id=obj["id"],
        created_at=parse_utc(obj["created_at"]),
        username=obj["username"],
        text=obj["text"],
        location=location,
    )


def read_corpus(path) -> tuple[list[Tweet], int]:
    """Read a JSON-lines corpus file.

    Returns (tweets in file order, count of skipped malformed lines).
    Raises FileUnreadable when the file cannot be read and CorpusEmpty
    when it yields zero valid records.
    """
    try:
        raw = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise FileUnreadable(f"cannot read corpus {path}: {exc}") from exc
    tweets: list[Tweet] = []
    skipped = 0
    for lineno, line in enumerate(raw.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            tweets.append(_tweet_from_record(json.loads(line)))
        except (ValueError, TypeError) as exc:
            skipped += 1
            log.debug("skipping corpus line %d: %s", lineno, exc)
    if not tweets:
        raise CorpusEmpty(f"no valid records in {path}")
    return tweets, skipped


def filter_tweets(tweets: Iterable[Tweet], query: QueryFilter) -> list[Tweet]:
    """Keep tweets matching the filter, preserving their order."""
    return [tweet for tweet in tweets if query.matches(tweet)]


class CorpusSource:
    """Tweet source backed by a JSON-lines corpus file.

    Any object with a ``tweets()`` method returning an iterable of
    Tweet works as a source; an adapter for a live platform API would
    be a third implementation (raising SourceUnavailable on network
    failure) and is deliberately not built here.
    """

    def __init__(self, path):
        self.path = Path(path)
        self.skipped = 0

    def tweets(self) -> list[Tweet]:
        records, self.skipped = read_corpus(self.path)
        return records


class MockSource:
    """Tweet source serving a fixed in-memory sequence."""

    def __init__(self, tweets: Iterable[Tweet]):
        self._tweets = list(tweets)

    def tweets(self) -> list[Tweet]:
        return list(self._tweets)


def fetch(source, query: QueryFilter, limit: int = DEFAULT_LIMIT) -> list[Tweet]:
    """Pull at most ``limit`` tweets matching ``query`` from a source."""
    if limit <= 0:
        raise ValueError("limit must be positive")
    return filter_tweets(source.tweets(), query)[:limit]
