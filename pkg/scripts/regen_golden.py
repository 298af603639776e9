#!/usr/bin/env python3
"""Recompute the golden files under tests/golden/ from the oracle.

Uses only tests/oracle.py and the stdlib (no tweetlex imports), so the
goldens stay an independent check on the real pipeline. Also prints the
pinned id sets the filter tests assert against. Run from the repo root:

    python scripts/regen_golden.py
"""

from __future__ import annotations

import csv
import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

from oracle import oracle_read_wordlist, oracle_score_text  # noqa: E402

DATA = ROOT / "src" / "tweetlex" / "data"
CORPUS = ROOT / "tests" / "data" / "tweets50.jsonl"
GOLDEN = ROOT / "tests" / "golden"

LONDON_BBOX = (51.3, -0.6, 51.7, 0.3)
WINDOW = ("2021-03-01T00:00:00Z", "2021-04-01T00:00:00Z")


def read_corpus_raw():
    records = []
    for line in CORPUS.read_text(encoding="utf-8").splitlines():
        if line.strip():
            records.append(json.loads(line))
    return records


def keyword_match(record, keyword):
    return keyword.lower() in record["text"].lower()


def encode(hits):
    return "|".join(token + ("!" if negated else "") for token, negated in hits)


def main():
    positive = oracle_read_wordlist(DATA / "positive.txt")
    negative = oracle_read_wordlist(DATA / "negative.txt")
    negators = oracle_read_wordlist(DATA / "negators.txt")
    records = read_corpus_raw()
    assert len(records) == 50, len(records)

    covid = [r for r in records if keyword_match(r, "covid")]
    scored = [
        (r, oracle_score_text(r["text"], positive, negative, negators))
        for r in covid
    ]
    total_pos = sum(len(pos) for _, (pos, _) in scored)
    total_neg = sum(len(neg) for _, (_, neg) in scored)
    found = total_pos + total_neg
    positivity = 100.0 / found * total_pos if found else 0.0
    negativity = 100.0 / found * total_neg if found else 0.0

    GOLDEN.mkdir(parents=True, exist_ok=True)
    summary_lines = [
        'Sentiment summary for "covid"',
        f"  tweets scored:  {len(scored)}",
        f"  positive words: {total_pos}",
        f"  negative words: {total_neg}",
        f"  positivity:     {positivity:.1f}%",
        f"  negativity:     {negativity:.1f}%",
    ]
    (GOLDEN / "summary_covid.txt").write_text(
        "\n".join(summary_lines) + "\n", encoding="utf-8"
    )

    with open(GOLDEN / "details_covid.csv", "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["date", "time", "username", "tweet", "positive_words", "negative_words"]
        )
        for record, (pos, neg) in scored:
            stamp = record["created_at"]
            writer.writerow(
                [
                    stamp[:10],
                    stamp[11:19],
                    record["username"],
                    record["text"],
                    encode(pos),
                    encode(neg),
                ]
            )

    print(f"covid: {len(scored)} tweets, P={total_pos}, N={total_neg}, "
          f"positivity={positivity!r}, negativity={negativity!r}")
    print("covid ids:", [r["id"] for r in covid])

    hospital_bbox = [
        r["id"]
        for r in records
        if keyword_match(r, "hospital")
        and "lat" in r
        and LONDON_BBOX[0] <= r["lat"] <= LONDON_BBOX[2]
        and LONDON_BBOX[1] <= r["lon"] <= LONDON_BBOX[3]
    ]
    print("hospital in London bbox:", hospital_bbox)

    since, until = WINDOW
    vaccine_window = [
        r["id"]
        for r in records
        if keyword_match(r, "vaccine") and since <= r["created_at"] < until
    ]
    print("vaccine in March window:", vaccine_window)

    schedule = [r for r in records if keyword_match(r, "schedule")]
    for r in schedule:
        pos, neg = oracle_score_text(r["text"], positive, negative, negators)
        assert not pos and not neg, (r["id"], pos, neg)
    print("schedule ids (all neutral):", [r["id"] for r in schedule])

    assert not [r for r in records if keyword_match(r, "horoscope")]

    per_tweet = {
        r["id"]: (encode(pos), encode(neg)) for r, (pos, neg) in scored
    }
    print("per-tweet matches:")
    for tid, cells in per_tweet.items():
        print(f"  {tid}: +[{cells[0]}] -[{cells[1]}]")


if __name__ == "__main__":
    main()
