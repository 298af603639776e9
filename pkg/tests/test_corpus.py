import json
from datetime import datetime, timezone

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import make_tweet
from tweetlex import (
    CorpusEmpty,
    CorpusSource,
    FileUnreadable,
    MockSource,
    QueryFilter,
    Tweet,
    fetch,
    filter_tweets,
    parse_utc,
    read_corpus,
)

UTC = timezone.utc


def write_corpus(path, records):
    path.write_text(
        "".join(json.dumps(r) + "\n" for r in records), encoding="utf-8"
    )
    return path


def record(i, **overrides):
    base = {
        "id": f"t{i}",
        "created_at": f"2021-01-0{i}T10:00:00Z",
        "username": f"user{i}",
        "text": f"tweet number {i}",
    }
    base.update(overrides)
    return base


class TestParseUtc:
    def test_z_suffix(self):
        assert parse_utc("2021-01-01T00:00:00Z") == datetime(2021, 1, 1, tzinfo=UTC)

    def test_offset_converted_to_utc(self):
        stamp = parse_utc("2021-01-01T05:00:00+05:00")
        assert stamp == datetime(2021, 1, 1, 0, 0, tzinfo=UTC)

    def test_naive_taken_as_utc(self):
        assert parse_utc("2021-06-01T12:00:00").tzinfo == UTC

    def test_garbage_raises(self):
        with pytest.raises(ValueError):
            parse_utc("yesterday")


class TestTweet:
    def test_empty_id_rejected(self):
        with pytest.raises(ValueError):
            make_tweet("hi", id="")

    def test_naive_timestamp_rejected(self):
        with pytest.raises(ValueError):
            Tweet("t1", datetime(2021, 1, 1), "u", "hi")

    def test_location_range_checked(self):
        with pytest.raises(ValueError):
            make_tweet("hi", location=(91.0, 0.0))
        with pytest.raises(ValueError):
            make_tweet("hi", location=(0.0, -181.0))


class TestReadCorpus:
    def test_valid_lines_in_order(self, tmp_path):
        path = write_corpus(tmp_path / "c.jsonl", [record(1), record(2), record(3)])
        tweets, skipped = read_corpus(path)
        assert [t.id for t in tweets] == ["t1", "t2", "t3"]
        assert skipped == 0

    def test_malformed_lines_skipped_and_counted(self, tmp_path):
        path = tmp_path / "c.jsonl"
        lines = [json.dumps(record(1)), "{not json", json.dumps(record(2))]
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        tweets, skipped = read_corpus(path)
        assert [t.id for t in tweets] == ["t1", "t2"]
        assert skipped == 1

    @pytest.mark.parametrize(
        "bad",
        [
            {"id": "x", "created_at": "2021-01-01T00:00:00Z", "username": "u"},
            record(1, created_at="not a time"),
            record(1, id=123),
            record(1, text=None),
            record(1, lat=95.0, lon=0.0),
            record(1, lat=10.0),
            record(1, lat=True, lon=1.0),
            record(1, lat="51.5", lon="-0.1"),
            ["an", "array"],
        ],
    )
    def test_bad_records_are_skipped(self, tmp_path, bad):
        path = write_corpus(tmp_path / "c.jsonl", [record(2), bad])
        tweets, skipped = read_corpus(path)
        assert [t.id for t in tweets] == ["t2"]
        assert skipped == 1

    def test_blank_lines_are_not_counted(self, tmp_path):
        path = tmp_path / "c.jsonl"
        path.write_text(json.dumps(record(1)) + "\n\n\n", encoding="utf-8")
        tweets, skipped = read_corpus(path)
        assert len(tweets) == 1
        assert skipped == 0

    def test_location_parsed(self, tmp_path):
        path = write_corpus(tmp_path / "c.jsonl", [record(1, lat=51.5, lon=-0.1)])
        tweets, _ = read_corpus(path)
        assert tweets[0].location == (51.5, -0.1)

    def test_empty_file_raises(self, tmp_path):
        path = tmp_path / "c.jsonl"
        path.write_text("", encoding="utf-8")
        with pytest.raises(CorpusEmpty):
            read_corpus(path)

    def test_missing_file_raises(self, tmp_path):
        with pytest.raises(FileUnreadable):
            read_corpus(tmp_path / "absent.jsonl")

    def test_fixture_corpus_is_clean(self, corpus_path):
        tweets, skipped = read_corpus(corpus_path)
        assert len(tweets) == 50
        assert skipped == 0


class TestQueryFilter:
    def test_empty_keyword_rejected(self):
        with pytest.raises(ValueError):
            QueryFilter(keyword="")

    def test_since_must_precede_until(self):
        t = datetime(2021, 1, 1, tzinfo=UTC)
        with pytest.raises(ValueError):
            QueryFilter(keyword="x", since=t, until=t)

    def test_bbox_must_be_ordered(self):
        with pytest.raises(ValueError):
            QueryFilter(keyword="x", bbox=(10.0, 0.0, 5.0, 1.0))

    def test_keyword_is_case_insensitive_substring(self):
        query = QueryFilter(keyword="Vaccine")
        assert query.matches(make_tweet("the vaccine works"))
        assert not query.matches(make_tweet("the jab works"))

    def test_hash_is_matched_literally(self):
        query = QueryFilter(keyword="#covid")
        assert query.matches(make_tweet("news #covid19 update"))
        assert not query.matches(make_tweet("covid news"))

    def test_since_inclusive_until_exclusive(self):
        since = datetime(2021, 1, 1, tzinfo=UTC)
        until = datetime(2021, 2, 1, tzinfo=UTC)
        query = QueryFilter(keyword="flu", since=since, until=until)
        before = make_tweet("flu", created_at=datetime(2020, 12, 31, 23, 59, tzinfo=UTC))
        at_since = make_tweet("flu", created_at=since)
        at_until = make_tweet("flu", created_at=until)
        assert not query.matches(before)
        assert query.matches(at_since)
        assert not query.matches(at_until)

    def test_bbox_keeps_inside_and_drops_unlocated(self):
        query = QueryFilter(keyword="x", bbox=(50.0, -1.0, 52.0, 1.0))
        assert query.matches(make_tweet("x", location=(51.0, 0.0)))
        assert query.matches(make_tweet("x", location=(50.0, -1.0)))
        assert not query.matches(make_tweet("x", location=(49.9, 0.0)))
        assert not query.matches(make_tweet("x", location=None))


class TestSources:
    def test_mock_source_respects_limit(self):
        tweets = [make_tweet("flu shot", id=f"m{i}") for i in range(10)]
        got = fetch(MockSource(tweets), QueryFilter(keyword="flu"), limit=5)
        assert [t.id for t in got] == ["m0", "m1", "m2", "m3", "m4"]

    def test_corpus_source_no_match_is_empty(self, corpus_path):
        got = fetch(CorpusSource(corpus_path), QueryFilter(keyword="horoscope"))
        assert got == []

    def test_corpus_source_tracks_skipped(self, tmp_path):
        path = tmp_path / "c.jsonl"
        path.write_text(json.dumps(record(1)) + "\nbroken\n", encoding="utf-8")
        source = CorpusSource(path)
        fetch(source, QueryFilter(keyword="tweet"))
        assert source.skipped == 1

    def test_limit_must_be_positive(self):
        with pytest.raises(ValueError):
            fetch(MockSource([]), QueryFilter(keyword="x"), limit=0)

    def test_fixture_covid_subset(self, corpus_path):
        got = fetch(CorpusSource(corpus_path), QueryFilter(keyword="covid"), limit=100)
        assert len(got) == 20
        assert got[0].id == "t001"


tweet_st = st.builds(
    Tweet,
    id=st.text(alphabet="abc123", min_size=1, max_size=6),
    created_at=st.datetimes(
        min_value=datetime(2019, 1, 1), max_value=datetime(2023, 1, 1)
    ).map(lambda d: d.replace(tzinfo=UTC)),
    username=st.text(max_size=8),
    text=st.text(max_size=40),
    location=st.one_of(
        st.none(),
        st.tuples(
            st.floats(-90, 90, allow_nan=False),
            st.floats(-180, 180, allow_nan=False),
        ),
    ),
)


@st.composite
def filter_st(draw):
    keyword = draw(st.text(min_size=1, max_size=4))
    since = draw(
        st.one_of(
            st.none(),
            st.datetimes(
                min_value=datetime(2019, 1, 1), max_value=datetime(2022, 1, 1)
            ).map(lambda d: d.replace(tzinfo=UTC)),
        )
    )
    until = draw(
        st.one_of(
            st.none(),
            st.datetimes(
                min_value=datetime(2022, 1, 2), max_value=datetime(2024, 1, 1)
            ).map(lambda d: d.replace(tzinfo=UTC)),
        )
    )
    bbox = draw(
        st.one_of(
            st.none(),
            st.tuples(
                st.floats(-90, 0, allow_nan=False),
                st.floats(-180, 0, allow_nan=False),
                st.floats(0, 90, allow_nan=False),
                st.floats(0, 180, allow_nan=False),
            ),
        )
    )
    return QueryFilter(keyword=keyword, since=since, until=until, bbox=bbox)


class TestFilterProperties:
    @given(tweets=st.lists(tweet_st, max_size=30), query=filter_st())
    @settings(max_examples=80)
    def test_idempotent_and_subsequence(self, tweets, query):
        once = filter_tweets(tweets, query)
        assert filter_tweets(once, query) == once
        it = iter(tweets)
        assert all(kept in it for kept in once)

    @given(tweets=st.lists(tweet_st, max_size=30), keyword=st.text(min_size=1, max_size=4))
    @settings(max_examples=80)
    def test_kept_tweets_contain_keyword(self, tweets, keyword):
        for kept in filter_tweets(tweets, QueryFilter(keyword=keyword)):
            assert keyword.lower() in kept.text.lower()
