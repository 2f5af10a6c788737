import json

import pytest

from corpus.entries import Gender
from pipeline.users import (
    UserProfile, UserRecordError, profile_stats, read_users_jsonl, user_to_dict,
)


def test_profile_stats_counted_from_tweets(make_user):
    u = make_user("1", "Ann", ["RT @a hi #x http://y", "hello"], age_days=10, friends=20, followers=10)
    stats = profile_stats(u)
    assert stats.tweets_per_day == pytest.approx(0.2)
    assert stats.mentions_per_day == pytest.approx(0.1)
    assert stats.hashtags_per_day == pytest.approx(0.1)
    assert stats.links_per_day == pytest.approx(0.1)
    assert stats.retweets_per_day == pytest.approx(0.1)
    assert stats.retweet_ratio == pytest.approx(0.5)
    assert stats.friend_follower_ratio == pytest.approx(2.0)


def test_profile_counters_override_tweets(make_user):
    u = make_user("1", "Ann", ["hello"], age_days=2, tweet_count=40, retweet_count=10, mention_count=4,
                  link_count=0, hashtag_count=6)
    stats = profile_stats(u)
    assert stats.tweets_per_day == 20.0
    assert stats.retweet_ratio == 0.25
    assert stats.hashtags_per_day == 3.0


def test_zero_denominators(make_user):
    stats = profile_stats(make_user("1", "Ann", age_days=0, friends=5, followers=0))
    assert stats.friend_follower_ratio == 0.0
    assert stats.retweet_ratio == 0.0
    assert stats.tweets_per_day == 0.0


def test_negative_counter_rejected():
    with pytest.raises(ValueError):
        UserProfile(friends=-1)


def lines(*objects):
    return [o if isinstance(o, str) else json.dumps(o) + "\n" for o in objects]


GOOD = {"user_id": "7", "name": "Mary", "tweets": ["hi"], "gender": "female", "profile": {"followers": 3}}


def test_read_users_jsonl():
    (u,) = read_users_jsonl(lines(GOOD, "\n"))
    assert u.user_id == "7"
    assert u.gender is Gender.FEMALE
    assert u.profile.followers == 3
    assert u.profile.retweet_count is None
    assert user_to_dict(u) == GOOD


@pytest.mark.parametrize("bad", [
    "{not json\n",
    {"name": "x"},
    {"user_id": "1", "name": "x", "gender": "other"},
    {"user_id": "1", "name": "x", "tweets": "hi"},
    {"user_id": "1", "name": "x", "profile": {"friends": True}},
    {"user_id": "1", "name": "x", "profile": {"friends": -2}},
    [1, 2],
])
def test_strict_mode_reports_line(bad):
    with pytest.raises(UserRecordError) as err:
        read_users_jsonl(lines(GOOD, bad))
    assert err.value.line == 2


def test_permissive_mode_skips_bad_lines():
    users = read_users_jsonl(lines(GOOD, "{oops\n", {"user_id": "8", "name": "Bob"}), strict=False)
    assert [u.user_id for u in users] == ["7", "8"]
    assert users[1].gender is None


def test_unsupplied_counters_stay_unset_and_default_in_stats(make_user):
    u = make_user("1", "Ann", ["a", "b", "c"])
    assert u.profile.age_days is None
    assert u.profile.friends is None
    stats = profile_stats(u)
    assert stats.tweets_per_day == 3.0
    assert stats.friend_follower_ratio == 0.0


def test_profile_round_trips_without_added_keys():
    record = dict(GOOD, profile={"age_days": 5})
    (u,) = read_users_jsonl(lines(record))
    assert user_to_dict(u) == record
