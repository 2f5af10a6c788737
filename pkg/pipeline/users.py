"""User records read from JSONL and their profile statistics."""

import json
import logging
from dataclasses import dataclass, field
from typing import Iterable, List, NamedTuple, Optional, Tuple

from corpus.entries import Gender
from pipeline.terms import scan_tweet

logger = logging.getLogger(__name__)

COUNTERS = ("age_days", "friends", "followers", "retweet_count", "mention_count",
            "link_count", "hashtag_count", "tweet_count")


class UserRecordError(ValueError):
    """A user line failed to parse or validate."""

    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


@dataclass(frozen=True)
class UserProfile:
    """Raw account counters.

    None means not supplied: activity counters are then counted from the tweets,
    a missing age counts as one day and missing friends or followers as zero.
    """
    age_days: Optional[int] = None
    friends: Optional[int] = None
    followers: Optional[int] = None
    retweet_count: Optional[int] = None
    mention_count: Optional[int] = None
    link_count: Optional[int] = None
    hashtag_count: Optional[int] = None
    tweet_count: Optional[int] = None

    def __post_init__(self):
        for name in COUNTERS:
            value = getattr(self, name)
            if value is not None and value < 0:
                raise ValueError(f"{name} must be non-negative, got {value}")


@dataclass(frozen=True)
class UserRecord:
    user_id: str
    name: str
    tweets: Tuple[str, ...] = ()
    profile: UserProfile = field(default_factory=UserProfile)
    gender: Optional[Gender] = None

    def __post_init__(self):
        if not self.user_id:
            raise ValueError("user_id must not be empty")


class ProfileStats(NamedTuple):
    tweets_per_day: float
    mentions_per_day: float
    hashtags_per_day: float
    links_per_day: float
    retweets_per_day: float
    retweet_ratio: float           # retweets / tweets
    friend_follower_ratio: float   # friends / followers


PROFILE_FEATURES = ProfileStats._fields


def _ratio(num: float, den: float) -> float:
    return num / den if den else 0.0


def profile_stats(u: UserRecord) -> ProfileStats:
    """Per-day activity and the two ratios; a zero denominator gives 0.

    Counters missing from the profile are counted from the user's tweets.
    """
    p = u.profile
    need_scan = None in (p.retweet_count, p.mention_count, p.link_count, p.hashtag_count)
    mentions = links = hashtags = retweets = 0
    if need_scan:
        for text in u.tweets:
            scan = scan_tweet(text)
            mentions += scan.mentions
            links += scan.links
            hashtags += len(scan.hashtags)
            retweets += int(scan.retweet)

    def pick(value: Optional[int], counted: int) -> int:
        return counted if value is None else value

    tweets = pick(p.tweet_count, len(u.tweets))
    retweets = pick(p.retweet_count, retweets)
    age = max(pick(p.age_days, 1), 1)
    return ProfileStats(
        tweets_per_day=tweets / age,
        mentions_per_day=pick(p.mention_count, mentions) / age,
        hashtags_per_day=pick(p.hashtag_count, hashtags) / age,
        links_per_day=pick(p.link_count, links) / age,
        retweets_per_day=retweets / age,
        retweet_ratio=_ratio(retweets, tweets),
        friend_follower_ratio=_ratio(pick(p.friends, 0), pick(p.followers, 0)),
    )


def _parse_profile(raw, line: int) -> UserProfile:
    if raw is None:
        return UserProfile()
    if not isinstance(raw, dict):
        raise UserRecordError("profile must be an object", line)
    values = {}
    for name in COUNTERS:
        if raw.get(name) is None:
            continue
        value = raw[name]
        if isinstance(value, bool) or not isinstance(value, int) or value < 0:
            raise UserRecordError(f"profile.{name} must be a non-negative integer", line)
        values[name] = value
    return UserProfile(**values)


def parse_user(data, line: int) -> UserRecord:
    """Validate one decoded JSON object.

    Raises:
        UserRecordError: On a missing or mistyped field
    """
    if not isinstance(data, dict):
        raise UserRecordError("expected a JSON object", line)
    user_id = data.get("user_id")
    if not isinstance(user_id, str) or not user_id:
        raise UserRecordError("missing or empty user_id", line)
    name = data.get("name")
    if not isinstance(name, str):
        raise UserRecordError("missing name", line)
    tweets = data.get("tweets", [])
    if not isinstance(tweets, list) or not all(isinstance(t, str) for t in tweets):
        raise UserRecordError("tweets must be a list of strings", line)
    gender = data.get("gender")
    if gender is not None:
        try:
            gender = Gender(gender)
        except ValueError:
            raise UserRecordError(f"unknown gender {gender!r}", line) from None
    return UserRecord(user_id, name, tuple(tweets), _parse_profile(data.get("profile"), line), gender)


def read_users_jsonl(reader: Iterable[str], strict: bool = True) -> List[UserRecord]:
    """Read one user object per line.

    In strict mode the first bad line raises; otherwise it is logged and skipped.

    Raises:
        UserRecordError: With the line number of malformed JSON or an invalid record
    """
    users = []
    skipped = 0
    for line_number, text in enumerate(reader, start=1):
        if not text.strip():
            continue
        try:
            try:
                data = json.loads(text)
            except json.JSONDecodeError as e:
                raise UserRecordError(f"malformed JSON: {e.msg}", line_number) from e
            users.append(parse_user(data, line_number))
        except UserRecordError as e:
            if strict:
                raise
            skipped += 1
            logger.warning("Skipping user %s", e)

    logger.info("Read %d users (%d skipped)", len(users), skipped)
    return users


def user_to_dict(u: UserRecord) -> dict:
    profile = {name: getattr(u.profile, name) for name in COUNTERS if getattr(u.profile, name) is not None}
    return {
        "user_id": u.user_id,
        "name": u.name,
        "tweets": list(u.tweets),
        "profile": profile,
        "gender": u.gender.value if u.gender else None,
    }
