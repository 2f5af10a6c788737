"""Tweet tokenization and the k-top gender-discriminating term lists."""

import logging
import re
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, List, Mapping, NamedTuple, Sequence, Tuple

from corpus.entries import Gender
from pipeline.lovins import stem_and_costem

logger = logging.getLogger(__name__)

_LETTERS = re.compile(r"[^\W\d_]+")
_HASHTAG = re.compile(r"#([^\W_]+)")
RETWEET_MARKER = "RT"


class TermKind(str, Enum):
    WORD = "word"
    STEM = "stem"
    COSTEM = "costem"
    DIGRAM = "digram"
    TRIGRAM = "trigram"
    HASHTAG = "hashtag"


TERM_KINDS: Tuple[TermKind, ...] = tuple(TermKind)

TermCounts = Dict[TermKind, Counter]


class TweetScan(NamedTuple):
    words: List[str]
    hashtags: List[str]
    mentions: int
    links: int
    retweet: bool


class TokenizedTweets(NamedTuple):
    words: List[str]
    hashtags: List[str]


def scan_tweet(text: str) -> TweetScan:
    """Split one message into words and hashtags and count mentions and links.

    A message opening with "RT" is a retweet; the marker is not a word.
    Tokens starting with "http" are links, tokens starting with "@" are
    mentions; neither contributes words.
    """
    raw = text.split()
    retweet = bool(raw) and raw[0] == RETWEET_MARKER
    if retweet:
        raw = raw[1:]

    words: List[str] = []
    hashtags: List[str] = []
    mentions = links = 0
    for token in raw:
        lowered = token.lower()
        if lowered.startswith("http"):
            links += 1
        elif lowered.startswith("@"):
            mentions += 1
        elif lowered.startswith("#"):
            tag = _HASHTAG.match(lowered)
            if tag:
                hashtags.append(tag.group(1))
        else:
            words.extend(_LETTERS.findall(lowered))
    return TweetScan(words, hashtags, mentions, links, retweet)


def tokenize_tweets(tweets: Iterable[str]) -> TokenizedTweets:
    words: List[str] = []
    hashtags: List[str] = []
    for text in tweets:
        scan = scan_tweet(text)
        words.extend(scan.words)
        hashtags.extend(scan.hashtags)
    return TokenizedTweets(words, hashtags)


def char_ngrams(word: str, n: int) -> List[str]:
    """Contiguous character n-grams of one word, in order, duplicates kept."""
    if n not in (2, 3):
        raise ValueError(f"n must be 2 or 3, got {n}")
    return [word[i:i + n] for i in range(len(word) - n + 1)]


def user_terms(tweets: Iterable[str]) -> TermCounts:
    """Term occurrence counts of every kind for one user's messages."""
    words, hashtags = tokenize_tweets(tweets)
    stems: Counter = Counter()
    costems: Counter = Counter()
    for word in words:
        stem, suffix = stem_and_costem(word)
        stems[stem] += 1
        if suffix:
            costems[suffix] += 1
    return {
        TermKind.WORD: Counter(words),
        TermKind.STEM: stems,
        TermKind.COSTEM: costems,
        TermKind.DIGRAM: Counter(g for w in words for g in char_ngrams(w, 2)),
        TermKind.TRIGRAM: Counter(g for w in words for g in char_ngrams(w, 3)),
        TermKind.HASHTAG: Counter(hashtags),
    }


@dataclass(frozen=True)
class TermList:
    kind: TermKind
    male_terms: Tuple[str, ...]
    female_terms: Tuple[str, ...]
    short: bool = False      # vocabulary smaller than k

    @property
    def terms(self) -> Tuple[str, ...]:
        return self.male_terms + self.female_terms

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "male_terms": list(self.male_terms),
            "female_terms": list(self.female_terms),
            "short": self.short,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TermList":
        return cls(TermKind(data["kind"]), tuple(data["male_terms"]), tuple(data["female_terms"]),
                   bool(data.get("short", False)))


def term_scores(corpus: Sequence[Tuple[Gender, Mapping[TermKind, Counter]]], kind: TermKind) -> Dict[str, int]:
    """s(t): total uses by male users minus total uses by female users."""
    male: Counter = Counter()
    female: Counter = Counter()
    for gender, counts in corpus:
        target = male if gender is Gender.MALE else female
        target.update(counts.get(kind, Counter()))
    return {term: male[term] - female[term] for term in set(male) | set(female)}


def select_top_terms(corpus: Sequence[Tuple[Gender, Mapping[TermKind, Counter]]], kind: TermKind,
                     k: int) -> TermList:
    """The k terms with the largest s(t) (male) and the k with the smallest (female).

    Ties are broken by the term's alphabetical order.

    Raises:
        ValueError: If k < 1 or no term of this kind occurs
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    scores = term_scores(corpus, kind)
    if not scores:
        raise ValueError(f"No {kind.value} terms in the training corpus")

    male_terms = tuple(sorted(scores, key=lambda t: (-scores[t], t))[:k])
    female_terms = tuple(sorted(scores, key=lambda t: (scores[t], t))[:k])
    short = len(scores) < k
    if short:
        logger.warning("Only %d %s terms for k=%d", len(scores), kind.value, k)
    return TermList(kind, male_terms, female_terms, short)
