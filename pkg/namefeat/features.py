"""Written-form characteristics of a single name token.

Pronunciation is unknown for self-reported names, so every characteristic is
a letter-level approximation over lower-case ASCII:

    vowels            a e i o u   ('y' always counts as a consonant)
    bouba consonants  b l m n     (voiced)
    bouba vowels      u o         (rounded)
    kiki consonants   k p t       (voiceless stops)
    kiki vowels       i e         (unrounded)
    bright vowels     e i
"""

import re
from dataclasses import asdict, dataclass
from typing import Dict, List, Sequence

import numpy as np

VOWELS = frozenset("aeiou")
BOUBA_CONSONANTS = frozenset("blmn")
BOUBA_VOWELS = frozenset("uo")
KIKI_CONSONANTS = frozenset("kpt")
KIKI_VOWELS = frozenset("ie")
BRIGHT_VOWELS = frozenset("ei")

FULL_PREDICTORS = (
    "n_consonants", "n_vowels", "n_syllables", "ends_in_vowel",
    "n_bouba_consonants", "n_bouba_vowels", "n_kiki_consonants", "n_kiki_vowels",
    "vowel_brightness",
)
# brightness dropped after the first run for collinearity
TABLE_PREDICTORS = FULL_PREDICTORS[:-1]
FINAL_PREDICTORS = (
    "n_vowels", "ends_in_vowel",
    "n_bouba_consonants", "n_bouba_vowels", "n_kiki_consonants", "n_kiki_vowels",
)

_TOKEN = re.compile(r"[a-z]+")
_VOWEL_RUN = re.compile(r"[aeiou]+")


@dataclass(frozen=True)
class NameFeatures:
    n_consonants: int
    n_vowels: int
    n_syllables: int
    ends_in_vowel: int
    n_bouba_consonants: int
    n_bouba_vowels: int
    n_kiki_consonants: int
    n_kiki_vowels: int
    vowel_brightness: int

    def as_vector(self, names: Sequence[str] = FINAL_PREDICTORS) -> List[float]:
        return [float(getattr(self, name)) for name in names]

    def to_dict(self) -> Dict[str, int]:
        return asdict(self)


def count_syllables(token: str) -> int:
    """Vowel-run syllable count with a silent final 'e'; never below 1."""
    runs = len(_VOWEL_RUN.findall(token))
    if runs > 1 and len(token) >= 2 and token[-1] == "e" and token[-2] not in VOWELS:
        runs -= 1
    return max(runs, 1)


def extract(token: str) -> NameFeatures:
    """Count the characteristics of one normalized token.

    Raises:
        ValueError: If the token is empty or not lower-case ASCII letters
    """
    if not token or not _TOKEN.fullmatch(token):
        raise ValueError(f"Expected a non-empty lower-case ASCII token, got {token!r}")

    n_vowels = sum(1 for ch in token if ch in VOWELS)
    return NameFeatures(
        n_consonants=len(token) - n_vowels,
        n_vowels=n_vowels,
        n_syllables=count_syllables(token),
        ends_in_vowel=int(token[-1] in VOWELS),
        n_bouba_consonants=sum(1 for ch in token if ch in BOUBA_CONSONANTS),
        n_bouba_vowels=sum(1 for ch in token if ch in BOUBA_VOWELS),
        n_kiki_consonants=sum(1 for ch in token if ch in KIKI_CONSONANTS),
        n_kiki_vowels=sum(1 for ch in token if ch in KIKI_VOWELS),
        vowel_brightness=sum(1 for ch in token if ch in BRIGHT_VOWELS),
    )


def feature_matrix(tokens: Sequence[str], names: Sequence[str] = FINAL_PREDICTORS) -> np.ndarray:
    """Rows of features in ``names`` order, one row per token."""
    if not tokens:
        return np.zeros((0, len(names)))
    return np.array([extract(token).as_vector(names) for token in tokens], dtype=float)


def summarize(tokens: Sequence[str], names: Sequence[str] = FULL_PREDICTORS) -> Dict[str, Dict[str, float]]:
    """Min, max, mean and sample SD of each characteristic over a token list."""
    X = feature_matrix(tokens, names)
    if X.shape[0] == 0:
        raise ValueError("Cannot summarize an empty token list")
    ddof = 1 if X.shape[0] > 1 else 0
    return {
        name: {
            "min": float(X[:, j].min()),
            "max": float(X[:, j].max()),
            "mean": float(X[:, j].mean()),
            "sd": float(X[:, j].std(ddof=ddof)),
        }
        for j, name in enumerate(names)
    }
