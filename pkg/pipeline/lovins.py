"""Lovins stemmer driven by the ending/condition/recoding tables in lovins_tables.json.

Stemming is two passes: remove the longest listed ending whose context
condition holds on the remaining stem, then respell the stem end (undouble
a final consonant pair, then apply the first matching recoding rule).
"""

import json
from functools import lru_cache
from pathlib import Path
from typing import Callable, Dict, NamedTuple, Tuple

TABLES_PATH = Path(__file__).with_name("lovins_tables.json")


def _ends_u_e(stem: str) -> bool:
    return len(stem) >= 3 and stem[-3] == "u" and stem[-1] == "e"


# Context conditions on the stem left after removing an ending.
CONDITIONS: Dict[str, Callable[[str], bool]] = {
    "A": lambda s: True,
    "B": lambda s: len(s) >= 3,
    "C": lambda s: len(s) >= 4,
    "D": lambda s: len(s) >= 5,
    "E": lambda s: s[-1] != "e",
    "F": lambda s: len(s) >= 3 and s[-1] != "e",
    "G": lambda s: len(s) >= 3 and s[-1] == "f",
    "H": lambda s: s[-1] == "t" or s.endswith("ll"),
    "I": lambda s: s[-1] not in "oe",
    "J": lambda s: s[-1] not in "ae",
    "K": lambda s: len(s) >= 3 and (s[-1] in "li" or _ends_u_e(s)),
    "L": lambda s: s[-1] not in "uxs" or s.endswith("os"),
    "M": lambda s: s[-1] not in "acem",
    "N": lambda s: len(s) >= 3 and (s[-3] != "s" or len(s) >= 4),
    "O": lambda s: s[-1] in "li",
    "P": lambda s: s[-1] != "c",
    "Q": lambda s: len(s) >= 3 and s[-1] not in "ln",
    "R": lambda s: s[-1] in "nr",
    "S": lambda s: s.endswith("dr") or (s[-1] == "t" and not s.endswith("tt")),
    "T": lambda s: s[-1] == "s" or (s[-1] == "t" and not s.endswith("ot")),
    "U": lambda s: s[-1] in "lmnr",
    "V": lambda s: s[-1] == "c",
    "W": lambda s: s[-1] not in "su",
    "X": lambda s: s[-1] in "li" or _ends_u_e(s),
    "Y": lambda s: s.endswith("in"),
    "Z": lambda s: s[-1] != "f",
    "AA": lambda s: s.endswith(("d", "f", "ph", "th", "l", "er", "or", "es", "t")),
    "BB": lambda s: len(s) >= 3 and not s.endswith(("met", "ryst")),
    "CC": lambda s: s[-1] == "l",
}


class Recoding(NamedTuple):
    ending: str
    replacement: str
    unless_after: str    # letters that block the rule when they precede ``ending``


class LovinsTables(NamedTuple):
    min_stem: int
    endings: Dict[str, str]
    max_ending: int
    undouble: Tuple[str, ...]
    recodings: Tuple[Recoding, ...]


@lru_cache(maxsize=1)
def load_tables(path: Path = TABLES_PATH) -> LovinsTables:
    """Read and check the stemmer tables.

    Raises:
        ValueError: If an ending refers to an unknown condition code
    """
    with open(path, "r", encoding="utf-8") as f:
        data = json.load(f)
    endings = data["endings"]
    unknown = sorted({code for code in endings.values() if code not in CONDITIONS})
    if unknown:
        raise ValueError(f"Unknown Lovins condition codes: {unknown}")
    return LovinsTables(
        min_stem=int(data["min_stem"]),
        endings=endings,
        max_ending=max(len(e) for e in endings),
        undouble=tuple(data["undouble"]),
        recodings=tuple(Recoding(*rule) for rule in data["recodings"]),
    )


def strip_ending(word: str) -> str:
    """Remove the longest ending whose condition holds; no respelling."""
    tables = load_tables()
    longest = min(len(word) - tables.min_stem, tables.max_ending)
    for size in range(longest, 0, -1):
        code = tables.endings.get(word[-size:])
        if code is None:
            continue
        stem = word[:-size]
        if CONDITIONS[code](stem):
            return stem
    return word


def recode(stem: str) -> str:
    """Undouble a final consonant pair, then apply the first recoding rule that matches."""
    tables = load_tables()
    if len(stem) < 2:
        return stem
    if stem[-2:] in tables.undouble:
        stem = stem[:-1]
    for rule in tables.recodings:
        if not stem.endswith(rule.ending):
            continue
        before = stem[-len(rule.ending) - 1: -len(rule.ending)]
        if before and before in rule.unless_after:
            break
        return stem[: -len(rule.ending)] + rule.replacement
    return stem


@lru_cache(maxsize=65536)
def lovins_stem(word: str) -> str:
    """Stem a lower-case word; words of two letters or fewer pass through."""
    if len(word) <= 2:
        return word
    return recode(strip_ending(word))


def costem(word: str, stem: str) -> str:
    """The part of ``word`` that stemming removed; empty when nothing was removed.

    ``stem`` must be the stem before respelling (see ``strip_ending``).
    """
    if not word.startswith(stem):
        return ""
    return word[len(stem):]


def stem_and_costem(word: str) -> Tuple[str, str]:
    return lovins_stem(word), costem(word, strip_ending(word))
