"""Cleaning of self-reported name strings.

Two steps: Latin letters with diacritics are folded to ASCII, then every
character that is not an ASCII letter or whitespace is dropped.
"""

import re
import unicodedata
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

from unidecode import unidecode

_WHITESPACE = re.compile(r"\s+")


@dataclass(frozen=True)
class NormalizedName:
    """A name string after transliteration and symbol removal."""
    original: str
    ascii: str
    cleaned: str              # [a-z] and single interior spaces only
    tokens: Tuple[str, ...]

    @property
    def first_token(self):
        return self.tokens[0] if self.tokens else None


@lru_cache(maxsize=4096)
def _fold_char(ch: str) -> str:
    try:
        name = unicodedata.name(ch)
    except ValueError:
        return ch
    # Only Latin-based letters get folded; other scripts are left for
    # the cleaning step to drop.
    if "LATIN" not in name:
        return ch
    folded = unidecode(ch)
    return folded if folded.isascii() else ch


def transliterate(s: str) -> str:
    """Fold Latin letters with diacritics to their ASCII base (ü → u, ß → ss)."""
    return "".join(ch if ch.isascii() else _fold_char(ch) for ch in s)


def _clean(s: str) -> str:
    kept = []
    for ch in s:
        if ch.isspace():
            kept.append(" ")
        elif ch.isascii() and ch.isalpha():
            kept.append(ch.lower())
    return _WHITESPACE.sub(" ", "".join(kept)).strip()


def normalize(s: str) -> NormalizedName:
    """Transliterate, drop non-letters, collapse whitespace, lower-case, tokenize.

    A string without any letters yields an empty token tuple.
    """
    ascii_text = transliterate(s)
    cleaned = _clean(ascii_text)
    tokens = tuple(cleaned.split(" ")) if cleaned else ()
    return NormalizedName(original=s, ascii=ascii_text, cleaned=cleaned, tokens=tokens)


def normalize_token(s: str) -> str:
    """Keying function shared by the name database and all lookups."""
    return normalize(s).cleaned


def raw_tokens(s: str) -> List[str]:
    """Lower-cased whitespace tokens without any cleaning."""
    return s.lower().split()
