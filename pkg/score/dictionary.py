"""Gender scores looked up from the name dictionaries.

A score runs from -1.0 (a name given only to women) to +1.0 (only to men).
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from corpus.entries import DictEntry, GenderCategory, Source
from corpus.name_db import NameDb
from nameproc.matching import first_match_tokens
from nameproc.normalize import normalize, raw_tokens

logger = logging.getLogger(__name__)

CATEGORY_SCORES = {
    GenderCategory.MALE: 1.0,
    GenderCategory.FEMALE: -1.0,
    GenderCategory.MOSTLY_MALE: 0.8,
    GenderCategory.MOSTLY_FEMALE: -0.8,
    GenderCategory.UNISEX: 0.0,
}
_FIRST_PART_SCORES = {
    GenderCategory.MALE_IF_FIRST_PART: 1.0,
    GenderCategory.FEMALE_IF_FIRST_PART: -1.0,
}


class Provenance(str, Enum):
    DICTIONARY = "dictionary"
    NAMCHAR = "namchar"
    UNSCORED = "unscored"


@dataclass(frozen=True)
class GenderScore:
    value: float
    provenance: Provenance
    matched_token: Optional[str] = None

    def __post_init__(self):
        if not -1.0 <= self.value <= 1.0:
            raise ValueError(f"Gender score out of range: {self.value}")
        if self.provenance is Provenance.UNSCORED and self.value != 0.0:
            raise ValueError("An unscored name must have value 0.0")

    @property
    def is_scored(self) -> bool:
        return self.provenance is not Provenance.UNSCORED

    def to_dict(self) -> dict:
        return {"value": self.value, "provenance": self.provenance.value, "matched_token": self.matched_token}


UNSCORED = GenderScore(0.0, Provenance.UNSCORED)


def census_score(records: Sequence[DictEntry], matched_token: Optional[str] = None) -> GenderScore:
    """(M - F) / (M + F) over the summed usage weights of the records."""
    male = sum(r.male for r in records)
    female = sum(r.female for r in records)
    if male + female <= 0:
        return UNSCORED
    value = (male - female) / (male + female)
    return GenderScore(min(max(value, -1.0), 1.0), Provenance.DICTIONARY, matched_token)


def _category_score(category: GenderCategory, first_part: bool) -> float:
    if category in _FIRST_PART_SCORES:
        return _FIRST_PART_SCORES[category] if first_part else 0.0
    return CATEGORY_SCORES[category]


def namdict_score(records: Sequence[DictEntry], first_part: bool = True,
                  matched_token: Optional[str] = None) -> GenderScore:
    """Mean of the per-record category scores.

    ``first_part`` tells whether the matched token opened the name, which
    decides the *_if_first_part categories.
    """
    if not records:
        return UNSCORED
    values = [_category_score(r.category, first_part) for r in records]
    return GenderScore(sum(values) / len(values), Provenance.DICTIONARY, matched_token)


def dictionary_score(records: Sequence[DictEntry], first_part: bool = True,
                     matched_token: Optional[str] = None) -> GenderScore:
    """Census frequencies when present, otherwise the category mapping."""
    census = [r for r in records if r.source is Source.CENSUS]
    if census:
        return census_score(census, matched_token)
    return namdict_score(records, first_part, matched_token)


def gender_score(db: NameDb, raw_name: str, preprocess: bool = True) -> GenderScore:
    """Score a self-reported name by its leftmost dictionary token.

    Without ``preprocess`` the name is only lower-cased and split, so tokens
    carrying symbols or diacritics miss the dictionary. Names without a hit
    score 0.0 (unscored).
    """
    tokens = normalize(raw_name).tokens if preprocess else raw_tokens(raw_name)
    match = first_match_tokens(db, tokens)
    if match is None:
        return UNSCORED
    return dictionary_score(match.records, match.is_first_token, match.token)
