"""Merged, queryable store of gender-labeled names."""

import logging
from collections import Counter, defaultdict
from dataclasses import dataclass, replace
from types import MappingProxyType
from typing import Any, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from corpus.entries import DictEntry, GenderCategory, Source
from nameproc.normalize import normalize_token

logger = logging.getLogger(__name__)


def entry_key(name: str) -> str:
    """Database key of a stored name; '+' separates compound name parts."""
    return normalize_token(name.replace("+", " "))


@dataclass(frozen=True)
class NameDb:
    """Immutable lookup table: normalized token → records."""
    records: Mapping[str, Tuple[DictEntry, ...]]
    source_stats: Mapping[Source, Mapping[GenderCategory, int]]

    def lookup(self, token: str) -> Optional[Tuple[DictEntry, ...]]:
        return self.records.get(token)

    def __contains__(self, token: str) -> bool:
        return token in self.records

    def __len__(self) -> int:
        return len(self.records)

    def keys(self):
        return self.records.keys()

    def entries(self) -> Iterator[DictEntry]:
        for records in self.records.values():
            yield from records

    def primary_entries(self, sources: Optional[Sequence[Source]] = None) -> Iterator[Tuple[str, DictEntry]]:
        """Yield ``(key, entry)`` for every non-derived record."""
        for key, records in self.records.items():
            for entry in records:
                if entry.derived:
                    continue
                if sources is None or entry.source in sources:
                    yield key, entry

    def count(self, source: Source) -> int:
        return sum(self.source_stats.get(source, {}).values())

    def summary(self) -> Dict[str, Any]:
        """Per-source category counts plus the Census overlap figures."""
        sources = {}
        for source, counts in self.source_stats.items():
            block = {category.value: counts.get(category, 0) for category in GenderCategory}
            block["total"] = sum(counts.values())
            sources[source.value] = block

        census = [entry for _, entry in self.primary_entries([Source.CENSUS])]
        both = sum(1 for entry in census if entry.male > 0 and entry.female > 0)

        return {
            "distinct_names": sum(1 for records in self.records.values() if any(not e.derived for e in records)),
            "keys": len(self.records),
            "derived_records": sum(1 for e in self.entries() if e.derived),
            "sources": sources,
            "census": {
                "distinct": len(census),
                "both_genders": both,
                "male_only": self.source_stats.get(Source.CENSUS, {}).get(GenderCategory.MALE, 0),
                "female_only": self.source_stats.get(Source.CENSUS, {}).get(GenderCategory.FEMALE, 0),
            },
        }


def _merge_census(entries: List[DictEntry]) -> DictEntry:
    if len(entries) == 1:
        return entries[0]
    male = sum(e.male for e in entries)
    female = sum(e.female for e in entries)
    if male > 0 and female > 0:
        category = GenderCategory.UNISEX
    elif female > 0:
        category = GenderCategory.FEMALE
    else:
        category = GenderCategory.MALE
    return replace(entries[0], category=category, male=male, female=female)


def build_db(entries: Sequence[DictEntry]) -> NameDb:
    """Index entries by normalized token.

    Census male and female rows of the same name join into one record with
    both weights. Other sources keep duplicates as separate records, and
    compound names are also indexed under each part as derived records.
    """
    records: Dict[str, List[DictEntry]] = defaultdict(list)
    census: Dict[str, List[DictEntry]] = defaultdict(list)
    skipped = 0

    for entry in entries:
        key = entry_key(entry.name)
        if not key:
            skipped += 1
            continue
        if entry.source is Source.CENSUS:
            census[key].append(entry)
        else:
            records[key].append(entry)

    for key, group in census.items():
        records[key].append(_merge_census(group))

    # derived part records go in after all primary records
    for key in list(records):
        parts = key.split(" ")
        if len(parts) < 2:
            continue
        for entry in list(records[key]):
            if entry.source is Source.CENSUS or entry.derived:
                continue
            for part in dict.fromkeys(parts):
                records[part].append(replace(entry, derived=True))

    stats: Dict[Source, Counter] = defaultdict(Counter)
    for group in records.values():
        for entry in group:
            if not entry.derived:
                stats[entry.source][entry.category] += 1

    if skipped:
        logger.warning("Skipped %d entries whose names contain no Latin letters", skipped)
    logger.info("Built name database with %d keys", len(records))

    return NameDb(
        records=MappingProxyType({key: tuple(group) for key, group in records.items()}),
        source_stats=MappingProxyType({source: MappingProxyType(dict(counts)) for source, counts in stats.items()}),
    )


def lookup(db: NameDb, token: str) -> Optional[Tuple[DictEntry, ...]]:
    """All records stored under an already normalized token, or None."""
    return db.lookup(token)
