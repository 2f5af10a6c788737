"""Canonical TSV interchange format.

    name<TAB>category<TAB>regions[<TAB>source<TAB>male<TAB>female]

UTF-8 with a header line. ``regions`` holds ``region:weight`` pairs separated
by commas. The three optional columns make the format lossless for Census
records; when absent the source is ``custom`` and the weights follow the
category.
"""

import logging
from typing import List, Optional, TextIO

from corpus.entries import CATEGORY_WEIGHTS, DictEntry, GenderCategory, LineSource, ParseError, Source, decode_lines

logger = logging.getLogger(__name__)

FORMAT_INFO = {
    "name": "custom",
    "description": "Canonical UTF-8 TSV name dictionary",
    "encoding": "utf-8",
}

HEADER = "name\tcategory\tregions"
FULL_HEADER = HEADER + "\tsource\tmale\tfemale"


def _parse_regions(field: str, line_number: int):
    regions = []
    for pair in filter(None, (p.strip() for p in field.split(","))):
        region, sep, weight = pair.partition(":")
        if not sep or not region:
            raise ParseError(f"malformed region pair {pair!r}", line=line_number)
        try:
            regions.append((region, int(weight)))
        except ValueError as e:
            raise ParseError(f"non-integer region weight {weight!r}", line=line_number) from e
    return tuple(regions)


def parse_row(line: str, line_number: int, default_source: Source = Source.CUSTOM) -> DictEntry:
    """Parse one TSV data row."""
    fields = line.split("\t")
    if len(fields) not in (2, 3, 6):
        raise ParseError(f"expected 3 or 6 tab-separated fields, got {len(fields)}", line=line_number)
    name = fields[0].strip()
    if not name:
        raise ParseError("missing name", line=line_number)
    try:
        category = GenderCategory(fields[1].strip())
    except ValueError as e:
        raise ParseError(f"unknown category {fields[1]!r}", line=line_number) from e
    regions = _parse_regions(fields[2], line_number) if len(fields) > 2 else ()

    if len(fields) == 6:
        try:
            source = Source(fields[3].strip())
            male, female = float(fields[4]), float(fields[5])
        except ValueError as e:
            raise ParseError(f"bad source or weight in {line!r}", line=line_number) from e
    else:
        source = default_source
        male, female = CATEGORY_WEIGHTS[category]
    try:
        return DictEntry(name, source, category, male=male, female=female, regions=regions)
    except ValueError as e:
        raise ParseError(str(e), line=line_number) from e


def parse_custom(reader: LineSource, encoding: str = "utf-8") -> List[DictEntry]:
    """Parse a canonical TSV dictionary.

    Raises:
        ParseError: On a missing header, an unknown category or a bad field.
    """
    entries = []
    header_seen = False
    for line_number, line in decode_lines(reader, encoding):
        if not line.strip():
            continue
        if not header_seen:
            if not line.startswith(HEADER):
                raise ParseError(f"expected header {HEADER!r}", line=line_number)
            header_seen = True
            continue
        entries.append(parse_row(line, line_number))
    logger.info("Parsed %d canonical TSV names", len(entries))
    return entries


def serialize_custom(db, writer: TextIO) -> int:
    """Write every primary record of ``db`` in the lossless six-column form.

    Returns:
        int: Number of rows written.
    """
    writer.write(FULL_HEADER + "\n")
    rows = 0
    for entry in db.entries():
        if entry.derived:
            continue
        regions = ",".join(f"{region}:{weight}" for region, weight in entry.regions)
        writer.write(
            f"{entry.name}\t{entry.category.value}\t{regions}\t"
            f"{entry.source.value}\t{entry.male!r}\t{entry.female!r}\n"
        )
        rows += 1
    return rows


def parse(reader: LineSource, encoding: Optional[str] = None) -> List[DictEntry]:
    return parse_custom(reader, encoding=encoding or "utf-8")
