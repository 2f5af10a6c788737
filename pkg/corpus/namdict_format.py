"""nam_dict first-name dictionary (fixed-column text format).

Layout, as documented in the file's own header:

    columns 1-2    gender code (M, 1M, ?M, F, 1F, ?F, ? or = for equivalences)
    columns 4-29   name, '+' separating the parts of compound names
    column  30     sorting indicator
    columns 31-85  one column per region, a hex digit 1..D giving how common
                   the name is there (blank = unused)

Comment lines start with '#'. Lines carrying a TAB are read as canonical
TSV rows so small test dictionaries need not use the fixed columns.
"""

import logging
import re
from typing import List, Tuple

from corpus.entries import DictEntry, GenderCategory, LineSource, ParseError, Source, decode_lines

logger = logging.getLogger(__name__)

FORMAT_INFO = {
    "name": "namdict",
    "description": "nam_dict fixed-column name dictionary with regional frequencies",
    "encoding": "latin-1",
}

GENDER_CODES = {
    "M": GenderCategory.MALE,
    "1M": GenderCategory.MALE_IF_FIRST_PART,
    "?M": GenderCategory.MOSTLY_MALE,
    "F": GenderCategory.FEMALE,
    "1F": GenderCategory.FEMALE_IF_FIRST_PART,
    "?F": GenderCategory.MOSTLY_FEMALE,
    "?": GenderCategory.UNISEX,
}

EQUIVALENCE_CODE = "="

REGIONS = (
    "great_britain", "ireland", "usa", "italy", "malta", "portugal", "spain",
    "france", "belgium", "luxembourg", "netherlands", "east_frisia", "germany",
    "austria", "switzerland", "iceland", "denmark", "norway", "sweden",
    "finland", "estonia", "latvia", "lithuania", "poland", "czech_republic",
    "slovakia", "hungary", "romania", "bulgaria", "bosnia_herzegovina",
    "croatia", "kosovo", "macedonia", "montenegro", "serbia", "slovenia",
    "albania", "greece", "russia", "belarus", "moldova", "ukraine", "armenia",
    "azerbaijan", "georgia", "kazakhstan_uzbekistan", "turkey",
    "arabia_persia", "israel", "china", "india_sri_lanka", "japan", "korea",
    "vietnam", "other",
)

NAME_COLUMNS = slice(3, 29)
REGION_COLUMNS = slice(30, 30 + len(REGIONS))

_MARKUP = re.compile(r"<([^>]*)>")


def _strip_markup(name: str) -> str:
    """Reduce bracketed special-character markup to its base letter."""
    def base_letter(match):
        letters = [ch for ch in match.group(1) if ch.isalpha()]
        return letters[0] if letters else ""
    return _MARKUP.sub(base_letter, name)


def _parse_regions(field: str, line_number: int) -> Tuple[Tuple[str, int], ...]:
    regions = []
    for region, ch in zip(REGIONS, field):
        if ch == " ":
            continue
        try:
            regions.append((region, int(ch, 16)))
        except ValueError as e:
            raise ParseError(f"invalid region frequency {ch!r} for {region}", line=line_number) from e
    return tuple(regions)


def parse_namdict(reader: LineSource, encoding: str = "latin-1") -> List[DictEntry]:
    """Parse a nam_dict file into one entry per data line.

    Raises:
        ParseError: On an unknown gender code, a bad region digit or
            undecodable bytes.
    """
    # Imported here: the TSV parser lives in a sibling format module.
    from corpus.custom_format import parse_row

    entries = []
    equivalences = 0
    for line_number, line in decode_lines(reader, encoding):
        if not line.strip() or line.startswith("#"):
            continue
        if "\t" in line:
            if line.startswith("name\t"):
                continue
            entries.append(parse_row(line, line_number, default_source=Source.NAMDICT))
            continue

        code = line[:2].strip()
        if code == EQUIVALENCE_CODE:
            equivalences += 1
            continue
        if code not in GENDER_CODES:
            raise ParseError(f"unknown gender code {code!r}", line=line_number)

        name = _strip_markup(line[NAME_COLUMNS].strip())
        if not name:
            raise ParseError("missing name", line=line_number)
        regions = _parse_regions(line[REGION_COLUMNS], line_number)
        entries.append(DictEntry.from_category(name, Source.NAMDICT, GENDER_CODES[code], regions=regions))

    logger.info("Parsed %d nam_dict names (%d equivalence lines skipped)", len(entries), equivalences)
    return entries


def parse(reader: LineSource, encoding: str = "latin-1") -> List[DictEntry]:
    return parse_namdict(reader, encoding=encoding)
