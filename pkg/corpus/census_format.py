"""1990 Census first-name files (dist.male.first / dist.female.first).

Each line reads ``NAME FREQ CUMFREQ RANK``, whitespace separated, where FREQ
is the percentage of the population carrying the name.
"""

import logging
from typing import List

from corpus.entries import DictEntry, Gender, GenderCategory, LineSource, ParseError, Source, decode_lines

logger = logging.getLogger(__name__)

FORMAT_INFO = {
    "name": "census",
    "description": "Census first-name frequency file, one gender per file",
    "encoding": "ascii",
}


def parse_census(reader: LineSource, gender: Gender, encoding: str = "ascii") -> List[DictEntry]:
    """Parse one Census file; every name gets its FREQ on the file's gender.

    Raises:
        ParseError: On a wrong field count or a non-numeric field.
    """
    gender = Gender(gender)
    entries = []
    for line_number, line in decode_lines(reader, encoding):
        fields = line.split()
        if not fields:
            continue
        if len(fields) != 4:
            raise ParseError(f"expected 4 fields (NAME FREQ CUMFREQ RANK), got {len(fields)}", line=line_number)
        name, freq, cumfreq, rank = fields
        try:
            weight = float(freq)
            float(cumfreq)
            int(rank)
        except ValueError as e:
            raise ParseError(f"non-numeric field in {line!r}", line=line_number) from e
        if weight < 0:
            raise ParseError(f"negative frequency {weight}", line=line_number)

        if gender is Gender.MALE:
            entries.append(DictEntry(name, Source.CENSUS, GenderCategory.MALE, male=weight, female=0.0))
        else:
            entries.append(DictEntry(name, Source.CENSUS, GenderCategory.FEMALE, male=0.0, female=weight))

    logger.info("Parsed %d %s Census names", len(entries), gender.value)
    return entries


def parse(reader: LineSource, gender: Gender = Gender.MALE, encoding: str = "ascii") -> List[DictEntry]:
    return parse_census(reader, gender, encoding=encoding)
