"""Record types shared by every dictionary format."""

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Optional, Tuple, Union


class Gender(str, Enum):
    MALE = "male"
    FEMALE = "female"


class GenderCategory(str, Enum):
    """The seven categories a name dictionary can assign."""
    MALE = "male"
    MOSTLY_MALE = "mostly_male"
    MALE_IF_FIRST_PART = "male_if_first_part"
    FEMALE = "female"
    MOSTLY_FEMALE = "mostly_female"
    FEMALE_IF_FIRST_PART = "female_if_first_part"
    UNISEX = "unisex"

    @property
    def binary_gender(self) -> Optional[Gender]:
        """Collapse to male/female for classifier training; unisex has none."""
        if self in (GenderCategory.MALE, GenderCategory.MOSTLY_MALE, GenderCategory.MALE_IF_FIRST_PART):
            return Gender.MALE
        if self in (GenderCategory.FEMALE, GenderCategory.MOSTLY_FEMALE, GenderCategory.FEMALE_IF_FIRST_PART):
            return Gender.FEMALE
        return None


class Source(str, Enum):
    CENSUS = "census"
    NAMDICT = "namdict"
    CUSTOM = "custom"


# Usage weights implied by a category when the source has no frequencies.
CATEGORY_WEIGHTS = {
    GenderCategory.MALE: (1.0, 0.0),
    GenderCategory.MOSTLY_MALE: (0.9, 0.1),
    GenderCategory.MALE_IF_FIRST_PART: (1.0, 0.0),
    GenderCategory.FEMALE: (0.0, 1.0),
    GenderCategory.MOSTLY_FEMALE: (0.1, 0.9),
    GenderCategory.FEMALE_IF_FIRST_PART: (0.0, 1.0),
    GenderCategory.UNISEX: (0.5, 0.5),
}


class ParseError(ValueError):
    """A dictionary file could not be parsed."""

    def __init__(self, message: str, line: Optional[int] = None, offset: Optional[int] = None):
        location = []
        if line is not None:
            location.append(f"line {line}")
        if offset is not None:
            location.append(f"byte offset {offset}")
        prefix = f"{', '.join(location)}: " if location else ""
        super().__init__(f"{prefix}{message}")
        self.line = line
        self.offset = offset


@dataclass(frozen=True)
class DictEntry:
    """One gender-labeled name as found in a dictionary source."""
    name: str
    source: Source
    category: GenderCategory
    male: float               # M(n)
    female: float             # F(n)
    regions: Tuple[Tuple[str, int], ...] = ()
    derived: bool = False     # indexed under one part of a compound name

    def __post_init__(self):
        if not self.name.strip():
            raise ValueError("Dictionary entry name must not be empty")
        if self.male < 0 or self.female < 0:
            raise ValueError(f"Negative usage weight for {self.name!r}")

    @classmethod
    def from_category(cls, name: str, source: Source, category: GenderCategory,
                      regions: Tuple[Tuple[str, int], ...] = ()) -> "DictEntry":
        male, female = CATEGORY_WEIGHTS[category]
        return cls(name=name, source=source, category=category, male=male, female=female, regions=regions)


LineSource = Iterable[Union[str, bytes]]


def decode_lines(reader: LineSource, encoding: str) -> Iterator[Tuple[int, str]]:
    """Yield ``(line_number, text)`` pairs, decoding byte lines as we go.

    Raises:
        ParseError: Naming the line and absolute byte offset of undecodable input.
    """
    offset = 0
    for line_number, raw in enumerate(reader, start=1):
        if isinstance(raw, bytes):
            try:
                text = raw.decode(encoding)
            except UnicodeDecodeError as e:
                raise ParseError(f"cannot decode as {encoding}", line=line_number, offset=offset + e.start) from e
            offset += len(raw)
        else:
            text = raw
        yield line_number, text.rstrip("\r\n")
