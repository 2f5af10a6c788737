"""Name dictionary package.

Parses the Census and nam_dict name lists plus a canonical TSV format and
merges them into one queryable database.
"""

from .entries import DictEntry, Gender, GenderCategory, ParseError, Source
from .census_format import parse_census
from .custom_format import parse_custom, serialize_custom
from .namdict_format import parse_namdict
from .name_db import NameDb, build_db, entry_key, lookup

__all__ = [
    'DictEntry', 'Gender', 'GenderCategory', 'ParseError', 'Source',
    'parse_census', 'parse_custom', 'serialize_custom', 'parse_namdict',
    'NameDb', 'build_db', 'entry_key', 'lookup',
]
