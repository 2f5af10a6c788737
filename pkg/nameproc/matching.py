"""Left-to-right matching of name tokens against the name database."""

from typing import NamedTuple, Optional, Sequence, Tuple

from corpus.entries import DictEntry
from corpus.name_db import NameDb
from nameproc.normalize import NormalizedName


class TokenMatch(NamedTuple):
    index: int
    token: str
    records: Tuple[DictEntry, ...]

    @property
    def is_first_token(self) -> bool:
        return self.index == 0


def first_match_tokens(db: NameDb, tokens: Sequence[str]) -> Optional[TokenMatch]:
    """Return the leftmost token that has records in ``db``."""
    for index, token in enumerate(tokens):
        records = db.lookup(token)
        if records:
            return TokenMatch(index, token, records)
    return None


def first_match(db: NameDb, name: NormalizedName) -> Optional[TokenMatch]:
    """Scan the tokens of a normalized name; stop at the first database hit."""
    return first_match_tokens(db, name.tokens)
