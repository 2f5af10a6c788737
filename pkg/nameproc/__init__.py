"""Name string preprocessing and dictionary matching."""

from .normalize import NormalizedName, normalize, normalize_token, raw_tokens, transliterate

__all__ = ['NormalizedName', 'normalize', 'normalize_token', 'raw_tokens', 'transliterate']
