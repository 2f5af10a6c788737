"""Format registry for dynamic discovery of the dictionary parsers."""

import importlib
import logging
import os
import pkgutil
from typing import Dict, List, Optional, Sequence

from config.settings import CORPUS_CONFIG
from corpus.entries import DictEntry, Gender
from corpus.name_db import NameDb, build_db

logger = logging.getLogger(__name__)


def get_available_formats() -> Dict[str, dict]:
    """
    Dynamically discover all format modules and their metadata.

    Returns:
        dict: Format name -> metadata mapping
    """
    formats = {}

    for module_name in _discover_format_modules():
        try:
            module = importlib.import_module(module_name)
        except ImportError:
            continue
        if hasattr(module, 'FORMAT_INFO'):
            info = module.FORMAT_INFO
            formats[info["name"]] = {
                "description": info["description"],
                "encoding": info["encoding"],
                "module": module,
            }

    return formats


def get_format_module(format_name: str):
    """
    Get the parser module for a given format name.

    Raises:
        ValueError: If no such format exists
    """
    formats = get_available_formats()
    if format_name not in formats:
        raise ValueError(f"Unknown dictionary format: {format_name}. Available: {sorted(formats)}")
    return formats[format_name]["module"]


def get_format_descriptions() -> Dict[str, str]:
    return {name: info["description"] for name, info in get_available_formats().items()}


def detect_format(path: str) -> str:
    """Pick a format from the file name."""
    base = os.path.basename(path)
    if base in CORPUS_CONFIG["census_files"].values():
        return "census"
    if base.endswith(".tsv"):
        return "custom"
    return "namdict"


def census_gender(path: str) -> Gender:
    base = os.path.basename(path)
    for gender, filename in CORPUS_CONFIG["census_files"].items():
        if base == filename:
            return Gender(gender)
    if "female" in base:
        return Gender.FEMALE
    if "male" in base:
        return Gender.MALE
    raise ValueError(f"Cannot tell the gender of Census file {path}; name it {sorted(CORPUS_CONFIG['census_files'].values())}")


def read_file(path: str, format_name: Optional[str] = None, encoding: Optional[str] = None) -> List[DictEntry]:
    """Parse one dictionary file with its detected (or given) format."""
    format_name = format_name or detect_format(path)
    module = get_format_module(format_name)
    encoding = encoding or CORPUS_CONFIG["encodings"].get(format_name, module.FORMAT_INFO["encoding"])

    with open(path, "rb") as f:
        if format_name == "census":
            return module.parse(f, gender=census_gender(path), encoding=encoding)
        return module.parse(f, encoding=encoding)


def _expand(path: str) -> List[str]:
    if not os.path.isdir(path):
        return [path]
    files = []
    for filename in sorted(os.listdir(path)):
        full = os.path.join(path, filename)
        if os.path.isfile(full) and not filename.startswith("."):
            files.append(full)
    return files


def load_paths(paths: Sequence[str], format_name: Optional[str] = None, encoding: Optional[str] = None) -> NameDb:
    """Read files and directories of dictionary files into one database.

    Raises:
        FileNotFoundError: If a path does not exist
    """
    entries = []
    for path in paths:
        if not os.path.exists(path):
            raise FileNotFoundError(f"Dictionary path '{path}' not found!")
        for file_path in _expand(path):
            logger.info("Reading %s", file_path)
            entries.extend(read_file(file_path, format_name, encoding))
    return build_db(entries)


def _discover_format_modules() -> List[str]:
    """
    Discover all format modules in the corpus package (files ending with _format.py).

    Returns:
        List[str]: e.g. ['corpus.census_format', 'corpus.namdict_format']
    """
    corpus_path = os.path.dirname(__file__)
    return [
        f"corpus.{name}"
        for _, name, _ in pkgutil.iter_modules([corpus_path])
        if name.endswith('_format')
    ]
