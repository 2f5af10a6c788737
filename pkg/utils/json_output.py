"""JSON input/output shared by the command-line front end.

Output is always key-sorted and indented so that equal objects give
byte-identical files.
"""

import json
import sys
from typing import Any, Optional


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_json(obj: Any, path: Optional[str] = None) -> None:
    """Write ``obj`` to ``path``, or to stdout when no path is given."""
    text = dumps(obj)
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)


def read_json(path: str) -> Any:
    """Load a JSON file.

    Raises:
        ValueError: If the file is not valid JSON
    """
    with open(path, "r", encoding="utf-8") as f:
        try:
            return json.load(f)
        except json.JSONDecodeError as e:
            raise ValueError(f"{path}: invalid JSON at line {e.lineno}: {e.msg}") from e
