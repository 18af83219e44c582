"""On-disk JSON cache for Horn tables.

One document per ambient size n, holding every T^n_p as sorted integer
triples.  The cache is advisory: unreadable or malformed files are ignored
and the table is rebuilt.  The directory comes from, in order: an explicit
argument, the WEILGROUP_CACHE environment variable, or ~/.cache/weilgroup.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

ENV_VAR = "WEILGROUP_CACHE"


def default_cache_dir() -> str:
    env = os.environ.get(ENV_VAR)
    if env:
        return env
    return str(Path.home() / ".cache" / "weilgroup")


def _table_path(cache_dir: str, n: int) -> Path:
    return Path(cache_dir) / f"horn_table_n{n}.json"


def load_table(cache_dir: str, n: int) -> dict | None:
    path = _table_path(cache_dir, n)
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError):
        return None
    if not isinstance(doc, dict) or doc.get("n") != n:
        return None
    tables = doc.get("tables")
    if not isinstance(tables, dict):
        return None
    try:
        for p_str, triples in tables.items():
            if not 1 <= int(p_str) <= n:
                return None
            for tri in triples:
                if len(tri) != 3 or any(not isinstance(part, list) for part in tri):
                    return None
    except (TypeError, ValueError):
        return None
    return tables


def store_table(cache_dir: str, n: int, tables: dict) -> None:
    path = _table_path(cache_dir, n)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump({"n": n, "tables": tables}, fh, sort_keys=True)
        os.replace(tmp, path)
    except OSError:
        pass
