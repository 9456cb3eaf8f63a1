"""Optional JSON persistence for b- and c-coefficient tables.

A cache file is a flat JSON object mapping "m,r" (or "j,a") to the table's
entries as decimal strings.  Entries that fail to parse or have the wrong
shape are recomputed and overwritten; a corrupted cache can degrade
performance but never correctness.

The default cache directory comes from the SCHMIDTPOLY_CACHE_DIR
environment variable; without it (and without an explicit path) nothing
is persisted.
"""

from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Optional

from .binomials import binom, central_binom
from .linearize import BTable, b_table, combo_eval
from .weights import CTable, c_table, verify_c_identity

CACHE_DIR_ENV = "SCHMIDTPOLY_CACHE_DIR"

B_TABLE_FILE = "btable.json"
C_TABLE_FILE = "ctable.json"


def default_cache_dir() -> Optional[Path]:
    value = os.environ.get(CACHE_DIR_ENV)
    return Path(value) if value else None


def _load(path: Path) -> dict:
    try:
        with path.open("r", encoding="utf-8") as handle:
            data = json.load(handle)
    except (OSError, json.JSONDecodeError):
        return {}
    return data if isinstance(data, dict) else {}


def _store(path: Path, data: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as handle:
        json.dump(data, handle, indent=2, sort_keys=True)
        handle.write("\n")


def _lookup(data: dict, key: str, expected_len: int) -> Optional[tuple[int, ...]]:
    raw = data.get(key)
    if not isinstance(raw, list) or len(raw) != expected_len:
        return None
    try:
        return tuple(int(s) for s in raw)
    except (TypeError, ValueError):
        return None


def _b_entries_valid(m: int, r: int, entries: tuple[int, ...]) -> bool:
    # The basis is triangular, so passing the degree+1 point certificate
    # pins the entries to the true table values.
    combo = dict(zip(range(m, r * m + 1), entries))
    degree = 2 * r * m
    return all(
        combo_eval(combo, ell) == binom(ell + m, 2 * m) ** r * central_binom(m)
        for ell in range(degree + 1)
    )


def b_table_cached(m: int, r: int, cache_dir: Optional[Path] = None) -> BTable:
    """b_table with read-through/write-back persistence when a dir is given.

    Cached entries are re-certified before use; anything malformed or wrong
    is recomputed and overwritten.
    """
    if cache_dir is None:
        cache_dir = default_cache_dir()
    if cache_dir is None:
        return b_table(m, r)
    path = Path(cache_dir) / B_TABLE_FILE
    data = _load(path)
    key = f"{m},{r}"
    entries = _lookup(data, key, r * m - m + 1)
    if entries is not None and _b_entries_valid(m, r, entries):
        return BTable(m, r, entries)
    table = b_table(m, r)
    data[key] = [str(v) for v in table.entries]
    _store(path, data)
    return table


def c_table_cached(j: int, a: int, cache_dir: Optional[Path] = None) -> CTable:
    """c_table with read-through/write-back persistence when a dir is given.

    Cached entries are re-certified before use; anything malformed or wrong
    is recomputed and overwritten.
    """
    if cache_dir is None:
        cache_dir = default_cache_dir()
    if cache_dir is None:
        return c_table(j, a)
    path = Path(cache_dir) / C_TABLE_FILE
    data = _load(path)
    key = f"{j},{a}"
    entries = _lookup(data, key, a + 1)
    if entries is not None:
        candidate = CTable(j, a, entries)
        if verify_c_identity(j, a, range(2 * j + 2 * a + 1), table=candidate).ok:
            return candidate
    table = c_table(j, a)
    data[key] = [str(v) for v in table.entries]
    _store(path, data)
    return table
