"""Append-only result cache for long searches.

One JSON record per line, keyed by (n, m, k_range, cap).  Lines that do
not parse, or parse into something that does not round-trip into an
ExtremeRecord, are discarded with a warning and the search reruns;
a cached hit is indistinguishable in content from a fresh computation.
"""

from __future__ import annotations

import json
import warnings
from pathlib import Path

from .search import ExtremeRecord, SearchSpace, extremes


class CacheWarning(UserWarning):
    """A cache entry was unreadable and has been ignored."""


def _key(space: SearchSpace) -> dict:
    return {
        "n": space.n,
        "m": space.m,
        "k_lo": space.k_range[0],
        "k_hi": space.k_range[1],
        "cap": space.cap,
    }


class ResultCache:
    """Single-writer JSON-lines store of search results."""

    def __init__(self, path: str | Path):
        self.path = Path(path)

    def get(self, space: SearchSpace) -> ExtremeRecord | None:
        """Latest stored record for this space, or None on a miss."""
        if not self.path.exists():
            return None
        wanted = _key(space)
        found = None
        with self.path.open("r", encoding="utf-8") as handle:
            for lineno, line in enumerate(handle, 1):
                if not line.strip():
                    continue
                try:
                    entry = json.loads(line)
                    key = entry["key"]
                    record = ExtremeRecord.from_dict(entry["record"])
                except (ValueError, KeyError, TypeError) as exc:
                    warnings.warn(
                        f"discarding corrupt cache entry at {self.path}:{lineno}: {exc}",
                        CacheWarning,
                        stacklevel=2,
                    )
                    continue
                if key == wanted:
                    found = record
        return found

    def put(self, space: SearchSpace, record: ExtremeRecord) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        entry = {"key": _key(space), "record": record.to_dict()}
        with self.path.open("a", encoding="utf-8") as handle:
            handle.write(json.dumps(entry, sort_keys=True) + "\n")


def cached_extremes(space: SearchSpace, workers: int = 1,
                    cache: ResultCache | None = None) -> ExtremeRecord:
    """Serve the search from the cache when possible, else compute and store."""
    if cache is not None:
        hit = cache.get(space)
        if hit is not None:
            return hit
    record = extremes(space, workers=workers)
    if cache is not None:
        cache.put(space, record)
    return record
