"""Append-only result cache for proven extremal values.

One JSON object per line, keyed by (family canonical text, n, engine
version). Only exact results are stored; a version bump invalidates old
lines without touching the file. Appends take an advisory lock so
concurrent processes interleave whole lines; corrupt or foreign lines are
skipped on read, so a torn write costs one record, not the file.
"""

from __future__ import annotations

import json
import os
from dataclasses import asdict
from pathlib import Path

try:
    import fcntl
except ImportError:  # non-POSIX: single-process appends are still whole lines
    fcntl = None

ENV_VAR = "TURANLAB_CACHE"
_DEFAULT = "~/.cache/turanlab/results.jsonl"


def default_cache_path() -> Path:
    return Path(os.environ.get(ENV_VAR) or _DEFAULT).expanduser()


class ResultCache:
    """get/put proven records; see search.ExtremalRecord for the shape."""

    def __init__(self, path: str | os.PathLike | None = None):
        self.path = Path(path).expanduser() if path is not None else default_cache_path()

    def _load(self) -> dict:
        # late import: search imports this module
        from turanlab.search import ENGINE_VERSION, ExtremalRecord

        best = {}
        if not self.path.exists():
            return best
        with open(self.path, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                try:
                    raw = json.loads(line)
                    rec = ExtremalRecord(**raw)
                except (ValueError, TypeError):
                    continue
                if rec.version != ENGINE_VERSION or not rec.exact:
                    continue
                best[(rec.family, rec.n)] = rec
        return best

    def get(self, family_canonical: str, n: int):
        return self._load().get((family_canonical, n))

    def put(self, record) -> None:
        if not record.exact:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        line = json.dumps(asdict(record), sort_keys=True) + "\n"
        with open(self.path, "a", encoding="utf-8") as fh:
            if fcntl is not None:
                fcntl.flock(fh, fcntl.LOCK_EX)
            try:
                fh.write(line)
                fh.flush()
            finally:
                if fcntl is not None:
                    fcntl.flock(fh, fcntl.LOCK_UN)
