"""Content-addressed JSON cache for command results.

The directory comes from ``RAUZYVEECH_CACHE`` and defaults to
``~/.cache/rauzyveech``.  Each entry lives in ``<sha256 hex>.json`` where the
hash covers the operation id, the format version and the canonical input.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

ENV_VAR = "RAUZYVEECH_CACHE"
VERSION = 1


def default_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else Path.home() / ".cache" / "rauzyveech"


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def cache_key(op: str, payload) -> str:
    text = canonical_json({"op": op, "version": VERSION, "input": payload})
    return hashlib.sha256(text.encode()).hexdigest()


class Cache:
    def __init__(self, root: str | os.PathLike | None = None):
        self.root = Path(root) if root is not None else default_dir()

    def path(self, key: str) -> Path:
        return self.root / f"{key}.json"

    def get(self, op: str, payload):
        p = self.path(cache_key(op, payload))
        try:
            entry = json.loads(p.read_text())
        except (OSError, ValueError):
            return None
        if entry.get("version") != VERSION or entry.get("op") != op:
            return None
        return entry["result"]

    def put(self, op: str, payload, result) -> Path:
        self.root.mkdir(parents=True, exist_ok=True)
        p = self.path(cache_key(op, payload))
        body = canonical_json({"op": op, "version": VERSION, "result": result})
        # write to a temp file in the same directory, then rename atomically
        fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(body)
            os.replace(tmp, p)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        return p

    def fetch(self, op: str, payload, compute):
        """``(result, cached)``; computes and stores on a miss."""
        hit = self.get(op, payload)
        if hit is not None:
            return hit, True
        result = compute()
        self.put(op, payload, result)
        return result, False
