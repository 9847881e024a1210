"""Content-addressed on-disk memo for Hurwitz tables.

One JSON file per (canonical complex key, group) pair.  Tables are stored
against canonical vertex ids, so any relabeled copy of a complex hits the
same entry.
"""
from __future__ import annotations

import hashlib
import json
import os
from fractions import Fraction
from pathlib import Path


def group_fingerprint(group) -> str:
    return group.name + ":" + hashlib.sha256(group.table.tobytes()).hexdigest()[:16]


class TableCache:
    def __init__(self, directory):
        self.dir = Path(directory)
        self.dir.mkdir(parents=True, exist_ok=True)
        self.hits = 0
        self.misses = 0

    def _path(self, key: str) -> Path:
        return self.dir / (hashlib.sha256(key.encode()).hexdigest() + ".json")

    def get(self, key: str) -> dict | None:
        p = self._path(key)
        if not p.exists():
            self.misses += 1
            return None
        data = json.loads(p.read_text(encoding="utf-8"))
        if data.get("key") != key:
            self.misses += 1
            return None
        self.hits += 1
        return {tuple(idx): Fraction(v) for idx, v in data["table"]}

    def put(self, key: str, table: dict) -> None:
        rows = [[list(idx), f"{v.numerator}/{v.denominator}"] for idx, v in sorted(table.items())]
        tmp = self._path(key).with_suffix(".tmp")
        tmp.write_text(json.dumps({"key": key, "table": rows}), encoding="utf-8")
        os.replace(tmp, self._path(key))
