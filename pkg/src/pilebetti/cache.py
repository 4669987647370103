"""Content-addressed on-disk cache for per-degree homology profiles."""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path


class DiskCache:
    """One JSON file per (generator set, multidegree, field).

    Each file maps a formula kind ("bh" or "dual") to a serialized homology
    profile. Writes go to a temp file and are renamed into place.
    """

    def __init__(self, root: str | os.PathLike):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)

    @staticmethod
    def key(generators_key: str, c, field_name: str) -> str:
        payload = json.dumps({"A": generators_key, "c": list(c), "field": field_name}, sort_keys=True)
        return hashlib.sha256(payload.encode()).hexdigest()

    def _path(self, key: str) -> Path:
        return self.root / key[:2] / f"{key}.json"

    def get(self, key: str, kind: str):
        path = self._path(key)
        try:
            with open(path) as fh:
                return json.load(fh).get(kind)
        except (FileNotFoundError, json.JSONDecodeError):
            return None

    def put(self, key: str, kind: str, value) -> None:
        path = self._path(key)
        path.parent.mkdir(parents=True, exist_ok=True)
        try:
            with open(path) as fh:
                data = json.load(fh)
        except (FileNotFoundError, json.JSONDecodeError):
            data = {}
        data[kind] = value
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(data, fh, sort_keys=True)
        os.replace(tmp, path)
