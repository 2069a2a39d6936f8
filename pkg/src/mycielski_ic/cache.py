"""On-disk cache of homology profiles keyed by graph hash and operation tag."""

from __future__ import annotations

import json
import os
import tempfile
import time
from pathlib import Path

from . import __version__
from .homology import HomologyProfile

ENV_VAR = "MYC_CACHE_DIR"


class ProfileCache:
    """One JSON file per entry; writes go through a temp file and ``os.replace``
    so concurrent writers never leave a torn entry."""

    def __init__(self, directory: str | os.PathLike):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)

    @classmethod
    def from_env(cls) -> "ProfileCache | None":
        d = os.environ.get(ENV_VAR)
        return cls(d) if d else None

    def _path(self, graph_hash: str, tag: str) -> Path:
        safe = "".join(c if c.isalnum() or c in "-_" else "_" for c in tag)
        return self.directory / f"{graph_hash}.{safe}.json"

    def get(self, graph_hash: str, tag: str) -> HomologyProfile | None:
        p = self._path(graph_hash, tag)
        try:
            entry = json.loads(p.read_text())
        except (OSError, ValueError):
            return None
        if entry.get("version") != __version__ or entry.get("key") != f"{graph_hash}:{tag}":
            return None
        return HomologyProfile.from_string(entry["profile"])

    def put(self, graph_hash: str, tag: str, profile: HomologyProfile) -> None:
        entry = {
            "key": f"{graph_hash}:{tag}",
            "profile": profile.to_string(),
            "version": __version__,
            "timestamp": int(time.time()),
        }
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(entry, fh, ensure_ascii=False)
        os.replace(tmp, self._path(graph_hash, tag))
