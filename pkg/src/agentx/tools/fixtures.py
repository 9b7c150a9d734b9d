"""Fixture corpus access: canned responses keyed by normalized tool args."""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Any

from ..errors import NoFixture


def slug(text: str) -> str:
    """Stable key for fixture lookup: lowercase, alphanumerics joined by dashes."""
    out = re.sub(r"[^a-z0-9]+", "-", text.lower()).strip("-")
    return out or "empty"


def url_key(url: str) -> str:
    stripped = re.sub(r"^[a-z]+://", "", url.strip().lower())
    return slug(stripped)


class FixtureSet:
    """Directory of canned tool responses: fixtures/<server>/<key>."""

    def __init__(self, root: Path | str):
        self.root = Path(root)
        if not self.root.is_dir():
            raise NoFixture(f"fixture root {self.root} does not exist")

    def path(self, server: str, filename: str) -> Path:
        return self.root / server / filename

    def has(self, server: str, filename: str) -> bool:
        return self.path(server, filename).is_file()

    def text(self, server: str, filename: str) -> str:
        path = self.path(server, filename)
        if not path.is_file():
            raise NoFixture(f"no fixture {server}/{filename}")
        return path.read_text(encoding="utf-8")

    def json(self, server: str, filename: str) -> Any:
        return json.loads(self.text(server, filename))

    def names(self, server: str, suffix: str = "") -> list[str]:
        base = self.root / server
        if not base.is_dir():
            return []
        return sorted(p.name for p in base.iterdir() if p.name.endswith(suffix))
