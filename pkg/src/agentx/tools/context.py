"""Per-call context handed to tool handlers, plus workspace path discipline."""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from ..errors import PathEscape
from ..faas.blob import BlobStore
from ..sessions import Session
from .fixtures import FixtureSet


class SessionLocks:
    """Per-session locks for tools that must serialize workspace access."""

    def __init__(self):
        self._locks: dict[str, threading.Lock] = {}
        self._guard = threading.Lock()

    def for_session(self, session_id: str) -> threading.Lock:
        with self._guard:
            return self._locks.setdefault(session_id, threading.Lock())


@dataclass
class ToolContext:
    session: Session
    fixtures: FixtureSet
    blobs: BlobStore
    locks: SessionLocks
    no_network: bool = True
    options: dict[str, Any] = field(default_factory=dict)

    @property
    def workspace(self) -> Path:
        return self.session.workspace_root

    def resolve(self, rel_path: str) -> Path:
        """Workspace-confined path resolution; raises PathEscape on traversal."""
        candidate = (self.workspace / rel_path).resolve()
        root = self.workspace.resolve()
        if candidate != root and root not in candidate.parents:
            raise PathEscape(f"path {rel_path!r} leaves the sandbox")
        return candidate

    def workspace_uri(self, rel_path: str) -> str:
        return f"ws://{self.session.server}/{rel_path}"

    def lock(self) -> threading.Lock:
        return self.locks.for_session(self.session.session_id)
