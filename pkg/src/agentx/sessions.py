"""Per-application-instance MCP session state and its pluggable stores.

A session isolates one application instance's interaction with one server:
its own workspace directory (the emulated /tmp) and key-value scratch space.
The file-backed store is the local analogue of the external session table the
hosted deployment would use.
"""

from __future__ import annotations

import json
import shutil
import threading
import time
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable

from .errors import SessionUnknown, StoreUnavailable


@dataclass
class Session:
    session_id: str
    server: str
    created_at: float
    workspace_root: Path
    kv: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {
            "session_id": self.session_id,
            "server": self.server,
            "created_at": self.created_at,
            "workspace_root": str(self.workspace_root),
            "kv": self.kv,
        }

    @classmethod
    def from_json(cls, raw: dict[str, Any]) -> "Session":
        return cls(
            session_id=raw["session_id"],
            server=raw["server"],
            created_at=raw["created_at"],
            workspace_root=Path(raw["workspace_root"]),
            kv=dict(raw.get("kv", {})),
        )


def default_id_factory() -> str:
    return uuid.uuid4().hex


def seeded_id_factory(seed: int) -> Callable[[], str]:
    """Deterministic session ids, used by golden runs and transport-equivalence tests."""
    counter = iter(range(1, 1 << 30))
    lock = threading.Lock()

    def factory() -> str:
        with lock:
            n = next(counter)
        return f"sess-{seed & 0xFFFFFFFF:08x}-{n:06d}"

    return factory


class SessionStore:
    """Key-value session persistence."""

    def put(self, session: Session) -> None:
        raise NotImplementedError

    def get(self, session_id: str) -> Session:
        raise NotImplementedError

    def delete(self, session_id: str) -> None:
        raise NotImplementedError

    def list(self) -> list[Session]:
        raise NotImplementedError


class InMemorySessionStore(SessionStore):
    def __init__(self):
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def put(self, session: Session) -> None:
        with self._lock:
            self._sessions[session.session_id] = session

    def get(self, session_id: str) -> Session:
        with self._lock:
            try:
                return self._sessions[session_id]
            except KeyError:
                raise SessionUnknown(session_id) from None

    def delete(self, session_id: str) -> None:
        with self._lock:
            if session_id not in self._sessions:
                raise SessionUnknown(session_id)
            del self._sessions[session_id]

    def list(self) -> list[Session]:
        with self._lock:
            return list(self._sessions.values())


class FileSessionStore(SessionStore):
    """JSON-file store, written through on every mutation so a killed gateway
    leaves open sessions resumable on disk."""

    def __init__(self, path: Path | str):
        self.path = Path(path)
        self._lock = threading.Lock()
        if self.path.exists():
            try:
                json.loads(self.path.read_text(encoding="utf-8"))
            except (OSError, json.JSONDecodeError) as exc:
                raise StoreUnavailable(f"unreadable session store at {self.path}: {exc}") from exc
        else:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            self._write({})

    def _read(self) -> dict[str, Any]:
        try:
            return json.loads(self.path.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise StoreUnavailable(str(exc)) from exc

    def _write(self, data: dict[str, Any]) -> None:
        try:
            tmp = self.path.with_suffix(".tmp")
            tmp.write_text(json.dumps(data, indent=1, sort_keys=True), encoding="utf-8")
            tmp.replace(self.path)
        except OSError as exc:
            raise StoreUnavailable(str(exc)) from exc

    def put(self, session: Session) -> None:
        with self._lock:
            data = self._read()
            data[session.session_id] = session.to_json()
            self._write(data)

    def get(self, session_id: str) -> Session:
        with self._lock:
            data = self._read()
            if session_id not in data:
                raise SessionUnknown(session_id)
            return Session.from_json(data[session_id])

    def delete(self, session_id: str) -> None:
        with self._lock:
            data = self._read()
            if session_id not in data:
                raise SessionUnknown(session_id)
            del data[session_id]
            self._write(data)

    def list(self) -> list[Session]:
        with self._lock:
            return [Session.from_json(v) for v in self._read().values()]


class SessionManager:
    """Creates and reclaims sessions plus their workspace directories."""

    def __init__(self, store: SessionStore, workspace_root: Path | str,
                 id_factory: Callable[[], str] | None = None):
        self.store = store
        self.workspace_root = Path(workspace_root)
        self._id_factory = id_factory or default_id_factory

    def create(self, server: str) -> Session:
        session_id = self._id_factory()
        workspace = self.workspace_root / session_id
        workspace.mkdir(parents=True, exist_ok=False)
        session = Session(
            session_id=session_id,
            server=server,
            created_at=time.time(),
            workspace_root=workspace,
        )
        self.store.put(session)
        return session

    def get(self, session_id: str) -> Session:
        return self.store.get(session_id)

    def delete(self, session_id: str) -> None:
        session = self.store.get(session_id)  # raises SessionUnknown
        self.store.delete(session_id)
        shutil.rmtree(session.workspace_root, ignore_errors=True)
