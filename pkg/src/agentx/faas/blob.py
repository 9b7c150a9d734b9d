"""Directory-backed object store addressed by s3://bucket/key URIs."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from pathlib import Path

from ..errors import InvalidUri, NoSuchKey


@dataclass(frozen=True)
class BlobUri:
    bucket: str
    key: str

    def __str__(self) -> str:
        return f"s3://{self.bucket}/{self.key}"

    @classmethod
    def parse(cls, uri: str) -> "BlobUri":
        if not uri.startswith("s3://"):
            raise InvalidUri(f"expected s3://bucket/key, got {uri!r}")
        rest = uri[len("s3://"):]
        bucket, sep, key = rest.partition("/")
        if not bucket or not sep or not key:
            raise InvalidUri(f"expected s3://bucket/key, got {uri!r}")
        if ".." in key.split("/") or key.startswith("/"):
            raise InvalidUri(f"key may not traverse upward: {uri!r}")
        return cls(bucket=bucket, key=key)


class BlobStore:
    """Maps s3://b/k to <root>/b/k on disk. Bytes in, same bytes out."""

    def __init__(self, root: Path | str):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._lock = threading.Lock()

    def _path(self, uri: BlobUri) -> Path:
        return self.root / uri.bucket / uri.key

    def put(self, uri: BlobUri, data: bytes) -> None:
        path = self._path(uri)
        with self._lock:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_bytes(data)

    def get(self, uri: BlobUri) -> bytes:
        path = self._path(uri)
        if not path.is_file():
            raise NoSuchKey(str(uri))
        return path.read_bytes()

    def exists(self, uri: BlobUri) -> bool:
        return self._path(uri).is_file()

    def list(self, bucket: str, prefix: str = "") -> list[str]:
        """Keys under a prefix, sorted for stable output."""
        base = self.root / bucket
        if not base.is_dir():
            return []
        keys = [
            str(p.relative_to(base)).replace("\\", "/")
            for p in base.rglob("*") if p.is_file()
        ]
        return sorted(k for k in keys if k.startswith(prefix))
