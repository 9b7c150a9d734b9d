"""Function manifests, deployment modes and the URL-style route table."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from ..errors import DuplicateRoute, EmptyDeployment
from ..mcp.registry import Registry

MEMORY_TIERS = (128, 256, 512, 1024, 2048, 4096, 8192)
DEFAULT_EPHEMERAL_STORAGE_MB = 512

MODE_DISTRIBUTED = "distributed"
MODE_MONOLITHIC = "monolithic"

MONOLITH_FUNCTION_NAME = "mcp"


@dataclass(frozen=True)
class FunctionManifest:
    server: str
    memory_mb: int
    ephemeral_storage_mb: int = DEFAULT_EPHEMERAL_STORAGE_MB
    handler: str = ""  # server reference; defaults to the server name

    def __post_init__(self):
        if self.memory_mb not in MEMORY_TIERS:
            raise ValueError(f"memory_mb must be one of {MEMORY_TIERS}, got {self.memory_mb}")
        if not self.handler:
            object.__setattr__(self, "handler", self.server)

    def to_json(self) -> dict[str, Any]:
        return {
            "server": self.server,
            "memory_mb": self.memory_mb,
            "ephemeral_storage_mb": self.ephemeral_storage_mb,
            "handler": self.handler,
        }

    @classmethod
    def from_json(cls, raw: dict[str, Any]) -> "FunctionManifest":
        return cls(
            server=raw["server"],
            memory_mb=raw["memory_mb"],
            ephemeral_storage_mb=raw.get("ephemeral_storage_mb", DEFAULT_EPHEMERAL_STORAGE_MB),
            handler=raw.get("handler", ""),
        )


def load_manifests(path: Path | str) -> list[FunctionManifest]:
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    if doc.get("format") != "manifest.v1":
        raise ValueError("not a manifest.v1 document")
    return [FunctionManifest.from_json(f) for f in doc["functions"]]


def route_path(function_name: str) -> str:
    return f"/fn/{function_name}/mcp"


def _fused_memory(manifests: list[FunctionManifest]) -> int:
    """Smallest tier holding the combined footprint of the fused servers."""
    total = sum(m.memory_mb for m in manifests)
    for tier in MEMORY_TIERS:
        if tier >= total:
            return tier
    return MEMORY_TIERS[-1]


@dataclass(frozen=True)
class DeployedFunction:
    name: str
    manifest: FunctionManifest
    registry: Registry  # this function's single-server view


@dataclass(frozen=True)
class Deployment:
    mode: str
    functions: tuple[DeployedFunction, ...]
    route_table: dict[str, str]  # URL path -> function name

    def function(self, name: str) -> DeployedFunction:
        for fn in self.functions:
            if fn.name == name:
                return fn
        raise KeyError(name)

    def resolve(self, path: str) -> DeployedFunction | None:
        name = self.route_table.get(path)
        return self.function(name) if name else None

    def export(self) -> dict[str, Any]:
        """Deployment manifest suitable as input to a real cloud deployer."""
        return {
            "format": "deployment.v1",
            "mode": self.mode,
            "functions": [
                {
                    "name": fn.name,
                    "route": route_path(fn.name),
                    "memory_mb": fn.manifest.memory_mb,
                    "ephemeral_storage_mb": fn.manifest.ephemeral_storage_mb,
                    "handler": fn.manifest.handler,
                    "tools": [d.name for d in fn.registry.descriptors()],
                }
                for fn in self.functions
            ],
        }


def deploy(registry: Registry, manifests: list[FunctionManifest], mode: str) -> Deployment:
    """Build the route table: one function per server, or one fused function."""
    if not manifests:
        raise EmptyDeployment("deployment needs at least one function manifest")
    if mode == MODE_DISTRIBUTED:
        functions = []
        routes: dict[str, str] = {}
        for manifest in manifests:
            path = route_path(manifest.server)
            if path in routes:
                raise DuplicateRoute(path)
            functions.append(DeployedFunction(
                name=manifest.server,
                manifest=manifest,
                registry=registry.view(manifest.handler),
            ))
            routes[path] = manifest.server
        return Deployment(mode=mode, functions=tuple(functions), route_table=routes)
    if mode == MODE_MONOLITHIC:
        fused_manifest = FunctionManifest(
            server=MONOLITH_FUNCTION_NAME,
            memory_mb=_fused_memory(manifests),
            ephemeral_storage_mb=max(m.ephemeral_storage_mb for m in manifests),
        )
        fn = DeployedFunction(
            name=MONOLITH_FUNCTION_NAME,
            manifest=fused_manifest,
            registry=registry.fused(MONOLITH_FUNCTION_NAME),
        )
        return Deployment(mode=mode, functions=(fn,),
                          route_table={route_path(fn.name): fn.name})
    raise ValueError(f"unknown deployment mode {mode!r}")
