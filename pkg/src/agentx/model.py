"""Domain types shared by every module, structured-output parsing and run ids.

Everything here is an immutable value object unless noted; trace assembly is
single-writer per run and owned by the engine, not these types.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import os
import threading
import time
from dataclasses import dataclass, field
from decimal import Decimal
from enum import Enum
from typing import Any

from .errors import SchemaViolation

SUMMARY_CAP_DEFAULT = 4096
SUMMARY_TRUNCATION_SENTINEL = " [...truncated]"


class AppLabel(str, Enum):
    WEB_SEARCH = "web_search"
    STOCK_CORRELATION = "stock_correlation"
    RESEARCH_REPORT = "research_report"
    CUSTOM = "custom"


class StageStatus(str, Enum):
    PENDING = "pending"
    ACTIVE = "active"
    DONE = "done"
    FAILED = "failed"

    def can_become(self, new: "StageStatus") -> bool:
        allowed = {
            StageStatus.PENDING: {StageStatus.ACTIVE},
            StageStatus.ACTIVE: {StageStatus.DONE, StageStatus.FAILED},
            StageStatus.DONE: set(),
            StageStatus.FAILED: set(),
        }
        return new in allowed[self]


class SemanticType(str, Enum):
    STRING = "string"
    STRING_LIST = "string-list"
    BOOLEAN = "boolean"
    INTEGER = "integer"


class ToolOrigin(str, Enum):
    OFFICIAL = "official"
    COMMUNITY = "community"
    CUSTOM = "custom"


@dataclass(frozen=True)
class Task:
    """A user task: the templated prompt plus labels identifying the matrix cell."""

    id: str
    prompt: str
    app_label: AppLabel = AppLabel.CUSTOM
    instance_label: str = ""

    def __post_init__(self):
        if not self.prompt:
            raise ValueError("task prompt must be non-empty")

    def to_json(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "prompt": self.prompt,
            "app_label": self.app_label.value,
            "instance_label": self.instance_label,
        }


@dataclass
class Stage:
    """A high-level sub-task; executed strictly in index order."""

    index: int
    description: str
    status: StageStatus = StageStatus.PENDING

    def advance(self, new: StageStatus) -> None:
        if not self.status.can_become(new):
            raise ValueError(f"illegal stage transition {self.status.value} -> {new.value}")
        self.status = new

    def to_json(self) -> dict[str, Any]:
        return {"index": self.index, "description": self.description, "status": self.status.value}


@dataclass(frozen=True)
class ToolParam:
    name: str
    type: SemanticType
    required: bool
    description: str = ""

    def to_json(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "type": self.type.value,
            "required": self.required,
            "description": self.description,
        }

    @classmethod
    def from_json(cls, raw: dict[str, Any]) -> "ToolParam":
        return cls(
            name=raw["name"],
            type=SemanticType(raw["type"]),
            required=bool(raw["required"]),
            description=raw.get("description", ""),
        )


@dataclass(frozen=True)
class ToolDescriptor:
    """What the LLM sees about a tool; description fidelity is contractual."""

    server: str
    name: str
    description: str
    params: tuple[ToolParam, ...] = ()
    origin: ToolOrigin = ToolOrigin.CUSTOM

    @property
    def qualified(self) -> str:
        return f"{self.server}.{self.name}"

    def param_names(self) -> set[str]:
        return {p.name for p in self.params}

    def to_json(self) -> dict[str, Any]:
        return {
            "server": self.server,
            "name": self.name,
            "description": self.description,
            "params": [p.to_json() for p in self.params],
            "origin": self.origin.value,
        }

    @classmethod
    def from_json(cls, raw: dict[str, Any]) -> "ToolDescriptor":
        return cls(
            server=raw["server"],
            name=raw["name"],
            description=raw["description"],
            params=tuple(ToolParam.from_json(p) for p in raw.get("params", [])),
            origin=ToolOrigin(raw.get("origin", "custom")),
        )


@dataclass(frozen=True)
class PlanStep:
    description: str
    tool: tuple[str, str] | None = None  # (server, name)
    args: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {
            "description": self.description,
            "tool": f"{self.tool[0]}.{self.tool[1]}" if self.tool else None,
            "args": dict(self.args),
        }


@dataclass(frozen=True)
class Plan:
    stage_index: int
    steps: tuple[PlanStep, ...]

    def __post_init__(self):
        if not self.steps:
            raise ValueError("a plan must contain at least one step")

    def tool_refs(self) -> list[tuple[str, str]]:
        """Tools named by the plan, deduplicated, in first-use order."""
        seen: list[tuple[str, str]] = []
        for step in self.steps:
            if step.tool is not None and step.tool not in seen:
                seen.append(step.tool)
        return seen


@dataclass(frozen=True)
class StageSummary:
    """Consolidated execution results, the only context forwarded across stages."""

    stage_index: int
    results: str
    success: bool

    @classmethod
    def consolidated(cls, stage_index: int, results: str, success: bool,
                     cap: int = SUMMARY_CAP_DEFAULT) -> "StageSummary":
        if len(results) > cap:
            results = results[: cap - len(SUMMARY_TRUNCATION_SENTINEL)] + SUMMARY_TRUNCATION_SENTINEL
        return cls(stage_index=stage_index, results=results, success=success)


@dataclass(frozen=True)
class SchemaField:
    name: str
    type: SemanticType
    description: str = ""


@dataclass(frozen=True)
class StructuredSchema:
    """Field schema a structured LLM response must conform to. No nesting."""

    fields: tuple[SchemaField, ...]

    def __post_init__(self):
        names = [f.name for f in self.fields]
        if len(names) != len(set(names)):
            raise ValueError("schema field names must be unique")

    def to_wire(self) -> dict[str, Any]:
        return {
            "fields": [
                {"name": f.name, "type": f.type.value, "description": f.description}
                for f in self.fields
            ]
        }

    @classmethod
    def from_wire(cls, raw: dict[str, Any]) -> "StructuredSchema":
        return cls(fields=tuple(
            SchemaField(name=f["name"], type=SemanticType(f["type"]),
                        description=f.get("description", ""))
            for f in raw["fields"]
        ))


def _check_type(value: Any, expected: SemanticType) -> bool:
    if expected is SemanticType.STRING:
        return isinstance(value, str)
    if expected is SemanticType.BOOLEAN:
        return isinstance(value, bool)
    if expected is SemanticType.INTEGER:
        return isinstance(value, int) and not isinstance(value, bool)
    if expected is SemanticType.STRING_LIST:
        return isinstance(value, list) and all(isinstance(v, str) for v in value)
    return False


def parse_structured_output(schema: StructuredSchema, raw: str) -> dict[str, Any]:
    """Parse an LLM message into the schema's fields.

    Every schema field must be present with the declared semantic type; unknown
    fields are dropped. Raises SchemaViolation so the caller can retry the
    inference.
    """
    try:
        payload = json.loads(raw)
    except (json.JSONDecodeError, TypeError):
        raise SchemaViolation("<document>", "content is not valid JSON")
    if not isinstance(payload, dict):
        raise SchemaViolation("<document>", "content is not a JSON object")
    out: dict[str, Any] = {}
    for f in schema.fields:
        if f.name not in payload:
            raise SchemaViolation(f.name, "missing")
        value = payload[f.name]
        if not _check_type(value, f.type):
            raise SchemaViolation(f.name, f"expected {f.type.value}")
        out[f.name] = value
    return out


def serialize_structured(schema: StructuredSchema, values: dict[str, Any]) -> str:
    """Inverse of parse_structured_output for schema-conformant maps."""
    return json.dumps({f.name: values[f.name] for f in schema.fields}, sort_keys=True)


# --- run ids ----------------------------------------------------------------

class RunIdSource:
    """Produces ids unique within the process and lexically sortable by creation.

    With a seed the sequence is fully deterministic, which is what lets golden
    runs replay byte-identically.
    """

    def __init__(self, seed: int | None = None):
        self._seed = seed
        self._counter = itertools.count()
        self._lock = threading.Lock()

    def next(self) -> str:
        with self._lock:
            n = next(self._counter)
        if self._seed is not None:
            return f"run-{self._seed & 0xFFFFFFFF:08x}-{n:06d}"
        ms = int(time.time() * 1000)
        suffix = os.urandom(2).hex()
        return f"run-{ms:013d}-{n:06d}-{suffix}"


_default_source = RunIdSource()


def new_run_id() -> str:
    return _default_source.next()


# --- trace ------------------------------------------------------------------

@dataclass(frozen=True)
class Actor:
    """Who produced a trace event: a named agent, a (server, name) tool, or the framework."""

    kind: str  # "agent" | "tool" | "framework"
    name: str = ""
    server: str = ""

    @classmethod
    def agent(cls, name: str) -> "Actor":
        return cls(kind="agent", name=name)

    @classmethod
    def tool(cls, server: str, name: str) -> "Actor":
        return cls(kind="tool", name=name, server=server)

    @classmethod
    def framework(cls, name: str = "") -> "Actor":
        return cls(kind="framework", name=name)

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"kind": self.kind}
        if self.name:
            out["name"] = self.name
        if self.server:
            out["server"] = self.server
        return out


@dataclass(frozen=True)
class TraceEvent:
    run_id: str
    actor: Actor
    start_ms: int
    end_ms: int
    tokens_in: int = 0
    tokens_out: int = 0
    payload_digest: str = ""

    def __post_init__(self):
        if self.end_ms < self.start_ms:
            raise ValueError("trace event ends before it starts")

    @property
    def duration_ms(self) -> int:
        return self.end_ms - self.start_ms

    def to_json(self) -> dict[str, Any]:
        return {
            "run_id": self.run_id,
            "actor": self.actor.to_json(),
            "start_ms": self.start_ms,
            "end_ms": self.end_ms,
            "tokens_in": self.tokens_in,
            "tokens_out": self.tokens_out,
            "payload_digest": self.payload_digest,
        }


def payload_digest(*parts: Any) -> str:
    """Stable short hash of request/response payloads, used for replay checks."""
    blob = json.dumps(parts, sort_keys=True, default=str).encode("utf-8")
    return hashlib.sha256(blob).hexdigest()[:16]


RUN_BOUNDARY = "run"  # name of the framework event spanning the whole run


@dataclass(frozen=True)
class RunTotals:
    latency_llm_ms: int
    latency_tool_ms: int
    latency_framework_ms: int
    tokens_in: int
    tokens_out: int
    llm_cost_usd: Decimal
    faas_cost_usd: Decimal

    def to_json(self) -> dict[str, Any]:
        return {
            "latency_llm_ms": self.latency_llm_ms,
            "latency_tool_ms": self.latency_tool_ms,
            "latency_framework_ms": self.latency_framework_ms,
            "tokens_in": self.tokens_in,
            "tokens_out": self.tokens_out,
            "llm_cost_usd": str(self.llm_cost_usd),
            "faas_cost_usd": str(self.faas_cost_usd),
        }


@dataclass(frozen=True)
class Outcome:
    status: str  # "success" | "failure"
    reason: str = ""

    @classmethod
    def success(cls) -> "Outcome":
        return cls(status="success")

    @classmethod
    def failure(cls, reason: str) -> "Outcome":
        return cls(status="failure", reason=reason)

    @property
    def ok(self) -> bool:
        return self.status == "success"

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"status": self.status}
        if self.reason:
            out["reason"] = self.reason
        return out


@dataclass(frozen=True)
class RunReport:
    """Everything a single run produced; totals are exact sums over the trace."""

    run_id: str
    task: Task
    outcome: Outcome
    stages: tuple[Stage, ...]
    trace: tuple[TraceEvent, ...]
    totals: RunTotals
    artifacts: tuple[str, ...] = ()

    @property
    def wall_ms(self) -> int:
        for ev in self.trace:
            if ev.actor.kind == "framework" and ev.actor.name == RUN_BOUNDARY:
                return ev.duration_ms
        if not self.trace:
            return 0
        return max(e.end_ms for e in self.trace) - min(e.start_ms for e in self.trace)

    def to_json(self) -> dict[str, Any]:
        return {
            "format": "trace.v1",
            "run_id": self.run_id,
            "task": self.task.to_json(),
            "outcome": self.outcome.to_json(),
            "stages": [s.to_json() for s in self.stages],
            "trace": [e.to_json() for e in self.trace],
            "totals": self.totals.to_json(),
            "artifacts": list(self.artifacts),
        }

    def to_bytes(self) -> bytes:
        """Canonical serialization used for byte-identical replay comparison."""
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":")).encode("utf-8")
