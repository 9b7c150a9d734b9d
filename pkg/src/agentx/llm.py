"""Chat-completion gateway: neutral request/response types, a deterministic
scripted backend for offline runs, an OpenAI-compatible HTTP backend, token
accounting and the LLM cost model."""

from __future__ import annotations

import json
import math
import os
import threading
from dataclasses import dataclass, field
from decimal import Decimal
from typing import Any, Callable

from .errors import (
    BackendUnavailable,
    ContextOverflow,
    NetworkDisabled,
    ScriptExhausted,
)
from .model import StructuredSchema, ToolDescriptor

# gpt-4o-mini pricing: USD per 1M input / 1M output tokens, 128k context window
DEFAULT_USD_PER_1M_IN = Decimal("0.15")
DEFAULT_USD_PER_1M_OUT = Decimal("0.60")
DEFAULT_CONTEXT_WINDOW = 128_000

ENV_LLM_URL = "AGENTX_LLM_URL"
ENV_LLM_KEY = "AGENTX_LLM_KEY"
ENV_LLM_MODEL = "AGENTX_LLM_MODEL"


@dataclass(frozen=True)
class PriceTable:
    usd_per_1m_in: Decimal = DEFAULT_USD_PER_1M_IN
    usd_per_1m_out: Decimal = DEFAULT_USD_PER_1M_OUT
    context_window: int = DEFAULT_CONTEXT_WINDOW

    def __post_init__(self):
        if self.usd_per_1m_in <= 0 or self.usd_per_1m_out <= 0 or self.context_window <= 0:
            raise ValueError("price table values must be positive")


@dataclass(frozen=True)
class ChatMessage:
    role: str  # system | user | assistant | tool
    content: str

    def to_json(self) -> dict[str, str]:
        return {"role": self.role, "content": self.content}


@dataclass(frozen=True)
class ToolCall:
    name: str
    args: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {"name": self.name, "args": dict(self.args)}


@dataclass(frozen=True)
class ChatRequest:
    messages: tuple[ChatMessage, ...]
    tools: tuple[ToolDescriptor, ...] = ()
    schema: StructuredSchema | None = None
    model_id: str = "scripted"

    def __post_init__(self):
        if not self.messages:
            raise ValueError("chat request needs at least one message")
        if self.messages[0].role not in ("system", "user"):
            raise ValueError("first message must be system or user")

    def to_wire(self) -> dict[str, Any]:
        return {
            "model_id": self.model_id,
            "messages": [m.to_json() for m in self.messages],
            "tools": [t.to_json() for t in self.tools],
            "schema": self.schema.to_wire() if self.schema else None,
        }

    def latest_content(self) -> str:
        return self.messages[-1].content


@dataclass(frozen=True)
class Usage:
    tokens_in: int = 0
    tokens_out: int = 0


@dataclass(frozen=True)
class ChatResponse:
    content: str = ""
    tool_calls: tuple[ToolCall, ...] = ()
    usage: Usage = Usage()

    def to_wire(self) -> dict[str, Any]:
        return {
            "content": self.content,
            "tool_calls": [c.to_json() for c in self.tool_calls],
            "usage": {"tokens_in": self.usage.tokens_in, "tokens_out": self.usage.tokens_out},
        }


def estimate_tokens(text: str) -> int:
    """chars/4 ceiling heuristic; only used when a backend omits usage."""
    if not text:
        return 0
    return max(1, math.ceil(len(text) / 4))


def estimate_request_tokens(req: ChatRequest) -> int:
    """Deterministic size estimate over everything the model would be sent."""
    total = sum(estimate_tokens(m.content) for m in req.messages)
    for tool in req.tools:
        total += estimate_tokens(json.dumps(tool.to_json(), sort_keys=True))
    if req.schema is not None:
        total += estimate_tokens(json.dumps(req.schema.to_wire(), sort_keys=True))
    return total


def estimate_response_tokens(resp: ChatResponse) -> int:
    total = estimate_tokens(resp.content)
    for call in resp.tool_calls:
        total += estimate_tokens(json.dumps(call.to_json(), sort_keys=True))
    return total


def llm_cost(tokens_in: int, tokens_out: int, prices: PriceTable) -> Decimal:
    """Linear token cost in decimal arithmetic (no binary-float drift)."""
    if tokens_in < 0 or tokens_out < 0:
        raise ValueError("token counts must be non-negative")
    return (tokens_in * prices.usd_per_1m_in + tokens_out * prices.usd_per_1m_out) / Decimal(10 ** 6)


# --- scripted backend --------------------------------------------------------

@dataclass(frozen=True)
class ScriptEntry:
    response: ChatResponse
    contains: str | None = None  # substring predicate over the latest message
    position: int | None = None  # 0-based request index predicate

    def matches(self, req: ChatRequest, request_index: int) -> bool:
        if self.contains is None and self.position is None:
            return False
        if self.contains is not None and self.contains not in req.latest_content():
            return False
        if self.position is not None and self.position != request_index:
            return False
        return True

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"response": self.response.to_wire()}
        match: dict[str, Any] = {}
        if self.contains is not None:
            match["contains"] = self.contains
        if self.position is not None:
            match["position"] = self.position
        out["match"] = match or None
        return out


@dataclass(frozen=True)
class Script:
    """Deterministic golden transcript: same request sequence, same responses."""

    entries: tuple[ScriptEntry, ...]

    def to_json(self) -> dict[str, Any]:
        return {"format": "script.v1", "entries": [e.to_json() for e in self.entries]}

    def dump(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_json(), fh, indent=1)

    @classmethod
    def from_json(cls, raw: dict[str, Any]) -> "Script":
        if raw.get("format") != "script.v1":
            raise ValueError("not a script.v1 document")
        entries = []
        for e in raw["entries"]:
            resp = e["response"]
            match = e.get("match") or {}
            entries.append(ScriptEntry(
                response=ChatResponse(
                    content=resp.get("content", ""),
                    tool_calls=tuple(
                        ToolCall(name=c["name"], args=c.get("args", {}))
                        for c in resp.get("tool_calls", [])
                    ),
                ),
                contains=match.get("contains"),
                position=match.get("position"),
            ))
        return cls(entries=tuple(entries))

    @classmethod
    def load(cls, path) -> "Script":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))


class BoundBackend:
    """Per-run view of a backend; scripted cursors live here, not globally."""

    def complete(self, req: ChatRequest) -> ChatResponse:
        raise NotImplementedError


class _ScriptCursor(BoundBackend):
    def __init__(self, script: Script):
        self._script = script
        self._consumed = [False] * len(script.entries)
        self._request_index = 0

    def complete(self, req: ChatRequest) -> ChatResponse:
        index = self._request_index
        self._request_index += 1
        chosen = None
        # first entry whose predicate matches wins; otherwise positional order
        for i, entry in enumerate(self._script.entries):
            if not self._consumed[i] and entry.matches(req, index):
                chosen = i
                break
        if chosen is None:
            for i, entry in enumerate(self._script.entries):
                if not self._consumed[i] and entry.contains is None and entry.position is None:
                    chosen = i
                    break
        if chosen is None:
            raise ScriptExhausted(f"no script entry left for request #{index}")
        self._consumed[chosen] = True
        resp = self._script.entries[chosen].response
        usage = Usage(
            tokens_in=estimate_request_tokens(req),
            tokens_out=estimate_response_tokens(resp),
        )
        return ChatResponse(content=resp.content, tool_calls=resp.tool_calls, usage=usage)


class ScriptedBackend:
    """Shareable handle over a Script; each run binds its own cursor."""

    def __init__(self, script: Script):
        self.script = script

    @classmethod
    def from_file(cls, path) -> "ScriptedBackend":
        return cls(Script.load(path))

    def bind(self) -> BoundBackend:
        return _ScriptCursor(self.script)


class HttpBackend:
    """OpenAI-compatible chat-completions client.

    Endpoint, key and model come from explicit arguments or the AGENTX_LLM_*
    environment variables. Tool descriptors and structured schemas are mapped
    to the vendor's function-calling and JSON-schema response formats.
    """

    def __init__(self, url: str | None = None, api_key: str | None = None,
                 model: str | None = None, no_network: bool = False,
                 transport: Any = None, temperature: float = 1.0, top_p: float = 1.0):
        self.url = (url or os.environ.get(ENV_LLM_URL, "")).rstrip("/")
        self.api_key = api_key or os.environ.get(ENV_LLM_KEY, "")
        self.model = model or os.environ.get(ENV_LLM_MODEL, "gpt-4o-mini")
        self.no_network = no_network
        self.temperature = temperature
        self.top_p = top_p
        self._transport = transport  # injectable for tests

    def bind(self) -> BoundBackend:
        return _HttpSession(self)


def _openai_tool(tool: ToolDescriptor) -> dict[str, Any]:
    type_map = {
        "string": {"type": "string"},
        "integer": {"type": "integer"},
        "boolean": {"type": "boolean"},
        "string-list": {"type": "array", "items": {"type": "string"}},
    }
    props = {p.name: dict(type_map[p.type.value], description=p.description) for p in tool.params}
    return {
        "type": "function",
        "function": {
            "name": tool.name,
            "description": tool.description,
            "parameters": {
                "type": "object",
                "properties": props,
                "required": [p.name for p in tool.params if p.required],
            },
        },
    }


def _openai_schema(schema: StructuredSchema) -> dict[str, Any]:
    type_map = {
        "string": {"type": "string"},
        "integer": {"type": "integer"},
        "boolean": {"type": "boolean"},
        "string-list": {"type": "array", "items": {"type": "string"}},
    }
    props = {f.name: dict(type_map[f.type.value], description=f.description) for f in schema.fields}
    return {
        "type": "json_schema",
        "json_schema": {
            "name": "structured_output",
            "schema": {
                "type": "object",
                "properties": props,
                "required": [f.name for f in schema.fields],
                "additionalProperties": False,
            },
        },
    }


class _HttpSession(BoundBackend):
    def __init__(self, backend: HttpBackend):
        self._b = backend

    def complete(self, req: ChatRequest) -> ChatResponse:
        if self._b.no_network:
            raise NetworkDisabled("live LLM call blocked by --no-network")
        import httpx

        body: dict[str, Any] = {
            "model": self._b.model,
            "messages": [m.to_json() for m in req.messages],
            "temperature": self._b.temperature,
            "top_p": self._b.top_p,
        }
        if req.tools:
            body["tools"] = [_openai_tool(t) for t in req.tools]
        if req.schema is not None:
            body["response_format"] = _openai_schema(req.schema)
        headers = {"Content-Type": "application/json"}
        if self._b.api_key:
            headers["Authorization"] = f"Bearer {self._b.api_key}"
        try:
            with httpx.Client(transport=self._b._transport, timeout=120.0) as client:
                resp = client.post(f"{self._b.url}/chat/completions", json=body, headers=headers)
                resp.raise_for_status()
                payload = resp.json()
        except httpx.HTTPError as exc:
            raise BackendUnavailable(str(exc)) from exc
        message = payload["choices"][0]["message"]
        calls = tuple(
            ToolCall(name=c["function"]["name"], args=json.loads(c["function"]["arguments"] or "{}"))
            for c in message.get("tool_calls") or ()
        )
        usage_raw = payload.get("usage") or {}
        content = message.get("content") or ""
        usage = Usage(
            tokens_in=usage_raw.get("prompt_tokens", estimate_request_tokens(req)),
            tokens_out=usage_raw.get("completion_tokens", estimate_tokens(content)),
        )
        return ChatResponse(content=content, tool_calls=calls, usage=usage)


# hook signature: (actor_name, req, resp, start_ms, end_ms)
ResponseHook = Callable[[str, ChatRequest, ChatResponse, int, int], None]


class LlmClient:
    """Per-run gateway: context-window guard plus a trace event per completion.

    The hook is how the run recorder hears about completions; it fires exactly
    once per complete() call with the measured start/end timestamps.
    """

    def __init__(self, backend: BoundBackend, prices: PriceTable = PriceTable(),
                 hook: ResponseHook | None = None, clock=None):
        from .clocks import SystemClock

        self._backend = backend
        self.prices = prices
        self._hook = hook
        self._clock = clock or SystemClock()
        self._lock = threading.Lock()

    def complete(self, actor_name: str, req: ChatRequest) -> ChatResponse:
        estimated = estimate_request_tokens(req)
        if estimated > self.prices.context_window:
            raise ContextOverflow(estimated, self.prices.context_window)
        with self._lock:
            start = self._clock.now_ms()
            resp = self._backend.complete(req)
            end = self._clock.now_ms()
        if self._hook is not None:
            self._hook(actor_name, req, resp, start, end)
        return resp
