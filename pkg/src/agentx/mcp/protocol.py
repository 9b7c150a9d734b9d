"""JSON-RPC 2.0 message types and the tool-result wire form."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from ..errors import MalformedResponse

JSONRPC_VERSION = "2.0"

METHOD_INITIALIZE = "initialize"
METHOD_TOOLS_LIST = "tools/list"
METHOD_TOOLS_CALL = "tools/call"
METHOD_SESSION_DELETE = "session/delete"
METHODS = (METHOD_INITIALIZE, METHOD_TOOLS_LIST, METHOD_TOOLS_CALL, METHOD_SESSION_DELETE)

# standard codes plus the implementation-defined server range
CODE_METHOD_NOT_FOUND = -32601
CODE_INVALID_PARAMS = -32602
CODE_HANDLER_FAILURE = -32000
CODE_SESSION_UNKNOWN = -32001

SESSION_HEADER = "Mcp-Session-Id"


@dataclass(frozen=True)
class RpcRequest:
    id: int | str
    method: str
    params: dict[str, Any] = field(default_factory=dict)

    def to_wire(self) -> dict[str, Any]:
        return {
            "jsonrpc": JSONRPC_VERSION,
            "id": self.id,
            "method": self.method,
            "params": self.params,
        }

    @classmethod
    def from_wire(cls, raw: dict[str, Any]) -> "RpcRequest":
        return cls(id=raw.get("id", 0), method=raw.get("method", ""),
                   params=raw.get("params") or {})


@dataclass(frozen=True)
class RpcError:
    code: int
    message: str
    data: dict[str, Any] = field(default_factory=dict)

    def to_wire(self) -> dict[str, Any]:
        out: dict[str, Any] = {"code": self.code, "message": self.message}
        if self.data:
            out["data"] = self.data
        return out


@dataclass(frozen=True)
class RpcResponse:
    id: int | str
    result: Any = None
    error: RpcError | None = None

    def __post_init__(self):
        if (self.result is not None) == (self.error is not None):
            raise ValueError("exactly one of result/error must be set")

    @property
    def ok(self) -> bool:
        return self.error is None

    def to_wire(self) -> dict[str, Any]:
        out: dict[str, Any] = {"jsonrpc": JSONRPC_VERSION, "id": self.id}
        if self.error is not None:
            out["error"] = self.error.to_wire()
        else:
            out["result"] = self.result
        return out

    @classmethod
    def from_wire(cls, raw: dict[str, Any]) -> "RpcResponse":
        if not isinstance(raw, dict) or raw.get("jsonrpc") != JSONRPC_VERSION:
            raise MalformedResponse(f"not a JSON-RPC 2.0 payload: {raw!r}")
        if ("result" in raw) == ("error" in raw):
            raise MalformedResponse("response must carry exactly one of result/error")
        if "error" in raw:
            err = raw["error"]
            return cls(id=raw.get("id", 0),
                       error=RpcError(code=err.get("code", 0),
                                      message=err.get("message", ""),
                                      data=err.get("data") or {}))
        return cls(id=raw.get("id", 0), result=raw["result"])


@dataclass(frozen=True)
class ToolResult:
    content: str
    is_error: bool = False
    produced_uris: tuple[str, ...] = ()

    def __post_init__(self):
        if self.is_error and not self.content:
            raise ValueError("error results must carry a human-readable cause")

    def to_wire(self) -> dict[str, Any]:
        return {
            "content": self.content,
            "is_error": self.is_error,
            "produced_uris": list(self.produced_uris),
        }

    @classmethod
    def from_wire(cls, raw: dict[str, Any]) -> "ToolResult":
        return cls(
            content=raw.get("content", ""),
            is_error=bool(raw.get("is_error", False)),
            produced_uris=tuple(raw.get("produced_uris", [])),
        )
