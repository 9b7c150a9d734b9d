"""Client over one transport: session lifecycle, tool listing and invocation."""

from __future__ import annotations

import itertools
from typing import Any

from ..errors import ArgValidation, SessionUnknown, TransportError, UnknownTool
from ..model import ToolDescriptor
from .protocol import (
    CODE_HANDLER_FAILURE,
    CODE_INVALID_PARAMS,
    CODE_SESSION_UNKNOWN,
    METHOD_INITIALIZE,
    METHOD_SESSION_DELETE,
    METHOD_TOOLS_CALL,
    METHOD_TOOLS_LIST,
    RpcRequest,
    RpcResponse,
    ToolResult,
)
from .transports import Transport


class McpClient:
    """Talks to one hosted server; holds the session id it was granted."""

    def __init__(self, transport: Transport):
        self.transport = transport
        self.session_id: str | None = None
        self._ids = itertools.count(1)

    def _call(self, method: str, params: dict[str, Any] | None = None,
              with_session: bool = True) -> RpcResponse:
        request = RpcRequest(id=next(self._ids), method=method, params=params or {})
        response = self.transport.roundtrip(
            request, self.session_id if with_session else None)
        if response.id != request.id:
            raise TransportError(
                f"response id {response.id!r} does not echo request id {request.id!r}")
        return response

    def initialize(self) -> str:
        response = self._call(METHOD_INITIALIZE, with_session=False)
        self._raise_for(response)
        self.session_id = response.result["session_id"]
        return self.session_id

    def list_tools(self) -> list[ToolDescriptor]:
        response = self._call(METHOD_TOOLS_LIST)
        self._raise_for(response)
        return [ToolDescriptor.from_json(d) for d in response.result["tools"]]

    def call_tool(self, name: str, args: dict[str, Any] | None = None) -> ToolResult:
        response = self._call(METHOD_TOOLS_CALL, {"name": name, "arguments": args or {}})
        if response.error is not None and response.error.code == CODE_HANDLER_FAILURE:
            # panics come back as error-text results so the agent can reflect and retry
            return ToolResult(content=f"tool failed: {response.error.message}", is_error=True)
        self._raise_for(response)
        return ToolResult.from_wire(response.result)

    def delete_session(self) -> None:
        response = self._call(METHOD_SESSION_DELETE)
        self._raise_for(response)
        self.session_id = None

    @staticmethod
    def _raise_for(response: RpcResponse) -> None:
        if response.error is None:
            return
        error = response.error
        kind = error.data.get("kind", "")
        if error.code == CODE_SESSION_UNKNOWN:
            raise SessionUnknown(error.message)
        if error.code == CODE_INVALID_PARAMS:
            if kind == "unknown_tool":
                raise UnknownTool(error.message)
            raise ArgValidation(error.data.get("param", "?"), error.message)
        raise TransportError(f"rpc error {error.code}: {error.message}")
