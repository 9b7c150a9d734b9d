"""Server runtime: dispatches JSON-RPC methods against one registry view."""

from __future__ import annotations

from typing import Any, Callable

from ..errors import ArgValidation, SessionUnknown, ToolError, UnknownTool
from ..sessions import Session, SessionManager
from .protocol import (
    CODE_HANDLER_FAILURE,
    CODE_INVALID_PARAMS,
    CODE_METHOD_NOT_FOUND,
    CODE_SESSION_UNKNOWN,
    METHOD_INITIALIZE,
    METHOD_SESSION_DELETE,
    METHOD_TOOLS_CALL,
    METHOD_TOOLS_LIST,
    RpcError,
    RpcRequest,
    RpcResponse,
    ToolResult,
)
from .registry import Registry, validate_args

# builds the per-call context handed to tool handlers
ContextFactory = Callable[[Session], Any]


class McpServer:
    """One hosted MCP server: a registry view plus session lifecycle.

    The same runtime backs the in-process transport, and each function of the
    emulated FaaS gateway wraps one of these.
    """

    def __init__(self, name: str, registry: Registry, sessions: SessionManager,
                 context_factory: ContextFactory):
        self.name = name
        self.registry = registry
        self.sessions = sessions
        self._context_factory = context_factory

    def handle(self, request: RpcRequest, session_id: str | None) -> RpcResponse:
        try:
            if request.method == METHOD_INITIALIZE:
                return self._initialize(request)
            if request.method == METHOD_TOOLS_LIST:
                return self._tools_list(request, session_id)
            if request.method == METHOD_TOOLS_CALL:
                return self._tools_call(request, session_id)
            if request.method == METHOD_SESSION_DELETE:
                return self._session_delete(request, session_id)
            return RpcResponse(id=request.id, error=RpcError(
                code=CODE_METHOD_NOT_FOUND, message=f"unknown method {request.method!r}"))
        except SessionUnknown as exc:
            return RpcResponse(id=request.id, error=RpcError(
                code=CODE_SESSION_UNKNOWN, message=str(exc),
                data={"kind": "session_unknown"}))

    def _initialize(self, request: RpcRequest) -> RpcResponse:
        session = self.sessions.create(server=self.name)
        return RpcResponse(id=request.id, result={
            "session_id": session.session_id,
            "server": self.name,
        })

    def _require_session(self, session_id: str | None) -> Session:
        if not session_id:
            raise SessionUnknown("no session id supplied")
        return self.sessions.get(session_id)

    def _tools_list(self, request: RpcRequest, session_id: str | None) -> RpcResponse:
        self._require_session(session_id)
        return RpcResponse(id=request.id, result={
            "tools": [d.to_json() for d in self.registry.descriptors()],
        })

    def _tools_call(self, request: RpcRequest, session_id: str | None) -> RpcResponse:
        session = self._require_session(session_id)
        name = request.params.get("name", "")
        args = request.params.get("arguments") or {}
        try:
            tool = self.registry.lookup(self.name, name)
        except UnknownTool:
            return RpcResponse(id=request.id, error=RpcError(
                code=CODE_INVALID_PARAMS, message=f"unknown tool {name!r}",
                data={"kind": "unknown_tool"}))
        try:
            validate_args(tool.descriptor, args)
        except ArgValidation as exc:
            return RpcResponse(id=request.id, error=RpcError(
                code=CODE_INVALID_PARAMS, message=str(exc),
                data={"kind": "arg_validation", "param": exc.param}))
        ctx = self._context_factory(session)
        try:
            result = tool.handler(ctx, **args)
        except ArgValidation as exc:
            # handlers may reject semantically invalid values the same way
            return RpcResponse(id=request.id, error=RpcError(
                code=CODE_INVALID_PARAMS, message=str(exc),
                data={"kind": "arg_validation", "param": exc.param}))
        except ToolError as exc:
            result = ToolResult(content=str(exc), is_error=True)
        except Exception as exc:  # handler panic
            return RpcResponse(id=request.id, error=RpcError(
                code=CODE_HANDLER_FAILURE, message=f"{type(exc).__name__}: {exc}",
                data={"kind": "handler_failure"}))
        if not isinstance(result, ToolResult):
            result = ToolResult(content=str(result))
        return RpcResponse(id=request.id, result=result.to_wire())

    def _session_delete(self, request: RpcRequest, session_id: str | None) -> RpcResponse:
        session = self._require_session(session_id)
        self.sessions.delete(session.session_id)
        return RpcResponse(id=request.id, result={"deleted": session.session_id})
