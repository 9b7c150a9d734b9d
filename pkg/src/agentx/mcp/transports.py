"""Transports: in-process dispatch and HTTP with the session-id header.

The HTTP transport speaks to either a live base URL or an ASGI app driven
in-process (how offline runs exercise real HTTP semantics with no sockets).
"""

from __future__ import annotations

from typing import Any

from ..errors import TransportError
from .protocol import SESSION_HEADER, RpcRequest, RpcResponse
from .server import McpServer


class Transport:
    def roundtrip(self, request: RpcRequest, session_id: str | None = None) -> RpcResponse:
        raise NotImplementedError

    def close(self) -> None:
        pass


class InProcessTransport(Transport):
    """Direct dispatch; the session id travels as an explicit field."""

    def __init__(self, server: McpServer):
        self.server = server

    def roundtrip(self, request: RpcRequest, session_id: str | None = None) -> RpcResponse:
        wire = request.to_wire()  # serialize/deserialize to keep wire parity with HTTP
        return self.server.handle(RpcRequest.from_wire(wire), session_id)


class HttpTransport(Transport):
    """POST JSON-RPC bodies to one endpoint; session id in the Mcp-Session-Id header."""

    def __init__(self, path: str, base_url: str | None = None, app: Any = None,
                 bearer_token: str | None = None):
        if (base_url is None) == (app is None):
            raise ValueError("exactly one of base_url/app must be given")
        self.path = path
        self._token = bearer_token
        if app is not None:
            from starlette.testclient import TestClient

            self._client = TestClient(app, base_url="http://faas.local")
        else:
            import httpx

            self._client = httpx.Client(base_url=base_url, timeout=60.0)

    def roundtrip(self, request: RpcRequest, session_id: str | None = None) -> RpcResponse:
        headers = {"Content-Type": "application/json"}
        if session_id:
            headers[SESSION_HEADER] = session_id
        if self._token:
            headers["Authorization"] = f"Bearer {self._token}"
        try:
            resp = self._client.post(self.path, json=request.to_wire(), headers=headers)
        except Exception as exc:
            raise TransportError(str(exc)) from exc
        if resp.status_code == 404:
            raise TransportError(f"no function at {self.path}")
        try:
            payload = resp.json()
        except ValueError as exc:
            raise TransportError(f"non-JSON response: {exc}") from exc
        return RpcResponse.from_wire(payload)

    def close(self) -> None:
        self._client.close()
