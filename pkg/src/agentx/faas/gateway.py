"""Function-URL style gateway: HTTP in, JSON-RPC against the routed function.

`FaasHost` is the transport-free core (routing, metering, sessions); `build_app`
wraps it in a FastAPI service so the same host can be driven in-process by the
engine or served by uvicorn for external clients.
"""

from __future__ import annotations

from typing import Any

from ..clocks import Clock, SystemClock
from ..mcp.protocol import CODE_HANDLER_FAILURE, RpcRequest, SESSION_HEADER
from ..mcp.server import ContextFactory, McpServer
from ..sessions import SessionManager
from .manifest import Deployment
from .meter import InvocationRecord, Meter


class FaasHost:
    def __init__(self, deployment: Deployment, sessions: SessionManager, meter: Meter,
                 context_factory: ContextFactory, clock: Clock | None = None,
                 cold_start_ms: dict[str, int] | None = None):
        self.deployment = deployment
        self.sessions = sessions
        self.meter = meter
        self.clock = clock or SystemClock()
        self._cold_start_ms = cold_start_ms or {}
        self._warm: set[str] = set()
        self._servers = {
            fn.name: McpServer(
                name=fn.name,
                registry=fn.registry,
                sessions=sessions,
                context_factory=context_factory,
            )
            for fn in deployment.functions
        }

    def invoke(self, path: str, body: dict[str, Any],
               session_id: str | None) -> tuple[int, dict[str, Any], InvocationRecord | None]:
        """Returns (http_status, json_body, invocation_record)."""
        fn = self.deployment.resolve(path)
        if fn is None:
            return 404, {"error": f"no function routed at {path}"}, None
        start = self.clock.now_ms()
        response = self._servers[fn.name].handle(RpcRequest.from_wire(body), session_id)
        duration = self.clock.now_ms() - start
        if fn.name not in self._warm:
            self._warm.add(fn.name)
            duration += self._cold_start_ms.get(fn.name, 0)
        record = self.meter.record(fn.name, duration, fn.manifest.memory_mb)
        status = 200
        if response.error is not None and response.error.code == CODE_HANDLER_FAILURE:
            status = 500  # panic; the session workspace survives for the session
        return status, response.to_wire(), record

    def open_session_ids(self) -> list[str]:
        return [s.session_id for s in self.sessions.store.list()]


def build_app(host: FaasHost):
    """FastAPI service over the host: the MCP function routes plus introspection."""
    from fastapi import FastAPI, Header, Request
    from fastapi.responses import JSONResponse
    from pydantic import BaseModel

    class RpcRequestBody(BaseModel):
        jsonrpc: str = "2.0"
        id: int | str
        method: str
        params: dict[str, Any] = {}

    class HealthResponse(BaseModel):
        status: str
        mode: str
        functions: list[str]

    class MeterResponse(BaseModel):
        total_usd: str
        invocations: int

    app = FastAPI(title="agentx faas gateway", version="1")
    app.state.host = host

    @app.post("/fn/{function_name}/mcp")
    async def mcp_endpoint(
        function_name: str,
        body: RpcRequestBody,
        request: Request,
        mcp_session_id: str | None = Header(default=None, alias=SESSION_HEADER),
    ) -> JSONResponse:
        status, payload, _record = host.invoke(
            f"/fn/{function_name}/mcp", body.model_dump(), mcp_session_id)
        headers = {}
        result = payload.get("result")
        if isinstance(result, dict) and "session_id" in result:
            headers[SESSION_HEADER] = result["session_id"]
        return JSONResponse(status_code=status, content=payload, headers=headers)

    @app.get("/healthz", response_model=HealthResponse)
    async def healthz() -> HealthResponse:
        return HealthResponse(
            status="ok",
            mode=host.deployment.mode,
            functions=[fn.name for fn in host.deployment.functions],
        )

    @app.get("/deployment")
    async def deployment() -> dict[str, Any]:
        return host.deployment.export()

    @app.get("/meter", response_model=MeterResponse)
    async def meter() -> MeterResponse:
        return MeterResponse(
            total_usd=str(host.meter.total_usd()),
            invocations=len(host.meter.records()),
        )

    return app
