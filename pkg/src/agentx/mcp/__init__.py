"""MCP-style protocol layer: JSON-RPC types, registry, server runtime, client, transports."""

from .protocol import RpcError, RpcRequest, RpcResponse, ToolResult
from .registry import Registry, register_tool
from .server import McpServer
from .transports import HttpTransport, InProcessTransport, Transport
from .client import McpClient

__all__ = [
    "RpcError",
    "RpcRequest",
    "RpcResponse",
    "ToolResult",
    "Registry",
    "register_tool",
    "McpServer",
    "Transport",
    "InProcessTransport",
    "HttpTransport",
    "McpClient",
]
