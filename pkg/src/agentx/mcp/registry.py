"""Tool registry: the single mapping of tool name to implementation."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Any, Callable

from ..errors import ArgValidation, DuplicateTool, UnknownTool
from ..model import SemanticType, ToolDescriptor

# handler signature: (ToolContext, **args) -> ToolResult
ToolHandler = Callable[..., Any]


@dataclass(frozen=True)
class RegisteredTool:
    descriptor: ToolDescriptor
    handler: ToolHandler


class Registry:
    """Server-name -> tool-name -> (descriptor, handler). Immutable after startup."""

    def __init__(self):
        self._servers: dict[str, dict[str, RegisteredTool]] = {}

    @property
    def server_names(self) -> list[str]:
        return list(self._servers.keys())

    def register(self, descriptor: ToolDescriptor, handler: ToolHandler) -> None:
        tools = self._servers.setdefault(descriptor.server, {})
        if descriptor.name in tools:
            raise DuplicateTool(descriptor.qualified)
        tools[descriptor.name] = RegisteredTool(descriptor=descriptor, handler=handler)

    def lookup(self, server: str, name: str) -> RegisteredTool:
        try:
            return self._servers[server][name]
        except KeyError:
            raise UnknownTool(f"{server}.{name}") from None

    def descriptors(self, server: str | None = None) -> list[ToolDescriptor]:
        if server is not None:
            return [t.descriptor for t in self._servers.get(server, {}).values()]
        return [t.descriptor for tools in self._servers.values() for t in tools.values()]

    def view(self, server: str) -> "Registry":
        """Single-server registry slice, what one hosted function serves."""
        if server not in self._servers:
            raise UnknownTool(server)
        out = Registry()
        out._servers[server] = dict(self._servers[server])
        return out

    def fused(self, function_name: str) -> "Registry":
        """Union of all servers under one name, tools prefixed `server.tool`.

        This is how the monolithic deployment avoids name collisions while
        staying equivalent to the distributed one modulo the prefix.
        """
        out = Registry()
        fused: dict[str, RegisteredTool] = {}
        for server, tools in self._servers.items():
            for name, tool in tools.items():
                prefixed = replace(tool.descriptor, server=function_name, name=f"{server}.{name}")
                fused[prefixed.name] = RegisteredTool(descriptor=prefixed, handler=tool.handler)
        out._servers[function_name] = fused
        return out


def register_tool(registry: Registry, descriptor: ToolDescriptor, handler: ToolHandler) -> None:
    registry.register(descriptor, handler)


def validate_args(descriptor: ToolDescriptor, args: dict[str, Any]) -> None:
    """Structural validation only: names, required flags and semantic types.

    Anything semantic (ranges, formats) is the handler's job so that agents
    get informative error text back instead of a protocol rejection.
    """
    known = {p.name: p for p in descriptor.params}
    for key in args:
        if key not in known:
            raise ArgValidation(key, "unknown parameter")
    for param in descriptor.params:
        if param.required and param.name not in args:
            raise ArgValidation(param.name, "required parameter missing")
        if param.name in args and not _type_ok(args[param.name], param.type):
            raise ArgValidation(param.name, f"expected {param.type.value}")


def _type_ok(value: Any, expected: SemanticType) -> bool:
    if expected is SemanticType.STRING:
        return isinstance(value, str)
    if expected is SemanticType.BOOLEAN:
        return isinstance(value, bool)
    if expected is SemanticType.INTEGER:
        return isinstance(value, int) and not isinstance(value, bool)
    if expected is SemanticType.STRING_LIST:
        return isinstance(value, list) and all(isinstance(v, str) for v in value)
    return False
