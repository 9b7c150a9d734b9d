"""Exception taxonomy shared across the engine, protocol layer and tools."""

from __future__ import annotations


class AgentxError(Exception):
    """Base class for every error raised by this package."""


class ConfigError(AgentxError):
    """Invalid or unusable engine configuration."""


# --- structured output ------------------------------------------------------

class SchemaViolation(AgentxError):
    """A structured LLM output is missing a field or carries the wrong type."""

    def __init__(self, field: str, reason: str):
        super().__init__(f"schema violation on field {field!r}: {reason}")
        self.field = field
        self.reason = reason


# --- llm gateway ------------------------------------------------------------

class BackendUnavailable(AgentxError):
    """The chat-completion backend cannot be reached."""


class ContextOverflow(AgentxError):
    """Estimated request tokens exceed the model's context window."""

    def __init__(self, estimated: int, window: int):
        super().__init__(f"estimated {estimated} tokens exceeds context window of {window}")
        self.estimated = estimated
        self.window = window


class ScriptExhausted(AgentxError):
    """A scripted backend ran out of entries: the golden transcript is broken."""


class NetworkDisabled(AgentxError):
    """A live network call was attempted while running with no-network enforcement."""


# --- mcp protocol -----------------------------------------------------------

class DuplicateTool(AgentxError):
    """(server, tool) pair registered twice."""


class UnknownTool(AgentxError):
    """Tool name does not resolve in the registry."""


class ArgValidation(AgentxError):
    """Tool arguments fail structural validation against the descriptor."""

    def __init__(self, param: str, reason: str):
        super().__init__(f"invalid argument {param!r}: {reason}")
        self.param = param
        self.reason = reason


class SessionUnknown(AgentxError):
    """Session id is absent from the session store."""


class TransportError(AgentxError):
    """The transport failed to deliver a request or response."""


class MalformedResponse(AgentxError):
    """Wire payload is not a valid JSON-RPC 2.0 response."""


# --- tool handlers ----------------------------------------------------------

class ToolError(AgentxError):
    """Expected tool-level failure, surfaced to the agent as an error-text result.

    Handlers raise this (or a subclass) for conditions the agent should see and
    recover from; anything else propagating out of a handler is a panic.
    """


class NoFixture(ToolError):
    """Fixture mode has no canned response for these tool arguments."""


class NotFound(ToolError):
    pass


class UnknownTicker(ToolError):
    pass


class NoSuchDocument(ToolError):
    pass


class PathEscape(ToolError):
    """A filesystem path tried to leave the sandbox root."""


class WriteDenied(ToolError):
    pass


class ExecTimeout(ToolError):
    pass


class OutputTooLarge(ToolError):
    pass


class NoInterpreter(ToolError):
    pass


class UpstreamError(ToolError):
    """A live-mode HTTP call to an external service failed."""


# --- faas host --------------------------------------------------------------

class DuplicateRoute(AgentxError):
    pass


class EmptyDeployment(AgentxError):
    pass


class UnknownFunction(AgentxError):
    pass


class StoreUnavailable(AgentxError):
    """The session store cannot be read or written."""


class NoSuchKey(AgentxError):
    """Blob key absent from the store."""


class InvalidUri(AgentxError):
    """String does not parse as an s3://bucket/key URI."""


# --- bench harness ----------------------------------------------------------

class CellExhausted(AgentxError):
    """A matrix cell could not meet its stop rule within the max-runs guard."""

    def __init__(self, cell: str, detail: str = ""):
        super().__init__(f"cell {cell} exhausted" + (f": {detail}" if detail else ""))
        self.cell = cell
