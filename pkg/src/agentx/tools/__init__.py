"""Built-in MCP servers: search, fetch, document source, RAG, code execution,
filesystem, blob tools and stock history, each fixture-backed by default."""

from .builtin import build_registry, builtin_manifests, make_context_factory

__all__ = ["build_registry", "builtin_manifests", "make_context_factory"]
