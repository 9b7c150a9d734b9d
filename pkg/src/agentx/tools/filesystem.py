"""Filesystem server confined to the session workspace."""

from __future__ import annotations

from ..errors import NotFound
from ..mcp.protocol import ToolResult
from .context import ToolContext


def fs_write(ctx: ToolContext, path: str, content: str) -> ToolResult:
    with ctx.lock():
        target = ctx.resolve(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(content, encoding="utf-8")
    return ToolResult(content=f"Wrote {len(content)} characters to {path}",
                      produced_uris=(ctx.workspace_uri(path),))


def fs_read(ctx: ToolContext, path: str) -> ToolResult:
    with ctx.lock():
        target = ctx.resolve(path)
        if not target.is_file():
            raise NotFound(f"no file at {path!r}")
        return ToolResult(content=target.read_text(encoding="utf-8"))


def fs_list(ctx: ToolContext, path: str = ".") -> ToolResult:
    with ctx.lock():
        base = ctx.resolve(path)
        if not base.is_dir():
            raise NotFound(f"no directory at {path!r}")
        entries = sorted(
            str(p.relative_to(ctx.workspace)) + ("/" if p.is_dir() else "")
            for p in base.iterdir()
        )
    return ToolResult(content="\n".join(entries) if entries else "(empty)")
