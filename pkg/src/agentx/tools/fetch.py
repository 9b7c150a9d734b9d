"""Web page fetch with chunked continuation reads."""

from __future__ import annotations

from ..errors import ArgValidation, NetworkDisabled, NotFound, UpstreamError
from ..mcp.protocol import ToolResult
from .context import ToolContext
from .fixtures import url_key

DEFAULT_MAX_LENGTH = 5000

TRUNCATION_NOTICE = (
    "<error>Content truncated. Call the fetch tool with a start_index of "
    "{next_index} to get more content.</error>"
)


def fetch(ctx: ToolContext, url: str, max_length: int = DEFAULT_MAX_LENGTH,
          start_index: int = 0) -> ToolResult:
    if max_length < 1:
        raise ArgValidation("max_length", "must be positive")
    if start_index < 0:
        raise ArgValidation("start_index", "must be non-negative")
    page = _page(ctx, url)
    chunk = page[start_index:start_index + max_length]
    if start_index + max_length < len(page):
        chunk += TRUNCATION_NOTICE.format(next_index=start_index + max_length)
    return ToolResult(content=chunk)


def _page(ctx: ToolContext, url: str) -> str:
    live_mode = bool(ctx.options.get("fetch_live"))
    if not live_mode:
        key = f"{url_key(url)}.txt"
        if not ctx.fixtures.has("fetch", key):
            raise NotFound(f"no page content for url {url!r}")
        return ctx.fixtures.text("fetch", key)
    if ctx.no_network:
        raise NetworkDisabled("live fetch blocked by --no-network")
    import httpx

    try:
        resp = httpx.get(url, timeout=30.0, follow_redirects=True)
        resp.raise_for_status()
    except httpx.HTTPError as exc:
        raise UpstreamError(f"fetch upstream failed: {exc}") from exc
    return resp.text
