"""Web search tool (Serper-style): query in, URL+snippet results out."""

from __future__ import annotations

import json
from dataclasses import dataclass

from ..errors import ArgValidation, NetworkDisabled, NoFixture, UpstreamError
from ..mcp.protocol import ToolResult
from .context import ToolContext
from .fixtures import slug


@dataclass(frozen=True)
class SearchResult:
    url: str
    snippet: str

    def __post_init__(self):
        if not self.snippet:
            raise ValueError("snippet must be non-empty")


def google_search(ctx: ToolContext, query: str, num_results: int = 5) -> ToolResult:
    if not 1 <= num_results <= 10:
        raise ArgValidation("num_results", "must be between 1 and 10")
    results = _fixture_results(ctx, query) if not _live(ctx) else _live_results(ctx, query)
    results = results[:num_results]
    content = json.dumps(
        [{"url": r.url, "snippet": r.snippet} for r in results], indent=1)
    return ToolResult(content=content)


def _live(ctx: ToolContext) -> bool:
    return bool(ctx.options.get("search_live_url"))


def _fixture_results(ctx: ToolContext, query: str) -> list[SearchResult]:
    key = f"{slug(query)}.json"
    if not ctx.fixtures.has("serper", key):
        raise NoFixture(f"no canned search results for query {query!r}")
    doc = ctx.fixtures.json("serper", key)
    return [SearchResult(url=r["url"], snippet=r["snippet"]) for r in doc["results"]]


def _live_results(ctx: ToolContext, query: str) -> list[SearchResult]:
    if ctx.no_network:
        raise NetworkDisabled("live search blocked by --no-network")
    import httpx

    try:
        resp = httpx.post(ctx.options["search_live_url"],
                          json={"q": query},
                          headers={"X-API-KEY": ctx.options.get("search_live_key", "")},
                          timeout=30.0)
        resp.raise_for_status()
        organic = resp.json().get("organic", [])
    except httpx.HTTPError as exc:
        raise UpstreamError(f"search upstream failed: {exc}") from exc
    return [SearchResult(url=r.get("link", ""), snippet=r.get("snippet", "(no snippet)"))
            for r in organic]
