"""Document source tools: article metadata, download, and full-text load."""

from __future__ import annotations

import json
import re
from typing import Any

from ..errors import NotFound
from ..faas.blob import BlobUri
from ..mcp.protocol import ToolResult
from .context import ToolContext


def _normalize_title(title: str) -> str:
    return re.sub(r"[^a-z0-9]+", " ", title.lower()).strip()


def _index(ctx: ToolContext) -> list[dict[str, Any]]:
    return ctx.fixtures.json("arxiv", "index.json")["papers"]


def _find(ctx: ToolContext, title_or_id: str) -> dict[str, Any]:
    wanted = _normalize_title(title_or_id)
    papers = _index(ctx)
    for paper in papers:
        if wanted in (_normalize_title(paper["title"]), paper["arxiv_id"].lower()):
            return paper
    suggestions = ", ".join(p["title"] for p in papers)
    raise NotFound(f"no article matching {title_or_id!r}; known titles: {suggestions}")


def get_article_details(ctx: ToolContext, title: str) -> ToolResult:
    paper = _find(ctx, title)
    meta = {k: paper[k] for k in ("title", "arxiv_id", "authors", "published", "summary")}
    return ToolResult(content=json.dumps(meta, indent=1))


def download_article(ctx: ToolContext, title: str, dest: str) -> ToolResult:
    """Store the article at dest: a workspace-relative path or an s3:// URI."""
    paper = _find(ctx, title)
    body = ctx.fixtures.text("arxiv", paper["file"]).encode("utf-8")
    if dest.startswith("s3://"):
        uri = BlobUri.parse(dest)
        ctx.blobs.put(uri, body)
        stored = str(uri)
    else:
        path = ctx.resolve(dest)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(body)
        stored = ctx.workspace_uri(dest)
    return ToolResult(
        content=f"Downloaded {paper['title']!r} ({len(body)} bytes) to {dest}",
        produced_uris=(stored,),
    )


def load_article(ctx: ToolContext, title: str) -> ToolResult:
    """Load the whole article text into context. Discouraged via its description;
    can be stubbed out with the load_article_full option."""
    paper = _find(ctx, title)
    if not ctx.options.get("load_article_full", True):
        return ToolResult(content=f"Article {paper['title']!r} is too long to load; "
                                  "use the document retriever instead.")
    return ToolResult(content=ctx.fixtures.text("arxiv", paper["file"]))
