"""Blob tools: the S3 analogue of the filesystem server for hosted functions."""

from __future__ import annotations

from ..errors import InvalidUri, NoSuchKey, NotFound
from ..faas.blob import BlobUri
from ..mcp.protocol import ToolResult
from .context import ToolContext


def s3_put_object(ctx: ToolContext, uri: str, body: str) -> ToolResult:
    try:
        target = BlobUri.parse(uri)
    except InvalidUri as exc:
        raise NotFound(str(exc)) from None
    ctx.blobs.put(target, body.encode("utf-8"))
    return ToolResult(content=f"Stored {len(body)} characters at {uri}",
                      produced_uris=(str(target),))


def s3_get_object(ctx: ToolContext, uri: str) -> ToolResult:
    try:
        target = BlobUri.parse(uri)
        data = ctx.blobs.get(target)
    except (InvalidUri, NoSuchKey) as exc:
        raise NotFound(str(exc)) from None
    return ToolResult(content=data.decode("utf-8", errors="replace"))


def s3_list_objects(ctx: ToolContext, bucket: str, prefix: str = "") -> ToolResult:
    keys = ctx.blobs.list(bucket, prefix)
    if not keys:
        return ToolResult(content=f"(no objects under s3://{bucket}/{prefix})")
    return ToolResult(content="\n".join(f"s3://{bucket}/{k}" for k in keys))
