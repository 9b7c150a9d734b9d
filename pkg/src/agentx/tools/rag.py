"""Retrieval tool: overlapping chunks, hashed embeddings, cosine threshold."""

from __future__ import annotations

import hashlib
import math
import re
from dataclasses import dataclass

from ..errors import NoSuchDocument
from ..faas.blob import BlobUri
from ..mcp.protocol import ToolResult
from .context import ToolContext
from ..errors import NoSuchKey, PathEscape

CHUNK_SIZE = 1000
CHUNK_OVERLAP = 200
EMBED_DIM = 256
SCORE_THRESHOLD = 0.3
MAX_SNIPPETS = 5


@dataclass(frozen=True)
class DocChunk:
    doc_uri: str
    text: str
    char_span: tuple[int, int]
    embedding: tuple[float, ...]
    score: float = 0.0


class HashingEmbedder:
    """Deterministic bag-of-words feature hashing, L2-normalized.

    Stands in for a live embeddings API during offline runs: same text, same
    vector, in every process.
    """

    def __init__(self, dim: int = EMBED_DIM):
        self.dim = dim

    def embed(self, text: str) -> tuple[float, ...]:
        vec = [0.0] * self.dim
        for token in re.findall(r"[a-z0-9]+", text.lower()):
            digest = hashlib.sha256(token.encode("utf-8")).digest()
            index = int.from_bytes(digest[:4], "big") % self.dim
            sign = 1.0 if digest[4] % 2 == 0 else -1.0
            vec[index] += sign
        norm = math.sqrt(sum(v * v for v in vec))
        if norm == 0.0:
            return tuple(vec)
        return tuple(v / norm for v in vec)


def cosine(a: tuple[float, ...], b: tuple[float, ...]) -> float:
    return sum(x * y for x, y in zip(a, b))


def chunk_text(text: str, size: int = CHUNK_SIZE, overlap: int = CHUNK_OVERLAP) -> list[tuple[int, int]]:
    """Char spans covering the text with the configured overlap."""
    if size <= overlap:
        raise ValueError("chunk size must exceed overlap")
    spans = []
    start = 0
    while True:
        end = min(start + size, len(text))
        spans.append((start, end))
        if end >= len(text):
            break
        start = end - overlap
    return spans


def _load_document(ctx: ToolContext, doc_uri: str) -> str:
    if doc_uri.startswith("s3://"):
        try:
            return ctx.blobs.get(BlobUri.parse(doc_uri)).decode("utf-8", errors="replace")
        except NoSuchKey:
            raise NoSuchDocument(f"no file present in that path: {doc_uri}") from None
    try:
        path = ctx.resolve(doc_uri)
    except PathEscape:
        raise NoSuchDocument(f"no file present in that path: {doc_uri}") from None
    if not path.is_file():
        raise NoSuchDocument(f"no file present in that path: {doc_uri}")
    return path.read_text(encoding="utf-8", errors="replace")


def document_retriever(ctx: ToolContext, doc_uri: str, query: str) -> ToolResult:
    """Relevant snippets with scores, ranked descending above the threshold."""
    text = _load_document(ctx, doc_uri)
    embedder = ctx.options.get("embedder") or HashingEmbedder()
    threshold = float(ctx.options.get("rag_threshold", SCORE_THRESHOLD))
    query_vec = embedder.embed(query)
    chunks = []
    for span in chunk_text(text):
        body = text[span[0]:span[1]]
        chunk = DocChunk(doc_uri=doc_uri, text=body, char_span=span,
                         embedding=embedder.embed(body))
        chunks.append(chunk)
    scored = sorted(
        (DocChunk(c.doc_uri, c.text, c.char_span, c.embedding,
                  score=cosine(query_vec, c.embedding)) for c in chunks),
        key=lambda c: (-c.score, c.char_span),
    )
    kept = [c for c in scored if c.score >= threshold][:MAX_SNIPPETS]
    if not kept:
        return ToolResult(content=(
            "No snippets scored above the similarity threshold "
            f"({threshold}). Try rephrasing the query."))
    lines = [f"[score={c.score:.4f} chars {c.char_span[0]}-{c.char_span[1]}]\n{c.text}"
             for c in kept]
    return ToolResult(content="\n---\n".join(lines))
