"""Descriptor surface and wiring for the eight built-in servers.

Descriptions are data: behavioral hints are appended per deployment profile
("local" carries the steering hints, "faas" swaps the retriever contract to
S3 URIs), mirroring how the hosted and workstation variants diverge.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any, Callable

from ..faas.blob import BlobStore
from ..faas.manifest import FunctionManifest
from ..mcp.registry import Registry, ToolHandler
from ..model import SemanticType, ToolDescriptor, ToolOrigin, ToolParam
from ..sessions import Session
from . import arxiv, code_exec, fetch, filesystem, rag, s3tools, search, stocks
from .context import SessionLocks, ToolContext
from .fixtures import FixtureSet

PROFILE_LOCAL = "local"
PROFILE_FAAS = "faas"

FETCH_HINT = (
    " Use this tool after using the Google Search tool, when you need more "
    "detailed information from a specific web page."
)
LOAD_ARTICLE_HINT = (
    " This tool should never be used to load research papers since they are too long."
)

RAG_DESCRIPTION_LOCAL = (
    "Retrieves relevant text snippets from a downloaded document based on a query. "
    "Input: doc_uri (str): path to the document file. query (str): The query to "
    "search in the document. Output: str: Snippets of text relevant to the query, "
    "with metrics."
)
RAG_DESCRIPTION_FAAS = (
    "Retrieves relevant text snippets from a PDF in S3 based on a query. Input: "
    "s3_uri (str): The S3 URI to the PDF file (e.g., s3://my-bucket/report.pdf). "
    "query (str): The query to search in the PDF file. Output: str: Snippets of "
    "text from the PDF relevant to the query, with metrics."
)

_S = SemanticType.STRING
_I = SemanticType.INTEGER


def _p(name: str, type_: SemanticType, required: bool, description: str) -> ToolParam:
    return ToolParam(name=name, type=type_, required=required, description=description)


def _document_retriever_s3(ctx: ToolContext, s3_uri: str, query: str):
    return rag.document_retriever(ctx, doc_uri=s3_uri, query=query)


def _server_tools(profile: str) -> dict[str, list[tuple[ToolDescriptor, ToolHandler]]]:
    local = profile == PROFILE_LOCAL

    fetch_desc = (
        "Fetches a URL from the internet and optionally extracts its contents as "
        "markdown. Content is returned in chunks with a limit of 5000 characters "
        "by default; call again with a start_index offset to continue reading a "
        "long page."
    )
    if local:
        fetch_desc += FETCH_HINT
    load_desc = "Load the article hosted on arXiv.org into context as plain text."
    if local:
        load_desc += LOAD_ARTICLE_HINT

    if local:
        rag_tool = (
            ToolDescriptor(
                server="rag", name="document_retriever",
                description=RAG_DESCRIPTION_LOCAL,
                params=(
                    _p("doc_uri", _S, True, "Path to the document file"),
                    _p("query", _S, True, "The query to search in the document"),
                ),
                origin=ToolOrigin.CUSTOM,
            ),
            rag.document_retriever,
        )
    else:
        rag_tool = (
            ToolDescriptor(
                server="rag", name="document_retriever",
                description=RAG_DESCRIPTION_FAAS,
                params=(
                    _p("s3_uri", _S, True, "The S3 URI to the PDF file"),
                    _p("query", _S, True, "The query to search in the PDF file"),
                ),
                origin=ToolOrigin.CUSTOM,
            ),
            _document_retriever_s3,
        )

    return {
        "serper": [(
            ToolDescriptor(
                server="serper", name="google_search",
                description=(
                    "Performs a web search via the Google Serper API. Takes the query "
                    "and the number of search results to return (1 to 10). Each search "
                    "result includes a URL and a small snippet of text from the web "
                    "page the URL points to."
                ),
                params=(
                    _p("query", _S, True, "The search query"),
                    _p("num_results", _I, False, "How many results to return (default 5)"),
                ),
                origin=ToolOrigin.COMMUNITY,
            ),
            search.google_search,
        )],
        "fetch": [(
            ToolDescriptor(
                server="fetch", name="fetch",
                description=fetch_desc,
                params=(
                    _p("url", _S, True, "The web address of the page to retrieve"),
                    _p("max_length", _I, False, "Maximum characters to return (default 5000)"),
                    _p("start_index", _I, False, "Character offset to start fetching from"),
                ),
                origin=ToolOrigin.OFFICIAL,
            ),
            fetch.fetch,
        )],
        "arxiv": [
            (
                ToolDescriptor(
                    server="arxiv", name="get_article_details",
                    description=("Get metadata for a research article hosted on arXiv.org: "
                                 "title, arXiv id, authors, publication date and abstract."),
                    params=(_p("title", _S, True, "Article title or arXiv id"),),
                    origin=ToolOrigin.COMMUNITY,
                ),
                arxiv.get_article_details,
            ),
            (
                ToolDescriptor(
                    server="arxiv", name="download_article",
                    description=("Download a research paper from arXiv.org as a PDF. dest is "
                                 "where to store it: a workspace-relative path or an s3:// URI."),
                    params=(
                        _p("title", _S, True, "Article title or arXiv id"),
                        _p("dest", _S, True, "Destination path or s3:// URI"),
                    ),
                    origin=ToolOrigin.COMMUNITY,
                ),
                arxiv.download_article,
            ),
            (
                ToolDescriptor(
                    server="arxiv", name="load_article",
                    description=load_desc,
                    params=(_p("title", _S, True, "Article title or arXiv id"),),
                    origin=ToolOrigin.COMMUNITY,
                ),
                arxiv.load_article,
            ),
        ],
        "rag": [rag_tool],
        "code_execution": [
            (
                ToolDescriptor(
                    server="code_execution", name="execute_code",
                    description=("Python environment for agents to execute scripts. Runs the "
                                 "source in the session workspace and returns stdout, stderr "
                                 "and the list of files the script produced."),
                    params=(_p("source", _S, True, "Python source code to run"),),
                    origin=ToolOrigin.CUSTOM,
                ),
                code_exec.execute_code,
            ),
            (
                ToolDescriptor(
                    server="code_execution", name="upload_file_to_blob",
                    description="Upload a file from the session workspace to an s3:// URI.",
                    params=(
                        _p("path", _S, True, "Workspace-relative file path"),
                        _p("uri", _S, True, "Target s3://bucket/key URI"),
                    ),
                    origin=ToolOrigin.CUSTOM,
                ),
                code_exec.upload_file_to_blob,
            ),
            (
                ToolDescriptor(
                    server="code_execution", name="list_workspace_files",
                    description="List the files currently present in the session workspace.",
                    params=(),
                    origin=ToolOrigin.CUSTOM,
                ),
                code_exec.list_workspace_files,
            ),
        ],
        "filesystem": [
            (
                ToolDescriptor(
                    server="filesystem", name="fs_write",
                    description="Write text content to a file under the session workspace.",
                    params=(
                        _p("path", _S, True, "Workspace-relative file path"),
                        _p("content", _S, True, "Text content to write"),
                    ),
                    origin=ToolOrigin.OFFICIAL,
                ),
                filesystem.fs_write,
            ),
            (
                ToolDescriptor(
                    server="filesystem", name="fs_read",
                    description="Read a text file from the session workspace.",
                    params=(_p("path", _S, True, "Workspace-relative file path"),),
                    origin=ToolOrigin.OFFICIAL,
                ),
                filesystem.fs_read,
            ),
            (
                ToolDescriptor(
                    server="filesystem", name="fs_list",
                    description="List directory entries under the session workspace.",
                    params=(_p("path", _S, False, "Workspace-relative directory (default .)"),),
                    origin=ToolOrigin.OFFICIAL,
                ),
                filesystem.fs_list,
            ),
        ],
        "s3": [
            (
                ToolDescriptor(
                    server="s3", name="s3_put_object",
                    description="Store text content at an s3://bucket/key URI.",
                    params=(
                        _p("uri", _S, True, "Target s3://bucket/key URI"),
                        _p("body", _S, True, "Text content to store"),
                    ),
                    origin=ToolOrigin.CUSTOM,
                ),
                s3tools.s3_put_object,
            ),
            (
                ToolDescriptor(
                    server="s3", name="s3_get_object",
                    description="Read the object stored at an s3://bucket/key URI.",
                    params=(_p("uri", _S, True, "Source s3://bucket/key URI"),),
                    origin=ToolOrigin.CUSTOM,
                ),
                s3tools.s3_get_object,
            ),
            (
                ToolDescriptor(
                    server="s3", name="s3_list_objects",
                    description="List object keys in a bucket, optionally under a prefix.",
                    params=(
                        _p("bucket", _S, True, "Bucket name"),
                        _p("prefix", _S, False, "Key prefix filter"),
                    ),
                    origin=ToolOrigin.CUSTOM,
                ),
                s3tools.s3_list_objects,
            ),
        ],
        "yfinance": [(
            ToolDescriptor(
                server="yfinance", name="get_stock_history",
                description=("Scrapes the Yahoo Finance website for stock data. Returns the "
                             "full daily close price history for a ticker over the requested "
                             "period (1mo, 3mo, 6mo or 1y)."),
                params=(
                    _p("ticker", _S, True, "Stock ticker symbol, e.g. AAPL"),
                    _p("period", _S, False, "History window (default 1y)"),
                ),
                origin=ToolOrigin.COMMUNITY,
            ),
            stocks.get_stock_history,
        )],
    }


def build_registry(profile: str = PROFILE_LOCAL,
                   servers: list[str] | None = None) -> Registry:
    registry = Registry()
    for server, tools in _server_tools(profile).items():
        if servers is not None and server not in servers:
            continue
        for descriptor, handler in tools:
            registry.register(descriptor, handler)
    return registry


# Memory defaults for the eight built-ins. The filesystem server has no hosted
# profile of its own (local-only in the reference setup), so it gets the
# smallest tier here for emulation purposes.
BUILTIN_MEMORY_MB = {
    "code_execution": 512,
    "rag": 512,
    "yfinance": 128,
    "serper": 512,
    "arxiv": 256,
    "fetch": 256,
    "filesystem": 128,
    "s3": 128,
}


def builtin_manifests(servers: list[str] | None = None) -> list[FunctionManifest]:
    names = servers or list(BUILTIN_MEMORY_MB)
    return [FunctionManifest(server=name, memory_mb=BUILTIN_MEMORY_MB[name])
            for name in names]


def make_context_factory(fixtures: FixtureSet, blobs: BlobStore,
                         no_network: bool = True,
                         options: dict[str, Any] | None = None,
                         locks: SessionLocks | None = None) -> Callable[[Session], ToolContext]:
    shared_locks = locks or SessionLocks()
    opts = options or {}

    def factory(session: Session) -> ToolContext:
        return ToolContext(
            session=session,
            fixtures=fixtures,
            blobs=blobs,
            locks=shared_locks,
            no_network=no_network,
            options=opts,
        )

    return factory
