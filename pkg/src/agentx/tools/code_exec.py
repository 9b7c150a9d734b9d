"""Python execution environment: fixture-replayed by default, subprocess in live mode."""

from __future__ import annotations

import base64
import hashlib
import subprocess
from ..errors import ExecTimeout, NoFixture, NoInterpreter, NotFound, OutputTooLarge
from ..faas.blob import BlobUri
from ..mcp.protocol import ToolResult
from .context import ToolContext

EXEC_TIMEOUT_S = 30
OUTPUT_CAP_BYTES = 1 << 20  # 1 MiB


def source_digest(source: str) -> str:
    return hashlib.sha256(source.encode("utf-8")).hexdigest()


def execute_code(ctx: ToolContext, source: str) -> ToolResult:
    """Run source in the session workspace; nonzero exit comes back as an
    error-text result so the agent can correct the code and retry."""
    with ctx.lock():
        interpreter = ctx.options.get("exec_interpreter")
        if interpreter:
            return _run_live(ctx, source, interpreter)
        return _replay_fixture(ctx, source)


def _replay_fixture(ctx: ToolContext, source: str) -> ToolResult:
    digest = source_digest(source)
    key = f"{digest}.json"
    if not ctx.fixtures.has("exec", key):
        raise NoFixture(f"no execution fixture for source digest {digest[:12]}")
    entry = ctx.fixtures.json("exec", key)
    produced = []
    for rel_path, spec in entry.get("files", {}).items():
        path = ctx.resolve(rel_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        if "base64" in spec:
            path.write_bytes(base64.b64decode(spec["base64"]))
        else:
            path.write_text(spec["text"], encoding="utf-8")
        produced.append(rel_path)
    return _result(entry["stdout"], entry["stderr"], entry["exit_code"], produced, ctx)


def _run_live(ctx: ToolContext, source: str, interpreter: str) -> ToolResult:
    before = {p for p in ctx.workspace.rglob("*") if p.is_file()}
    try:
        proc = subprocess.run(
            [interpreter, "-c", source],
            cwd=ctx.workspace,
            capture_output=True,
            timeout=EXEC_TIMEOUT_S,
        )
    except FileNotFoundError:
        raise NoInterpreter(f"interpreter {interpreter!r} not found") from None
    except subprocess.TimeoutExpired:
        raise ExecTimeout(f"execution exceeded {EXEC_TIMEOUT_S}s") from None
    if len(proc.stdout) + len(proc.stderr) > OUTPUT_CAP_BYTES:
        raise OutputTooLarge(f"combined output exceeds {OUTPUT_CAP_BYTES} bytes")
    after = {p for p in ctx.workspace.rglob("*") if p.is_file()}
    produced = sorted(str(p.relative_to(ctx.workspace)) for p in after - before)
    return _result(proc.stdout.decode(errors="replace"),
                   proc.stderr.decode(errors="replace"),
                   proc.returncode, produced, ctx)


def _result(stdout: str, stderr: str, exit_code: int, produced: list[str],
            ctx: ToolContext) -> ToolResult:
    uris = tuple(ctx.workspace_uri(p) for p in produced)
    if exit_code != 0:
        body = stderr or stdout or f"exit code {exit_code}"
        return ToolResult(content=f"Execution failed (exit {exit_code}):\n{body}",
                          is_error=True, produced_uris=uris)
    parts = [f"stdout:\n{stdout}" if stdout else "stdout: (empty)"]
    if produced:
        parts.append("produced files: " + ", ".join(produced))
    return ToolResult(content="\n".join(parts), produced_uris=uris)


def upload_file_to_blob(ctx: ToolContext, path: str, uri: str) -> ToolResult:
    """Copy a workspace file into the blob store (the function's S3 hand-off)."""
    source = ctx.resolve(path)
    if not source.is_file():
        raise NotFound(f"workspace file {path!r} does not exist")
    target = BlobUri.parse(uri)
    ctx.blobs.put(target, source.read_bytes())
    return ToolResult(content=f"Uploaded {path} to {uri}", produced_uris=(str(target),))


def list_workspace_files(ctx: ToolContext) -> ToolResult:
    files = sorted(str(p.relative_to(ctx.workspace))
                   for p in ctx.workspace.rglob("*") if p.is_file())
    return ToolResult(content="\n".join(files) if files else "(workspace empty)")
