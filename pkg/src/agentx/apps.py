"""The three application templates, their instances and artifact expectations."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .model import AppLabel, Task

S3_AGENT_PREFIX = "s3://dummy-bucket/agent/"

# appended to user prompts when tools run behind the hosted gateway, where
# durable output must go to the object store instead of local disk
S3_SUFFIX_READ_WRITE = (
    " ...you can read/write from s3 from this location: 's3://dummy-bucket/agent/'"
)
S3_SUFFIX_WRITE_ONLY = " ...write it to s3 location: 's3://dummy-bucket/agent/'"

WEB_SEARCH_INSTANCES = {
    "quantum": "Recent advancements in quantum computing hardware development",
    "edge": "Edge devices and their real-world use cases in 2025",
    "materials": "Latest trends in biodegradable materials for sustainable packaging",
}

STOCK_INSTANCES = {
    "apple": (("Apple", "Google", "Microsoft"), ("AAPL", "GOOGL", "MSFT")),
    "netflix": (("Netflix", "Disney", "Amazon"), ("NFLX", "DIS", "AMZN")),
    "cola": (("CocaCola", "PepsiCo", "Mondelez"), ("KO", "PEP", "MDLZ")),
}

RESEARCH_INSTANCES = {
    "why": "Why Do Multi-Agent LLM Systems Fail?",
    "flow": "Flow: Modularized Agentic Workflow Automation",
    "magentic": "Magentic-One: A Generalist Multi-Agent System for Solving Complex Tasks.",
}

APP_INSTANCES: dict[AppLabel, list[str]] = {
    AppLabel.WEB_SEARCH: list(WEB_SEARCH_INSTANCES),
    AppLabel.STOCK_CORRELATION: list(STOCK_INSTANCES),
    AppLabel.RESEARCH_REPORT: list(RESEARCH_INSTANCES),
}


def render_prompt(app: AppLabel, instance: str) -> str:
    if app is AppLabel.WEB_SEARCH:
        query = WEB_SEARCH_INSTANCES[instance]
        return f"Search for {query} and summarize the results in a text file"
    if app is AppLabel.STOCK_CORRELATION:
        (a, b, c), _ = STOCK_INSTANCES[instance]
        return (f"Generate a plot for the historic stock prices of {a}, {b}, and {c} "
                f"and save it as {a}{b}{c}.png.")
    if app is AppLabel.RESEARCH_REPORT:
        title = RESEARCH_INSTANCES[instance]
        return (f"Generate a report on the Core Contributions, Methodology, Experimental "
                f"Results, and Limitations for the paper titled {title} and save it as a "
                f"text file.")
    raise ValueError(f"no template for app {app}")


def stock_png_name(instance: str) -> str:
    (a, b, c), _ = STOCK_INSTANCES[instance]
    return f"{a}{b}{c}.png"


def make_task(app: AppLabel, instance: str, faas: bool = False,
              task_id: str | None = None) -> Task:
    prompt = render_prompt(app, instance)
    if faas:
        if app is AppLabel.RESEARCH_REPORT:
            prompt += S3_SUFFIX_READ_WRITE
        else:
            prompt += S3_SUFFIX_WRITE_ONLY
    return Task(
        id=task_id or f"{app.value}-{instance}",
        prompt=prompt,
        app_label=app,
        instance_label=instance,
    )


def infer_app(prompt: str) -> AppLabel:
    if prompt.startswith("Search for") and "text file" in prompt:
        return AppLabel.WEB_SEARCH
    if prompt.startswith("Generate a plot for the historic stock prices"):
        return AppLabel.STOCK_CORRELATION
    if prompt.startswith("Generate a report on"):
        return AppLabel.RESEARCH_REPORT
    return AppLabel.CUSTOM


@dataclass(frozen=True)
class ArtifactSpec:
    """What a successful run must have produced, and where to look."""

    location: str  # "workspace" | "blob"
    glob: str

    @property
    def blob_prefix(self) -> str:
        return "agent/"


def artifact_spec(task: Task, faas: bool = False) -> ArtifactSpec | None:
    app = task.app_label if task.app_label is not AppLabel.CUSTOM else infer_app(task.prompt)
    location = "blob" if faas else "workspace"
    if app in (AppLabel.WEB_SEARCH, AppLabel.RESEARCH_REPORT):
        return ArtifactSpec(location=location, glob="*.txt")
    if app is AppLabel.STOCK_CORRELATION:
        match = re.search(r"save it as (\S+?\.png)", task.prompt)
        name = match.group(1) if match else "*.png"
        return ArtifactSpec(location=location, glob=name)
    return None
