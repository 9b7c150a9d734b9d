"""Deterministic fixture corpus generator.

Regenerating into the packaged data directory reproduces the shipped corpus
byte-for-byte; a test holds that property so fixtures and generator cannot
drift apart. Run as `python -m agentx.fixturegen --out <dir>`.
"""

from __future__ import annotations

import json
import random
from pathlib import Path

from .apps import RESEARCH_INSTANCES, WEB_SEARCH_INSTANCES
from .tools.fixtures import slug, url_key
from .tools.stocks import TICKERS, generate_series

CORPUS_SEED = 413_007
PAGE_CHARS = 12_000
SNIPPET_CHARS = 600
RESULTS_PER_QUERY = 8

FILLER_WORDS = [
    "systems", "design", "teams", "results", "analysis", "adoption", "platforms",
    "production", "deployment", "workloads", "benchmarks", "applications",
    "reliability", "performance", "industry", "pipelines", "tooling", "standards",
    "vendors", "prototypes", "roadmaps", "constraints", "scaling", "integration",
]

TOPIC_WORDS = {
    "quantum": [
        "qubits", "superconducting", "trapped-ion", "error-correction", "coherence",
        "cryogenics", "photonic", "annealing", "fidelity", "entanglement", "gates",
        "decoherence", "topological", "transmon", "quantum",
    ],
    "edge": [
        "edge", "inference", "latency", "sensors", "gateways", "microcontrollers",
        "accelerators", "telemetry", "offline", "bandwidth", "5g", "robotics",
        "retail", "manufacturing", "wearables",
    ],
    "materials": [
        "biodegradable", "polymers", "packaging", "compostable", "cellulose",
        "starch", "mycelium", "lifecycle", "recycling", "barrier", "coatings",
        "sustainable", "bioplastics", "films", "fibers",
    ],
}

PAGE_HOSTS = [
    "review.example.org", "labnotes.example.net", "industry-digest.example.com",
    "tech-briefs.example.org", "fieldreports.example.io", "deepdive.example.dev",
    "analyst-desk.example.co", "openjournal.example.edu",
]

PAPER_SECTIONS = ("Core Contributions", "Methodology", "Experimental Results", "Limitations")

PAPER_META = {
    "why": {"arxiv_id": "2503.13657", "published": "2025-03-17",
            "authors": "Cemri et al."},
    "flow": {"arxiv_id": "2501.07834", "published": "2025-01-14",
             "authors": "Niu et al."},
    "magentic": {"arxiv_id": "2411.04468", "published": "2024-11-07",
                 "authors": "Fourney et al."},
}


def _prose(rng: random.Random, words: list[str], n_chars: int) -> str:
    sentences = []
    total = 0
    vocab = words + FILLER_WORDS
    while total < n_chars + 120:
        count = rng.randint(8, 14)
        chosen = [rng.choice(vocab) for _ in range(count)]
        sentence = " ".join(chosen).capitalize() + "."
        sentences.append(sentence)
        total += len(sentence) + 1
    text = " ".join(sentences)[:n_chars]
    return text[:-1].rstrip() + "."


def _section(rng: random.Random, phrase: str, words: list[str], n_chars: int) -> str:
    """Keyword-dense section: the phrase recurs so retrieval can find it."""
    low = phrase.lower()
    sentences = [f"{phrase}."]
    total = len(sentences[0])
    vocab = words + FILLER_WORDS
    while total < n_chars:
        a, b, c = (rng.choice(vocab) for _ in range(3))
        sentence = f"The {low} of this work cover {a}, {b} and {c}."
        sentences.append(sentence)
        total += len(sentence) + 1
    return " ".join(sentences)


def write_search_corpus(root: Path) -> None:
    (root / "serper").mkdir(parents=True, exist_ok=True)
    (root / "fetch").mkdir(parents=True, exist_ok=True)
    for instance, query in WEB_SEARCH_INSTANCES.items():
        rng = random.Random(CORPUS_SEED + hash_key(instance))
        words = TOPIC_WORDS[instance]
        results = []
        for i in range(RESULTS_PER_QUERY):
            host = PAGE_HOSTS[i % len(PAGE_HOSTS)]
            topic_word = words[i % len(words)].strip("-")
            url = f"https://{host}/{instance}/{i + 1:02d}-{slug(topic_word)}"
            snippet = _prose(rng, words, SNIPPET_CHARS)
            results.append({"url": url, "snippet": snippet})
            page = _prose(rng, words, PAGE_CHARS)
            page_path = root / "fetch" / f"{url_key(url)}.txt"
            page_path.write_text(page, encoding="utf-8")
        doc = {"query": query, "results": results}
        (root / "serper" / f"{slug(query)}.json").write_text(
            json.dumps(doc, indent=1), encoding="utf-8")


def write_paper_corpus(root: Path) -> None:
    (root / "arxiv").mkdir(parents=True, exist_ok=True)
    papers = []
    for instance, title in RESEARCH_INSTANCES.items():
        rng = random.Random(CORPUS_SEED + hash_key(title))
        words = TOPIC_WORDS["quantum" if instance == "why" else
                            "edge" if instance == "flow" else "materials"]
        parts = [f"{title}\n", _prose(rng, words, 500)]
        for section in PAPER_SECTIONS:
            parts.append(f"\n\n{section}\n" + _section(rng, section, words, 900))
        body = "".join(parts)
        filename = f"{slug(title)}.txt"
        (root / "arxiv" / filename).write_text(body, encoding="utf-8")
        meta = PAPER_META[instance]
        papers.append({
            "title": title,
            "arxiv_id": meta["arxiv_id"],
            "authors": meta["authors"],
            "published": meta["published"],
            "summary": _prose(rng, words, 320),
            "file": filename,
        })
    (root / "arxiv" / "index.json").write_text(
        json.dumps({"papers": papers}, indent=1), encoding="utf-8")


def write_stock_corpus(root: Path) -> None:
    (root / "yfinance").mkdir(parents=True, exist_ok=True)
    for ticker in TICKERS:
        series = generate_series(ticker)
        (root / "yfinance" / f"{ticker}.csv").write_text(series.to_csv(), encoding="utf-8")


def hash_key(text: str) -> int:
    # stable across processes, unlike the builtin hash
    import zlib

    return zlib.crc32(text.encode("utf-8"))


def write_corpus(root: Path | str) -> None:
    root = Path(root)
    write_search_corpus(root)
    write_paper_corpus(root)
    write_stock_corpus(root)
    (root / "exec").mkdir(parents=True, exist_ok=True)
    from .golden import write_exec_fixtures

    write_exec_fixtures(root)


def main(argv: list[str] | None = None) -> int:
    import argparse

    parser = argparse.ArgumentParser(description="regenerate the fixture corpus")
    parser.add_argument("--out", required=True, help="target fixture directory")
    args = parser.parse_args(argv)
    write_corpus(Path(args.out))
    print(f"fixture corpus written to {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
