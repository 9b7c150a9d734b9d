"""Locations of the packaged data files (fixtures, prompts, manifests, rubrics)."""

from __future__ import annotations

from importlib import resources
from pathlib import Path


def data_root() -> Path:
    return Path(str(resources.files("agentx").joinpath("data")))


def default_fixture_root() -> Path:
    return data_root() / "fixtures"


def default_manifest_path() -> Path:
    return data_root() / "manifest.json"


def prompts_root() -> Path:
    return data_root() / "prompts"


def rubrics_path() -> Path:
    return data_root() / "rubrics.json"


def paper_matrix_path() -> Path:
    return data_root() / "paper-matrix.json"
