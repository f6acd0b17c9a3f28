"""Paths to the packaged fixture corpus (reference manifest and candidates)."""

from __future__ import annotations

from importlib import resources
from pathlib import Path


def fixture_path(name: str) -> Path:
    return Path(str(resources.files("scenedesc.data").joinpath("fixtures").joinpath(name)))


def reference_manifest_path() -> Path:
    """The five annotated sample images with their ten descriptions each."""
    return fixture_path("seen_bdd.jsonl")


def stage1_candidates_path() -> Path:
    """Generated sentences from the first model-comparison stage."""
    return fixture_path("stage1_candidates.jsonl")
