"""Locations of the bundled fixture data."""

from __future__ import annotations

from pathlib import Path

DATA = Path(__file__).parent / "data"


def fixture_dir() -> Path:
    """Directory holding the DISNET-like CSV tables and ``sem-disnet.map``."""
    return DATA / "disnet"


def fixture_mapping() -> Path:
    return fixture_dir() / "sem-disnet.map"


def ner_fixture() -> Path:
    """JSON Lines batch of entity extractions without confidence scores."""
    return DATA / "ner" / "cord19-sample.jsonl"
