from __future__ import annotations

import datetime as dt
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from eboca.evidence import annotate, read_jsonl  # noqa: E402
from eboca.mapping import materialize, parse_mapping_doc  # noqa: E402
from eboca.rdf import Graph  # noqa: E402
from eboca.resources import fixture_dir, fixture_mapping, ner_fixture  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def mapping_doc():
    return parse_mapping_doc(fixture_mapping().read_bytes(), fixture_dir())


@pytest.fixture(scope="session")
def fixture_kg(mapping_doc) -> Graph:
    return materialize(mapping_doc, fixture_dir()).freeze()


@pytest.fixture(scope="session")
def ner_paragraphs():
    with open(ner_fixture(), encoding="utf-8") as fh:
        return read_jsonl(fh)


@pytest.fixture(scope="session")
def ner_graph(ner_paragraphs) -> Graph:
    return annotate(ner_paragraphs, created_on=dt.date(2022, 5, 1)).graph.freeze()


@pytest.fixture(scope="session")
def merged_kg(fixture_kg, ner_graph) -> Graph:
    return (fixture_kg | ner_graph).freeze()


# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    reports = {}
    for outcome in ("passed", "failed", "error"):
        for r in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(r, "nodeid", "")
            if "test_acceptance.py::test_" in nodeid:
                reports[nodeid.split("::test_")[1].split("_")[0]] = outcome
    if not reports:
        return
    terminalreporter.section("acceptance criteria")
    for n in range(1, 8):
        if str(n) not in reports:
            ok, detail = False, "not run"
        else:
            ok, detail = ACCEPTANCE.get(n, (False, f"test {reports[str(n)]} before reporting"))
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}")
