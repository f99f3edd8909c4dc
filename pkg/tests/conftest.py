from __future__ import annotations

import json
import sys
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from geodex.digraph import Digraph  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

DATA = Path(__file__).parent / "data"


def load_drawings() -> dict[str, Digraph]:
    raw = json.loads((DATA / "reference_drawings.json").read_text())
    return {name: Digraph.from_arcs(d["n"], [tuple(a) for a in d["arcs"]]) for name, d in raw.items()}


@pytest.fixture(scope="session")
def drawings() -> dict[str, Digraph]:
    return load_drawings()


@st.composite
def digraphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    density = draw(st.sampled_from([0.1, 0.2, 0.35, 0.5]))
    rows = []
    for u in range(n):
        row = 0
        for v in range(n):
            if v != u and draw(st.floats(0, 1)) < density:
                row |= 1 << v
        rows.append(row)
    return Digraph(n, tuple(rows))


@st.composite
def permutations_of(draw, n):
    return draw(st.permutations(list(range(n))))


# acceptance reporting: one line per criterion after the run
_ACCEPTANCE: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    number, title = marker
    _ACCEPTANCE[number] = (title, "PASS" if report.passed else "FAIL")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        report.criterion = (mark.args[0], mark.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, verdict = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d} {verdict}: {title}")
