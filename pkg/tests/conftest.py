import contextlib
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from knotbeta import make_long, paper_example
from knotbeta.generate import random_knots

_ACCEPTANCE: list[tuple[str, bool, str]] = []


@contextlib.contextmanager
def record_criterion(name: str, detail: str = ""):
    try:
        yield
    except BaseException:
        _ACCEPTANCE.append((name, False, detail))
        raise
    _ACCEPTANCE.append((name, True, detail))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _ACCEPTANCE:
        line = f"{'PASS' if ok else 'FAIL'}  {name}"
        terminalreporter.write_line(line + (f"  ({detail})" if detail else ""))


@pytest.fixture(scope="session")
def paper():
    return paper_example()


@pytest.fixture(scope="session")
def random_long_knots():
    """200 seeded braid-closure long knots with at most 12 crossings."""
    return [make_long(g.diagram, 0) for g in random_knots(seed=20240601, count=200, max_crossings=12)]
