import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ultraballean import Space, random_space  # noqa: E402


def example38(inner="1", outer="2"):
    """Four points on a square: sides at the diameter, diagonals closer."""
    o, i = outer, inner
    return Space.from_rows(
        ["x1", "x2", "x3", "x4"],
        [["0", o, i, o], [o, "0", o, i], [i, o, "0", o], [o, i, o, "0"]],
    )


def equilateral(n, c="1", prefix="e"):
    return Space.from_rows(
        [f"{prefix}{k}" for k in range(n)],
        [["0" if a == b else c for b in range(n)] for a in range(n)],
    )


def corpus(count=200, lo=2, hi=12, seed=20240601):
    rng = random.Random(seed)
    return [random_space(rng.randint(lo, hi), rng=rng) for _ in range(count)]


@pytest.fixture
def ex38():
    return example38()


@pytest.fixture(scope="session")
def space_corpus():
    return corpus()


_ACCEPTANCE: list[str] = []


@pytest.fixture
def criterion(request):
    """Time a criterion body and record a PASS/FAIL line for the summary."""
    import time

    class Recorder:
        def __init__(self):
            self.start = time.perf_counter()

        def elapsed(self):
            return time.perf_counter() - self.start

    rec = Recorder()
    yield rec
    failed = getattr(request.node, "rep_call", None)
    status = "FAIL" if failed is None or failed.failed else "PASS"
    doc = (request.node.function.__doc__ or request.node.name).strip().splitlines()[0]
    _ACCEPTANCE.append(f"{status}  {doc}  ({rec.elapsed():.2f}s)")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
