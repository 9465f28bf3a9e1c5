import random

import pytest

from isocover import complete, cycle, path, petersen

from oracles import random_bounded_degree_graph

CORPUS_SEED = 20240607


def corpus():
    """The source graphs used by the trees / k2 acceptance criteria."""
    return {
        "K2": path(2),
        "P5": path(5),
        "C6": cycle(6),
        "K4": complete(4),
        "Petersen": petersen(),
        "random-d4-n12": random_bounded_degree_graph(random.Random(CORPUS_SEED), 12, 4),
    }


@pytest.fixture(scope="session")
def source_corpus():
    return corpus()


ACCEPTANCE_LINES = {}


def record(criterion: int, passed: bool, detail: str = ""):
    ACCEPTANCE_LINES[criterion] = f"criterion {criterion}: {'PASS' if passed else 'FAIL'}" + (f" - {detail}" if detail else "")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
