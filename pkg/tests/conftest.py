import random

import pytest

from dicover.generators import generate, random_square_complex

# (label, generator name, params, forbidden rectangles)
CORPUS_ENTRIES = [
    ("circle", "circle", [], []),
    ("wedge2", "wedge", [2], []),
    ("wedge3", "wedge", [3], []),
    ("torus", "torus", [], []),
    ("cube0", "cube", [0], []),
    ("cube1", "cube", [1], []),
    ("cube2", "cube", [2], []),
    ("cube3", "cube", [3], []),
    ("grid21", "grid", [2, 1], []),
    ("grid22_hole", "grid", [2, 2], [(1, 1, 1, 1)]),
    ("swiss_flag", "grid", [3, 3], [(1, 1, 1, 1)]),
]


def corpus():
    return {label: generate(name, params, forbid) for label, name, params, forbid in CORPUS_ENTRIES}


def random_instances(count=100, seed=20261017):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n_sq = rng.randint(1, 10)
        out.append(random_square_complex(rng, n_sq, rng.randint(0, 3 * n_sq)))
    return out


@pytest.fixture(scope="session")
def instances():
    return corpus()


@pytest.fixture(params=[entry[0] for entry in CORPUS_ENTRIES])
def corpus_instance(request, instances):
    return request.param, instances[request.param]


# -- acceptance summary -------------------------------------------------------------------


def pytest_configure(config):
    config.acceptance_lines = []


@pytest.fixture
def criterion(request):
    """Record one pass/fail line for an acceptance criterion."""
    lines = request.config.acceptance_lines

    def record(name, ok, detail):
        line = f"{'PASS' if ok else 'FAIL'}  {name}: {detail}"
        lines.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if config.acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in config.acceptance_lines:
            terminalreporter.write_line(line)
