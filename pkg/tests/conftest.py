import random
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from khparam.diagram import braid_closure, load_pd

CORPUS = Path(__file__).resolve().parents[1] / "src" / "khparam" / "corpus"

settings.register_profile("repo", derandomize=True, deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=20240607, help="seed for the randomized fixtures")


@pytest.fixture(scope="session")
def seed(request):
    return request.config.getoption("--seed")


def corpus_diagrams():
    return {p.stem: load_pd(p) for p in sorted(CORPUS.glob("*.pd"))}


def random_braid_diagrams(seed, count=20, max_crossings=8):
    """Random braid closures with 1..max_crossings crossings on up to 4 strands."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        strands = rng.randint(2, 4)
        n = rng.randint(1, max_crossings)
        word = [rng.choice([1, -1]) * rng.randint(1, strands - 1) for _ in range(n)]
        out.append((tuple(word), braid_closure(word, strands)))
    return out


@pytest.fixture(scope="session")
def corpus():
    return corpus_diagrams()


@pytest.fixture(scope="session")
def random_diagrams(seed):
    return random_braid_diagrams(seed)


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE = {}


def record(number, ok, detail):
    ACCEPTANCE[number] = (ok, detail)
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'} ({detail})")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'} ({detail})")
