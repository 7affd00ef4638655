import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from patternlab import surface, witness

DATA = Path(__file__).parent / "data"
_ACCEPTANCE: list[tuple[str, bool, str]] = []


def record_acceptance(name: str, ok: bool, detail: str = "") -> None:
    _ACCEPTANCE.append((name, ok, detail))
    print(f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'} {detail}")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture(scope="session")
def k7():
    return surface.load_shipped("k7_torus.rot")


@pytest.fixture(scope="session")
def k5():
    return surface.load_shipped("k5_torus.rot")


@pytest.fixture(scope="session")
def k4():
    return surface.load_shipped("k4_planar.rot")


@pytest.fixture(scope="session")
def models():
    cache = {}

    def get(n, k, even=False):
        key = (n, k, even)
        if key not in cache:
            cache[key] = witness.build_model(n, k, even)
        return cache[key]

    return get


@pytest.fixture(scope="session")
def admissible(models):
    """Seeded samples from the feasible sets, keyed by (n, even)."""

    def draw(n, even, count, seed=0, k=1):
        m = models(n, k, even)
        g = np.random.default_rng((seed, n, int(even)))
        return [m.decode(m.solution_space.sample(g)) for _ in range(count)]

    return draw
