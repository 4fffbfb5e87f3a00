from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from liecert.scalars import GaussianRational

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def rationals(bound: int = 6):
    return st.builds(lambda p, q: GaussianRational(p) / q, st.integers(-bound, bound), st.integers(1, bound))


def gaussians(bound: int = 6):
    return st.builds(lambda a, b: a + b * GaussianRational(0, 1), rationals(bound), rationals(bound))


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


ACCEPTANCE_LINES: list[str] = []


class _Criterion:
    def __init__(self, number: int, title: str):
        self.number, self.title = number, title

    def __enter__(self):
        import time

        self.t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        import time

        dt = time.perf_counter() - self.t0
        status = "PASS" if exc_type is None else "FAIL"
        line = f"criterion {self.number} [{status}] {self.title} ({dt:.2f} s)"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return False


@pytest.fixture
def criterion():
    return _Criterion


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
