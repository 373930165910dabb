import pytest
from hypothesis import strategies as st

from orbitpatterns.classify import iter_single_cycle_images
from orbitpatterns.pattern import Pattern

_acceptance_results: list[tuple[str, bool]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call":
        marker = item.get_closest_marker("criterion")
        if marker:
            _acceptance_results.append((marker.args[0], report.passed))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _acceptance_results:
        terminalreporter.section("acceptance criteria")
        for name, passed in _acceptance_results:
            terminalreporter.write_line(
                f"ACCEPTANCE {name}: {'PASS' if passed else 'FAIL'}")


def single_cycles(m: int) -> st.SearchStrategy[Pattern]:
    """Hypothesis strategy drawing uniform single m-cycles."""
    return st.permutations(list(range(2, m + 1))).map(_cycle_to_pattern)


def _cycle_to_pattern(rest: list[int]) -> Pattern:
    m = len(rest) + 1
    images = [0] * m
    prev = 1
    for c in rest:
        images[prev - 1] = c
        prev = c
    images[prev - 1] = 1
    return Pattern(tuple(images))


@pytest.fixture(scope="session")
def all_period7() -> list[Pattern]:
    return [Pattern(img) for img in iter_single_cycle_images(7)]


@pytest.fixture(scope="session")
def all_period5() -> list[Pattern]:
    return [Pattern(img) for img in iter_single_cycle_images(5)]
