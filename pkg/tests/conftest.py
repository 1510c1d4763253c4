import functools

from splinequad.catalog import build_rule
from splinequad.families import Family

# smallest valid family index n
MIN_N = {
    Family.C0_ODD: 1,
    Family.C0_EVEN: 1,
    Family.C1_ODD_ENDPOINT: 1,
    Family.C1_ODD_INTERIOR: 1,
    Family.C1_EVEN: 2,
}


@functools.lru_cache(maxsize=None)
def cached_rule(family, n, delta_sign=+1):
    """Rules are pure functions of their parameters; build each once per session."""
    return build_rule(family, n, delta_sign=delta_sign)


def family_range(max_n):
    for family, lo in MIN_N.items():
        for n in range(lo, max_n + 1):
            yield family, n


# one PASS/FAIL line per acceptance criterion, echoed after the test run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
