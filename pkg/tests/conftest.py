"""Shared fixtures: the headline gate, its factorization, the protocol input.

Also hosts the acceptance reporter.  Verdict lines are replayed in the
terminal summary because pytest's default capture swallows per-test
stdout for passing tests.
"""

import pytest

from cvpoly import (
    DEFAULT_GRID,
    SqueezeAxis,
    SqueezedParams,
    cubic_gate,
    db_to_width,
    squeezed_state,
    taylor_factorize,
)


def pytest_configure(config):
    config.acceptance_lines = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "acceptance_lines", None)
    if lines:
        terminalreporter.section("acceptance")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture
def report(request):
    def _record(name: str, passed: bool, detail: str) -> None:
        line = f"{'pass' if passed else 'FAIL'} {name}: {detail}"
        request.config.acceptance_lines.append(line)
        print(line)

    return _record


@pytest.fixture(scope="session")
def gate():
    return cubic_gate(0.1)


@pytest.fixture(scope="session")
def plan(gate):
    return taylor_factorize(gate, 1)


@pytest.fixture(scope="session")
def protocol_input():
    """The 5 dB momentum-squeezed state both protocols are quoted on."""
    params = SqueezedParams(0.0, db_to_width(5.0, SqueezeAxis.MOMENTUM))
    return squeezed_state(params, DEFAULT_GRID)
