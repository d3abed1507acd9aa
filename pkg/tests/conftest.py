import pytest

from hermint import _kernels

ACCEPTANCE_LINES = []


@pytest.fixture(params=sorted(_kernels.available_backends()))
def backend(request):
    return _kernels.available_backends()[request.param]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
