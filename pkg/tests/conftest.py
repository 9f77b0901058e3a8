import pytest

from nodaljac import _backend

BACKENDS = sorted(_backend.AVAILABLE)

_acceptance_lines: list[str] = []


@pytest.fixture(params=BACKENDS)
def each_backend(request):
    """Run the test once per available kernel backend."""
    previous = _backend.name
    _backend.use(request.param)
    yield request.param
    _backend.use(previous)


@pytest.fixture
def acceptance_report():
    return _acceptance_lines.append


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
