import pytest

_LINES = pytest.StashKey[list]()


@pytest.fixture
def acceptance_log(request):
    """Collects one PASS/FAIL line per acceptance criterion."""
    return request.config.stash.setdefault(_LINES, [])


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LINES, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(lines):
        terminalreporter.write_line(line)
