import pytest


def pytest_addoption(parser):
    parser.addoption("--oracle-large", action="store_true", default=False,
                     help="also count E7 and E8 tilting modules with the representation oracle (slow)")


def pytest_configure(config):
    config.addinivalue_line("markers", "oracle_large: E7/E8 oracle runs, enabled by --oracle-large")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--oracle-large"):
        return
    skip = pytest.mark.skip(reason="needs --oracle-large")
    for item in items:
        if "oracle_large" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def acceptance_log(request):
    """Lines appended here are repeated in the terminal summary."""
    return request.config._acceptance_lines


def pytest_sessionstart(session):
    session.config._acceptance_lines = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
