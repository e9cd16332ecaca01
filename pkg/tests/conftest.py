import pytest

from chernlab import catalog


@pytest.fixture(scope="session")
def all_entries():
    return catalog.entries()


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for i in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[i])
