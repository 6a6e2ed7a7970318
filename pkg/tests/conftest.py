import pytest

from fcxlab.verify import VerifyConfig, run_verify_suite

_ACCEPTANCE = {}


@pytest.fixture(scope="session")
def default_report():
    """The full default verify run, shared by every test that inspects it."""
    return run_verify_suite(VerifyConfig())


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion covered by a test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    label = marker.args[0]
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        _ACCEPTANCE[label] = "PASS" if rep.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_ACCEPTANCE, key=lambda s: int(s[2:])):
        terminalreporter.write_line(f"{label} {_ACCEPTANCE[label]}")
