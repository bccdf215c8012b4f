import time

import helpers

_session_start = None
_SUITE_LIMIT_SECONDS = 300


def pytest_configure(config):
    global _session_start
    _session_start = time.monotonic()


def pytest_sessionfinish(session, exitstatus):
    elapsed = time.monotonic() - (_session_start or time.monotonic())
    ok = elapsed < _SUITE_LIMIT_SECONDS
    helpers.record_acceptance(
        9, f"full suite completes in under 5 minutes ({elapsed:.1f}s)", ok
    )
    if not ok and session.exitstatus == 0:
        session.exitstatus = 1


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not helpers.ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(helpers.ACCEPTANCE_LINES):
        terminalreporter.write_line(line)
