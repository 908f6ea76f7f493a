"""Collects acceptance-criterion outcomes and prints one line per criterion."""

import pytest

_OUTCOMES = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    report = (yield).get_result()
    mark = item.get_closest_marker('criterion')
    if mark is None or report.when == 'teardown':
        return
    if report.when == 'call' or report.failed:
        number, text = mark.args
        ok = _OUTCOMES.get(number, (True, text))[0] and report.passed
        _OUTCOMES[number] = (ok, text)


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section('acceptance criteria')
    for number in sorted(_OUTCOMES):
        ok, text = _OUTCOMES[number]
        terminalreporter.write_line(f'{"PASS" if ok else "FAIL"} criterion {number}: {text}')
