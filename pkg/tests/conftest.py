import sys


def _order(key):
    text = str(key)
    return int(text.rstrip("abc")), text


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(results, key=_order):
        terminalreporter.write_line(results[key])
