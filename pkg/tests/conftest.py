"""Test-suite wiring: per-criterion result lines for the acceptance suite."""

_ACCEPTANCE_RESULTS = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    name = report.nodeid.rsplit("::", 1)[-1]
    if "test_criterion_" in name:
        key = name.split("test_criterion_", 1)[1]
        _ACCEPTANCE_RESULTS[key] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for key in sorted(_ACCEPTANCE_RESULTS, key=_criterion_sort_key):
        outcome = _ACCEPTANCE_RESULTS[key]
        label = key.replace("_", " ")
        terminalreporter.write_line(
            f"criterion {label}: {'PASS' if outcome == 'passed' else outcome.upper()}"
        )


def _criterion_sort_key(key):
    head = key.split("_", 1)[0]
    digits = "".join(ch for ch in head if ch.isdigit())
    return (int(digits) if digits else 99, key)
