"""Shared pytest wiring: a per-criterion verdict block for the acceptance run.

The acceptance module names its tests ``test_criterion_NN_<slug>``; this hook
collects their outcomes and prints one PASS/FAIL line per criterion in the
terminal summary, uncaptured, so the gate is readable at a glance.
"""

_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if hasattr(report, "wasxfail"):
        verdict = (
            "FAIL (expected; deliberately kept red — see the xfail reason)"
            if report.outcome == "skipped"
            else "UNEXPECTED PASS"
        )
    else:
        verdict = "PASS" if report.outcome == "passed" else "FAIL"
    _ACCEPTANCE[name] = verdict


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"{name}: {_ACCEPTANCE[name]}")
