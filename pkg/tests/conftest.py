def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One line per acceptance criterion, printed whether it passed or not."""
    verdicts = {}
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid:
                continue
            name = nodeid.split("::")[-1]
            if outcome == "passed" and report.when != "call":
                continue
            if verdicts.get(name) != "FAIL":
                verdicts[name] = "PASS" if outcome == "passed" else "FAIL"
    if verdicts:
        terminalreporter.section("acceptance criteria")
        for name in sorted(verdicts):
            terminalreporter.write_line(f"{verdicts[name]}  {name}")
