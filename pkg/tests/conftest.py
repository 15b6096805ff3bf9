"""Shared pytest configuration.

Prints a one-line PASS/FAIL verdict per acceptance check in the terminal
summary so a full run ends with a readable scorecard.
"""
import os
import sys

# make the src/ layout importable when the package is not installed
sys.path.insert(0, os.path.join(os.path.dirname(__file__), os.pardir, "src"))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    rows = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            if "test_acceptance.py" not in getattr(rep, "nodeid", ""):
                continue
            if getattr(rep, "when", "call") != "call" and status != "error":
                continue
            name = rep.nodeid.split("::")[-1]
            rows[name] = "PASS" if status == "passed" else "FAIL"
    if not rows:
        return
    terminalreporter.section("acceptance checks")
    for name in sorted(rows):
        label = name.removeprefix("test_").replace("_", " ")
        terminalreporter.write_line(f"{rows[name]:4s}  {label}")
