import re
import sys


def _acceptance_notes():
    for name in ("tests.test_acceptance", "test_acceptance"):
        mod = sys.modules.get(name)
        if mod is not None:
            return getattr(mod, "NOTES", {})
    return {}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    # one pass/fail line per acceptance criterion, printed outside capture
    seen = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, ()):
            nodeid = getattr(rep, "nodeid", "")
            m = re.search(r"test_criterion_(\d+)", nodeid)
            if m and getattr(rep, "when", "call") == "call":
                k = int(m.group(1))
                seen[k] = "PASS" if status == "passed" else "FAIL"
    if not seen:
        return
    notes = _acceptance_notes()
    terminalreporter.write_sep("-", "acceptance criteria")
    for k in sorted(seen):
        extra = notes.get(k)
        line = "criterion %d: %s" % (k, seen[k])
        if extra:
            line += " (%s)" % extra
        terminalreporter.write_line(line)
