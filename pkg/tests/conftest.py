"""Pytest plumbing: the acceptance-criteria summary block.

test_acceptance.py records one (pass/fail, detail) entry per criterion;
the terminal-summary hook prints them as one line each at the end of the
run, whether or not output capture is on.
"""

from __future__ import annotations

_ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def record_criterion(num: int, ok: bool, detail: str = "") -> None:
    _ACCEPTANCE[num] = (ok, detail)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE):
        ok, detail = _ACCEPTANCE[num]
        verdict = "PASS" if ok else "FAIL"
        line = f"criterion {num:2d}: {verdict}"
        if detail:
            line += f" -- {detail}"
        terminalreporter.write_line(line)
