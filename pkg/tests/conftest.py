from __future__ import annotations

ACCEPTANCE_RESULTS: list[tuple[str, bool, float, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, secs, note in sorted(ACCEPTANCE_RESULTS, key=lambda r: int(r[0].split()[0])):
        line = f"{'PASS' if ok else 'FAIL'}  {name}  ({secs:.2f} s)"
        if note:
            line += f"  {note}"
        terminalreporter.write_line(line)
