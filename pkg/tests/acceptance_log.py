"""PASS/FAIL lines recorded by the acceptance suite, echoed in the pytest terminal summary."""

LINES: list[str] = []


def record(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title}" + (f" ({detail})" if detail else "")
    LINES.append(line)
    print(line)
