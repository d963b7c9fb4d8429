"""Collects one PASS/FAIL line per acceptance criterion for the terminal summary."""

LINES: list[str] = []


def report(number: int, title: str, checks: dict[str, bool], detail: str = "") -> bool:
    ok = all(checks.values())
    failed = [k for k, v in checks.items() if not v]
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:>2}: {title}"
    if failed:
        line += " | failed: " + "; ".join(failed)
    if detail:
        line += f" | {detail}"
    LINES.append(line)
    print(line)
    return ok
