import pytest

# criterion number -> (passed, detail); filled by tests/test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def criterion():
    def record(n: int, ok: bool, detail: str = "") -> None:
        prev = ACCEPTANCE.get(n)
        # a criterion split over several tests passes only if every part does
        if prev is not None:
            ok = ok and prev[0]
            detail = f"{prev[1]}; {detail}" if prev[1] else detail
        ACCEPTANCE[n] = (bool(ok), detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"CRITERION {n}: {'PASS' if ok else 'FAIL'}  {detail}")
