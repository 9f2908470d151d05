import pytest

ACCEPTANCE: list[str] = []


@pytest.fixture(autouse=True)
def _isolated_cache(monkeypatch, tmp_path):
    # never touch a user cache from the test suite
    monkeypatch.delenv("MZETA_CACHE_DIR", raising=False)
    yield


@pytest.fixture
def acceptance_line():
    """Record one PASS/FAIL line; the lines are repeated in the terminal summary."""

    def record(number: int, title: str, ok: bool, detail: str = "") -> None:
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}" + (f"  [{detail}]" if detail else "")
        ACCEPTANCE.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE):
            terminalreporter.write_line(line)
