import pytest

from gvdkit.gvd import clear_memo

ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def record():
    """Store one acceptance line: record("1", ok, detail)."""
    def _record(key: str, ok: bool, detail: str):
        ACCEPTANCE[key] = (ok, detail)
    return _record


@pytest.fixture
def fresh_memo():
    clear_memo()
    yield
    clear_memo()


def _sort_key(key: str):
    head, _, tail = key.partition(" ")
    return (int(head.split("-")[0]), key)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=_sort_key):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'} ({detail})")
