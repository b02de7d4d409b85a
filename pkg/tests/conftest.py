import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from zmoufang import build_projective_line, build_suzuki  # noqa: E402


@pytest.fixture(scope="session")
def mf4():
    return build_projective_line(4)


@pytest.fixture(scope="session")
def mf8():
    return build_projective_line(8)


@pytest.fixture(scope="session")
def msuz8():
    return build_suzuki(8)


@pytest.fixture(scope="session")
def msuz32():
    return build_suzuki(32)


ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
