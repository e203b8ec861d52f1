import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from brace_forge import symmetric  # noqa: E402
from brace_forge.repro import s3_b1, s3_b2, s3_words  # noqa: E402

ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture(scope="session")
def S3():
    return symmetric(3)


@pytest.fixture(scope="session")
def words(S3):
    return s3_words(S3)


@pytest.fixture(scope="session")
def B1():
    return s3_b1()


@pytest.fixture(scope="session")
def B2():
    return s3_b2()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
