import pytest
from hypothesis import settings

from gradekit import fixtures

settings.register_profile("gradekit", derandomize=True, deadline=None, max_examples=60)
settings.load_profile("gradekit")


@pytest.fixture(scope="session")
def S3():
    return fixtures.s3()


@pytest.fixture(scope="session")
def QS3(S3):
    from gradekit import group_algebra
    return group_algebra(S3)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
