import pytest

from kyfan.generators import builtin_base, hopf_s3, klein_bundle, trivial_bundle


@pytest.fixture(scope="session")
def torus():
    return trivial_bundle(builtin_base("circle3"), 1)


@pytest.fixture(scope="session")
def hopf():
    return hopf_s3()


@pytest.fixture(scope="session")
def klein():
    return klein_bundle()


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
