import pytest
from hypothesis import settings

from unfoldkit import chevalley, rootsys

settings.register_profile("unfoldkit", max_examples=40, deadline=None)
settings.load_profile("unfoldkit")


@pytest.fixture(scope="session")
def f4():
    return rootsys.build_root_system("F4")


@pytest.fixture(scope="session")
def e6():
    return rootsys.build_root_system("E6")


@pytest.fixture(scope="session")
def table(f4):
    return chevalley.structure_constants(f4)


def u_radical(system, i):
    """Positive roots of U(P_i)."""
    return [r for r in system.positive_roots if r[i - 1] > 0]


# criterion -> (ok, detail), filled by test_acceptance and echoed at the end
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
