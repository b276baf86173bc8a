import pytest
from hypothesis import strategies as st

from anfsolve import AnfPoly, Formula, Term, parse_anf

# w, x, y, z are x1..x4:  1 + w + x + z + wy + wz + xz + wxy + xyz + wyz
EXAMPLE_A = AnfPoly([1, [1], [2], [4], [1, 3], [1, 4], [2, 4], [1, 2, 3], [2, 3, 4], [1, 3, 4]])
EXAMPLE_A_IMPLICANTS = [(1, 2, -4), (1, -2, 3, -4), (-1, 2, 3, 4), (-1, -2, 3, -4), (-1, -2, -3, -4)]

EXAMPLE_B_TEXT = ["[[1],[2],[2,3]]", "[[2],[3],[3,4]]", "[[3],[4],[4,1]]", "[[4],[1],[1,2]]"]
EXAMPLE_B_SOLUTIONS = [(-1, 2, -3, 4), (1, -2, 3, -4), (1, 2, 3, 4)]


@pytest.fixture
def example_a():
    return EXAMPLE_A


@pytest.fixture
def example_b():
    return Formula([parse_anf(s, 4) for s in EXAMPLE_B_TEXT], 4)


def polys(max_vars=6, max_monomials=12):
    """Random ANF functions over x1..x{max_vars}."""
    masks = st.integers(min_value=0, max_value=(1 << max_vars) - 1)
    return st.frozensets(masks, max_size=max_monomials).map(
        lambda ms: AnfPoly.from_masks(ms, max_vars)
    )


def terms(max_vars=6):
    @st.composite
    def build(draw):
        care = draw(st.integers(0, (1 << max_vars) - 1))
        value = draw(st.integers(0, (1 << max_vars) - 1)) & care
        return Term(care, value)

    return build()


def assignments(variables):
    """All total assignments of the given variables as dicts."""
    variables = list(variables)
    for point in range(1 << len(variables)):
        yield {v: (point >> i) & 1 for i, v in enumerate(variables)}


_acceptance: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and (report.when == "call" or report.outcome != "passed"):
        name = report.nodeid.split("::")[-1]
        if report.outcome != "passed" or name not in _acceptance:
            _acceptance[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance.items():
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
