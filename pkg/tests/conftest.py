import pytest

from fewnomials import Fewnomial, FewnomialSystem

CRITERIA = {
    1: "Haas pair certifies exactly 5 roots",
    2: "univariate example: 5 certified roots at the reference values",
    3: "polygon-class fixtures: counts, classes, COR_POLY, closed-form roots",
    4: "bound table: exact integer values",
    5: "degenerate octant: 25 exact roots of the (2,2,21) system",
    6: "10^4 random trinomial pairs: zero violations",
    7: "10^4 sign-rule and 10^4 Rolle soundness checks",
    8: "pyramidal product systems: 4 and 8 roots",
}

_outcomes: dict[int, list[str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        if hasattr(rep, "wasxfail"):
            verdict = "xfail"
        else:
            verdict = rep.outcome
        _outcomes.setdefault(m.args[0], []).append(verdict)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n, desc in CRITERIA.items():
        got = _outcomes.get(n)
        if not got:
            tr.write_line(f"criterion {n}: NOT RUN  {desc}")
            continue
        ok = all(v == "passed" for v in got)
        extra = ""
        if "xfail" in got:
            extra = f"  ({got.count('xfail')} known discrepancy, see notes)"
        tr.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {desc}{extra}")


# shared builders


def P(*pairs, n=2):
    return Fewnomial.from_pairs(n, pairs)


def S(*polys):
    return FewnomialSystem.of(*polys)


@pytest.fixture
def haas():
    return S(
        P((1, (108, 0)), (1.1, (0, 54)), (-1.1, (0, 1))),
        P((1, (0, 108)), (1.1, (54, 0)), (-1.1, (1, 0))),
    )
