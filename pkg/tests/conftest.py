import pytest

from artinian_codes import IntegerChainDesc, construct_ring, monomial_algebra, span_closure


def ring(desc):
    return construct_ring(desc)


Z4_DESC = IntegerChainDesc(2, 2)
DUAL_DESC = monomial_algebra(2, ["x"], ["x^2"])
BOX_DESC = monomial_algebra(2, ["x", "y"], ["x^2", "y^2"])
NONFROB_DESC = monomial_algebra(2, ["x", "y"], ["x^2", "x*y", "y^2"])
# the t = 3 ring with socle x^2, y1, y2, y3
TYPE4_DESC = monomial_algebra(
    2,
    ["x", "y1", "y2", "y3"],
    ["x^3", "x*y1", "x*y2", "x*y3", "y1^2", "y1*y2", "y1*y3", "y2^2", "y2*y3", "y3^2"],
)


def el(R, **coeffs):
    """Algebra element from monomial names, e.g. el(R, one=1, x=1)."""
    out = [0] * R.length
    names = {n: i for i, n in enumerate(R.names)}
    for k, c in coeffs.items():
        out[names["1" if k == "one" else k.replace("_", "*")]] = c
    return tuple(out)


@pytest.fixture
def Z4():
    return ring(Z4_DESC)


@pytest.fixture
def dual_numbers():
    return ring(DUAL_DESC)


@pytest.fixture
def box():
    return ring(BOX_DESC)


@pytest.fixture
def nonfrob():
    return ring(NONFROB_DESC)


@pytest.fixture
def section4_code(nonfrob):
    x = el(nonfrob, x=1)
    z = nonfrob.zero
    return span_closure(nonfrob, 3, [[x, x, z], [z, x, x]])


def F(q):
    return construct_ring(monomial_algebra(q))


def ex57(q):
    K = F(q)
    o, z = K.one, K.zero
    return span_closure(K, 3, [[o, o, z], [o, z, o]])


# ---------------------------------------------------- acceptance reporting

_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number n")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call" and not rep.failed:
        return
    n = mark.args[0]
    status = "PASS" if rep.passed else "FAIL"
    if _CRITERIA.get(n, ("", "PASS"))[1] == "PASS":
        _CRITERIA[n] = (item.function.__doc__ or item.name).strip().splitlines()[0], status


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        title, status = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n:>2}: {status}  {title}")
