import pytest

from posetres import load_fixture
from acceptance_log import RESULTS


@pytest.fixture(params=["fig1", "fig2", "fig3", "fig4", "fig5", "fig6"])
def any_fixture(request):
    return load_fixture(request.param)


@pytest.fixture(scope="session")
def fig():
    cache = {}

    def get(fid):
        if fid not in cache:
            entry = load_fixture(fid)
            p = entry.poset
            cache[fid] = (entry, p, entry.unary(p))
        return cache[fid]

    return get


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS):
        ok, detail = RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}  {detail}")
