import pytest

from pmdscodes import CodeParams, field_new, ring_new


@pytest.fixture(scope="session")
def gf16():
    return field_new(4, 0x13)


@pytest.fixture(scope="session")
def gf32():
    return field_new(5)


@pytest.fixture(scope="session")
def m17():
    return ring_new(17)


@pytest.fixture(scope="session")
def sd_3_5_1(gf16):
    return CodeParams(3, 5, 1, "sd", gf16)


@pytest.fixture(scope="session")
def sd_3_5_2(gf16):
    return CodeParams(3, 5, 2, "sd", gf16)


@pytest.fixture(scope="session")
def sd_ring_3_5_1(m17):
    return CodeParams(3, 5, 1, "sd", m17)


@pytest.fixture(scope="session")
def pmds_3_5_1(gf32):
    return CodeParams(3, 5, 1, "pmds", gf32)



ACCEPTANCE = []


@pytest.fixture
def criterion(request):
    """Call with (number, description) to list the test under the acceptance summary."""
    entry = {}
    yield lambda number, description: entry.update(number=number, description=description)
    if entry:
        entry["passed"] = getattr(request.node, "call_passed", False)
        ACCEPTANCE.append(entry)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.call_passed = rep.passed


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for entry in sorted(ACCEPTANCE, key=lambda e: e["number"]):
        status = "PASS" if entry["passed"] else "FAIL"
        terminalreporter.write_line("%s criterion %d: %s" % (status, entry["number"], entry["description"]))
