from collections import defaultdict

import pytest

CRITERIA = {
    1: "bound table reproduction",
    2: "containment sweeps",
    3: "fusion engine oracle equivalence",
    4: "quantum inequality lemmas",
    5: "twist facts",
    6: "known exceptional survivors",
}

_outcomes = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion this test belongs to")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            item.user_properties.append(("criterion", mark.args[0]))


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _outcomes[crit].append((report.nodeid, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n, title in CRITERIA.items():
        results = _outcomes.get(n)
        if not results:
            tr.write_line(f"criterion {n} ({title}): NOT RUN")
            continue
        failed = [nid for nid, o in results if o != "passed"]
        status = "PASS" if not failed else "FAIL"
        tr.write_line(f"criterion {n} ({title}): {status} "
                      f"({len(results) - len(failed)}/{len(results)} checks)")
        for nid in failed:
            tr.write_line(f"    failed: {nid.split('::', 1)[1]}")


@pytest.fixture(scope="session")
def reports():
    from alcove.bounds import case_reports
    return {r.case_id: r for r in case_reports()}
