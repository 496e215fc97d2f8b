import sys
from pathlib import Path

import pytest

from punjabi_prep import Resources

sys.path.insert(0, str(Path(__file__).parent))

ROOT = Path(__file__).resolve().parents[1]
GOLDEN = ROOT / "fixtures" / "golden"


@pytest.fixture(scope="session")
def golden_dir():
    return GOLDEN


@pytest.fixture(scope="session")
def golden_resources():
    return Resources.load(GOLDEN / "stoplist.txt", GOLDEN / "dictionary.txt", GOLDEN / "gazetteer.txt")


@pytest.fixture(scope="session")
def golden_resource_args():
    return [
        "--stoplist", str(GOLDEN / "stoplist.txt"),
        "--dict", str(GOLDEN / "dictionary.txt"),
        "--gazetteer", str(GOLDEN / "gazetteer.txt"),
    ]


# --- one PASS/FAIL line per acceptance criterion ------------------------------

_criteria = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call" or item.module.__name__ != "test_acceptance":
        return
    doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
    _criteria.append(("PASS" if report.passed else "FAIL", doc))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for status, doc in _criteria:
        terminalreporter.write_line(f"{status}  {doc}")
