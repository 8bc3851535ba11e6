import pathlib
import sys

import pytest

from auglab.diagram import read_pd_file

ROOT = pathlib.Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"
sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent))

# connected corpus diagrams; split_trefoils and malformed are excluded
CONNECTED = sorted(
    p.stem for p in CORPUS.glob("*.pd") if p.stem not in ("split_trefoils", "malformed"))


def load(name):
    return read_pd_file(CORPUS / f"{name}.pd")[0]


@pytest.fixture(scope="session")
def corpus():
    return {name: load(name) for name in CONNECTED}


@pytest.fixture
def trefoil():
    return load("trefoil")


@pytest.fixture
def figure_eight():
    return load("figure_eight")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
