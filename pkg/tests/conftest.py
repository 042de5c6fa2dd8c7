import pytest

from sumess import CorpusSpec, ModuleAnalysis, enumerate_corpus, integer_module

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def corpus_analyses():
    """Analyses for every default corpus item, built once per session."""
    out = {}
    for pres in enumerate_corpus(CorpusSpec()):
        out[pres.name] = ModuleAnalysis(pres)
    return out


@pytest.fixture(scope="session")
def z8z2():
    return ModuleAnalysis(integer_module("z8z2", 8, 2))


@pytest.fixture(scope="session")
def z4z3():
    return ModuleAnalysis(integer_module("z4z3", 4, 3))


@pytest.fixture(scope="session")
def z4z9():
    return ModuleAnalysis(integer_module("z4z9", 4, 9))


@pytest.fixture(scope="session")
def z8z3():
    return ModuleAnalysis(integer_module("z8z3", 8, 3))


@pytest.fixture(scope="session")
def z2z3z5():
    return ModuleAnalysis(integer_module("z2z3z5", 2, 3, 5))


@pytest.fixture(scope="session")
def z12():
    return ModuleAnalysis(integer_module("z12", 12))
