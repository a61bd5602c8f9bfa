from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import settings

from cotstruct.algebra import PathAlgebra, Quiver
from cotstruct.complexes import Complex

settings.register_profile("default", max_examples=40, deadline=None, derandomize=True)
settings.load_profile("default")

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"


def trivial(field=5):
    return PathAlgebra(Quiver(["1"]), field)


def a2(field=5):
    return PathAlgebra(Quiver(["1", "2"], [("a", "1", "2")]), field)


def a3(field=5):
    return PathAlgebra(Quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")]), field)


def kronecker(field=5):
    return PathAlgebra(Quiver(["1", "2"], [("x", "1", "2"), ("y", "1", "2")]), field)


def two_term(alg, src, tgt, entry, lo=0):
    """The complex P_src --entry--> P_tgt in degrees lo, lo+1."""
    return Complex(alg, {lo: [src], lo + 1: [tgt]}, {lo: [[entry]]})


@pytest.fixture
def k():
    return trivial()


@pytest.fixture
def A2():
    return a2()


@pytest.fixture
def A3():
    return a3()


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
