import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from elocc.checks import example_states
from elocc.spectra import from_coefficients


def random_spectrum(rng: random.Random, max_dim: int = 5, full_rank: bool = False, hi: int = 12):
    """Random exact spectrum with small integer weights, normalized."""
    n = rng.randint(1, max_dim)
    lo = 1 if full_rank else 0
    while True:
        raw = [rng.randint(lo, hi) for _ in range(n)]
        if sum(raw):
            return from_coefficients([Fraction(x) for x in raw], "exact")


@st.composite
def spectra(draw, max_dim=4, min_dim=1, full_rank=False, hi=9):
    lo = 1 if full_rank else 0
    raw = draw(
        st.lists(st.integers(lo, hi), min_size=min_dim, max_size=max_dim).filter(lambda xs: sum(xs) > 0)
    )
    return from_coefficients([Fraction(x) for x in raw], "exact")


@pytest.fixture(scope="session")
def examples():
    s1, t1, s2, t2, phi = example_states()
    return {"s1": s1, "t1": t1, "s2": s2, "t2": t2, "phi": phi}


_acceptance = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        _acceptance[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance):
        verdict = "PASS" if _acceptance[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
