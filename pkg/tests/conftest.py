import os
import sys

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from monoform.cli import parse_ideal  # noqa: E402
from monoform.core import MonomialIdeal  # noqa: E402

SEED = 20240611

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def ideal(text: str, nvars: int | None = None) -> MonomialIdeal:
    return parse_ideal(text, nvars)


@st.composite
def small_ideals(draw, max_vars=3, max_exp=4, max_gens=5, proper=True, nvars=None):
    n = nvars if nvars is not None else draw(st.integers(1, max_vars))
    vec = st.tuples(*[st.integers(0, max_exp)] * n)
    if proper:
        vec = vec.filter(any)
    gens = draw(st.lists(vec, min_size=1, max_size=max_gens))
    return MonomialIdeal.from_generators(n, gens)


@pytest.fixture
def m22():
    return ideal("x1^2, x1*x2, x2^2")


@pytest.fixture
def triangle():
    return ideal("x1*x2, x1*x3, x2*x3")


@pytest.fixture
def noemb():
    """(x,y)∩(x,z)∩(x,w)∩(y,z)∩(y,w)∩(z,w)∩(x,y,z,w)^4."""
    from monoform.core import intersect_all, power, unit_vector

    def prime(*idx):
        return MonomialIdeal.from_generators(4, [unit_vector(4, i) for i in idx])

    parts = [prime(0, 1), prime(0, 2), prime(0, 3), prime(1, 2), prime(1, 3), prime(2, 3)]
    parts.append(power(MonomialIdeal.maximal(4), 4))
    return intersect_all(parts)


# criterion number -> (title, passed); filled by test_acceptance
ACCEPTANCE: dict[int, tuple[str, bool]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        title, ok = ACCEPTANCE[num]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {num:>2}: {title}")
