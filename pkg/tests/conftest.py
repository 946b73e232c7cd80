import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from smallnets.geometry import PointSet

settings.register_profile(
    "repo",
    deadline=None,
    max_examples=60,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("repo")


def random_points(rng: random.Random, n: int, span: int = 10**6, distinct: bool = True) -> PointSet:
    if distinct:
        xs = rng.sample(range(span), n)
        ys = rng.sample(range(span), n)
    else:
        xs = [rng.randrange(span) for _ in range(n)]
        ys = [rng.randrange(span) for _ in range(n)]
    return PointSet.from_coords(list(zip(xs, ys)))


@pytest.fixture
def rng():
    return random.Random(20240611)


coord = st.integers(min_value=-30, max_value=30)
point2 = st.tuples(coord, coord)


def distinct_sets(min_size=1, max_size=8, span=60):
    """Planar sets with all x and all y values distinct."""

    @st.composite
    def build(draw):
        n = draw(st.integers(min_value=min_size, max_value=max_size))
        xs = draw(st.lists(st.integers(0, span), min_size=n, max_size=n, unique=True))
        ys = draw(st.lists(st.integers(0, span), min_size=n, max_size=n, unique=True))
        return PointSet.from_coords([(Fraction(x), Fraction(y)) for x, y in zip(xs, ys)])

    return build()


def general_sets(min_size=1, max_size=8, span=40):
    """Planar sets of distinct points (coordinates may repeat)."""

    @st.composite
    def build(draw):
        pts = draw(st.lists(st.tuples(st.integers(0, span), st.integers(0, span)), min_size=min_size, max_size=max_size, unique=True))
        return PointSet.from_coords(pts)

    return build()


# acceptance criterion -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
