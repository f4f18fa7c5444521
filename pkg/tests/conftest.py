import random

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from germlink.poly import Poly, Ring
from germlink.scalar import Scalar

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

R_ST = Ring(("s", "t"))


@st.composite
def scalars(draw, bound=5, gaussian=True):
    re = draw(st.fractions(min_value=-bound, max_value=bound, max_denominator=6))
    im = draw(st.fractions(min_value=-bound, max_value=bound, max_denominator=6)) if gaussian else 0
    return Scalar(re, im)


@st.composite
def polys(draw, ring=R_ST, max_terms=4, max_deg=3):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        e = tuple(draw(st.integers(0, max_deg)) for _ in ring.variables)
        terms[e] = draw(scalars())
    return Poly(ring, terms)


def random_gaussian(rng: random.Random, bound=3) -> Scalar:
    return Scalar(rng.randint(-bound, bound), rng.randint(-bound, bound))


def random_invertible(rng: random.Random, n: int):
    from germlink.algebra import scalar_rank

    while True:
        m = [[random_gaussian(rng) for _ in range(n)] for _ in range(n)]
        if scalar_rank(m) == n:
            return m


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
