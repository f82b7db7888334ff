from hypothesis import HealthCheck, assume, settings, strategies as st

from cyclic_descents.shapes import all_skew_shapes, classify_shape

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def skew_shapes(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return draw(st.sampled_from(all_skew_shapes(n)))


@st.composite
def extendable_shapes(draw, min_n=2, max_n=6):
    s = draw(skew_shapes(min_n, max_n))
    assume(classify_shape(s).kind != "connected_ribbon")
    return s


@st.composite
def subsets(draw, n):
    return draw(st.integers(min_value=0, max_value=(1 << n) - 1))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
