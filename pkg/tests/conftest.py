import hypothesis
import hypothesis.strategies as st

from k3lattice import DivClass, PolarizedLattice

hypothesis.settings.register_profile("default", deadline=None)
hypothesis.settings.load_profile("default")


@st.composite
def lattices(draw, g_max=40):
    g = draw(st.integers(3, g_max))
    d = draw(st.integers(3, (g + 3) // 2))
    return PolarizedLattice(g, d)


@st.composite
def classes(draw, radius=1000):
    n = draw(st.integers(-radius, radius))
    m = draw(st.integers(-radius, radius))
    return DivClass(n, m)


def all_pairs(g_max):
    for g in range(3, g_max + 1):
        for d in range(3, (g + 3) // 2 + 1):
            yield g, d
