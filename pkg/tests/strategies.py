"""Hypothesis strategies shared by the property tests."""
from hypothesis import strategies as st

from stratset.delta import MonotoneMap


@st.composite
def monotone_maps(draw, max_dim=6, domain=None, codomain=None):
    n = codomain if codomain is not None else draw(st.integers(0, max_dim))
    r = domain if domain is not None else draw(st.integers(0, max_dim))
    vals = sorted(draw(st.lists(st.integers(0, n), min_size=r + 1, max_size=r + 1)))
    return MonotoneMap(r, n, tuple(vals))


@st.composite
def surjections(draw, max_dim=7):
    r = draw(st.integers(0, max_dim))
    steps = draw(st.lists(st.booleans(), min_size=r, max_size=r))
    vals = [0]
    for up in steps:
        vals.append(vals[-1] + (1 if up else 0))
    return tuple(vals)


@st.composite
def composable_pair(draw, max_dim=5):
    f = draw(monotone_maps(max_dim))
    g = draw(monotone_maps(max_dim, domain=f.codomain_dim))
    return g, f
