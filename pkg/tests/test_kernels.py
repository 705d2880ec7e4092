import os
import subprocess
import sys
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from stratset import _kernels_py as py
from stratset import kernels

from strategies import surjections

try:
    from stratset import _kernels as cy
except ImportError:  # extension not built
    cy = None

needs_cy = pytest.mark.skipif(cy is None, reason="compiled kernels not built")


def delannoy(a, b):
    return sum(comb(a, k) * comb(b, k) * 2**k for k in range(min(a, b) + 1))


def test_backend_reported():
    assert kernels.BACKEND in ("cython", "python")
    if cy is not None:
        assert kernels.BACKEND == "cython"


def test_fallback_selected_by_environment():
    env = dict(os.environ, STRATSET_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import stratset.kernels as k; print(k.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


@pytest.mark.parametrize("a", range(5))
@pytest.mark.parametrize("b", range(4))
def test_delannoy_paths_count(a, b):
    paths = py.delannoy_paths(a, b)
    assert len(paths) == delannoy(a, b) == len(set(paths))
    for al, be in paths:
        steps = {(al[i + 1] - al[i], be[i + 1] - be[i]) for i in range(len(al) - 1)}
        assert steps <= {(1, 0), (0, 1), (1, 1)}


def test_surjection_word_examples():
    assert py.word_from_surjection((0, 0, 1, 1, 1, 2)) == (3, 2, 0)
    assert py.surjection_from_word((3, 2, 0), 5) == (0, 0, 1, 1, 1, 2)


@given(surjections())
def test_word_round_trip(s):
    w = py.word_from_surjection(s)
    assert list(w) == sorted(w, reverse=True)
    assert py.surjection_from_word(w, len(s) - 1) == s


@given(st.lists(st.integers(0, 6), min_size=1, max_size=8))
def test_ez_factor_recomposes(vals):
    vals = tuple(sorted(vals))
    surj, image = py.ez_factor(vals)
    assert py.compose(image, surj) == vals
    assert list(image) == sorted(set(image))


@needs_cy
@given(st.lists(st.integers(0, 6), min_size=0, max_size=9), st.integers(0, 6))
def test_twins_agree_on_maps(vals, n):
    vals = tuple(sorted(vals))
    assert cy.is_monotone(vals, n) == py.is_monotone(vals, n)
    assert cy.repeats(vals) == py.repeats(vals)
    assert cy.ez_factor(vals) == py.ez_factor(vals)
    g = tuple(range(7))
    assert cy.compose(g, vals) == py.compose(g, vals)


@needs_cy
@given(surjections(), surjections())
def test_twins_agree_on_surjections(s, t):
    assert cy.word_from_surjection(s) == py.word_from_surjection(s)
    w = py.word_from_surjection(s)
    assert cy.surjection_from_word(w, len(s) - 1) == py.surjection_from_word(w, len(s) - 1)
    if len(s) == len(t):
        assert cy.collapse_pair(s, t) == py.collapse_pair(s, t)


@needs_cy
@pytest.mark.parametrize("a,b", [(0, 0), (1, 2), (3, 2), (4, 4)])
def test_twins_agree_on_paths(a, b):
    assert cy.delannoy_paths(a, b) == py.delannoy_paths(a, b)


def test_collapse_pair():
    sa, sb, w = py.collapse_pair((0, 1, 1, 1, 2), (0, 0, 1, 1, 1))
    assert w == (2,)
    assert sa == (0, 1, 1, 2) and sb == (0, 0, 1, 1)
