from pathlib import Path

import pytest

from stratset.diagram import DiagramError, ascii_diagram, lattice_path, render, resolve_simplex, steps, svg_diagram
from stratset.dsl import build
from stratset.sset import product, standard

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="module")
def P32():
    return build("prod(delta 3, delta 2)").underlying


def test_pi_pair_is_right_then_up(P32):
    c = resolve_simplex(P32, "0,1,2,3,3,3/0,0,0,0,1,2")
    pts, a, b = lattice_path(P32, c)
    assert (a, b) == (3, 2)
    assert steps(pts) == ["right"] * 3 + ["up"] * 2


def test_ascii_golden(P32):
    c = resolve_simplex(P32, "[(0,0),(1,0),(2,0),(3,0),(3,1),(3,2)]")
    assert ascii_diagram(P32, c) == (GOLDEN / "diagram_pi32.txt").read_text()


def test_svg_golden(P32):
    c = resolve_simplex(P32, "0,1,2,3,3,3/0,0,0,0,1,2")
    text = svg_diagram(P32, c)
    assert text == (GOLDEN / "diagram_pi32.svg").read_text()
    assert '<polyline points="30,110 70,110 110,110 150,110 150,70 150,30"' in text


def test_diagonal_steps(P32):
    c = resolve_simplex(P32, "0,1,2,3/0,1,1,2")
    assert "╱" in render(P32, c)
    assert steps(lattice_path(P32, c)[0]) == ["diagonal", "right", "diagonal"]


def test_every_top_cell_is_a_monotone_path():
    P = product(standard(2), standard(2))
    for c in P.cells(4):
        pts, a, b = lattice_path(P, c)
        assert pts[0] == (0, 0) and pts[-1] == (2, 2)
        assert set(steps(pts)) <= {"right", "up"}


def test_errors(P32):
    with pytest.raises(DiagramError, match="no cell"):
        resolve_simplex(P32, "9999")
    with pytest.raises(DiagramError, match="different lengths"):
        resolve_simplex(P32, "0,1/0")
    with pytest.raises(DiagramError, match="product object"):
        lattice_path(standard(2), 0)
    with pytest.raises(DiagramError, match="unknown format"):
        render(P32, 0, "png")
