"""Isomorphism search for finite (marked) simplicial sets.

Cells are colored by iterated refinement over faces and cofaces, then a
backtracking search assigns cells in an order where every cell follows
its faces, so face data pins down most choices.
"""
from __future__ import annotations

from .sset import FinSSet, Simplex, _search_order


def _refine(objs):
    """Joint color refinement over several (FinSSet, marked) pairs."""
    colors = []
    for X, marked in objs:
        colors.append(
            [
                (X.dims[c], c in marked, tuple(f.degeneracy_word for f in X.faces[c]))
                for c in X.cells()
            ]
        )
    cofaces = []
    for X, _ in objs:
        co = [[] for _ in X.cells()]
        for c in X.cells():
            for i, f in enumerate(X.faces[c]):
                co[f.base].append((c, i, f.degeneracy_word))
        cofaces.append(co)
    palette: dict = {}
    colors = [[palette.setdefault(sig, len(palette)) for sig in cs] for cs in colors]
    n_classes = len(palette)
    for _ in range(len(max((X.cells() for X, _ in objs), key=len, default=[])) + 1):
        palette = {}
        new = []
        for (X, _), cs, co in zip(objs, colors, cofaces):
            out = []
            for c in X.cells():
                sig = (
                    cs[c],
                    tuple((cs[f.base], f.degeneracy_word) for f in X.faces[c]),
                    tuple(sorted((cs[d], i, w) for d, i, w in co[c])),
                )
                out.append(palette.setdefault(sig, len(palette)))
            new.append(out)
        colors = new
        if len(palette) == n_classes:
            break
        n_classes = len(palette)
    return colors


def find_isomorphism(X: FinSSet, Y: FinSSet, marked_x=frozenset(), marked_y=frozenset()):
    """Return a cell bijection ``X -> Y`` respecting faces and marks, or None."""
    if X.counts() != Y.counts():
        return None
    marked_x, marked_y = frozenset(marked_x), frozenset(marked_y)
    if sorted(X.dims[c] for c in marked_x) != sorted(Y.dims[c] for c in marked_y):
        return None
    cx, cy = _refine([(X, marked_x), (Y, marked_y)])
    if sorted(cx) != sorted(cy):
        return None
    by_color: dict = {}
    for d in Y.cells():
        by_color.setdefault(cy[d], []).append(d)
    by_faces: dict = {}
    for d in Y.cells():
        if Y.dims[d] > 0:
            by_faces.setdefault(Y.faces[d], []).append(d)
    order = _search_order(X)
    sigma: list = [None] * len(X)
    used = set()

    def candidates(c):
        if X.dims[c] == 0:
            return by_color.get(cx[c], [])
        want = tuple(Simplex(sigma[f.base], f.degeneracy_word, f.dim) for f in X.faces[c])
        return [d for d in by_faces.get(want, []) if cy[d] == cx[c]]

    def walk(pos):
        if pos == len(order):
            return True
        c = order[pos]
        for d in candidates(c):
            if d in used:
                continue
            sigma[c] = d
            used.add(d)
            if walk(pos + 1):
                return True
            used.discard(d)
        sigma[c] = None
        return False

    return list(sigma) if walk(0) else None


def is_isomorphic(X: FinSSet, Y: FinSSet, marked_x=frozenset(), marked_y=frozenset()) -> bool:
    return find_isomorphism(X, Y, marked_x, marked_y) is not None


def check_isomorphism(X: FinSSet, Y: FinSSet, sigma, marked_x=frozenset(), marked_y=frozenset()) -> bool:
    """Verify that a proposed cell bijection is an isomorphism of marked objects."""
    if len(sigma) != len(X) or len(X) != len(Y) or sorted(sigma) != list(range(len(Y))):
        return False
    for c in X.cells():
        d = sigma[c]
        if X.dims[c] != Y.dims[d] or ((c in marked_x) != (d in marked_y)):
            return False
        want = tuple(Simplex(sigma[f.base], f.degeneracy_word, f.dim) for f in X.faces[c])
        if want != Y.faces[d]:
            return False
    return True
