"""Finite simplicial sets presented by nondegenerate cells and face data.

Every simplex is kept in Eilenberg-Zilber normal form: a nondegenerate
base cell together with a strictly decreasing degeneracy word ``J``.
The word lists the positions ``i`` where the collapsing surjection
repeats (``s(i) == s(i + 1)``), so ``dim = dim(base) + len(J)``.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

from . import kernels
from .kernels import collapse_pair, compose as _compose, ez_factor, surjection_from_word, word_from_surjection


class SSetError(ValueError):
    pass


class Simplex(NamedTuple):
    base: int
    degeneracy_word: tuple
    dim: int

    @property
    def is_degenerate(self) -> bool:
        return bool(self.degeneracy_word)

    def to_json(self) -> list:
        return [self.base, list(self.degeneracy_word)]


def _label_path(parts) -> str:
    return "[" + ",".join(parts) + "]"


class FinSSet:
    """A finite simplicial set.

    Cells are numbered ``0..n-1`` in order of increasing dimension.
    ``faces[c][i]`` is the normal form of ``d_i`` applied to cell ``c``.
    """

    def __init__(self, dims, faces, labels=None, keys=None, name: str | None = None):
        self.dims = tuple(dims)
        self.faces = tuple(tuple(Simplex(*f) if not isinstance(f, Simplex) else f for f in fs) for fs in faces)
        if len(self.faces) != len(self.dims):
            raise SSetError("dims and faces disagree in length")
        if any(self.dims[i] > self.dims[i + 1] for i in range(len(self.dims) - 1)):
            raise SSetError("cells must be ordered by dimension")
        self.top_dim = max(self.dims, default=-1)
        self._by_dim = [[] for _ in range(self.top_dim + 1)]
        for c, d in enumerate(self.dims):
            self._by_dim[d].append(c)
        self.keys = tuple(keys) if keys is not None else None
        self.key_index = {k: i for i, k in enumerate(self.keys)} if self.keys is not None else None
        self.name = name
        self._restrict_cache: dict = {}
        self._simplices_cache: dict = {}
        self._hash = None
        self.ambient: FinSSet | None = None
        self.embedding: tuple | None = None
        self.labels = tuple(labels) if labels is not None else self._auto_labels()

    # -- basic structure --------------------------------------------------

    def __len__(self) -> int:
        return len(self.dims)

    def __repr__(self) -> str:
        tag = f" {self.name}" if self.name else ""
        return f"<FinSSet{tag} counts={self.counts()}>"

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinSSet):
            return NotImplemented
        return self.dims == other.dims and self.faces == other.faces

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.dims, self.faces))
        return self._hash

    def counts(self) -> tuple:
        return tuple(len(cs) for cs in self._by_dim)

    def cells(self, r: int | None = None) -> list:
        if r is None:
            return list(range(len(self.dims)))
        if r < 0 or r > self.top_dim:
            return []
        return list(self._by_dim[r])

    def simplex(self, c: int) -> Simplex:
        return Simplex(c, (), self.dims[c])

    def vertices(self, c: int) -> tuple:
        d = self.dims[c]
        if d == 0:
            return (c,)
        return tuple(self.restrict(c, (i,)).base for i in range(d + 1))

    def _auto_labels(self, vertex_labels=None) -> tuple:
        out = []
        for c, d in enumerate(self.dims):
            if d == 0:
                out.append(vertex_labels[c] if vertex_labels else str(c))
            else:
                vs = self.vertices(c)
                out.append(_label_path(out[v] for v in vs))
        return _dedupe(out)

    def relabel(self, vertex_labels: dict) -> "FinSSet":
        """Set vertex names and regenerate the path labels of higher cells."""
        self.labels = self._auto_labels(vertex_labels)
        return self

    def find(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise SSetError(f"no cell labelled {label!r}") from None

    # -- simplicial operators ----------------------------------------------

    def restrict(self, c: int, inj: tuple) -> Simplex:
        """Normal form of the face of cell ``c`` spanned by the positions ``inj``."""
        d = self.dims[c]
        if len(inj) == d + 1:
            return Simplex(c, (), d)
        key = (c, inj)
        hit = self._restrict_cache.get(key)
        if hit is None:
            j = 0
            for v in inj:
                if v != j:
                    break
                j += 1
            base, word, _ = self.faces[c][j]
            sub = tuple(v - 1 if v > j else v for v in inj)
            hit = self.act(Simplex(base, word, d - 1), sub)
            self._restrict_cache[key] = hit
        return hit

    def act(self, s: Simplex, f: tuple) -> Simplex:
        """Normal form of ``s o f`` for a monotone ``f: [k] -> [dim s]`` given by values."""
        if not f:
            raise SSetError("cannot act by a map out of the empty simplex")
        if s.degeneracy_word:
            f = _compose(surjection_from_word(s.degeneracy_word, s.dim), f)
        surj, image = ez_factor(f)
        b = self.restrict(s.base, image)
        if b.degeneracy_word:
            surj = _compose(surjection_from_word(b.degeneracy_word, len(image) - 1), surj)
        return Simplex(b.base, word_from_surjection(surj), len(f) - 1)

    def face(self, s: Simplex, i: int) -> Simplex:
        if s.dim < 1 or not 0 <= i <= s.dim:
            raise SSetError(f"face d_{i} undefined in dimension {s.dim}")
        if not s.degeneracy_word:
            return self.faces[s.base][i]
        return self.act(s, tuple(j for j in range(s.dim + 1) if j != i))

    def degeneracy(self, s: Simplex, i: int) -> Simplex:
        if not 0 <= i <= s.dim:
            raise SSetError(f"degeneracy s_{i} undefined in dimension {s.dim}")
        vals = list(range(s.dim + 1))
        vals.insert(i, i)
        return self.act(s, tuple(vals))

    def simplices(self, r: int) -> list:
        """All ``r``-simplices, degenerate ones included, in normal form."""
        hit = self._simplices_cache.get(r)
        if hit is None:
            hit = []
            for c, d in enumerate(self.dims):
                if d > r:
                    break
                for word in itertools.combinations(range(r - 1, -1, -1), r - d):
                    hit.append(Simplex(c, word, r))
            self._simplices_cache[r] = hit
        return hit

    def validate(self) -> None:
        """Check references, normal forms and ``d_i d_j = d_{j-1} d_i`` for ``i < j``."""
        n = len(self.dims)
        for c, d in enumerate(self.dims):
            fs = self.faces[c]
            if len(fs) != (d + 1 if d > 0 else 0):
                raise SSetError(f"cell {c} of dim {d} has {len(fs)} faces")
            for f in fs:
                if not 0 <= f.base < n:
                    raise SSetError(f"cell {c} references missing cell {f.base}")
                w = f.degeneracy_word
                if any(w[k] <= w[k + 1] for k in range(len(w) - 1)):
                    raise SSetError(f"cell {c}: word {w} is not strictly decreasing")
                if any(not 0 <= x < f.dim for x in w):
                    raise SSetError(f"cell {c}: word {w} out of range")
                if f.dim != d - 1 or self.dims[f.base] + len(w) != f.dim:
                    raise SSetError(f"cell {c}: face of wrong dimension")
        for c, d in enumerate(self.dims):
            if d < 2:
                continue
            s = self.simplex(c)
            for j in range(d + 1):
                for i in range(j):
                    lhs = self.face(self.face(s, j), i)
                    rhs = self.face(self.face(s, i), j - 1)
                    if lhs != rhs:
                        raise SSetError(f"cell {c}: d_{i} d_{j} != d_{j - 1} d_{i}")

    # -- serialization --------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "dims": list(self.counts()),
            "cells": {str(r): self.cells(r) for r in range(self.top_dim + 1)},
            "faces": {str(c): [f.to_json() for f in self.faces[c]] for c in range(len(self.dims)) if self.dims[c] > 0},
            "labels": {str(c): self.labels[c] for c in range(len(self.dims))},
        }

    @classmethod
    def from_json(cls, data: dict) -> "FinSSet":
        dims = []
        for r, ids in sorted(data["cells"].items(), key=lambda kv: int(kv[0])):
            for c in ids:
                if c != len(dims):
                    raise SSetError("cell ids must be consecutive and ordered by dimension")
                dims.append(int(r))
        if [dims.count(r) for r in range(len(data["dims"]))] != list(data["dims"]):
            raise SSetError("dims does not match cells")
        faces = []
        for c, d in enumerate(dims):
            raw = data["faces"].get(str(c), [])
            faces.append(tuple(Simplex(int(b), tuple(w), d - 1) for b, w in raw))
        labels = [data["labels"][str(c)] for c in range(len(dims))] if "labels" in data else None
        out = cls(dims, faces, labels)
        out.validate()
        return out


def _dedupe(labels: list) -> tuple:
    seen: dict = {}
    out = []
    for lab in labels:
        k = seen.get(lab, 0)
        seen[lab] = k + 1
        out.append(lab if k == 0 else f"{lab}#{k}")
    return tuple(out)


def _assemble(entries, name=None, vertex_labels=None) -> FinSSet:
    """Build a FinSSet from ``(key, dim, [(face_key, word), ...])`` entries."""
    entries = sorted(entries, key=lambda e: e[1])
    index = {e[0]: i for i, e in enumerate(entries)}
    dims = [e[1] for e in entries]
    faces = []
    for key, d, fs in entries:
        faces.append(tuple(Simplex(index[fk], tuple(w), d - 1) for fk, w in fs))
    out = FinSSet(dims, faces, labels=None if vertex_labels is None else [], keys=[e[0] for e in entries], name=name)
    if vertex_labels is not None:
        out.labels = out._auto_labels({index[k]: lab for k, lab in vertex_labels.items()})
    return out


# -- standard objects -------------------------------------------------------------


@lru_cache(maxsize=None)
def standard(m: int) -> FinSSet:
    """``Delta[m]``; nondegenerate cells are strictly increasing vertex tuples."""
    if m < -1:
        raise SSetError(f"standard simplex needs m >= -1, got {m}")
    entries = []
    for r in range(m + 1):
        for t in itertools.combinations(range(m + 1), r + 1):
            fs = [(t[:i] + t[i + 1:], ()) for i in range(r + 1)] if r > 0 else []
            entries.append((t, r, fs))
    return _assemble(entries, name=f"delta {m}")


def standard_cell(m: int, vertices) -> int:
    return standard(m).key_index[tuple(vertices)]


def boundary(m: int) -> FinSSet:
    if m < 0:
        raise SSetError(f"boundary needs m >= 0, got {m}")
    X = standard(m)
    top = X.key_index[tuple(range(m + 1))]
    return subcomplex(X, [c for c in X.cells() if c != top], name=f"boundary {m}")


def horn(m: int, k: int) -> FinSSet:
    if m < 1 or not 0 <= k <= m:
        raise SSetError(f"horn needs m >= 1 and 0 <= k <= m, got m={m}, k={k}")
    X = standard(m)
    top = tuple(range(m + 1))
    omit = {X.key_index[top], X.key_index[top[:k] + top[k + 1:]]}
    return subcomplex(X, [c for c in X.cells() if c not in omit], name=f"horn({m},{k})")


# -- subobjects -------------------------------------------------------------------


def closure(X: FinSSet, seeds: Iterable[int]) -> frozenset:
    """Smallest face-closed set of cells containing ``seeds``."""
    out = set()
    stack = []
    for c in seeds:
        if not 0 <= c < len(X):
            raise SSetError(f"seed {c} is not a cell of the ambient object")
        stack.append(c)
    while stack:
        c = stack.pop()
        if c in out:
            continue
        out.add(c)
        stack.extend(f.base for f in X.faces[c])
    return frozenset(out)


def subcomplex(X: FinSSet, seeds: Iterable, name: str | None = None) -> FinSSet:
    """The subobject generated by ``seeds`` (cell ids or Simplex values)."""
    ids = [s.base if isinstance(s, Simplex) else int(s) for s in seeds]
    keep = sorted(closure(X, ids))
    new = {c: i for i, c in enumerate(keep)}
    faces = [tuple(Simplex(new[f.base], f.degeneracy_word, f.dim) for f in X.faces[c]) for c in keep]
    keys = [X.keys[c] for c in keep] if X.keys is not None else None
    out = FinSSet([X.dims[c] for c in keep], faces, [X.labels[c] for c in keep], keys=keys, name=name)
    out.ambient = X
    out.embedding = tuple(keep)
    return out


def _cells_in(A, X: FinSSet) -> frozenset:
    if isinstance(A, FinSSet):
        if A.ambient is X or (A.ambient is not None and A.ambient == X):
            return frozenset(A.embedding)
        if A == X:
            return frozenset(X.cells())
        raise SSetError("operand is not presented as a subobject of the ambient object")
    return frozenset(A)


def union(A, B, X: FinSSet) -> FinSSet:
    return subcomplex(X, _cells_in(A, X) | _cells_in(B, X))


def intersection(A, B, X: FinSSet) -> FinSSet:
    return subcomplex(X, _cells_in(A, X) & _cells_in(B, X))


def is_subcomplex(A, X: FinSSet) -> bool:
    try:
        cells = _cells_in(A, X)
    except SSetError:
        return False
    return all(0 <= c < len(X) for c in cells) and closure(X, cells) == cells


# -- product, join, opposite -------------------------------------------------------


def product(X: FinSSet, Y: FinSSet) -> FinSSet:
    """Cartesian product. Cells are keyed ``(x0, y0, alpha, beta)``."""
    paths: dict = {}
    entries = []
    for x0 in X.cells():
        a = X.dims[x0]
        for y0 in Y.cells():
            b = Y.dims[y0]
            ps = paths.get((a, b))
            if ps is None:
                ps = paths[(a, b)] = kernels.delannoy_paths(a, b)
            for al, be in ps:
                r = len(al) - 1
                fs = []
                if r > 0:
                    xs0, ys0 = X.simplex(x0), Y.simplex(y0)
                    for i in range(r + 1):
                        fa = al[:i] + al[i + 1:]
                        fb = be[:i] + be[i + 1:]
                        xs = X.act(xs0, fa)
                        ys = Y.act(ys0, fb)
                        sa = surjection_from_word(xs.degeneracy_word, r - 1)
                        sb = surjection_from_word(ys.degeneracy_word, r - 1)
                        ca, cb, word = collapse_pair(sa, sb)
                        fs.append(((xs.base, ys.base, ca, cb), word))
                entries.append(((x0, y0, al, be), r, fs))
    vlabels = {(x, y, (0,), (0,)): f"({X.labels[x]},{Y.labels[y]})" for x in X.cells(0) for y in Y.cells(0)}
    out = _assemble(entries, name=f"prod({X.name},{Y.name})", vertex_labels=vlabels)
    out.factors = (X, Y)
    return out


def product_simplex(P: FinSSet, xs: Simplex, ys: Simplex) -> Simplex:
    """Normal form in ``P = X x Y`` of the pair ``(xs, ys)`` of equal dimension."""
    if xs.dim != ys.dim:
        raise SSetError("product components must have equal dimension")
    r = xs.dim
    sa = surjection_from_word(xs.degeneracy_word, r)
    sb = surjection_from_word(ys.degeneracy_word, r)
    ca, cb, word = collapse_pair(sa, sb)
    return Simplex(P.key_index[(xs.base, ys.base, ca, cb)], word, r)


def projections(P: FinSSet, s: Simplex) -> tuple[Simplex, Simplex]:
    """The two components of a simplex of a product."""
    X, Y = P.factors
    x0, y0, al, be = P.keys[s.base]
    if s.degeneracy_word:
        surj = surjection_from_word(s.degeneracy_word, s.dim)
        al, be = _compose(al, surj), _compose(be, surj)
    return X.act(X.simplex(x0), al), Y.act(Y.simplex(y0), be)


def _integer_named(X: FinSSet) -> bool:
    return [X.labels[v] for v in X.cells(0)] == [str(i) for i in range(len(X.cells(0)))]


def join(X: FinSSet, Y: FinSSet) -> FinSSet:
    """Join ``X * Y``. Cells are keyed ``(x, y)`` with ``-1`` for an empty side."""
    dx = {-1: -1, **{c: X.dims[c] for c in X.cells()}}
    dy = {-1: -1, **{c: Y.dims[c] for c in Y.cells()}}
    entries = []
    for x in X.cells() + [-1]:
        for y in [-1] + Y.cells():
            if x == -1 and y == -1:
                continue
            k, q = dx[x], dy[y]
            r = k + q + 1
            fs = []
            if r > 0:
                for i in range(r + 1):
                    if i <= k:
                        if k == 0:
                            fs.append(((-1, y), ()))
                        else:
                            f = X.faces[x][i]
                            fs.append(((f.base, y), f.degeneracy_word))
                    else:
                        if q == 0:
                            fs.append(((x, -1), ()))
                        else:
                            f = Y.faces[y][i - k - 1]
                            fs.append(((x, f.base), tuple(w + k + 1 for w in f.degeneracy_word)))
            entries.append(((x, y), r, fs))
    nx = len(X.cells(0))
    if _integer_named(X) and _integer_named(Y):
        vl = {(v, -1): str(i) for i, v in enumerate(X.cells(0))}
        vl.update({(-1, v): str(nx + i) for i, v in enumerate(Y.cells(0))})
    else:
        vl = {(v, -1): f"a:{X.labels[v]}" for v in X.cells(0)}
        vl.update({(-1, v): f"b:{Y.labels[v]}" for v in Y.cells(0)})
    out = _assemble(entries, name=f"join({X.name},{Y.name})", vertex_labels=vl)
    out.factors = (X, Y)
    return out


def reflect_word(word: tuple, dim: int) -> tuple:
    return tuple(sorted((dim - 1 - j for j in word), reverse=True))


def opposite(X: FinSSet) -> FinSSet:
    """Same cells, with ``d_i`` replaced by ``d_{r-i}`` and words reflected."""
    faces = []
    for c, d in enumerate(X.dims):
        fs = []
        for i in range(d + 1) if d > 0 else ():
            f = X.faces[c][d - i]
            fs.append(Simplex(f.base, reflect_word(f.degeneracy_word, d - 1), d - 1))
        faces.append(tuple(fs))
    out = FinSSet(X.dims, faces, labels=[], keys=X.keys, name=f"op({X.name})")
    out.labels = out._auto_labels({v: X.labels[v] for v in X.cells(0)})
    return out


# -- maps ------------------------------------------------------------------------


class SSetMap:
    """A simplicial map given on the nondegenerate cells of the domain."""

    def __init__(self, domain: FinSSet, codomain: FinSSet, assignment):
        self.domain = domain
        self.codomain = codomain
        self.assignment = tuple(assignment)

    def __repr__(self) -> str:
        return f"<SSetMap {self.domain!r} -> {self.codomain!r}>"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SSetMap)
            and self.domain == other.domain
            and self.codomain == other.codomain
            and self.assignment == other.assignment
        )

    def __hash__(self) -> int:
        return hash(self.assignment)

    def __call__(self, s) -> Simplex:
        if not isinstance(s, Simplex):
            s = self.domain.simplex(s)
        t = self.assignment[s.base]
        if not s.degeneracy_word:
            return t
        return self.codomain.act(t, surjection_from_word(s.degeneracy_word, s.dim))

    def validate(self) -> None:
        A, X = self.domain, self.codomain
        if len(self.assignment) != len(A):
            raise SSetError("assignment must cover every nondegenerate cell")
        for c, d in enumerate(A.dims):
            t = self.assignment[c]
            if t.dim != d:
                raise SSetError(f"cell {c} sent to a simplex of dimension {t.dim}")
            for i in range(d + 1) if d > 0 else ():
                if X.face(t, i) != self(A.faces[c][i]):
                    raise SSetError(f"assignment does not commute with d_{i} on cell {c}")

    def is_injective(self) -> bool:
        return all(not t.degeneracy_word for t in self.assignment) and len(
            {t.base for t in self.assignment}
        ) == len(self.assignment)

    def to_json(self) -> dict:
        return {"assignment": {str(c): t.to_json() for c, t in enumerate(self.assignment)}}


def identity_map(X: FinSSet) -> SSetMap:
    return SSetMap(X, X, [X.simplex(c) for c in X.cells()])


def inclusion(A: FinSSet) -> SSetMap:
    if A.ambient is None:
        raise SSetError("object does not carry an embedding")
    return SSetMap(A, A.ambient, [A.ambient.simplex(c) for c in A.embedding])


def compose_maps(g: SSetMap, f: SSetMap) -> SSetMap:
    return SSetMap(f.domain, g.codomain, [g(t) for t in f.assignment])


# -- map enumeration ----------------------------------------------------------------


def _search_order(A: FinSSet) -> list:
    """Cells sorted so that each cell follows all of its faces and vertices are interleaved."""
    top_vertex = [max(A.vertices(c)) for c in A.cells()]
    return sorted(A.cells(), key=lambda c: (top_vertex[c], A.dims[c], c))


def _face_index(X: FinSSet, r: int) -> dict:
    cache = X.__dict__.setdefault("_face_index_cache", {})
    hit = cache.get(r)
    if hit is None:
        hit = {}
        for s in X.simplices(r):
            key = tuple(X.face(s, i) for i in range(r + 1))
            hit.setdefault(key, []).append(s)
        cache[r] = hit
    return hit


def iter_maps(A: FinSSet, X: FinSSet, fixed: dict | None = None, allowed=None) -> Iterator[tuple]:
    """Yield assignments (tuples indexed by cell of ``A``) of all maps ``A -> X``.

    ``fixed`` pins some cells; ``allowed(c, t)`` filters candidate images.
    Order is depth-first and not sorted; see :func:`enumerate_maps`.
    """
    fixed = fixed or {}
    order = _search_order(A)
    n = len(A)
    assign: list = [None] * n
    indexes = {r: _face_index(X, r) for r in range(1, A.top_dim + 1)}
    vertices = [X.simplex(v) for v in X.cells(0)]

    def image(s: Simplex) -> Simplex:
        t = assign[s.base]
        if not s.degeneracy_word:
            return t
        return X.act(t, surjection_from_word(s.degeneracy_word, s.dim))

    def candidates(c):
        d = A.dims[c]
        if d == 0:
            base = vertices
        else:
            key = tuple(image(f) for f in A.faces[c])
            base = indexes[d].get(key, ())
        if c in fixed:
            want = fixed[c]
            base = [want] if want in base else []
        if allowed is not None:
            base = [t for t in base if allowed(c, t)]
        return base

    def walk(pos):
        if pos == n:
            yield tuple(assign)
            return
        c = order[pos]
        for t in candidates(c):
            assign[c] = t
            yield from walk(pos + 1)
        assign[c] = None

    if n == 0:
        yield ()
        return
    yield from walk(0)


def enumerate_maps(A: FinSSet, X: FinSSet, fixed: dict | None = None, allowed=None) -> list:
    """All simplicial maps ``A -> X``, sorted lexicographically by assignment."""
    return [SSetMap(A, X, a) for a in sorted(iter_maps(A, X, fixed, allowed))]


def naive_candidate_count(A: FinSSet, X: FinSSet) -> int:
    total = 1
    for c in A.cells():
        total *= len(X.simplices(A.dims[c]))
    return total


def enumerate_maps_naive(A: FinSSet, X: FinSSet, limit: int = 10**5, allowed=None) -> list:
    """Reference enumeration: filter the full product of same-dimension candidates."""
    if naive_candidate_count(A, X) > limit:
        raise SSetError("naive enumeration exceeds the candidate limit")
    pools = [X.simplices(A.dims[c]) for c in A.cells()]
    out = []
    for combo in itertools.product(*pools):
        ok = True
        for c, d in enumerate(A.dims):
            if allowed is not None and not allowed(c, combo[c]):
                ok = False
                break
            for i in range(d + 1) if d > 0 else ():
                f = A.faces[c][i]
                img = combo[f.base]
                if f.degeneracy_word:
                    img = X.act(img, surjection_from_word(f.degeneracy_word, f.dim))
                if X.face(combo[c], i) != img:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(SSetMap(A, X, combo))
    return sorted(out, key=lambda m: m.assignment)
