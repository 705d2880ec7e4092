"""Simplicial sets with marking, the standard marked gadgets, joins, and
the two Gray-style markings on products (pretensor and tensor)."""
from __future__ import annotations

from .iso import find_isomorphism
from .kernels import word_from_surjection
from .sset import (
    FinSSet,
    Simplex,
    SSetError,
    SSetMap,
    boundary,
    horn,
    join,
    opposite,
    product,
    product_simplex,
    standard,
    subcomplex,
)


class MarkingError(ValueError):
    pass


class MarkedSSet:
    """An underlying FinSSet plus the set of marked nondegenerate cells.

    Degenerate simplices are always marked and are never stored.
    """

    def __init__(self, underlying: FinSSet, marked=(), name: str | None = None):
        self.underlying = underlying
        self.marked = frozenset(marked)
        self.name = name or underlying.name
        for c in self.marked:
            if not 0 <= c < len(underlying):
                raise MarkingError(f"marked cell {c} does not exist")
            if underlying.dims[c] < 1:
                raise MarkingError(f"marked cell {c} has dimension 0")

    def __repr__(self) -> str:
        tag = f" {self.name}" if self.name else ""
        return f"<MarkedSSet{tag} counts={self.underlying.counts()} marked={len(self.marked)}>"

    def __eq__(self, other) -> bool:
        if not isinstance(other, MarkedSSet):
            return NotImplemented
        return self.underlying == other.underlying and self.marked == other.marked

    def __hash__(self) -> int:
        return hash((self.underlying, self.marked))

    def __len__(self) -> int:
        return len(self.underlying)

    def is_marked(self, s) -> bool:
        if not isinstance(s, Simplex):
            s = self.underlying.simplex(s)
        if s.dim < 1:
            return False
        return bool(s.degeneracy_word) or s.base in self.marked

    def marked_counts(self) -> tuple:
        out = [0] * (self.underlying.top_dim + 1)
        for c in self.marked:
            out[self.underlying.dims[c]] += 1
        return tuple(out)

    def marked_labels(self, dim: int | None = None) -> list:
        U = self.underlying
        return [U.labels[c] for c in sorted(self.marked) if dim is None or U.dims[c] == dim]

    def with_marks(self, marks) -> "MarkedSSet":
        return MarkedSSet(self.underlying, marks, self.name)

    def validate(self) -> None:
        self.underlying.validate()

    def to_json(self) -> dict:
        out = self.underlying.to_json()
        out["marked"] = sorted(self.marked)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "MarkedSSet":
        return cls(FinSSet.from_json(data), data.get("marked", []))


class MarkedMap:
    """A simplicial map that sends marked simplices to marked simplices."""

    def __init__(self, domain: MarkedSSet, codomain: MarkedSSet, assignment):
        self.domain = domain
        self.codomain = codomain
        self.smap = SSetMap(domain.underlying, codomain.underlying, assignment)

    @property
    def assignment(self) -> tuple:
        return self.smap.assignment

    def __call__(self, s) -> Simplex:
        return self.smap(s)

    def __repr__(self) -> str:
        return f"<MarkedMap {self.domain!r} -> {self.codomain!r}>"

    def unmarked_images(self) -> list:
        """Marked domain cells whose image is not marked."""
        return [c for c in sorted(self.domain.marked) if not self.codomain.is_marked(self.smap(c))]

    def validate(self) -> None:
        self.smap.validate()
        bad = self.unmarked_images()
        if bad:
            raise MarkingError(f"marked cell {bad[0]} is sent to an unmarked simplex")

    def is_entire(self) -> bool:
        """Identity on underlying simplicial sets."""
        D, C = self.domain.underlying, self.codomain.underlying
        return D == C and all(t == Simplex(c, (), D.dims[c]) for c, t in enumerate(self.assignment))

    def is_inclusion(self) -> bool:
        return self.smap.is_injective()

    def embedding(self) -> tuple:
        if not self.is_inclusion():
            raise MarkingError("map is not an inclusion of a subobject")
        return tuple(t.base for t in self.assignment)


def identity_marked(X: MarkedSSet) -> MarkedMap:
    U = X.underlying
    return MarkedMap(X, X, [U.simplex(c) for c in U.cells()])


def entire_map(X: MarkedSSet, Y: MarkedSSet) -> MarkedMap:
    if X.underlying != Y.underlying:
        raise MarkingError("entire maps need identical underlying objects")
    return MarkedMap(X, Y, [X.underlying.simplex(c) for c in X.underlying.cells()])


def subobject_map(A: MarkedSSet, B: MarkedSSet) -> MarkedMap:
    """The inclusion of a marked subobject built by ``subcomplex``."""
    U = A.underlying
    if U == B.underlying:
        return entire_map(A, B)
    if U.ambient is None or U.ambient != B.underlying:
        raise MarkingError("domain is not presented as a subobject of the codomain")
    return MarkedMap(A, B, [B.underlying.simplex(c) for c in U.embedding])


# -- gadgets -----------------------------------------------------------------------


def _std_cell(m: int, vs) -> int:
    return standard(m).key_index[tuple(vs)]


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise MarkingError(msg)


def delta(m: int) -> MarkedSSet:
    _check(m >= -1, f"delta needs m >= -1, got {m}")
    return MarkedSSet(standard(m), (), f"delta {m}")


def delta_t(m: int) -> MarkedSSet:
    _check(m >= 0, f"deltat needs m >= 0, got {m}")
    marks = [_std_cell(m, range(m + 1))] if m > 0 else []
    return MarkedSSet(standard(m), marks, f"deltat {m}")


def delta_sharp(m: int) -> MarkedSSet:
    X = standard(m)
    return MarkedSSet(X, [c for c in X.cells() if X.dims[c] > 0], f"deltasharp {m}")


def boundary_marked(m: int) -> MarkedSSet:
    _check(m >= 0, f"boundary needs m >= 0, got {m}")
    return MarkedSSet(boundary(m), (), f"boundary {m}")


def _delta_k_marks(m: int, k: int, prime: int) -> set:
    X = standard(m)
    core = {j for j in (k - 1, k, k + 1) if 0 <= j <= m}
    marks = {c for c in X.cells() if X.dims[c] > 0 and core <= set(X.keys[c])}
    top = tuple(range(m + 1))
    extra = []
    if prime >= 1:
        extra += [j for j in (k - 1, k + 1) if 0 <= j <= m]
    if prime >= 2:
        extra.append(k)
    for j in extra:
        face = top[:j] + top[j + 1:]
        if len(face) > 1:
            marks.add(X.key_index[face])
    return marks


def delta_k(m: int, k: int, prime: int = 0) -> MarkedSSet:
    """``Delta^k[m]``; ``prime`` 1 and 2 give the primed and double-primed variants."""
    _check(m >= 0 and 0 <= k <= m, f"deltak needs 0 <= k <= m, got m={m}, k={k}")
    tag = "'" * prime
    return MarkedSSet(standard(m), _delta_k_marks(m, k, prime), f"deltak{tag}({m},{k})")


def horn_marked(m: int, k: int) -> MarkedSSet:
    _check(m >= 1 and 0 <= k <= m, f"horn needs m >= 1 and 0 <= k <= m, got m={m}, k={k}")
    H = horn(m, k)
    marks = _delta_k_marks(m, k, 0)
    return MarkedSSet(H, [i for i, c in enumerate(H.embedding) if c in marks], f"horn({m},{k})")


def delta3_eq() -> MarkedSSet:
    X = standard(3)
    marks = {c for c in X.cells() if X.dims[c] >= 2}
    marks |= {X.key_index[(0, 2)], X.key_index[(1, 3)]}
    return MarkedSSet(X, marks, "delta3eq")


def delta3_sharp() -> MarkedSSet:
    X = standard(3)
    return MarkedSSet(X, [c for c in X.cells() if X.dims[c] >= 1], "delta3sharp")


def delta_three(left: int, right: int, kind: str = "eq") -> MarkedSSet:
    """``Delta[left] * Delta[3]_kind * Delta[right]`` on the cells of ``Delta[left + right + 5]``."""
    _check(left >= -1 and right >= -1, f"deltathree needs both sizes >= -1, got {left}, {right}")
    _check(kind in ("eq", "sharp"), f"deltathree kind must be eq or sharp, got {kind!r}")
    mid = delta3_eq() if kind == "eq" else delta3_sharp()
    J = join_marked(join_marked(delta(left), mid), delta(right))
    out = standardize(J)
    out.name = f"deltathree({left},{right},{kind})"
    return out


def standardize(X: MarkedSSet) -> MarkedSSet:
    """Transport a marked object whose underlying is a full simplex onto ``standard(n)``.

    Vertices are ordered by cell id; each cell must span an increasing
    vertex sequence.
    """
    U = X.underlying
    verts = U.cells(0)
    n = len(verts) - 1
    S = standard(n)
    pos = {v: i for i, v in enumerate(verts)}
    image = []
    for c in U.cells():
        vs = tuple(pos[v] for v in U.vertices(c))
        if any(vs[i] >= vs[i + 1] for i in range(len(vs) - 1)) or vs not in S.key_index:
            raise MarkingError("object is not a standard simplex in vertex order")
        image.append(S.key_index[vs])
    if sorted(image) != S.cells():
        raise MarkingError("object is not a standard simplex")
    return MarkedSSet(S, [image[c] for c in X.marked], X.name)


GADGETS = {
    "delta": delta,
    "deltat": delta_t,
    "boundary": boundary_marked,
    "horn": horn_marked,
    "deltak": lambda m, k: delta_k(m, k, 0),
    "deltak'": lambda m, k: delta_k(m, k, 1),
    "deltak''": lambda m, k: delta_k(m, k, 2),
    "delta3eq": delta3_eq,
    "delta3sharp": delta3_sharp,
    "deltathree": delta_three,
}


def gadget(name: str, *params) -> MarkedSSet:
    try:
        build = GADGETS[name]
    except KeyError:
        raise MarkingError(f"unknown gadget {name!r}") from None
    try:
        return build(*params)
    except SSetError as exc:
        raise MarkingError(str(exc)) from None


# -- constructions -------------------------------------------------------------------


def join_marked(X: MarkedSSet, Y: MarkedSSet) -> MarkedSSet:
    """Join with ``x * y`` marked iff ``x`` or ``y`` is marked; empty sides are unmarked."""
    J = join(X.underlying, Y.underlying)
    marks = [c for c, (x, y) in enumerate(J.keys) if (x >= 0 and x in X.marked) or (y >= 0 and y in Y.marked)]
    return MarkedSSet(J, marks, f"join({X.name},{Y.name})")


def opposite_marked(X: MarkedSSet) -> MarkedSSet:
    return MarkedSSet(opposite(X.underlying), X.marked, f"op({X.name})")


def _components(P: FinSSet, c: int):
    """Components of a product cell as simplices of the factors."""
    x0, y0, al, be = P.keys[c]
    r = len(al) - 1
    return (
        Simplex(x0, word_from_surjection(al), r),
        Simplex(y0, word_from_surjection(be), r),
    )


def _check_dims(x: Simplex, y: Simplex) -> int:
    if x.dim != y.dim:
        raise MarkingError(f"components have different dimensions {x.dim} and {y.dim}")
    return x.dim


def is_mediator(x: Simplex, y: Simplex) -> bool:
    """Some ``0 < k < r`` has ``x`` degenerate at ``k - 1`` and ``y`` degenerate at ``k``."""
    r = _check_dims(x, y)
    rx, ry = set(x.degeneracy_word), set(y.degeneracy_word)
    return any((k - 1) in rx and k in ry for k in range(1, r))


def front(X: MarkedSSet, x: Simplex, p: int) -> Simplex:
    """``x`` restricted to its first ``p + 1`` vertices."""
    return X.underlying.act(x, tuple(range(p + 1)))


def back(Y: MarkedSSet, y: Simplex, p: int) -> Simplex:
    """``y`` restricted to its vertices ``p..r``."""
    return Y.underlying.act(y, tuple(range(p, y.dim + 1)))


def is_crushed_cylinder(x: Simplex, y: Simplex, X: MarkedSSet, Y: MarkedSSet) -> bool:
    """Some ``p + q = r`` has ``x`` constant after ``p`` and ``y`` constant before ``p``,
    with the nonconstant part of either side marked."""
    r = _check_dims(x, y)
    rx, ry = set(x.degeneracy_word), set(y.degeneracy_word)
    for p in range(r + 1):
        if all(j in rx for j in range(p, r)) and all(j in ry for j in range(p)):
            if X.is_marked(front(X, x, p)) or Y.is_marked(back(Y, y, p)):
                return True
    return False


def cleaves(p: int, q: int, x: Simplex, y: Simplex, X: MarkedSSet, Y: MarkedSSet) -> bool:
    r = _check_dims(x, y)
    if p < 0 or q < 0 or p + q != r:
        raise MarkingError(f"({p},{q}) is not a partition of {r}")
    return X.is_marked(front(X, x, p)) or Y.is_marked(back(Y, y, p))


def tensor_marked_cell(x: Simplex, y: Simplex, X: MarkedSSet, Y: MarkedSSet) -> bool:
    r = _check_dims(x, y)
    return r >= 1 and all(cleaves(p, r - p, x, y, X, Y) for p in range(r + 1))


def pretensor_marked_cell(x: Simplex, y: Simplex, X: MarkedSSet, Y: MarkedSSet) -> bool:
    return x.dim >= 1 and (is_mediator(x, y) or is_crushed_cylinder(x, y, X, Y))


def _product_marking(X: MarkedSSet, Y: MarkedSSet, rule, tag: str, P: FinSSet | None = None) -> MarkedSSet:
    if P is None:
        P = product(X.underlying, Y.underlying)
    marks = []
    for c in P.cells():
        if P.dims[c] == 0:
            continue
        x, y = _components(P, c)
        if rule(x, y, X, Y):
            marks.append(c)
    return MarkedSSet(P, marks, f"{tag}({X.name},{Y.name})")


def pretensor(X: MarkedSSet, Y: MarkedSSet, P: FinSSet | None = None) -> MarkedSSet:
    return _product_marking(X, Y, pretensor_marked_cell, "pretensor", P)


def tensor(X: MarkedSSet, Y: MarkedSSet, P: FinSSet | None = None) -> MarkedSSet:
    return _product_marking(X, Y, tensor_marked_cell, "tensor", P)


def product_marked(X: MarkedSSet, Y: MarkedSSet) -> MarkedSSet:
    """Cartesian product, marked componentwise."""
    return _product_marking(X, Y, lambda x, y, A, B: A.is_marked(x) and B.is_marked(y), "prod")


def components(P: MarkedSSet | FinSSet, c: int):
    U = P.underlying if isinstance(P, MarkedSSet) else P
    return _components(U, c)


def pretensor_literal(X: MarkedSSet, Y: MarkedSSet) -> frozenset:
    """Reference marking of ``X (pretensor) Y`` straight from the definition.

    Ranges over every pair of same-dimension simplices, keeps the jointly
    nondegenerate ones, and searches explicit factorizations through
    degeneracy maps instead of reading degeneracy words.
    """
    U, V = X.underlying, Y.underlying
    P = product(U, V)
    top = U.top_dim + V.top_dim
    marks = set()
    for r in range(1, top + 1):
        for x in U.simplices(r):
            for y in V.simplices(r):
                if set(x.degeneracy_word) & set(y.degeneracy_word):
                    continue
                if _literal_mediator(U, V, x, y, r) or _literal_crushed(X, Y, x, y, r):
                    marks.add(product_simplex(P, x, y).base)
    return frozenset(marks)


def _factors_through(U: FinSSet, x: Simplex, surj: tuple, lower: int):
    """Return ``x'`` with ``x = x' o surj`` if one exists, else None."""
    for cand in U.simplices(lower):
        if U.act(cand, surj) == x:
            return cand
    return None


def _literal_mediator(U, V, x, y, r) -> bool:
    for k in range(1, r):
        s_km1 = tuple(j if j < k else j - 1 for j in range(r + 1))
        s_k = tuple(j if j <= k else j - 1 for j in range(r + 1))
        if _factors_through(U, x, s_km1, r - 1) is not None and _factors_through(V, y, s_k, r - 1) is not None:
            return True
    return False


def _literal_crushed(X, Y, x, y, r) -> bool:
    U, V = X.underlying, Y.underlying
    for p in range(r + 1):
        q = r - p
        pi1 = tuple(min(i, p) for i in range(r + 1))
        pi2 = tuple(max(i - p, 0) for i in range(r + 1))
        xp = _factors_through(U, x, pi1, p)
        yp = _factors_through(V, y, pi2, q)
        if xp is not None and yp is not None and (X.is_marked(xp) or Y.is_marked(yp)):
            return True
    return False


def tensor_literal(X: MarkedSSet, Y: MarkedSSet) -> frozenset:
    """Reference tensor marking computed from vertex-level partition faces."""
    U, V = X.underlying, Y.underlying
    P = product(U, V)
    marks = set()
    for c in P.cells():
        r = P.dims[c]
        if r == 0:
            continue
        x, y = _components(P, c)
        ok = True
        for p in range(r + 1):
            fx = U.act(x, tuple(range(0, p + 1)))
            fy = V.act(y, tuple(range(p, r + 1)))
            if not ((p >= 1 and X.is_marked(fx)) or (r - p >= 1 and Y.is_marked(fy))):
                ok = False
                break
        if ok:
            marks.add(c)
    return frozenset(marks)


# -- isomorphisms ---------------------------------------------------------------------


def marked_isomorphism(X: MarkedSSet, Y: MarkedSSet):
    return find_isomorphism(X.underlying, Y.underlying, X.marked, Y.marked)


def is_isomorphic_marked(X: MarkedSSet, Y: MarkedSSet) -> bool:
    return marked_isomorphism(X, Y) is not None


def restrict_marks(X: MarkedSSet, sub: FinSSet) -> MarkedSSet:
    """Marked subobject on ``sub`` with the marks it inherits from ``X``."""
    emb = sub.embedding if sub.ambient is not None else tuple(sub.cells())
    return MarkedSSet(sub, [i for i, c in enumerate(emb) if c in X.marked])


def marked_subcomplex(X: MarkedSSet, seeds, name=None) -> MarkedSSet:
    return restrict_marks(X, subcomplex(X.underlying, seeds, name))


def all_partitions(r: int):
    return [(p, r - p) for p in range(r + 1)]

