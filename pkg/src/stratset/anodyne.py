"""Elementary anodyne extensions, Leibniz constructions, entire pushouts and
brute-force lifting checks."""
from __future__ import annotations

from dataclasses import dataclass, field

from .marking import (
    MarkedMap,
    MarkedSSet,
    MarkingError,
    boundary_marked,
    delta,
    delta_k,
    delta_t,
    delta_three,
    entire_map,
    horn_marked,
    pretensor,
    subobject_map,
    tensor,
)
from .sset import (
    FinSSet,
    Simplex,
    enumerate_maps_naive,
    iter_maps,
    naive_candidate_count,
    product,
    subcomplex,
)

KINDS = ("horn", "thinness", "saturation", "triviality")


class AnodyneError(ValueError):
    pass


@dataclass
class AnodyneGen:
    kind: str
    params: tuple
    realized: MarkedMap

    @property
    def domain(self) -> MarkedSSet:
        return self.realized.domain

    @property
    def codomain(self) -> MarkedSSet:
        return self.realized.codomain

    @property
    def is_entire(self) -> bool:
        return self.realized.is_entire()

    def new_marks(self) -> frozenset:
        """Codomain marks not hit by a domain mark (for entire generators)."""
        image = {self.realized(c).base for c in self.domain.marked}
        return frozenset(self.codomain.marked - image)

    def describe(self) -> str:
        return f"{self.kind}{self.params}"


def generator(kind: str, params) -> AnodyneGen:
    if not isinstance(params, tuple):
        params = (params,)
    try:
        if kind == "horn":
            m, k = params
            if m < 1 or not 0 <= k <= m:
                raise AnodyneError(f"horn extension needs m >= 1 and 0 <= k <= m, got {params}")
            return AnodyneGen(kind, params, subobject_map(horn_marked(m, k), delta_k(m, k)))
        if kind == "thinness":
            m, k = params
            if m < 2 or not 0 <= k <= m:
                raise AnodyneError(f"thinness extension needs m >= 2 and 0 <= k <= m, got {params}")
            return AnodyneGen(kind, params, entire_map(delta_k(m, k, 1), delta_k(m, k, 2)))
        if kind == "saturation":
            left, right = (params[0], -1) if len(params) == 1 else params
            if left < -1 or right < -1:
                raise AnodyneError(f"saturation extension needs sizes >= -1, got {params}")
            return AnodyneGen(
                kind, params, entire_map(delta_three(left, right, "eq"), delta_three(left, right, "sharp"))
            )
        if kind == "triviality":
            (p,) = params
            if p < 0:
                raise AnodyneError(f"triviality extension needs p >= 0, got {p}")
            return AnodyneGen(kind, params, entire_map(delta(p), delta_t(p)))
    except (TypeError, ValueError) as exc:
        if isinstance(exc, AnodyneError):
            raise
        raise AnodyneError(f"bad parameters {params!r} for {kind}: {exc}") from None
    raise AnodyneError(f"unknown anodyne kind {kind!r}")


def cofibration_generator(kind: str, m: int) -> MarkedMap:
    if kind == "boundary":
        if m < 0:
            raise AnodyneError(f"boundary inclusion needs m >= 0, got {m}")
        return subobject_map(boundary_marked(m), delta(m))
    if kind == "marking":
        if m < 0:
            raise AnodyneError(f"marking inclusion needs m >= 0, got {m}")
        return entire_map(delta(m), delta_t(m))
    raise AnodyneError(f"unknown cofibration kind {kind!r}")


# -- lifting ---------------------------------------------------------------------------


def _marked_filter(A: MarkedSSet, X: MarkedSSet):
    return lambda c, t: c not in A.marked or X.is_marked(t)


def marked_maps(A: MarkedSSet, X: MarkedSSet, fixed=None):
    """Iterate assignments of all marked maps ``A -> X``."""
    return iter_maps(A.underlying, X.underlying, fixed, _marked_filter(A, X))


@dataclass
class LiftResult:
    holds: bool
    checked: int
    counterexample: tuple | None = None

    def __bool__(self) -> bool:
        return self.holds


def has_rlp(i: MarkedMap, X: MarkedSSet) -> LiftResult:
    """Does every marked map ``A -> X`` extend along the inclusion ``i: A -> B``?"""
    emb = i.embedding()
    A, B = i.domain, i.codomain
    checked = 0
    for f in marked_maps(A, X):
        checked += 1
        fixed = {emb[c]: t for c, t in enumerate(f)}
        if next(marked_maps(B, X, fixed), None) is None:
            return LiftResult(False, checked, f)
    return LiftResult(True, checked)


def has_rlp_naive(i: MarkedMap, X: MarkedSSet, limit: int = 10**5) -> LiftResult:
    """Reference check from unpruned enumeration of both hom-sets."""
    emb = i.embedding()
    A, B = i.domain, i.codomain
    fa = enumerate_maps_naive(A.underlying, X.underlying, limit, _marked_filter(A, X))
    fb = enumerate_maps_naive(B.underlying, X.underlying, limit, _marked_filter(B, X))
    restricted = {tuple(g.assignment[emb[c]] for c in range(len(A))) for g in fb}
    for f in fa:
        if f.assignment not in restricted:
            return LiftResult(False, len(fa), f.assignment)
    return LiftResult(True, len(fa))


def rlp_candidates(i: MarkedMap, X: MarkedSSet) -> int:
    return max(
        naive_candidate_count(i.domain.underlying, X.underlying),
        naive_candidate_count(i.codomain.underlying, X.underlying),
    )


@dataclass
class Verdict:
    property: str
    bounds: dict
    checked: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "property": self.property,
            "passed": self.passed,
            "bounds": self.bounds,
            "checked": self.checked,
            "failures": self.failures,
        }


def _run_checks(X: MarkedSSet, gens, verdict: Verdict) -> Verdict:
    for gen in gens:
        res = has_rlp(gen.realized, X)
        verdict.checked.append({"kind": gen.kind, "params": list(gen.params), "holds": res.holds})
        if not res.holds:
            verdict.failures.append(
                {
                    "kind": gen.kind,
                    "params": list(gen.params),
                    "map": [t.to_json() for t in res.counterexample],
                }
            )
    return verdict


def complicial_generators(D: int):
    for m in range(1, D + 1):
        for k in range(m + 1):
            yield generator("horn", (m, k))
    for m in range(2, D + 1):
        for k in range(m + 1):
            yield generator("thinness", (m, k))


def is_complicial(X: MarkedSSet, D: int) -> Verdict:
    """Lifting against horn and thinness extensions of dimension at most ``D``."""
    return _run_checks(X, complicial_generators(D), Verdict("complicial", {"D": D}))


def is_saturated(X: MarkedSSet, D: int, L: int) -> Verdict:
    gens = list(complicial_generators(D)) + [generator("saturation", (l,)) for l in range(-1, L + 1)]
    return _run_checks(X, gens, Verdict("saturated", {"D": D, "L": L}))


def is_n_complicial(X: MarkedSSet, N: int, D: int) -> Verdict:
    L = max(-1, D - 4)
    gens = list(complicial_generators(D)) + [generator("saturation", (l,)) for l in range(-1, L + 1)]
    gens += [generator("triviality", (p,)) for p in range(N + 1, D + 1)]
    return _run_checks(X, gens, Verdict("n-complicial", {"N": N, "D": D, "L": L}))


# -- Leibniz constructions -------------------------------------------------------------


@dataclass
class Leibniz:
    domain: MarkedSSet
    codomain: MarkedSSet
    map: MarkedMap

    def is_isomorphism(self) -> bool:
        return self.domain == self.codomain


def _transport(part: MarkedSSet, e1: tuple, e2: tuple, target: FinSSet):
    """Image cells and image marks of ``part`` (on a product) in ``target``."""
    U = part.underlying
    cells, marks = [], []
    for c in U.cells():
        x0, y0, al, be = U.keys[c]
        t = target.key_index[(e1[x0], e2[y0], al, be)]
        cells.append(t)
        if c in part.marked:
            marks.append(t)
    return cells, marks


def _leibniz(f: MarkedMap, g: MarkedMap, op) -> Leibniz:
    if not (f.is_inclusion() and g.is_inclusion()):
        raise AnodyneError("Leibniz construction needs inclusions of subobjects")
    ef, eg = f.embedding(), g.embedding()
    idf = tuple(range(len(f.codomain)))
    idg = tuple(range(len(g.codomain)))
    cod = op(f.codomain, g.codomain)
    P = cod.underlying
    c1, m1 = _transport(op(f.domain, g.codomain), ef, idg, P)
    c2, m2 = _transport(op(f.codomain, g.domain), idf, eg, P)
    cells = set(c1) | set(c2)
    marks = set(m1) | set(m2)
    if len(cells) == len(P):
        dom = MarkedSSet(P, marks, f"leibniz-domain({cod.name})")
    else:
        sub = subcomplex(P, cells)
        pos = {c: i for i, c in enumerate(sub.embedding)}
        dom = MarkedSSet(sub, [pos[c] for c in marks], f"leibniz-domain({cod.name})")
    return Leibniz(dom, cod, subobject_map(dom, cod))


def leibniz_pretensor(f: MarkedMap, g: MarkedMap) -> Leibniz:
    return _leibniz(f, g, pretensor)


def leibniz_tensor(f: MarkedMap, g: MarkedMap) -> Leibniz:
    return _leibniz(f, g, tensor)


# -- entire pushouts ----------------------------------------------------------------------


def attach_marks(X: MarkedSSet, gen: AnodyneGen, attach: MarkedMap) -> MarkedSSet:
    """Pushout of an entire generator along ``attach``: add the image marks."""
    if not gen.is_entire:
        raise AnodyneError(f"{gen.describe()} is not entire")
    if attach.codomain.underlying != X.underlying:
        raise AnodyneError("attaching map does not land in the target object")
    bad = [c for c in sorted(gen.domain.marked) if not X.is_marked(attach(c))]
    if bad:
        raise MarkingError(f"attaching map sends marked cell {bad[0]} to an unmarked simplex")
    new = set(X.marked)
    for c in gen.new_marks():
        t = attach(c)
        if not t.degeneracy_word:
            new.add(t.base)
    return X.with_marks(new)


def simplex_map(source: MarkedSSet, X: MarkedSSet, top: Simplex) -> MarkedMap:
    """The map from a marked standard simplex picking out the simplex ``top``."""
    S = source.underlying
    U = X.underlying
    return MarkedMap(source, X, [U.act(top, S.keys[c]) for c in S.cells()])
