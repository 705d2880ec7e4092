"""Corpus-wide verification suites with JSON reports."""
from __future__ import annotations

import time
from dataclasses import dataclass, field

from .iso import check_isomorphism, find_isomorphism
from .kernels import compose, word_from_surjection
from .marking import (
    MarkedSSet,
    components,
    delta,
    delta_k,
    delta_t,
    delta_three,
    delta3_eq,
    delta3_sharp,
    boundary_marked,
    horn_marked,
    join_marked,
    opposite_marked,
    pretensor,
    product_marked,
    restrict_marks,
    tensor,
)
from .sset import FinSSet, Simplex, closure, product, product_simplex, projections, standard, subcomplex

OBJECT_BUDGET = 60
PAIR_BUDGET = 150
OP_PAIR_BUDGET = 100
TRIPLE_CELLS = 5
TRIPLE_BUDGET = 150


# -- corpus ---------------------------------------------------------------------------------


def _delannoy(a: int, b: int) -> int:
    row = [1] * (b + 1)
    for _ in range(a):
        new = [1]
        for j in range(1, b + 1):
            new.append(new[j - 1] + row[j] + row[j - 1])
        row = new
    return row[b]


def product_size(X: MarkedSSet, Y: MarkedSSet) -> int:
    """Number of nondegenerate cells of the underlying product, without building it."""
    dx = [len(X.underlying.cells(r)) for r in range(X.underlying.top_dim + 1)]
    dy = [len(Y.underlying.cells(r)) for r in range(Y.underlying.top_dim + 1)]
    return sum(nx * ny * _delannoy(a, b) for a, nx in enumerate(dx) for b, ny in enumerate(dy))


def base_gadgets(max_m: int = 3, max_l: int = 1) -> list:
    out = []
    for m in range(0, max_m + 1):
        out.append((f"delta {m}", delta(m)))
    for m in range(1, max_m + 1):
        out.append((f"deltat {m}", delta_t(m)))
    for m in range(1, max_m + 1):
        out.append((f"boundary {m}", boundary_marked(m)))
    for m in range(1, max_m + 1):
        for k in range(m + 1):
            out.append((f"horn({m},{k})", horn_marked(m, k)))
    for m in range(1, max_m + 1):
        for k in range(m + 1):
            out.append((f"deltak({m},{k})", delta_k(m, k)))
    for m in range(2, max_m + 1):
        for k in range(m + 1):
            out.append((f"deltak'({m},{k})", delta_k(m, k, 1)))
            out.append((f"deltak''({m},{k})", delta_k(m, k, 2)))
    out.append(("delta3eq", delta3_eq()))
    out.append(("delta3sharp", delta3_sharp()))
    for a in range(-1, max_l + 1):
        for b in range(-1, max_l + 1):
            if a == b == -1:
                continue
            for kind in ("eq", "sharp"):
                out.append((f"deltathree({a},{b},{kind})", delta_three(a, b, kind)))
    return out


SEEDS = ("delta 0", "delta 1", "deltat 1", "delta 2", "deltat 2", "horn(2,0)", "horn(2,1)", "boundary 2", "deltak(2,1)")


@dataclass
class Corpus:
    objects: list
    budget: int = OBJECT_BUDGET
    excluded: list = field(default_factory=list)

    def __iter__(self):
        return iter(self.objects)

    def __len__(self) -> int:
        return len(self.objects)

    def names(self) -> list:
        return [n for n, _ in self.objects]

    def get(self, name: str) -> MarkedSSet:
        for n, X in self.objects:
            if n == name:
                return X
        raise KeyError(name)

    def small(self, cells: int) -> list:
        return [(n, X) for n, X in self.objects if len(X) <= cells]

    def pairs(self, budget: int = PAIR_BUDGET) -> list:
        return [
            (a, X, b, Y)
            for a, X in self.objects
            for b, Y in self.objects
            if product_size(X, Y) <= budget
        ]


def default_corpus(budget: int = OBJECT_BUDGET) -> Corpus:
    objs, excluded = [], []
    for name, X in base_gadgets():
        (objs if len(X) <= budget else excluded).append((name, X))
    seeds = [(n, X) for n, X in objs if n in SEEDS]
    for (a, X) in seeds:
        for (b, Y) in seeds:
            J = join_marked(X, Y)
            if len(J) <= budget:
                objs.append((f"join({a}, {b})", J))
            if product_size(X, Y) <= budget:
                objs.append((f"prod({a}, {b})", product_marked(X, Y)))
    for name in ("horn(2,0)", "deltak(2,0)", "deltak'(3,1)", "deltathree(0,-1,eq)", "prod(delta 1, horn(2,0))"):
        for n, X in list(objs):
            if n == name:
                objs.append((f"op({n})", opposite_marked(X)))
    return Corpus(objs, budget, [n for n, _ in excluded])


# -- reports --------------------------------------------------------------------------------


@dataclass
class SuiteReport:
    suite: str
    cases: list = field(default_factory=list)
    counterexamples: list = field(default_factory=list)
    records: dict = field(default_factory=dict)
    seconds: float | None = None

    @property
    def passed(self) -> bool:
        return all(c["passed"] for c in self.cases)

    def add(self, case: str, passed: bool, **detail) -> None:
        self.cases.append({"case": case, "passed": bool(passed), **detail})

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "passed": self.passed,
            "cases": len(self.cases),
            "failures": [c for c in self.cases if not c["passed"]],
            "counterexamples": self.counterexamples,
            "records": self.records,
        }
        if timing and self.seconds is not None:
            out["seconds"] = round(self.seconds, 3)
        return out


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        rep = fn(*args, **kwargs)
        rep.seconds = time.perf_counter() - t0
        return rep

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


# -- shrinking ------------------------------------------------------------------------------


def _maximal_cells(U: FinSSet) -> list:
    faces = {f.base for c in U.cells() for f in U.faces[c]}
    return [c for c in reversed(U.cells()) if c not in faces]


def shrink(objects: list, fails) -> list:
    """Delete maximal cells from the objects while ``fails(*objects)`` stays true."""
    objs = list(objects)
    progress = True
    while progress:
        progress = False
        for i, X in enumerate(objs):
            U = X.underlying
            for c in _maximal_cells(U):
                keep = [d for d in U.cells() if d != c]
                sub = subcomplex(U, keep)
                cand = restrict_marks(X, sub)
                cand.underlying.ambient = None
                trial = objs[:i] + [cand] + objs[i + 1:]
                try:
                    still = fails(*trial)
                except Exception:
                    still = False
                if still:
                    objs = trial
                    progress = True
                    break
            if progress:
                break
    return objs


def _describe(X: MarkedSSet) -> dict:
    return {"counts": list(X.underlying.counts()), "marked": X.marked_labels()}


def _record_failure(rep: SuiteReport, names, objs, fails) -> None:
    small = shrink(objs, fails)
    rep.counterexamples.append({"objects": list(names), "shrunk": [_describe(X) for X in small]})


# -- suites ---------------------------------------------------------------------------------


def worked_example_table() -> list:
    """The four simplices of the Delta[2]_t x Delta[1] example with both markings."""
    X, Y = delta_t(2), delta(1)
    T, B = tensor(X, Y), pretensor(X, Y)
    P = T.underlying
    rows = []
    for xs, ys in (((1, 1, 2), (0, 1, 1)), ((0, 1, 2, 2), (0, 0, 0, 1)), ((0, 1, 2), (0, 1, 1)), ((0, 1, 2), (0, 0, 1))):
        s = product_simplex(P, _std_simplex(2, xs), _std_simplex(1, ys))
        rows.append(
            {
                "x": list(xs),
                "y": list(ys),
                "cell": P.labels[s.base] if not s.degeneracy_word else None,
                "pretensor": B.is_marked(s),
                "tensor": T.is_marked(s),
            }
        )
    return rows


WORKED_EXAMPLE_EXPECTED = [(True, True), (True, True), (False, True), (False, False)]


def _std_simplex(n: int, values) -> Simplex:
    vs = tuple(sorted(set(values)))
    surj = tuple(vs.index(v) for v in values)
    S = standard(n)
    return Simplex(S.key_index[vs], word_from_surjection(surj), len(values) - 1)


@_timed
def suite_equivalent_tensors(corpus: Corpus, budget: int = PAIR_BUDGET) -> SuiteReport:
    rep = SuiteReport("equivalent_tensors")
    table = worked_example_table()
    got = [(r["pretensor"], r["tensor"]) for r in table]
    rep.add("worked example", got == WORKED_EXAMPLE_EXPECTED, table=table)
    point = delta(0)
    for a, X, b, Y in corpus.pairs(budget):
        P = product(X.underlying, Y.underlying)
        B, T = pretensor(X, Y, P), tensor(X, Y, P)
        ok = B.underlying == T.underlying and B.marked <= T.marked
        extra = {}
        if X == point or Y == point:
            ok = ok and B.marked == T.marked
            extra["unit"] = True
        rep.add(f"{a} | {b}", ok, pretensor_marks=len(B.marked), tensor_marks=len(T.marked), **extra)
        if not ok:
            _record_failure(
                rep, (a, b), [X, Y], lambda U, V: not pretensor(U, V).marked <= tensor(U, V).marked
            )
    rep.records["pairs"] = len(corpus.pairs(budget))
    return rep


def _reverse(al: tuple, top: int) -> tuple:
    return tuple(top - v for v in reversed(al))


def op_swap_bijection(XY: MarkedSSet, YX: MarkedSSet) -> list:
    """Cells of ``(X x Y)^op`` matched with cells of ``Y^op x X^op`` by reversing paths."""
    P, Q = XY.underlying, YX.underlying
    sigma = []
    for x0, y0, al, be in P.keys:
        a, b = al[-1], be[-1]
        sigma.append(Q.key_index[(y0, x0, _reverse(be, b), _reverse(al, a))])
    return sigma


def _reversal(A: FinSSet, B: FinSSet, m: int) -> list:
    """Match cells keyed by vertex tuples of ``[m]`` under ``i -> m - i``."""
    return [B.key_index[tuple(m - v for v in reversed(key))] for key in A.keys]


def gadget_dualities(max_m: int = 3):
    """Pairs ``(A, B)`` with ``A^op`` expected to equal ``B`` under vertex reversal."""
    for m in range(1, max_m + 1):
        for k in range(m + 1):
            yield f"horn({m},{k})^op = horn({m},{m - k})", horn_marked(m, k), horn_marked(m, m - k), m
            yield f"deltak({m},{k})^op = deltak({m},{m - k})", delta_k(m, k), delta_k(m, m - k), m
            if m >= 2:
                for tag, prime in (("'", 1), ("''", 2)):
                    yield f"deltak{tag}({m},{k})^op = deltak{tag}({m},{m - k})", delta_k(m, k, prime), delta_k(m, m - k, prime), m
    for p in range(max_m + 1):
        yield f"delta {p}^op = delta {p}", delta(p), delta(p), p
        yield f"deltat {p}^op = deltat {p}", delta_t(p), delta_t(p), p


@_timed
def suite_op_duality(corpus: Corpus, budget: int = OP_PAIR_BUDGET) -> SuiteReport:
    rep = SuiteReport("op_duality")
    for name, X in corpus:
        OO = opposite_marked(opposite_marked(X))
        rep.add(f"involution {name}", OO.underlying == X.underlying and OO.marked == X.marked)
    for case, A, B, m in gadget_dualities():
        A = opposite_marked(A)
        rep.add(case, check_isomorphism(A.underlying, B.underlying, _reversal(A.underlying, B.underlying, m), A.marked, B.marked))
    # the explicit reversal must agree with blind search on a few gadgets
    for m, k in ((2, 0), (3, 1)):
        A, B = opposite_marked(horn_marked(m, k)), horn_marked(m, m - k)
        rep.add(f"search horn({m},{k})^op", find_isomorphism(A.underlying, B.underlying, A.marked, B.marked) is not None)
    for a, X, b, Y in corpus.pairs(budget):
        ok = _op_pair_ok(X, Y)
        rep.add(f"(X(x)Y)^op {a} | {b}", ok)
        if not ok:
            _record_failure(rep, (a, b), [X, Y], lambda U, V: not _op_pair_ok(U, V))
    return rep


def _op_pair_ok(X, Y) -> bool:
    T = tensor(X, Y)
    L = opposite_marked(T)
    R = tensor(opposite_marked(Y), opposite_marked(X))
    return check_isomorphism(L.underlying, R.underlying, op_swap_bijection(T, R), L.marked, R.marked)


def _embed_product(part: MarkedSSet, emb_left, emb_right, whole: MarkedSSet):
    U, P = part.underlying, whole.underlying
    cells, marks = set(), set()
    for c in U.cells():
        x0, y0, al, be = U.keys[c]
        t = P.key_index[(emb_left[x0], emb_right[y0], al, be)]
        cells.add(t)
        if c in part.marked:
            marks.add(t)
    return cells, marks


def _sub_marked(X: MarkedSSet, cells, marks) -> MarkedSSet:
    sub = subcomplex(X.underlying, cells)
    pos = {c: i for i, c in enumerate(sub.embedding)}
    return MarkedSSet(sub, [pos[c] for c in marks if c in pos])


def _union_case(X: MarkedSSet, A_cells, A_marks, B_cells, B_marks, S: MarkedSSet, op, left: bool) -> bool:
    """Compare ``(A u B) op S`` with ``(A op S) u (B op S)`` inside ``X op S``."""
    A = _sub_marked(X, A_cells, A_marks)
    B = _sub_marked(X, B_cells, B_marks)
    AB = _sub_marked(X, set(A.underlying.embedding) | set(B.underlying.embedding), set(A_marks) | set(B_marks))
    ids = tuple(range(len(S)))
    whole = op(X, S) if left else op(S, X)

    def place(Z):
        e = Z.underlying.embedding
        return _embed_product(op(Z, S), e, ids, whole) if left else _embed_product(op(S, Z), ids, e, whole)

    c1, m1 = place(A)
    c2, m2 = place(B)
    c3, m3 = place(AB)
    return c1 | c2 == c3 and m1 | m2 == m3


def _faces_of_top(m: int) -> list:
    S = standard(m)
    top = tuple(range(m + 1))
    return [S.key_index[top[:i] + top[i + 1:]] for i in range(m + 1)]


def _marked_spine(m: int) -> MarkedSSet:
    """``Delta[m]`` with every edge ``(i, i+1)`` marked."""
    S = standard(m)
    return MarkedSSet(S, [S.key_index[(i, i + 1)] for i in range(m)], f"spine({m})")


@_timed
def suite_colimit_preservation(corpus: Corpus, budget: int = OP_PAIR_BUDGET) -> SuiteReport:
    rep = SuiteReport("colimit_preservation")
    partners = [(n, S) for n, S in corpus.small(15)]
    ambients = [("delta 2", delta(2)), ("deltat 2", delta_t(2)), ("deltak(2,1)", delta_k(2, 1)), ("delta 3", delta(3)), ("deltak'(3,1)", delta_k(3, 1, 1)), ("delta 2 spine", _marked_spine(2))]
    tensor_failures = []
    for xname, X in ambients:
        U = X.underlying
        m = U.top_dim
        faces = _faces_of_top(m)
        marks = X.marked
        decomps = []
        # boundary as the union of the first face and the remaining faces
        decomps.append(("boundary split", {faces[0]}, {f for f in faces[1:]}))
        # horn pieces
        for k in range(m + 1):
            rest = [f for i, f in enumerate(faces) if i != k]
            decomps.append((f"horn({m},{k}) split", set(rest[:1]), set(rest[1:])))
        # the whole object against a face, and the empty subobject
        decomps.append(("whole with face", {U.cells(m)[0]}, {faces[-1]}))
        decomps.append(("empty with whole", set(), {U.cells(m)[0]}))
        for dname, a, b in decomps:
            A_cells, B_cells = closure(U, a), closure(U, b)
            A_marks = {c for c in marks if c in A_cells}
            B_marks = {c for c in marks if c in B_cells}
            for sname, S in partners:
                if product_size(X, S) > budget:
                    continue
                for left in (True, False):
                    ok = _union_case(X, A_cells, A_marks, B_cells, B_marks, S, pretensor, left)
                    side = "left" if left else "right"
                    rep.add(f"{xname}: {dname} | {sname} ({side})", ok)
                    if not _union_case(X, A_cells, A_marks, B_cells, B_marks, S, tensor, left):
                        tensor_failures.append(f"{xname}: {dname} | {sname} ({side})")
        # two markings on the same underlying object: none against all, and one mark against the rest
        if X.marked:
            whole = set(U.cells())
            marks = sorted(X.marked)
            splits = [("unmarked with marked", set(), set(marks))]
            if len(marks) >= 2:
                splits.append(("first mark with the rest", set(marks[:1]), set(marks[1:])))
            for dname, ma, mb in splits:
                for sname, S in partners:
                    if product_size(X, S) > budget:
                        continue
                    for left in (True, False):
                        side = "left" if left else "right"
                        ok = _union_case(X, whole, ma, whole, mb, S, pretensor, left)
                        rep.add(f"{xname}: {dname} | {sname} ({side})", ok)
                        if not _union_case(X, whole, ma, whole, mb, S, tensor, left):
                            tensor_failures.append(f"{xname}: {dname} | {sname} ({side})")
    rep.records["tensor_non_preservation_witnesses"] = tensor_failures[:10]
    rep.records["tensor_non_preservation_count"] = len(tensor_failures)
    return rep


# -- monoidal -------------------------------------------------------------------------------


def associator(XY_Z: MarkedSSet, X_YZ: MarkedSSet, YZ: FinSSet) -> list:
    """Cells of ``(X x Y) x Z`` matched with cells of ``X x (Y x Z)`` via component triples."""
    L, R = XY_Z.underlying, X_YZ.underlying
    XY = L.factors[0]
    sigma = []
    for c in L.cells():
        pxy, z = projections(L, L.simplex(c))
        x, y = projections(XY, pxy)
        yz = product_simplex(YZ, y, z)
        s = product_simplex(R, x, yz)
        if s.degeneracy_word:
            raise ValueError("associator hit a degenerate simplex")
        sigma.append(s.base)
    return sigma


def _assoc_ok(X, Y, Z, op) -> tuple:
    XY = op(X, Y)
    YZ = op(Y, Z)
    L = op(XY, Z)
    R = op(X, YZ)
    sig = associator(L, R, YZ.underlying)
    return check_isomorphism(L.underlying, R.underlying, sig, L.marked, R.marked), L, R


def _unit_ok(X: MarkedSSet, left: bool) -> bool:
    pt = delta(0)
    T = tensor(pt, X) if left else tensor(X, pt)
    P = T.underlying
    sigma = []
    for c in P.cells():
        x0, y0, al, be = P.keys[c]
        s = (y0, be) if left else (x0, al)
        if word_from_surjection(s[1]):
            return False
        sigma.append(s[0])
    return check_isomorphism(P, X.underlying, sigma, T.marked, X.marked)


def triples(corpus: Corpus, cells: int = TRIPLE_CELLS, budget: int = TRIPLE_BUDGET) -> list:
    """Triples of small nonempty objects whose threefold product stays within ``budget`` cells."""
    small = [(n, X) for n, X in corpus.small(cells) if len(X)]
    return [
        (a, X, b, Y, c, Z)
        for a, X in small
        for b, Y in small
        for c, Z in small
        if _triple_size(X, Y, Z) <= budget
    ]


def _triple_size(X, Y, Z) -> int:
    counts = []
    for W in (X, Y, Z):
        U = W.underlying
        counts.append([len(U.cells(r)) for r in range(U.top_dim + 1)])
    total = 0
    for a, na in enumerate(counts[0]):
        for b, nb in enumerate(counts[1]):
            for c, nc in enumerate(counts[2]):
                total += na * nb * nc * _trinomial_paths(a, b, c)
    return total


def _trinomial_paths(a: int, b: int, c: int) -> int:
    """Jointly surjective, jointly injective triples of surjections onto [a], [b], [c]."""
    from functools import lru_cache

    @lru_cache(maxsize=None)
    def f(i, j, k):
        if (i, j, k) == (0, 0, 0):
            return 1
        total = 0
        for di in (0, 1):
            for dj in (0, 1):
                for dk in (0, 1):
                    if di + dj + dk and i - di >= 0 and j - dj >= 0 and k - dk >= 0:
                        total += f(i - di, j - dj, k - dk)
        return total

    return f(a, b, c)


@_timed
def suite_monoidal(corpus: Corpus, budget: int = TRIPLE_BUDGET) -> SuiteReport:
    rep = SuiteReport("monoidal")
    for name, X in corpus:
        if len(X) == 0:
            continue
        rep.add(f"unit left {name}", _unit_ok(X, True))
        rep.add(f"unit right {name}", _unit_ok(X, False))
    ts = triples(corpus, budget=budget)
    for a, X, b, Y, c, Z in ts:
        ok, _, _ = _assoc_ok(X, Y, Z, tensor)
        rep.add(f"assoc {a} | {b} | {c}", ok)
        if not ok:
            _record_failure(rep, (a, b, c), [X, Y, Z], lambda U, V, W: not _assoc_ok(U, V, W, tensor)[0])
    rep.records["triples"] = len(ts)
    witness = find_pretensor_nonassociativity(corpus)
    rep.records["pretensor_counterexample"] = witness
    rep.add("pretensor non-associativity witness found", witness is not None)
    return rep


def find_pretensor_nonassociativity(corpus: Corpus | None = None):
    """Search small triples for ``(X [] Y) [] Z`` not isomorphic to ``X [] (Y [] Z)``."""
    pool = [("delta 1", delta(1)), ("deltat 1", delta_t(1)), ("delta 0", delta(0)), ("delta 2", delta(2)), ("deltat 2", delta_t(2))]
    for a, X in pool:
        for b, Y in pool:
            for c, Z in pool:
                L = pretensor(pretensor(X, Y), Z)
                R = pretensor(X, pretensor(Y, Z))
                if L.underlying.counts() != R.underlying.counts():
                    continue
                lc, rc = L.marked_counts(), R.marked_counts()
                if lc != rc:
                    return {
                        "triple": [a, b, c],
                        "certificate": "marked counts per dimension differ",
                        "left_marked_counts": list(lc),
                        "right_marked_counts": list(rc),
                    }
                if len(L) <= 200 and find_isomorphism(L.underlying, R.underlying, L.marked, R.marked) is None:
                    return {"triple": [a, b, c], "certificate": "exhaustive isomorphism search failed"}
    return None


def rlp_generators(D: int = 3) -> list:
    from .anodyne import complicial_generators, generator

    gens = list(complicial_generators(D))
    gens += [generator("saturation", (l,)) for l in (-1, 0)]
    gens += [generator("triviality", (p,)) for p in range(D + 1)]
    return gens


@_timed
def suite_oracles(corpus: Corpus, limit: int = 10**5) -> SuiteReport:
    """Pruned map search and lifting checks against unpruned enumeration.

    Problems are deduplicated: map enumeration ignores marks, so it runs once
    per pair of distinct underlying objects.
    """
    from .anodyne import has_rlp, has_rlp_naive, rlp_candidates
    from .sset import enumerate_maps, enumerate_maps_naive, naive_candidate_count

    rep = SuiteReport("oracles")
    unmarked, marked = {}, {}
    for name, X in corpus:
        U = X.underlying
        unmarked.setdefault((U.dims, U.faces), (name, U))
        marked.setdefault((U.dims, U.faces, X.marked), (name, X))
    maps = 0
    for a, U in unmarked.values():
        for b, V in unmarked.values():
            if naive_candidate_count(U, V) > limit:
                continue
            fast = [m.assignment for m in enumerate_maps(U, V)]
            slow = [m.assignment for m in enumerate_maps_naive(U, V, limit)]
            rep.add(f"maps {a} -> {b}", fast == slow, count=len(fast))
            maps += 1
    lifts = 0
    for g in rlp_generators():
        for b, X in marked.values():
            if rlp_candidates(g.realized, X) > limit:
                continue
            fast, slow = has_rlp(g.realized, X), has_rlp_naive(g.realized, X, limit)
            rep.add(f"lift {g.describe()} | {b}", fast.holds == slow.holds, holds=fast.holds)
            lifts += 1
    rep.records = {"map_problems": maps, "lifting_problems": lifts, "limit": limit}
    return rep


SUITES = {
    "equivalent_tensors": suite_equivalent_tensors,
    "op_duality": suite_op_duality,
    "colimit_preservation": suite_colimit_preservation,
    "monoidal": suite_monoidal,
    "oracles": suite_oracles,
}
DEFAULT_SUITES = ("equivalent_tensors", "op_duality", "colimit_preservation", "monoidal")


def run_suites(names=None, corpus: Corpus | None = None) -> list:
    corpus = corpus or default_corpus()
    names = names or list(DEFAULT_SUITES)
    return [SUITES[n](corpus) for n in names]
