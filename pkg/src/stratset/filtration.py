"""Rebuilds the six-stage filtration from ``S0`` to the full tensor marking of
``Delta^l[3]_sharp (x) Delta[m]`` and certifies every entire pushout.

Simplices of ``P = Delta[l+4] x Delta[m]`` are handled as pairs of value
tuples ``(xs, ys)``; :class:`ProductSpace` converts between those and the
cells of the product object.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .anodyne import cofibration_generator, generator, leibniz_tensor
from .delta import MonotoneMap
from .kernels import compose
from .marking import MarkedSSet, delta, delta_k, delta_three, tensor
from .sset import product, standard

STAGE_KIND = {1: "induction", 2: "saturation", 3: "thinness", 4: "thinness", 5: "thinness", 6: "thinness"}
EDGES = ((0, 1), (0, 3), (1, 2), (2, 3))


class FiltrationError(RuntimeError):
    pass


@dataclass(frozen=True)
class ProductSimplex:
    left: MonotoneMap
    right: MonotoneMap

    def __post_init__(self):
        if self.left.domain_dim != self.right.domain_dim:
            raise ValueError("components of a product simplex need equal domain dimension")

    @property
    def dim(self) -> int:
        return self.left.domain_dim

    @classmethod
    def of(cls, xs, ys, n: int, m: int) -> "ProductSimplex":
        return cls(MonotoneMap(len(xs) - 1, n, tuple(xs)), MonotoneMap(len(ys) - 1, m, tuple(ys)))

    def __str__(self) -> str:
        return "[" + ",".join(f"({a},{b})" for a, b in zip(self.left.values, self.right.values)) + "]"


def degeneracy_index(sigma) -> int | None:
    """Largest ``1 <= h <= r`` with ``pr2(h-1) == pr2(h)``; None if pr2 is injective."""
    ys = sigma.right.values if isinstance(sigma, ProductSimplex) else tuple(sigma)
    for h in range(len(ys) - 1, 0, -1):
        if ys[h - 1] == ys[h]:
            return h
    return None


def _last(xs, v) -> int | None:
    for j in range(len(xs) - 1, -1, -1):
        if xs[j] == v:
            return j
    return None


def path_label(xs, ys) -> str:
    return "[" + ",".join(f"({a},{b})" for a, b in zip(xs, ys)) + "]"


class ProductSpace:
    """``Delta[n] x Delta[m]`` with a value-pair index over its cells."""

    def __init__(self, n: int, m: int):
        self.n, self.m = n, m
        self.P = product(standard(n), standard(m))
        kx, ky = standard(n).keys, standard(m).keys
        self.values = []
        for x0, y0, al, be in self.P.keys:
            self.values.append((compose(kx[x0], al), compose(ky[y0], be)))
        self.index = {v: c for c, v in enumerate(self.values)}

    def normalize(self, xs, ys):
        """Return ``(cell, degenerate)`` for the simplex with vertex values ``xs, ys``."""
        kx, ky = [xs[0]], [ys[0]]
        degenerate = False
        for i in range(1, len(xs)):
            if xs[i] == xs[i - 1] and ys[i] == ys[i - 1]:
                degenerate = True
            else:
                kx.append(xs[i])
                ky.append(ys[i])
        return self.index[(tuple(kx), tuple(ky))], degenerate

    def label(self, c: int) -> str:
        return path_label(*self.values[c])


@lru_cache(maxsize=None)
def product_space(n: int, m: int) -> ProductSpace:
    return ProductSpace(n, m)


@lru_cache(maxsize=None)
def _marked_tuples(gadget_key) -> tuple:
    kind, *params = gadget_key
    if kind == "thin'":
        G = delta_k(params[0], params[1], 1)
    elif kind == "thin''":
        G = delta_k(params[0], params[1], 2)
    else:
        G = delta_three(params[0], params[1], kind)
    keys = G.underlying.keys
    return tuple(sorted(keys[c] for c in G.marked))


# -- targets -------------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _objects(l: int, m: int):
    """``(space, S0, target, eq-tensor)`` for the parameters ``(l, m)``."""
    space = product_space(l + 4, m)
    lz = leibniz_tensor(generator("saturation", (l,)).realized, cofibration_generator("boundary", m))
    if lz.domain.underlying != lz.codomain.underlying or lz.codomain.underlying != space.P:
        raise FiltrationError("S0 and the target do not share the underlying product")
    eq = tensor(delta_three(l, -1, "eq"), delta(m), space.P)
    return space, lz.domain, lz.codomain, eq


def build_S0(l: int, m: int) -> MarkedSSet:
    _check_params(l, m)
    return _objects(l, m)[1]


def target(l: int, m: int) -> MarkedSSet:
    _check_params(l, m)
    return _objects(l, m)[2]


def _check_params(l: int, m: int) -> None:
    if l < -1 or m < 0:
        raise FiltrationError(f"need l >= -1 and m >= 0, got l={l}, m={m}")


# -- degeneracy-index criterion -------------------------------------------------------------------------------


def index_criterion(l: int, m: int) -> dict:
    """Compare the tensor marking of ``Delta^l[3]_kind (x) Delta[m]`` with the
    degeneracy-index criterion on every cell."""
    _check_params(l, m)
    space = product_space(l + 4, m)
    std = standard(l + 4)
    report = {"params": [l, m], "cells": len(space.P), "kinds": {}}
    for kind in ("eq", "sharp"):
        G = delta_three(l, -1, kind)
        T = tensor(G, delta(m), space.P)
        mismatches = []
        for c, (xs, ys) in enumerate(space.values):
            if len(xs) == 1:
                continue
            h = degeneracy_index(ys)
            crit = False
            if h is not None:
                front = xs[: h + 1]
                vs = tuple(sorted(set(front)))
                if len(vs) == len(front):
                    crit = std.key_index[vs] in G.marked
                else:
                    crit = True
            if crit != (c in T.marked):
                mismatches.append(space.label(c))
        report["kinds"][kind] = {"marked": len(T.marked), "mismatches": mismatches}
    report["passed"] = all(not v["mismatches"] for v in report["kinds"].values())
    return report


# -- classification -------------------------------------------------------------------------


@dataclass
class ExtraMark:
    sigma: ProductSimplex
    h: int
    sigma_prime: tuple
    sigma_dprime: tuple
    stage: int | None
    cell: int = -1

    def to_json(self) -> dict:
        return {
            "sigma": str(self.sigma),
            "h": self.h,
            "sigma_prime": list(self.sigma_prime),
            "sigma_dprime": list(self.sigma_dprime),
            "stage": self.stage,
        }


def on_saturation_path(xs, ys, l: int, m: int) -> bool:
    """Does some saturation attaching map carry a sharp-marked simplex onto ``(xs, ys)``?"""
    for c in range(0, min(m, l + 4) + 1):
        block = 0
        ok = True
        low = [j for j in range(len(xs)) if xs[j] <= l]
        if any(xs[low[i]] == xs[low[i + 1]] for i in range(len(low) - 1)):
            continue
        for a, b in zip(xs, ys):
            if a <= l:
                ok = b <= c
            elif a <= l + 3:
                ok = b == c
                block += 1
            else:
                ok = b >= c
                block += b == c
            if not ok:
                break
        if ok and block >= 2:
            return True
    return False


def stage_predicate(xs, ys, dprime, l: int, m: int) -> int | None:
    """First stage whose construction is meant to mark the extra mark ``(xs, ys)``."""
    if l >= 0 and any(i not in xs for i in range(l + 1)):
        return 1
    if on_saturation_path(xs, ys, l, m):
        return 2
    if dprime == (1, 2):
        return 3
    if dprime == (0, 1):
        hits = (l + 3 in xs) + (l + 4 in xs)
        if hits <= 1:
            return 4
        if _last(xs, l + 3) == _last(xs, l + 2) + 1:
            return 5
        return 6
    return None


def _decorate(xs, ys, l: int, m: int) -> tuple:
    r = len(xs) - 1
    if sorted(set(ys)) != list(range(m + 1)):
        raise FiltrationError(f"extra mark {path_label(xs, ys)} has non-surjective second projection")
    h = degeneracy_index(ys)
    if h is None:
        raise FiltrationError(f"extra mark {path_label(xs, ys)} has no degeneracy index")
    if any(ys[j] != m - r + j for j in range(h, r + 1)):
        raise FiltrationError(f"extra mark {path_label(xs, ys)} has an unexpected tail after h={h}")
    front = xs[: h + 1]
    sp = tuple(v for v in front if v <= l)
    sd = tuple(v - l - 1 for v in front if v > l)
    if len(sd) != 2 or sd[0] == sd[1] or sd not in EDGES:
        raise FiltrationError(f"extra mark {path_label(xs, ys)} has front face {front} outside the edge list")
    if len(sp) != h - 1 or any(sp[i] >= sp[i + 1] for i in range(len(sp) - 1)):
        raise FiltrationError(f"extra mark {path_label(xs, ys)} has a degenerate lower part")
    return h, sp, sd


def classify_extra_marks(l: int, m: int) -> list:
    """All cells marked in the target but not in ``S0``, with their decorations."""
    _check_params(l, m)
    space, S0, T, _ = _objects(l, m)
    out = []
    for c in sorted(T.marked - S0.marked, key=lambda c: (len(space.values[c][0]), space.values[c])):
        xs, ys = space.values[c]
        h, sp, sd = _decorate(xs, ys, l, m)
        st = stage_predicate(xs, ys, sd, l, m)
        out.append(ExtraMark(ProductSimplex.of(xs, ys, l + 4, m), h, sp, sd, st, c))
    return out


# -- stages ---------------------------------------------------------------------------------


@dataclass
class StageRecord:
    stage: int
    anodyne: str
    before: frozenset
    after: frozenset
    attachments: list = field(default_factory=list)
    verified: bool = True
    failures: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def added(self) -> frozenset:
        return self.after - self.before


class _State:
    def __init__(self, space: ProductSpace, marks, l: int, m: int):
        self.space = space
        self.marks = set(marks)
        self.origin = {c: 0 for c in marks}
        self.l, self.m = l, m

    def is_marked(self, xs, ys) -> bool:
        c, deg = self.space.normalize(xs, ys)
        return deg or c in self.marks

    def source(self, xs, ys):
        c, deg = self.space.normalize(xs, ys)
        return "degenerate" if deg else self.origin.get(c)

    def add(self, c: int, stage: int) -> bool:
        if c in self.marks:
            return False
        self.marks.add(c)
        self.origin[c] = stage
        return True


def _image(vals, tau) -> tuple:
    return tuple(vals[i] for i in tau)


def _stage1(state: _State, l: int, m: int, rec: StageRecord, sub_certs: list) -> None:
    if l == -1:
        rec.notes["identity"] = True
        return
    sub = run_filtration(l - 1, m)
    sub_certs.append(sub)
    if not sub.passed:
        rec.verified = False
        rec.failures.append({"reason": "induction hypothesis failed", "params": [l - 1, m]})
        return
    sspace, sS0, sT, _ = _objects(l - 1, m)
    for i in range(l + 1):
        cof = tuple(v if v < i else v + 1 for v in range(l + 4))
        bad = []
        for c in sorted(sS0.marked):
            xs, ys = sspace.values[c]
            if not state.is_marked(_image(cof, xs), ys):
                bad.append(sspace.label(c))
        added = 0
        for c in sorted(sT.marked):
            xs, ys = sspace.values[c]
            t, deg = state.space.normalize(_image(cof, xs), ys)
            if not deg and state.add(t, 1):
                added += 1
        rec.attachments.append({"face": i, "added": added, "map": f"[{' '.join(map(str, cof))}] : {l + 3} -> {l + 4}"})
        if bad:
            rec.verified = False
            rec.failures.append({"face": i, "unmarked": bad[:5]})


def _stage2(state: _State, l: int, m: int, rec: StageRecord) -> None:
    redundant = 0
    pending = []
    for r in range(max(m, l + 4), l + 4 + m + 1):
        c = l + 4 + m - r
        right = r - l - 5
        eq_marks = _marked_tuples(("eq", l, right))
        sharp_marks = _marked_tuples(("sharp", l, right))
        for b in itertools.combinations_with_replacement(range(c + 1), l + 1):
            phi = [(i, b[i]) for i in range(l + 1)]
            phi += [(i, c) for i in range(l + 1, l + 5)]
            phi += [(l + 4, m - r + i) for i in range(l + 5, r + 1)]
            xs = tuple(p[0] for p in phi)
            ys = tuple(p[1] for p in phi)
            bad = [t for t in eq_marks if not state.is_marked(_image(xs, t), _image(ys, t))]
            att = {"r": r, "b": list(b), "map": path_label(xs, ys)}
            if bad:
                rec.verified = False
                rec.failures.append({"map": att["map"], "unmarked": [list(t) for t in bad[:5]]})
            new = 0
            for t in sharp_marks:
                cell, deg = state.space.normalize(_image(xs, t), _image(ys, t))
                if not deg and cell not in state.marks:
                    pending.append(cell)
                    new += 1
            if not new:
                redundant += 1
            att["new"] = new
            rec.attachments.append(att)
    for cell in pending:
        state.add(cell, 2)
    rec.notes["redundant_attachments"] = redundant


def _psi_candidates(stage: int, xs, ys, l: int, m: int):
    """Return ``(z, w, {reading: inserted vertex})`` for a target of a thinness stage."""
    r = len(xs) - 1
    w = None
    if stage == 3:
        z = _last(xs, l + 3)
        return z, w, {"standard": (l + 4, m - r + z)}
    if stage == 4:
        z = _last(xs, l + 2)
        nxt = xs[z + 1] if z < r else None
        top = l + 4 if (z == r or nxt == l + 4) else (l + 3 if nxt == l + 3 else None)
        if top is None:
            return z, w, {}
        return z, w, {"literal": (top, z), "consistent": (top, m - r + z)}
    if stage == 5:
        z = _last(xs, l + 3)
        return z, w, {"literal": (m - r + z, l + 4), "consistent": (l + 4, m - r + z)}
    z = _last(xs, l + 3)
    w = _last(xs, l + 2)
    return z, w, {"standard": (l + 4, m - r + z)}


def _stage_targets(stage: int, state: _State, extras, l: int, m: int) -> list:
    out = []
    for e in extras:
        if e.cell in state.marks:
            continue
        xs = e.sigma.left.values
        sd = e.sigma_dprime
        if stage == 3 and sd == (1, 2):
            out.append(e)
        elif stage in (4, 5, 6) and sd == (0, 1):
            both = l + 3 in xs and l + 4 in xs
            consecutive = both and _last(xs, l + 3) == _last(xs, l + 2) + 1
            if stage == 4 and not both:
                out.append(e)
            elif stage == 5 and consecutive:
                out.append(e)
            elif stage == 6 and both and not consecutive:
                out.append(e)
    return out


def _case(tau, z: int, r1: int) -> str:
    need = {j for j in (z, z + 1, z + 2) if j <= r1}
    if need <= set(tau):
        return "contains z,z+1,z+2"
    full = tuple(range(r1 + 1))
    if tau == full[: z + 2] + full[z + 3:]:
        return "face z+2"
    if tau == full[:z] + full[z + 1:]:
        return "face z"
    return "other"


def _run_thinness(stage: int, state: _State, targets, l: int, m: int, reading: str):
    """Attach thinness extensions for ``targets`` in ascending ``z``. Returns
    ``(attachments, failures, cases, additions)`` without touching ``state``."""
    marks = set(state.marks)
    origin = dict(state.origin)
    space = state.space
    attachments, failures, additions = [], [], []
    cases: dict = {}

    def marked(xs, ys):
        c, deg = space.normalize(xs, ys)
        return deg or c in marks

    by_z: dict = {}
    for e in targets:
        xs, ys = e.sigma.left.values, e.sigma.right.values
        z, w, opts = _psi_candidates(stage, xs, ys, l, m)
        by_z.setdefault(z, []).append((e, z, w, opts.get(reading)))
    for z in sorted(by_z):
        batch = []
        for e, z, w, vertex in sorted(by_z[z], key=lambda t: (len(t[0].sigma.left.values), t[0].cell)):
            xs, ys = e.sigma.left.values, e.sigma.right.values
            r = len(xs) - 1
            att = {"sigma": str(e.sigma), "r": r, "z": z}
            if w is not None:
                att["w"] = w
            if vertex is None:
                failures.append({**att, "reason": "no inserted vertex for this reading"})
                continue
            px = xs[: z + 1] + (vertex[0],) + xs[z + 1:]
            py = ys[: z + 1] + (vertex[1],) + ys[z + 1:]
            att["psi"] = path_label(px, py)
            in_range = 0 <= vertex[0] <= l + 4 and 0 <= vertex[1] <= m
            monotone = all(px[i] <= px[i + 1] and py[i] <= py[i + 1] for i in range(r + 1))
            if not (in_range and monotone):
                failures.append({**att, "reason": "not a simplex of the product"})
                continue
            dropped = (px[: z + 1] + px[z + 2:], py[: z + 1] + py[z + 2:])
            if dropped != (xs, ys):
                failures.append({**att, "reason": "psi does not restrict to sigma"})
                continue
            bad = None
            local: dict = {}
            for tau in _marked_tuples(("thin'", r + 1, z + 1)):
                ix, iy = _image(px, tau), _image(py, tau)
                if not marked(ix, iy):
                    bad = path_label(ix, iy)
                    break
                cnum, deg = space.normalize(ix, iy)
                src = "degenerate" if deg else origin.get(cnum)
                key = (_case(tau, z, r + 1), src)
                local[key] = local.get(key, 0) + 1
            if bad is not None:
                failures.append({**att, "reason": "attaching map not marking-preserving", "tau": bad})
                continue
            for key, n in local.items():
                cases[key] = cases.get(key, 0) + n
            attachments.append(att)
            batch.append(e.cell)
        for c in batch:
            if c not in marks:
                marks.add(c)
                origin[c] = stage
                additions.append(c)
    return attachments, failures, cases, additions


def _thinness_stage(stage: int, state: _State, extras, l: int, m: int, rec: StageRecord) -> None:
    targets = _stage_targets(stage, state, extras, l, m)
    readings = ["standard"] if stage in (3, 6) else ["literal", "consistent"]
    tried = []
    chosen = None
    for reading in readings:
        result = _run_thinness(stage, state, targets, l, m, reading)
        tried.append({"reading": reading, "passed": not result[1], "failures": len(result[1])})
        if not result[1]:
            chosen = (reading, result)
            break
    rec.notes["readings"] = tried
    rec.notes["targets"] = len(targets)
    if chosen is None:
        reading, result = readings[-1], _run_thinness(stage, state, targets, l, m, readings[-1])
        rec.verified = False
        rec.failures.extend(result[1][:10])
    else:
        reading, result = chosen
    rec.notes["reading_used"] = reading
    attachments, _, cases, additions = result
    rec.attachments.extend(attachments)
    rec.notes["cases"] = [
        {"case": k[0], "source": k[1], "count": v} for k, v in sorted(cases.items(), key=lambda kv: (kv[0][0], str(kv[0][1])))
    ]
    for c in additions:
        state.add(c, stage)


@dataclass
class FiltrationCertificate:
    params: tuple
    stages: list
    classifier: list
    target_marks: frozenset
    space: ProductSpace
    checks: dict = field(default_factory=dict)
    sub_certificates: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.checks.values()) and all(s.verified for s in self.stages)

    @property
    def total_added(self) -> int:
        return sum(len(s.added) for s in self.stages)

    def to_json(self, full: bool = True) -> dict:
        lab = self.space.label
        order = lambda cs: sorted(cs, key=lambda c: (len(self.space.values[c][0]), self.space.values[c]))
        stages = []
        for s in self.stages:
            entry = {
                "stage": s.stage,
                "anodyne": s.anodyne,
                "verified": s.verified,
                "marks_before": len(s.before),
                "marks_after": len(s.after),
                "added": [lab(c) for c in order(s.added)],
                "attachments": len(s.attachments),
                "notes": s.notes,
                "failures": s.failures,
            }
            if full:
                entry["attaching_maps"] = s.attachments
            stages.append(entry)
        return {
            "params": {"l": self.params[0], "m": self.params[1]},
            "passed": self.passed,
            "total_added": self.total_added,
            "checks": self.checks,
            "classifier": [e.to_json() for e in self.classifier],
            "stages": stages,
        }


def stage(i: int, current: MarkedSSet, l: int, m: int, extras=None):
    """Run a single stage on ``current``; returns ``(next, record)``."""
    if i not in STAGE_KIND:
        raise FiltrationError(f"stage must be 1..6, got {i}")
    space, _, _, _ = _objects(l, m)
    if current.underlying != space.P:
        raise FiltrationError("current object does not live on the expected product")
    if extras is None:
        extras = classify_extra_marks(l, m)
    state = _State(space, current.marked, l, m)
    rec = StageRecord(i, STAGE_KIND[i], frozenset(current.marked), frozenset())
    if i == 1:
        _stage1(state, l, m, rec, [])
    elif i == 2:
        _stage2(state, l, m, rec)
    else:
        _thinness_stage(i, state, extras, l, m, rec)
    rec.after = frozenset(state.marks)
    return current.with_marks(state.marks), rec


@lru_cache(maxsize=None)
def run_filtration(l: int, m: int) -> FiltrationCertificate:
    _check_params(l, m)
    space, S0, T, _ = _objects(l, m)
    extras = classify_extra_marks(l, m)
    state = _State(space, S0.marked, l, m)
    stages, subs = [], []
    for i in range(1, 7):
        rec = StageRecord(i, STAGE_KIND[i], frozenset(state.marks), frozenset())
        if i == 1:
            _stage1(state, l, m, rec, subs)
        elif i == 2:
            _stage2(state, l, m, rec)
        else:
            _thinness_stage(i, state, extras, l, m, rec)
        rec.after = frozenset(state.marks)
        stages.append(rec)
    by_stage = {i: frozenset(e.cell for e in extras if e.stage == i) for i in range(1, 7)}
    all_added = [s.added for s in stages]
    checks = {
        "S0_underlying_equal": S0.underlying == T.underlying,
        "S0_within_target": S0.marked <= T.marked,
        "classification_total": all(e.stage is not None for e in extras),
        "marks_increase": all(s.before <= s.after for s in stages),
        "stages_within_target": all(s.after <= T.marked for s in stages),
        "stage_marks_match_classifier": all(stages[i - 1].added == by_stage[i] for i in range(1, 7)),
        "stages_disjoint": sum(len(a) for a in all_added) == len(frozenset().union(*all_added)),
        "final_equals_target": frozenset(state.marks) == T.marked,
    }
    return FiltrationCertificate((l, m), stages, extras, T.marked, space, checks, subs)


# -- triviality ------------------------------------------------------------------------------


@dataclass
class TrivialityCertificate:
    params: tuple
    checks: dict
    attached: list
    below_p_differences: list

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        p, m, N = self.params
        return {
            "params": {"p": p, "m": m, "N": N},
            "passed": self.passed,
            "checks": self.checks,
            "attached_count": len(self.attached),
            "attached": self.attached,
            "below_p_differences": self.below_p_differences,
        }


def triviality_filtration(p: int, m: int, N: int) -> TrivialityCertificate:
    """Close the Leibniz domain of (marking inclusion) x (boundary inclusion)
    under triviality extensions of dimension > N."""
    if not p > N >= 0 or m < 0:
        raise FiltrationError(f"need p > N >= 0 and m >= 0, got p={p}, m={m}, N={N}")
    lz = leibniz_tensor(generator("triviality", (p,)).realized, cofibration_generator("boundary", m))
    D, T = lz.domain, lz.codomain
    U = T.underlying
    same = D.underlying == U
    below = sorted(U.labels[c] for c in (D.marked ^ T.marked) if U.dims[c] < p) if same else ["<underlying differs>"]
    marks = set(D.marked)
    attached = []
    ok_dims = True
    for c in sorted(T.marked - D.marked):
        r = U.dims[c]
        if r < p or r <= N:
            ok_dims = False
            continue
        gen = generator("triviality", (r,))
        top = gen.codomain.underlying.cells(r)[0]
        if top in gen.new_marks():
            marks.add(c)
            attached.append(U.labels[c])
    checks = {
        "same_underlying": same,
        "marks_below_p_agree": same and not below,
        "attachments_above_threshold": ok_dims,
        "closure_equals_target": same and frozenset(marks) == T.marked,
        "domain_within_target": D.marked <= T.marked,
    }
    return TrivialityCertificate((p, m, N), checks, attached, below)

