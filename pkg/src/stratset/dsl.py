"""Expression language for marked simplicial sets.

Grammar (whitespace-insensitive)::

    expr    := simple | call
    simple  := "delta" INT | "deltat" INT | "boundary" INT | "delta3eq" | "delta3sharp"
    call    := NAME "(" args ")"

See ``docs/grammar.md`` for the full list of constructors.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union as _U

from . import marking
from .marking import MarkedSSet
from .sset import subcomplex


class DSLError(ValueError):
    """Parse or range error; ``pos`` is a 0-based character offset."""

    def __init__(self, message: str, pos: int | None = None, kind: str = "syntax"):
        self.pos = pos
        self.kind = kind
        self.message = message
        where = f" at position {pos}" if pos is not None else ""
        super().__init__(f"{kind} error{where}: {message}")


# -- AST ------------------------------------------------------------------------------


@dataclass(frozen=True)
class Delta:
    m: int


@dataclass(frozen=True)
class DeltaT:
    m: int


@dataclass(frozen=True)
class Boundary:
    m: int


@dataclass(frozen=True)
class Horn:
    m: int
    k: int


@dataclass(frozen=True)
class DeltaK:
    m: int
    k: int
    prime: int = 0


@dataclass(frozen=True)
class Delta3Eq:
    pass


@dataclass(frozen=True)
class Delta3Sharp:
    pass


@dataclass(frozen=True)
class DeltaThree:
    left: int
    right: int
    kind: str


@dataclass(frozen=True)
class Join:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Prod:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pretensor:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Tensor:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Op:
    arg: "Expr"


@dataclass(frozen=True)
class Union:
    left: "Expr"
    right: "Expr"
    ambient: "Expr"


Expr = _U[Delta, DeltaT, Boundary, Horn, DeltaK, Delta3Eq, Delta3Sharp, DeltaThree, Join, Prod, Pretensor, Tensor, Op, Union]

BINARY = {"join": Join, "prod": Prod, "pretensor": Pretensor, "tensor": Tensor}
SIMPLE = {"delta": Delta, "deltat": DeltaT, "boundary": Boundary}
DELTAK = {"deltak": 0, "deltak'": 1, "deltak''": 2}

# -- parsing ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>-?\d+)|(?P<name>[a-z][a-z0-9]*'{0,2})|(?P<punct>[(),@]))")


def _tokenize(text: str) -> list:
    toks, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise DSLError(f"unexpected character {text[start]!r}", start)
        kind = m.lastgroup
        start = m.start(kind)
        toks.append((kind, m.group(kind), start))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None, value=None):
        tok = self.toks[self.i]
        if (kind and tok[0] != kind) or (value is not None and tok[1] != value):
            want = repr(value) if value is not None else kind
            got = "end of input" if tok[0] == "end" else repr(tok[1])
            raise DSLError(f"expected {want}, found {got}", tok[2])
        self.i += 1
        return tok

    def integer(self) -> tuple:
        tok = self.take("int")
        return int(tok[1]), tok[2]

    def size(self) -> tuple:
        """An integer, or ``delta n`` standing for the size ``n`` (used by deltathree)."""
        if self.peek()[0] == "name" and self.peek()[1] == "delta":
            self.take()
        return self.integer()

    def expr(self, allow_empty: bool = False) -> Expr:
        kind, name, pos = self.take("name")
        if name in SIMPLE:
            m, mpos = self.integer()
            lo = -1 if (name == "delta" and allow_empty) else 0
            if m < lo:
                hint = " (delta -1 is allowed only inside join or deltathree)" if name == "delta" else ""
                raise DSLError(f"{name} needs m >= {lo}, got {m}{hint}", mpos, "range")
            return SIMPLE[name](m)
        if name == "delta3eq":
            return Delta3Eq()
        if name == "delta3sharp":
            return Delta3Sharp()
        if name not in BINARY and name not in DELTAK and name not in ("horn", "op", "union", "deltathree"):
            raise DSLError(f"unknown constructor {name!r}", pos)
        self.take("punct", "(")
        if name in BINARY:
            left = self.expr(allow_empty=name == "join")
            self.take("punct", ",")
            right = self.expr(allow_empty=name == "join")
            out = BINARY[name](left, right)
        elif name == "op":
            out = Op(self.expr())
        elif name == "union":
            left = self.expr()
            self.take("punct", ",")
            right = self.expr()
            self.take("punct", "@")
            out = Union(left, right, self.expr())
        elif name == "deltathree":
            left, lpos = self.size()
            self.take("punct", ",")
            right, rpos = self.size()
            self.take("punct", ",")
            kpos = self.peek()[2]
            kind = self.take("name")[1]
            if kind not in ("eq", "sharp"):
                raise DSLError(f"deltathree kind must be eq or sharp, got {kind!r}", kpos)
            for v, p in ((left, lpos), (right, rpos)):
                if v < -1:
                    raise DSLError(f"deltathree sizes need -1 <= l, got {v}", p, "range")
            out = DeltaThree(left, right, kind)
        else:
            m, mpos = self.integer()
            self.take("punct", ",")
            k, kpos = self.integer()
            low = 2 if DELTAK.get(name, 0) else 1
            if m < low:
                raise DSLError(f"{name} needs m >= {low}, got m={m}", mpos, "range")
            if not 0 <= k <= m:
                raise DSLError(f"{name} needs 0<=k<=m, got k={k} with m={m}", kpos, "range")
            out = Horn(m, k) if name == "horn" else DeltaK(m, k, DELTAK[name])
        self.take("punct", ")")
        return out


def parse(text: str) -> Expr:
    p = _Parser(text)
    e = p.expr()
    p.take("end")
    return e


# -- printing ----------------------------------------------------------------------------

_BINARY_NAME = {cls: name for name, cls in BINARY.items()}


def show(e: Expr) -> str:
    """Canonical text for ``e``; ``parse(show(e)) == e``."""
    if isinstance(e, Delta):
        return f"delta {e.m}"
    if isinstance(e, DeltaT):
        return f"deltat {e.m}"
    if isinstance(e, Boundary):
        return f"boundary {e.m}"
    if isinstance(e, Horn):
        return f"horn({e.m},{e.k})"
    if isinstance(e, DeltaK):
        return f"deltak{chr(39) * e.prime}({e.m},{e.k})"
    if isinstance(e, Delta3Eq):
        return "delta3eq"
    if isinstance(e, Delta3Sharp):
        return "delta3sharp"
    if isinstance(e, DeltaThree):
        return f"deltathree({e.left},{e.right},{e.kind})"
    if isinstance(e, Op):
        return f"op({show(e.arg)})"
    if isinstance(e, Union):
        return f"union({show(e.left)}, {show(e.right)} @ {show(e.ambient)})"
    if type(e) in _BINARY_NAME:
        return f"{_BINARY_NAME[type(e)]}({show(e.left)}, {show(e.right)})"
    raise TypeError(f"not an expression: {e!r}")


# -- evaluation --------------------------------------------------------------------------


def _embed_by_keys(A: MarkedSSet, B: MarkedSSet, what: str) -> list:
    """Cell embedding of ``A`` into ``B`` matching cell keys; raises unless ``A`` is a subcomplex."""
    U, V = A.underlying, B.underlying
    try:
        emb = [V.key_index[k] for k in U.keys]
    except KeyError as exc:
        raise DSLError(f"{what} is not a subobject of the ambient (cell {exc.args[0]} missing)", None, "range") from None
    for c in U.cells():
        for f, g in zip(U.faces[c], V.faces[emb[c]]):
            if emb[f.base] != g.base or f.degeneracy_word != g.degeneracy_word:
                raise DSLError(f"{what} is not a subobject of the ambient (faces differ)", None, "range")
    return emb


def evaluate(e: Expr) -> MarkedSSet:
    if isinstance(e, Delta):
        return marking.delta(e.m)
    if isinstance(e, DeltaT):
        return marking.delta_t(e.m)
    if isinstance(e, Boundary):
        return marking.boundary_marked(e.m)
    if isinstance(e, Horn):
        return marking.horn_marked(e.m, e.k)
    if isinstance(e, DeltaK):
        return marking.delta_k(e.m, e.k, e.prime)
    if isinstance(e, Delta3Eq):
        return marking.delta3_eq()
    if isinstance(e, Delta3Sharp):
        return marking.delta3_sharp()
    if isinstance(e, DeltaThree):
        return marking.delta_three(e.left, e.right, e.kind)
    if isinstance(e, Op):
        return marking.opposite_marked(evaluate(e.arg))
    if isinstance(e, Join):
        return marking.join_marked(evaluate(e.left), evaluate(e.right))
    if isinstance(e, Prod):
        return marking.product_marked(evaluate(e.left), evaluate(e.right))
    if isinstance(e, Pretensor):
        return marking.pretensor(evaluate(e.left), evaluate(e.right))
    if isinstance(e, Tensor):
        return marking.tensor(evaluate(e.left), evaluate(e.right))
    if isinstance(e, Union):
        # the ambient fixes the underlying object; marks come from the operands
        amb = evaluate(e.ambient)
        A, B = evaluate(e.left), evaluate(e.right)
        ea = _embed_by_keys(A, amb, "left operand")
        eb = _embed_by_keys(B, amb, "right operand")
        sub = subcomplex(amb.underlying, set(ea) | set(eb), name=show(e))
        pos = {c: i for i, c in enumerate(sub.embedding)}
        marks = {pos[ea[c]] for c in A.marked} | {pos[eb[c]] for c in B.marked}
        return MarkedSSet(sub, marks, show(e))
    raise TypeError(f"not an expression: {e!r}")


def build(text: str) -> MarkedSSet:
    X = evaluate(parse(text))
    X.name = show(parse(text))
    return X
