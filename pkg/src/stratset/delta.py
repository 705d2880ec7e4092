"""Arithmetic of the simplex category.

A :class:`MonotoneMap` ``[r] -> [n]`` is stored by its value sequence.
The empty object ``[-1]`` is allowed, so maps out of it are empty.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from . import kernels


class DeltaError(ValueError):
    """Raised on malformed maps or out-of-range parameters."""


@dataclass(frozen=True, order=True)
class MonotoneMap:
    domain_dim: int
    codomain_dim: int
    values: tuple

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if self.domain_dim < -1 or self.codomain_dim < -1:
            raise DeltaError("dimensions must be >= -1")
        if len(vals) != self.domain_dim + 1:
            raise DeltaError(
                f"expected {self.domain_dim + 1} values for domain [{self.domain_dim}], got {len(vals)}"
            )
        if not kernels.is_monotone(vals, self.codomain_dim):
            raise DeltaError(f"{list(vals)} is not a monotone map into [{self.codomain_dim}]")

    def __call__(self, i: int) -> int:
        return self.values[i]

    def __str__(self) -> str:
        return f"[{' '.join(map(str, self.values))}] : {self.domain_dim} -> {self.codomain_dim}"

    @property
    def is_injective(self) -> bool:
        return len(set(self.values)) == len(self.values)

    @property
    def is_surjective(self) -> bool:
        return set(self.values) == set(range(self.codomain_dim + 1))

    @property
    def is_identity(self) -> bool:
        return self.domain_dim == self.codomain_dim and self.values == tuple(range(self.domain_dim + 1))

    def to_json(self) -> dict:
        return {"values": list(self.values), "codomain_dim": self.codomain_dim}

    @classmethod
    def from_json(cls, data: dict) -> "MonotoneMap":
        vals = tuple(data["values"])
        return cls(len(vals) - 1, int(data["codomain_dim"]), vals)

    @classmethod
    def parse(cls, text: str) -> "MonotoneMap":
        m = re.fullmatch(r"\s*\[([-\d\s]*)\]\s*:\s*(-?\d+)\s*->\s*(-?\d+)\s*", text)
        if not m:
            raise DeltaError(f"cannot parse monotone map {text!r}")
        vals = tuple(int(v) for v in m.group(1).split())
        r, n = int(m.group(2)), int(m.group(3))
        if len(vals) != r + 1:
            raise DeltaError(f"domain [{r}] needs {r + 1} values, got {len(vals)}")
        return cls(r, n, vals)


def monotone(values, codomain_dim: int) -> MonotoneMap:
    values = tuple(values)
    return MonotoneMap(len(values) - 1, codomain_dim, values)


def identity(n: int) -> MonotoneMap:
    return MonotoneMap(n, n, tuple(range(n + 1)))


def compose(g: MonotoneMap, f: MonotoneMap) -> MonotoneMap:
    """The composite ``g o f`` (apply ``f`` first)."""
    if f.codomain_dim != g.domain_dim:
        raise DeltaError(
            f"cannot compose: f has codomain [{f.codomain_dim}] but g has domain [{g.domain_dim}]"
        )
    return MonotoneMap(f.domain_dim, g.codomain_dim, kernels.compose(g.values, f.values))


def generator(n: int, i: int, kind: str) -> MonotoneMap:
    """Coface ``[n-1] -> [n]`` skipping ``i`` or codegeneracy ``[n+1] -> [n]`` repeating ``i``."""
    if n < 0 or not 0 <= i <= n:
        raise DeltaError(f"generator index out of range: need 0 <= i <= n, got i={i}, n={n}")
    if kind == "face":
        return MonotoneMap(n - 1, n, tuple(j for j in range(n + 1) if j != i))
    if kind == "degeneracy":
        vals = list(range(n + 1))
        vals.insert(i, i)
        return MonotoneMap(n + 1, n, tuple(vals))
    raise DeltaError(f"unknown generator kind {kind!r}")


def degeneracy_partition(p: int, q: int) -> tuple[MonotoneMap, MonotoneMap]:
    if p < 0 or q < 0:
        raise DeltaError("partition sizes must be >= 0")
    r = p + q
    return (
        MonotoneMap(r, p, tuple(min(i, p) for i in range(r + 1))),
        MonotoneMap(r, q, tuple(max(i - p, 0) for i in range(r + 1))),
    )


def face_partition(p: int, q: int) -> tuple[MonotoneMap, MonotoneMap]:
    if p < 0 or q < 0:
        raise DeltaError("partition sizes must be >= 0")
    r = p + q
    return (
        MonotoneMap(p, r, tuple(range(p + 1))),
        MonotoneMap(q, r, tuple(p + i for i in range(q + 1))),
    )


def ez_factorize(f: MonotoneMap) -> tuple[MonotoneMap, MonotoneMap]:
    """Unique factorization ``f = injection o surjection``."""
    surj, image = kernels.ez_factor(f.values)
    k = len(image) - 1
    return MonotoneMap(f.domain_dim, k, surj), MonotoneMap(k, f.codomain_dim, image)

