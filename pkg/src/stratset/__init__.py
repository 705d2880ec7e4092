"""Finite marked simplicial sets, Gray tensor markings and their checks."""
from .delta import MonotoneMap, compose, ez_factorize, identity, monotone
from .dsl import build, parse, show
from .kernels import BACKEND
from .marking import MarkedSSet, pretensor, tensor
from .sset import FinSSet, Simplex, product, standard

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "FinSSet",
    "MarkedSSet",
    "MonotoneMap",
    "Simplex",
    "build",
    "compose",
    "ez_factorize",
    "identity",
    "monotone",
    "parse",
    "pretensor",
    "product",
    "show",
    "standard",
    "tensor",
]
