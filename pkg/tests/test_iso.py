import random

import pytest

from stratset.iso import check_isomorphism, find_isomorphism, is_isomorphic
from stratset.marking import delta_k, delta_t
from stratset.sset import FinSSet, Simplex, boundary, horn, join, product, standard


def shuffled(X: FinSSet, seed: int):
    """A copy of ``X`` with cells renumbered randomly within each dimension."""
    rng = random.Random(seed)
    perm = []
    for r in range(X.top_dim + 1):
        cells = X.cells(r)
        new = cells[:]
        rng.shuffle(new)
        perm.extend(zip(cells, new))
    sigma = dict(perm)
    inv = {v: k for k, v in sigma.items()}
    faces = [
        tuple(Simplex(sigma[f.base], f.degeneracy_word, f.dim) for f in X.faces[inv[c]])
        for c in range(len(X))
    ]
    return FinSSet(X.dims, faces), [sigma[c] for c in range(len(X))]


@pytest.mark.parametrize("X", [standard(3), horn(3, 1), product(standard(2), standard(1)), join(boundary(2), standard(0))], ids=str)
@pytest.mark.parametrize("seed", [0, 1])
def test_recovers_shuffles(X, seed):
    Y, sigma = shuffled(X, seed)
    Y.validate()
    assert check_isomorphism(X, Y, sigma)
    found = find_isomorphism(X, Y)
    assert found is not None and check_isomorphism(X, Y, found)


def test_respects_marks():
    A, B = delta_k(2, 0), delta_k(2, 2)
    assert find_isomorphism(A.underlying, B.underlying, A.marked, B.marked) is None
    assert is_isomorphic(A.underlying, B.underlying)
    assert find_isomorphism(delta_t(2).underlying, delta_t(2).underlying, delta_t(2).marked, set()) is None


def test_distinguishes_horns_and_boundaries():
    assert not is_isomorphic(horn(3, 0), horn(3, 1))
    assert not is_isomorphic(boundary(2), horn(3, 0))


def test_check_rejects_bad_bijections():
    X = standard(1)
    assert check_isomorphism(X, X, [0, 1, 2])
    assert not check_isomorphism(X, X, [1, 0, 2])
    assert not check_isomorphism(X, X, [0, 0, 2])
