import itertools
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from stratset.iso import find_isomorphism, is_isomorphic
from stratset.sset import (
    FinSSet,
    Simplex,
    SSetError,
    boundary,
    closure,
    compose_maps,
    enumerate_maps,
    enumerate_maps_naive,
    horn,
    identity_map,
    inclusion,
    intersection,
    is_subcomplex,
    join,
    opposite,
    product,
    product_simplex,
    projections,
    standard,
    subcomplex,
    union,
)

SMALL = [standard(0), standard(1), standard(2), boundary(2), horn(2, 0), horn(3, 1), standard(3)]


def chains(a, b, r):
    """Strict chains of length r+1 in the grid poset [a] x [b] (nerve oracle)."""
    pts = [(i, j) for i in range(a + 1) for j in range(b + 1)]
    out = 0
    for combo in itertools.combinations(sorted(pts), r + 1):
        if all(p[0] <= q[0] and p[1] <= q[1] for p, q in zip(combo, combo[1:])):
            out += 1
    return out


@pytest.mark.parametrize("m", range(-1, 6))
def test_standard_counts(m):
    X = standard(m)
    assert X.counts() == tuple(comb(m + 1, r + 1) for r in range(m + 1))
    X.validate()


def test_boundary_and_horn_counts():
    assert boundary(3).counts() == (4, 6, 4)
    assert horn(3, 1).counts() == (4, 6, 3)
    # the 0-horn of the interval is the vertex opposite d_0
    H = horn(1, 0)
    assert H.counts() == (1,) and list(H.keys) == [(0,)]
    with pytest.raises(SSetError, match="0 <= k <= m"):
        horn(2, 3)


def test_faces_of_standard_simplex():
    X = standard(2)
    top = X.find("[0,1,2]")
    assert [X.labels[f.base] for f in X.faces[top]] == ["[1,2]", "[0,2]", "[0,1]"]


@pytest.mark.parametrize("a,b", [(1, 1), (2, 1), (2, 2), (3, 2)])
def test_product_of_simplices_matches_grid_nerve(a, b):
    P = product(standard(a), standard(b))
    P.validate()
    assert P.counts() == tuple(chains(a, b, r) for r in range(a + b + 1))


def test_product_cell_totals():
    assert len(product(standard(1), standard(1))) == 11
    assert len(product(standard(6), standard(2))) == 5503


@pytest.mark.parametrize("X", SMALL[:5], ids=lambda X: X.name)
@pytest.mark.parametrize("Y", [standard(1), boundary(2), horn(2, 1)], ids=lambda X: X.name)
def test_product_counts_match_pair_enumeration(X, Y):
    # oracle: pairs of r-simplices with no common degeneracy are the nondegenerate ones
    P = product(X, Y)
    for r in range(P.top_dim + 1):
        pairs = [
            (x, y)
            for x in X.simplices(r)
            for y in Y.simplices(r)
            if not set(x.degeneracy_word) & set(y.degeneracy_word)
        ]
        assert len(pairs) == len(P.cells(r))
        for x, y in pairs:
            s = product_simplex(P, x, y)
            assert not s.degeneracy_word
            assert projections(P, s) == (x, y)


def test_product_with_point_is_identity():
    for X in SMALL:
        assert is_isomorphic(product(standard(0), X), X)
        assert is_isomorphic(product(X, standard(0)), X)


@pytest.mark.parametrize("a,b", [(-1, 0), (0, 0), (0, 1), (1, 2), (2, 1)])
def test_join_of_simplices(a, b):
    J = join(standard(a), standard(b))
    J.validate()
    assert is_isomorphic(J, standard(a + b + 1))
    # vertices of the first factor come first
    assert [J.labels[v] for v in J.cells(0)] == [str(i) for i in range(a + b + 2)]


def test_join_is_not_symmetric_on_cells():
    J = join(standard(0), standard(1))
    top = J.cells(2)[0]
    assert J.vertices(top) == tuple(J.cells(0))


@pytest.mark.parametrize("X", SMALL, ids=lambda X: X.name)
def test_opposite_involution(X):
    assert opposite(opposite(X)) == X
    opposite(X).validate()


@pytest.mark.parametrize("X,Y", [(standard(1), horn(2, 0)), (boundary(2), standard(0)), (horn(2, 1), standard(1))])
def test_opposite_of_join_swaps(X, Y):
    assert find_isomorphism(opposite(join(X, Y)), join(opposite(Y), opposite(X))) is not None


def test_opposite_reverses_horns():
    assert is_isomorphic(opposite(horn(3, 0)), horn(3, 3))
    assert not is_isomorphic(horn(2, 0), horn(2, 1))


def test_subobjects():
    X = standard(3)
    A = subcomplex(X, [X.find("[0,1,2]")])
    B = subcomplex(X, [X.find("[1,2,3]")])
    U, I = union(A, B, X), intersection(A, B, X)
    assert U.counts() == (4, 5, 2)
    assert I.counts() == (2, 1)
    assert is_subcomplex(A, X) and not is_subcomplex({X.find("[0,1]")}, X)
    inclusion(A).validate()


@given(st.sets(st.integers(0, 14), max_size=5), st.sets(st.integers(0, 14), max_size=5))
def test_union_intersection_closure(a, b):
    X = standard(3)
    ca, cb = closure(X, a), closure(X, b)
    U = union(ca, cb, X)
    I = intersection(ca, cb, X)
    assert set(U.embedding) == ca | cb
    assert set(I.embedding) == ca & cb
    U.validate()
    I.validate()


@st.composite
def simplex_and_maps(draw):
    P = draw(st.sampled_from([product(standard(2), standard(1)), standard(3), join(horn(2, 0), standard(0))]))
    r = draw(st.integers(0, 3))
    s = draw(st.sampled_from(P.simplices(r)))
    k = draw(st.integers(0, 3))
    f = tuple(sorted(draw(st.lists(st.integers(0, r), min_size=k + 1, max_size=k + 1))))
    j = draw(st.integers(0, 3))
    g = tuple(sorted(draw(st.lists(st.integers(0, k), min_size=j + 1, max_size=j + 1))))
    return P, s, f, g


@given(simplex_and_maps())
def test_action_is_functorial(case):
    P, s, f, g = case
    fg = tuple(f[i] for i in g)
    assert P.act(P.act(s, f), g) == P.act(s, fg)


@pytest.mark.parametrize("X", [product(standard(1), standard(1)), horn(3, 2), join(standard(1), boundary(2))], ids=str)
def test_simplicial_identities_on_all_simplices(X):
    for r in range(2, X.top_dim + 3):
        for s in X.simplices(r):
            for j in range(r + 1):
                for i in range(j):
                    assert X.face(X.face(s, j), i) == X.face(X.face(s, i), j - 1)
            for i in range(r + 1):
                t = X.degeneracy(s, i)
                assert X.face(t, i) == s == X.face(t, i + 1)


@pytest.mark.parametrize("n", range(0, 4))
@pytest.mark.parametrize("X", [standard(2), boundary(2), product(standard(1), standard(1))], ids=lambda X: X.name)
def test_yoneda_counts(n, X):
    # maps out of Delta[n] are the n-simplices
    maps = enumerate_maps(standard(n), X)
    assert len(maps) == len(X.simplices(n))
    top = standard(n).cells(n)[0]
    assert sorted(m.assignment[top] for m in maps) == sorted(X.simplices(n))


@pytest.mark.parametrize("A", SMALL[:5], ids=lambda X: X.name)
@pytest.mark.parametrize("X", SMALL[:5], ids=lambda X: X.name)
def test_enumerate_maps_against_naive(A, X):
    fast = enumerate_maps(A, X)
    slow = enumerate_maps_naive(A, X, limit=10**6)
    assert [m.assignment for m in fast] == [m.assignment for m in slow]
    for m in fast:
        m.validate()


def test_naive_limit():
    with pytest.raises(SSetError, match="candidate limit"):
        enumerate_maps_naive(standard(3), standard(3), limit=10)


def test_map_composition():
    X = standard(2)
    f = enumerate_maps(standard(1), X)[3]
    assert compose_maps(identity_map(X), f).assignment == f.assignment


@pytest.mark.parametrize("X", SMALL + [product(standard(1), standard(1))], ids=lambda X: X.name)
def test_json_round_trip(X):
    Y = FinSSet.from_json(X.to_json())
    assert Y == X and Y.labels == X.labels


def test_validate_catches_broken_faces():
    X = standard(2)
    faces = list(X.faces)
    top = X.find("[0,1,2]")
    f = list(faces[top])
    f[0], f[1] = f[1], f[0]
    faces[top] = tuple(f)
    with pytest.raises(SSetError, match="d_"):
        FinSSet(X.dims, faces).validate()


def test_validate_catches_bad_words():
    with pytest.raises(SSetError):
        FinSSet([0, 1], [(), (Simplex(0, (), 0), Simplex(0, (0,), 0))]).validate()
