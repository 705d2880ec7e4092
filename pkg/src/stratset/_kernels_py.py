"""Pure-Python kernels for monotone-map arithmetic.

Every function here has a twin of the same name in ``_kernels.pyx``.
Both operate on plain tuples of ints and must return identical values.
"""
from __future__ import annotations


def compose(g, f):
    """Pointwise composite ``g o f`` of two value tuples."""
    return tuple([g[i] for i in f])


def is_monotone(values, codomain_dim):
    prev = 0
    for v in values:
        if v < prev or v > codomain_dim:
            return False
        prev = v
    return True


def repeats(values):
    """Ascending positions ``i`` with ``values[i] == values[i + 1]``."""
    return tuple([i for i in range(len(values) - 1) if values[i] == values[i + 1]])


def ez_factor(values):
    """Split a monotone map into (surjection, strictly increasing image)."""
    if not values:
        return (), ()
    image = [values[0]]
    surj = [0]
    for v in values[1:]:
        if v != image[-1]:
            image.append(v)
        surj.append(len(image) - 1)
    return tuple(surj), tuple(image)


def word_from_surjection(surj):
    """Degeneracy word (strictly decreasing repeat positions) of a surjection."""
    return tuple([i for i in range(len(surj) - 2, -1, -1) if surj[i] == surj[i + 1]])


def surjection_from_word(word, dim):
    """Surjection ``[dim] -> [dim - len(word)]`` collapsing the positions in ``word``."""
    out = [0] * (dim + 1)
    rep = set(word)
    cur = 0
    for i in range(1, dim + 1):
        if (i - 1) not in rep:
            cur += 1
        out[i] = cur
    return tuple(out)


def delannoy_paths(a, b):
    """Jointly injective pairs of surjections onto ``[a]`` and ``[b]``.

    These are the lattice paths from (0, 0) to (a, b) with unit steps
    right, up or diagonal, returned as ``(alpha, beta)`` value tuples in
    lexicographic order of the step sequence (right < diagonal < up).
    """
    out = []
    xs = [0]
    ys = [0]

    def walk(x, y):
        if x == a and y == b:
            out.append((tuple(xs), tuple(ys)))
            return
        if x < a:
            xs.append(x + 1)
            ys.append(y)
            walk(x + 1, y)
            xs.pop()
            ys.pop()
        if x < a and y < b:
            xs.append(x + 1)
            ys.append(y + 1)
            walk(x + 1, y + 1)
            xs.pop()
            ys.pop()
        if y < b:
            xs.append(x)
            ys.append(y + 1)
            walk(x, y + 1)
            xs.pop()
            ys.pop()

    walk(0, 0)
    return out


def collapse_pair(sa, sb):
    """Joint EZ collapse of two surjections of equal length.

    Returns ``(sa', sb', word)`` where ``word`` lists (descending) the
    positions repeated by both, and ``sa'``/``sb'`` are the maps induced
    on the collapsed domain.
    """
    n = len(sa)
    keep_a = [sa[0]]
    keep_b = [sb[0]]
    word = []
    for i in range(1, n):
        if sa[i] == sa[i - 1] and sb[i] == sb[i - 1]:
            word.append(i - 1)
        else:
            keep_a.append(sa[i])
            keep_b.append(sb[i])
    word.reverse()
    return tuple(keep_a), tuple(keep_b), tuple(word)
