# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the kernels in ``_kernels_py``."""


def compose(tuple g, tuple f):
    cdef Py_ssize_t n = len(f), i
    out = [0] * n
    for i in range(n):
        out[i] = g[<Py_ssize_t>f[i]]
    return tuple(out)


def is_monotone(tuple values, long codomain_dim):
    cdef long prev = 0, v
    for item in values:
        v = item
        if v < prev or v > codomain_dim:
            return False
        prev = v
    return True


def repeats(tuple values):
    cdef Py_ssize_t n = len(values), i
    out = []
    for i in range(n - 1):
        if <long>values[i] == <long>values[i + 1]:
            out.append(i)
    return tuple(out)


def ez_factor(tuple values):
    cdef Py_ssize_t n = len(values), i
    cdef long last, v, k = 0
    if n == 0:
        return (), ()
    last = values[0]
    image = [last]
    surj = [0] * n
    for i in range(1, n):
        v = values[i]
        if v != last:
            image.append(v)
            last = v
            k += 1
        surj[i] = k
    return tuple(surj), tuple(image)


def word_from_surjection(tuple surj):
    cdef Py_ssize_t i
    out = []
    for i in range(len(surj) - 2, -1, -1):
        if <long>surj[i] == <long>surj[i + 1]:
            out.append(i)
    return tuple(out)


def surjection_from_word(tuple word, long dim):
    cdef long i, cur = 0
    flags = bytearray(dim + 1)
    for w in word:
        flags[<long>w] = 1
    out = [0] * (dim + 1)
    for i in range(1, dim + 1):
        if not flags[i - 1]:
            cur += 1
        out[i] = cur
    return tuple(out)


cdef void _walk(long x, long y, long a, long b, list xs, list ys, list out):
    if x == a and y == b:
        out.append((tuple(xs), tuple(ys)))
        return
    if x < a:
        xs.append(x + 1)
        ys.append(y)
        _walk(x + 1, y, a, b, xs, ys, out)
        xs.pop()
        ys.pop()
    if x < a and y < b:
        xs.append(x + 1)
        ys.append(y + 1)
        _walk(x + 1, y + 1, a, b, xs, ys, out)
        xs.pop()
        ys.pop()
    if y < b:
        xs.append(x)
        ys.append(y + 1)
        _walk(x, y + 1, a, b, xs, ys, out)
        xs.pop()
        ys.pop()


def delannoy_paths(long a, long b):
    out = []
    _walk(0, 0, a, b, [0], [0], out)
    return out


def collapse_pair(tuple sa, tuple sb):
    cdef Py_ssize_t n = len(sa), i
    keep_a = [sa[0]]
    keep_b = [sb[0]]
    word = []
    for i in range(1, n):
        if <long>sa[i] == <long>sa[i - 1] and <long>sb[i] == <long>sb[i - 1]:
            word.append(i - 1)
        else:
            keep_a.append(sa[i])
            keep_b.append(sb[i])
    word.reverse()
    return tuple(keep_a), tuple(keep_b), tuple(word)
