# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled lattice kernels for the semigroup oracle (dimensions 2 and 3)."""
from libc.stdlib cimport malloc, calloc, free

IMPL = "cython"


cdef int _pad(object r, object weights, long long *w, long long *ext, long long bound) except -1:
    cdef int j
    d = len(weights)
    if d < 1 or d > 3:
        raise ValueError(f"dimension must be 1..3, got {d}")
    for j in range(3):
        if j < d:
            w[j] = weights[j] % r
            ext[j] = bound + 1
        else:
            w[j] = 0
            ext[j] = 1
    return d


def hilbert_basis(long long r, weights):
    cdef long long w[3]
    cdef long long ext[3]
    cdef long long i, j, l, deg, m, k
    cdef long long nb = 0, cap
    cdef long long *hb
    cdef bint reducible
    d = _pad(r, weights, w, ext, r)
    cap = (r + 1) * (r + 1) * (r + 1) + 1
    hb = <long long *> malloc(3 * cap * sizeof(long long))
    if hb == NULL:
        raise MemoryError()
    out = []
    try:
        for deg in range(1, 3 * r + 1):
            for i in range(ext[0]):
                if i > deg:
                    break
                for j in range(ext[1]):
                    if i + j > deg:
                        break
                    l = deg - i - j
                    if l >= ext[2]:
                        continue
                    if (w[0] * i + w[1] * j + w[2] * l) % r:
                        continue
                    reducible = False
                    for m in range(nb):
                        k = 3 * m
                        if hb[k] <= i and hb[k + 1] <= j and hb[k + 2] <= l:
                            reducible = True
                            break
                    if reducible:
                        continue
                    hb[3 * nb] = i
                    hb[3 * nb + 1] = j
                    hb[3 * nb + 2] = l
                    nb += 1
                    out.append((i, j, l)[:d])
    finally:
        free(hb)
    return out


def order_counts(long long r, weights, basis, long long max_degree, int K):
    cdef long long w[3]
    cdef long long ext[3]
    cdef long long i, j, l, idx, size, m, nb
    cdef int best, v
    cdef int *ordv
    cdef long long *hb
    cdef long long *off
    d = _pad(r, weights, w, ext, max_degree)
    nb = len(basis)
    size = ext[0] * ext[1] * ext[2]
    ordv = <int *> malloc(size * sizeof(int))
    hb = <long long *> malloc((3 * nb + 1) * sizeof(long long))
    off = <long long *> malloc((nb + 1) * sizeof(long long))
    if ordv == NULL or hb == NULL or off == NULL:
        free(ordv); free(hb); free(off)
        raise MemoryError(f"cannot allocate order table of {size} cells")
    counts = [0] * (K + 1)
    cdef long long *cnt = <long long *> calloc(K + 1, sizeof(long long))
    try:
        for m in range(nb):
            h = tuple(basis[m]) + (0, 0, 0)
            hb[3 * m] = h[0]
            hb[3 * m + 1] = h[1]
            hb[3 * m + 2] = h[2]
            off[m] = (h[0] * ext[1] + h[1]) * ext[2] + h[2]
        for i in range(ext[0]):
            for j in range(ext[1]):
                if i + j > max_degree:
                    break
                for l in range(ext[2]):
                    if i + j + l > max_degree:
                        break
                    idx = (i * ext[1] + j) * ext[2] + l
                    if (w[0] * i + w[1] * j + w[2] * l) % r:
                        ordv[idx] = -1
                        continue
                    if idx == 0:
                        best = 0
                    else:
                        best = -1
                        for m in range(nb):
                            if hb[3 * m] <= i and hb[3 * m + 1] <= j and hb[3 * m + 2] <= l:
                                v = ordv[idx - off[m]]
                                if v >= best:
                                    best = v + 1
                    ordv[idx] = best
                    if 0 <= best <= K:
                        cnt[best] += 1
        for m in range(K + 1):
            counts[m] = cnt[m]
    finally:
        free(ordv); free(hb); free(off); free(cnt)
    return counts
