# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Gaussian-elimination rank over GF(p), p < 2**31."""


cdef long long _inv_mod(long long a, long long p):
    # extended Euclid; a is nonzero mod p
    cdef long long t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr != 0:
        q = r / newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rank_mod(long long[:, ::1] a, long long p):
    """Rank of ``a`` over GF(p).  Clobbers ``a``; entries must lie in [0, p)."""
    cdef Py_ssize_t m = a.shape[0]
    cdef Py_ssize_t k = a.shape[1]
    cdef Py_ssize_t rank = 0, col, i, j, piv
    cdef long long inv, factor, v, t
    for col in range(k):
        if rank == m:
            break
        piv = -1
        for i in range(rank, m):
            if a[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(col, k):
                t = a[rank, j]
                a[rank, j] = a[piv, j]
                a[piv, j] = t
        inv = _inv_mod(a[rank, col], p)
        for i in range(rank + 1, m):
            v = a[i, col]
            if v == 0:
                continue
            factor = v * inv % p
            for j in range(col, k):
                t = (a[i, j] - factor * a[rank, j]) % p
                if t < 0:
                    t += p
                a[i, j] = t
        rank += 1
    return rank
