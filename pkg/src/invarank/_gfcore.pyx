# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(p) elimination kernels (hot inner loops).

Same contracts as ``_gfpure``; residues must fit comfortably in 64 bits
(p below 2**31 keeps every intermediate product in range).
"""

from cpython cimport array
import array

ctypedef long long i64


cdef i64 _inv_mod(i64 a, i64 p):
    # extended Euclid; a is nonzero mod p
    cdef i64 t = 0, newt = 1, r = p, newr = a % p, q, tmp
    while newr != 0:
        q = r / newr
        tmp = t - q * newt; t = newt; newt = tmp
        tmp = r - q * newr; r = newr; newr = tmp
    if t < 0:
        t += p
    return t


def gf_matmul(a, b, int n, int m, int k, long long p):
    """(n x m) times (m x k) mod p, flat row-major lists."""
    cdef array.array abuf = array.array('q', a)
    cdef array.array bbuf = array.array('q', b)
    cdef array.array obuf = array.array('q', bytes(8 * n * k))
    cdef i64[:] av = abuf, bv = bbuf, ov = obuf
    cdef int i, j, c
    cdef i64 aij, acc
    for i in range(n):
        for j in range(m):
            aij = av[i * m + j] % p
            if aij:
                for c in range(k):
                    ov[i * k + c] = (ov[i * k + c] + aij * (bv[j * k + c] % p)) % p
    return list(obuf)


def gf_rank(cells, int nrows, int ncols, long long p):
    """Rank by Gaussian elimination mod p."""
    cdef array.array buf = array.array('q', cells)
    cdef i64[:] m = buf
    cdef int rank = 0, col, r, piv, c
    cdef i64 inv, f, tmp
    for r in range(nrows * ncols):
        m[r] = m[r] % p
        if m[r] < 0:
            m[r] += p
    for col in range(ncols):
        piv = -1
        for r in range(rank, nrows):
            if m[r * ncols + col]:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for c in range(ncols):
                tmp = m[rank * ncols + c]
                m[rank * ncols + c] = m[piv * ncols + c]
                m[piv * ncols + c] = tmp
        inv = _inv_mod(m[rank * ncols + col], p)
        for c in range(col, ncols):
            m[rank * ncols + c] = m[rank * ncols + c] * inv % p
        for r in range(nrows):
            if r != rank:
                f = m[r * ncols + col]
                if f:
                    for c in range(col, ncols):
                        m[r * ncols + c] = (m[r * ncols + c] - f * m[rank * ncols + c]) % p
                        if m[r * ncols + c] < 0:
                            m[r * ncols + c] += p
        rank += 1
        if rank == nrows:
            break
    return rank


def gf_rref(cells, int nrows, int ncols, long long p):
    """Reduced row echelon form mod p: (rank, pivot columns, flat cells)."""
    cdef array.array buf = array.array('q', cells)
    cdef i64[:] m = buf
    cdef int rank = 0, col, r, piv, c
    cdef i64 inv, f, tmp
    pivots = []
    for r in range(nrows * ncols):
        m[r] = m[r] % p
        if m[r] < 0:
            m[r] += p
    for col in range(ncols):
        piv = -1
        for r in range(rank, nrows):
            if m[r * ncols + col]:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for c in range(ncols):
                tmp = m[rank * ncols + c]
                m[rank * ncols + c] = m[piv * ncols + c]
                m[piv * ncols + c] = tmp
        inv = _inv_mod(m[rank * ncols + col], p)
        for c in range(ncols):
            m[rank * ncols + c] = m[rank * ncols + c] * inv % p
        for r in range(nrows):
            if r != rank:
                f = m[r * ncols + col]
                if f:
                    for c in range(ncols):
                        m[r * ncols + c] = (m[r * ncols + c] - f * m[rank * ncols + c]) % p
                        if m[r * ncols + c] < 0:
                            m[r * ncols + c] += p
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    return rank, pivots, list(buf)
