"""Pure-Python GF(p) elimination kernels.

Fallback backend used when the compiled extension is unavailable.  All
functions take a row-major flat list of residues and mutate nothing.
"""

from __future__ import annotations


def gf_matmul(a, b, n, m, k, p):
    """(n x m) times (m x k) mod p, flat row-major lists."""
    out = [0] * (n * k)
    for i in range(n):
        arow = a[i * m:(i + 1) * m]
        orow = i * k
        for j, aij in enumerate(arow):
            if aij:
                brow = j * k
                for c in range(k):
                    out[orow + c] = (out[orow + c] + aij * b[brow + c]) % p
    return out


def gf_rank(cells, nrows, ncols, p):
    """Rank by plain Gaussian elimination mod p."""
    m = [row[:] for row in (cells[i * ncols:(i + 1) * ncols] for i in range(nrows))]
    rank = 0
    for col in range(ncols):
        piv = -1
        for r in range(rank, nrows):
            if m[r][col] % p:
                piv = r
                break
        if piv < 0:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        row = m[rank]
        for c in range(col, ncols):
            row[c] = row[c] * inv % p
        for r in range(nrows):
            if r != rank and m[r][col] % p:
                f = m[r][col]
                rr = m[r]
                for c in range(col, ncols):
                    rr[c] = (rr[c] - f * row[c]) % p
        rank += 1
        if rank == nrows:
            break
    return rank


def gf_rref(cells, nrows, ncols, p):
    """Reduced row echelon form mod p.

    Returns (rank, pivot column list, flat rref cells).
    """
    m = [list(cells[i * ncols:(i + 1) * ncols]) for i in range(nrows)]
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = -1
        for r in range(rank, nrows):
            if m[r][col] % p:
                piv = r
                break
        if piv < 0:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        row = m[rank]
        for c in range(ncols):
            row[c] = row[c] * inv % p
        for r in range(nrows):
            if r != rank and m[r][col] % p:
                f = m[r][col]
                rr = m[r]
                for c in range(ncols):
                    rr[c] = (rr[c] - f * row[c]) % p
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    flat = [x for row in m for x in row]
    return rank, pivots, flat
