"""Agreement between the compiled GF(p) kernels and the pure-Python fallback.

Runs regardless of which backend the package selected at import time: the
pure implementation is imported directly and compared against whatever
``invarank._gfkernels`` exports.
"""

import random

from invarank import _gfpure
from invarank._gfkernels import BACKEND, gf_matmul, gf_rank, gf_rref


PRIMES = (2, 3, 5, 32003)


def rand_cells(rng, n, m, p):
    return [rng.randrange(p) for _ in range(n * m)]


def test_backend_name_is_known():
    assert BACKEND in ("cython", "python")


def test_matmul_agreement():
    rng = random.Random(51)
    for p in PRIMES:
        for _ in range(20):
            n, m, k = (rng.randint(1, 6) for _ in range(3))
            a = rand_cells(rng, n, m, p)
            b = rand_cells(rng, m, k, p)
            assert list(gf_matmul(a, b, n, m, k, p)) == \
                _gfpure.gf_matmul(a, b, n, m, k, p)


def test_rank_agreement():
    rng = random.Random(52)
    for p in PRIMES:
        for _ in range(30):
            n, m = rng.randint(1, 7), rng.randint(1, 7)
            cells = rand_cells(rng, n, m, p)
            assert gf_rank(cells, n, m, p) == _gfpure.gf_rank(cells, n, m, p)


def test_rref_agreement():
    rng = random.Random(53)
    for p in PRIMES:
        for _ in range(30):
            n, m = rng.randint(1, 6), rng.randint(1, 6)
            cells = rand_cells(rng, n, m, p)
            rank, pivots, flat = gf_rref(cells, n, m, p)
            prank, ppivots, pflat = _gfpure.gf_rref(cells, n, m, p)
            assert (rank, list(pivots), list(flat)) == (prank, ppivots, pflat)


def test_rank_identity_and_zero():
    for p in PRIMES:
        ident = [1 if i == j else 0 for i in range(5) for j in range(5)]
        assert gf_rank(ident, 5, 5, p) == 5
        assert gf_rank([0] * 20, 4, 5, p) == 0


def test_matmul_known_value():
    # E12 E21 = E11 over GF(2)
    e12 = [0, 1, 0, 0]
    e21 = [0, 0, 1, 0]
    assert list(gf_matmul(e12, e21, 2, 2, 2, 2)) == [1, 0, 0, 0]
