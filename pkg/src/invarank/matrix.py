"""Dense exact matrices over QQ or GF(p).

Rank over the rationals uses fraction-free (Bareiss) elimination to control
coefficient growth; GF(p) rank and kernels dispatch to the compiled backend
when available.  Matrices are immutable.
"""

from __future__ import annotations

from fractions import Fraction

from . import _gfkernels
from .fields import QQ, Field, FieldError, PrimeField, field_from_spec

# the compiled kernel multiplies residues in 64-bit registers
_GF_KERNEL_MAX_P = 1 << 31


class MatrixError(ValueError):
    """Dimension or field mismatch."""


class Matrix:
    __slots__ = ("field", "nrows", "ncols", "cells")

    def __init__(self, field: Field, nrows: int, ncols: int, cells):
        if nrows <= 0 or ncols <= 0:
            raise MatrixError("matrix dimensions must be positive")
        cells = tuple(cells)
        if len(cells) != nrows * ncols:
            raise MatrixError(f"expected {nrows * ncols} entries, got {len(cells)}")
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.cells = cells

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rows(cls, field: Field, rows) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise MatrixError("ragged rows")
        return cls(field, len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        return cls(field, nrows, ncols, [field.zero] * (nrows * ncols))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        cells = [field.zero] * (n * n)
        for i in range(n):
            cells[i * n + i] = field.one
        return cls(field, n, n, cells)

    @classmethod
    def unit(cls, field: Field, n: int, i: int, j: int) -> "Matrix":
        """E_ij: 1 in entry (i, j) (0-based), 0 elsewhere."""
        cells = [field.zero] * (n * n)
        cells[i * n + j] = field.one
        return cls(field, n, n, cells)

    # -- basics ------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.cells[i * self.ncols + j]

    def row(self, i):
        return self.cells[i * self.ncols:(i + 1) * self.ncols]

    def rows(self):
        return [list(self.row(i)) for i in range(self.nrows)]

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.nrows == other.nrows and self.ncols == other.ncols
                and self.cells == other.cells)

    def __hash__(self):
        return hash((self.field, self.nrows, self.ncols, self.cells))

    def __repr__(self):
        body = "; ".join(" ".join(self.field.fmt(x) for x in self.row(i))
                         for i in range(self.nrows))
        return f"Matrix({self.field!r}, [{body}])"

    def is_zero(self) -> bool:
        z = self.field.zero
        return all(x == z for x in self.cells)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def _check_same_shape(self, other):
        if self.field != other.field:
            raise MatrixError("field mismatch")
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise MatrixError("shape mismatch")

    def __add__(self, other):
        self._check_same_shape(other)
        add = self.field.add
        return Matrix(self.field, self.nrows, self.ncols,
                      [add(a, b) for a, b in zip(self.cells, other.cells)])

    def __sub__(self, other):
        self._check_same_shape(other)
        sub = self.field.sub
        return Matrix(self.field, self.nrows, self.ncols,
                      [sub(a, b) for a, b in zip(self.cells, other.cells)])

    def __neg__(self):
        neg = self.field.neg
        return Matrix(self.field, self.nrows, self.ncols,
                      [neg(a) for a in self.cells])

    def scale(self, c):
        mul = self.field.mul
        return Matrix(self.field, self.nrows, self.ncols,
                      [mul(c, a) for a in self.cells])

    def __matmul__(self, other):
        return self.mul(other)

    def mul(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise MatrixError("field mismatch")
        if self.ncols != other.nrows:
            raise MatrixError(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        f = self.field
        if isinstance(f, PrimeField) and f.p < _GF_KERNEL_MAX_P:
            out = _gfkernels.gf_matmul(list(self.cells), list(other.cells),
                                       self.nrows, self.ncols, other.ncols, f.p)
            return Matrix(f, self.nrows, other.ncols, out)
        n, m, k = self.nrows, self.ncols, other.ncols
        z, add, mul = f.zero, f.add, f.mul
        out = [z] * (n * k)
        a, b = self.cells, other.cells
        for i in range(n):
            for j in range(m):
                aij = a[i * m + j]
                if aij != z:
                    for c in range(k):
                        out[i * k + c] = add(out[i * k + c], mul(aij, b[j * k + c]))
        return Matrix(f, n, k, out)

    def apply(self, vec):
        """Matrix times column vector (a sequence of scalars)."""
        if len(vec) != self.ncols:
            raise MatrixError("vector length mismatch")
        f = self.field
        out = []
        for i in range(self.nrows):
            acc = f.zero
            row = self.row(i)
            for a, x in zip(row, vec):
                if a != f.zero:
                    acc = f.add(acc, f.mul(a, x))
            out.append(acc)
        return tuple(out)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.ncols, self.nrows,
                      [self.cells[j * self.ncols + i]
                       for i in range(self.ncols) for j in range(self.nrows)])

    def trace(self):
        if not self.is_square():
            raise MatrixError("trace of non-square matrix")
        acc = self.field.zero
        for i in range(self.nrows):
            acc = self.field.add(acc, self[i, i])
        return acc

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product."""
        if self.field != other.field:
            raise MatrixError("field mismatch")
        f = self.field
        n, m = self.nrows, self.ncols
        q, r = other.nrows, other.ncols
        out = [f.zero] * (n * q * m * r)
        for i in range(n):
            for j in range(m):
                a = self[i, j]
                if a == f.zero:
                    continue
                for s in range(q):
                    for t in range(r):
                        out[(i * q + s) * (m * r) + j * r + t] = f.mul(a, other[s, t])
        return Matrix(f, n * q, m * r, out)

    # -- elimination -------------------------------------------------------

    def rank(self) -> int:
        f = self.field
        if isinstance(f, PrimeField) and f.p < _GF_KERNEL_MAX_P:
            return _gfkernels.gf_rank(list(self.cells), self.nrows, self.ncols, f.p)
        if f == QQ:
            return _bareiss_rank(self.rows())
        return _rref(self.rows(), f)[0]

    def rref(self):
        """(rank, pivot columns, reduced matrix)."""
        f = self.field
        if isinstance(f, PrimeField) and f.p < _GF_KERNEL_MAX_P:
            rank, pivots, flat = _gfkernels.gf_rref(
                list(self.cells), self.nrows, self.ncols, f.p)
            return rank, pivots, Matrix(f, self.nrows, self.ncols, flat)
        rank, pivots, rows = _rref(self.rows(), f)
        return rank, pivots, Matrix.from_rows(f, rows)

    def kernel_basis(self):
        """Basis of the right null space, as a list of scalar tuples.

        Each returned vector k satisfies self @ k = 0 exactly; the count is
        ncols - rank.
        """
        f = self.field
        rank, pivots, red = self.rref()
        pivset = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivset]
        basis = []
        for fc in free:
            vec = [f.zero] * self.ncols
            vec[fc] = f.one
            for r, pc in enumerate(pivots):
                vec[pc] = f.neg(red[r, fc])
            basis.append(tuple(vec))
        return basis

    def det(self):
        if not self.is_square():
            raise MatrixError("determinant of non-square matrix")
        return _bareiss_det(self.rows(), self.field)

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise MatrixError("inverse of non-square matrix")
        f = self.field
        n = self.nrows
        aug = [list(self.row(i)) + [f.one if j == i else f.zero for j in range(n)]
               for i in range(n)]
        rank, pivots, rows = _rref(aug, f)
        if rank < n or pivots[:n] != list(range(n)):
            raise MatrixError("matrix is singular")
        return Matrix.from_rows(f, [r[n:] for r in rows])

    # -- serialization -----------------------------------------------------

    def to_json_obj(self) -> dict:
        return {"field": self.field.spec,
                "rows": [[self.field.fmt(x) for x in self.row(i)]
                         for i in range(self.nrows)]}

    @classmethod
    def from_json_obj(cls, obj) -> "Matrix":
        try:
            field = field_from_spec(obj["field"])
            rows = obj["rows"]
            parsed = [[field.parse(str(x)) for x in row] for row in rows]
        except (KeyError, TypeError, ValueError, FieldError) as exc:
            raise MatrixError(f"malformed matrix object: {exc}") from None
        if not parsed or not parsed[0]:
            raise MatrixError("malformed matrix object: empty rows")
        return cls.from_rows(field, parsed)


def block_diag(a: Matrix, b: Matrix) -> Matrix:
    if a.field != b.field:
        raise MatrixError("field mismatch")
    f = a.field
    n, m = a.nrows + b.nrows, a.ncols + b.ncols
    out = Matrix.zeros(f, n, m)
    cells = list(out.cells)
    for i in range(a.nrows):
        for j in range(a.ncols):
            cells[i * m + j] = a[i, j]
    for i in range(b.nrows):
        for j in range(b.ncols):
            cells[(a.nrows + i) * m + a.ncols + j] = b[i, j]
    return Matrix(f, n, m, cells)


def stack_flattened(field: Field, mats) -> Matrix:
    """One row per matrix, each flattened row-major; for span-rank tests."""
    mats = list(mats)
    if not mats:
        raise MatrixError("empty matrix list")
    width = mats[0].nrows * mats[0].ncols
    rows = []
    for m in mats:
        if m.nrows * m.ncols != width:
            raise MatrixError("inhomogeneous shapes")
        rows.append(list(m.cells))
    return Matrix.from_rows(field, rows)


def _bareiss_rank(rows) -> int:
    """Fraction-free elimination rank with full pivoting.

    Over integer input all divisions are exact (classical Bareiss); over
    Fraction input division is exact anyway.
    """
    rows = [[Fraction(x) for x in row] for row in rows]
    nrows = len(rows)
    ncols = len(rows[0])
    prev = Fraction(1)
    r = 0
    steps = min(nrows, ncols)
    while r < steps:
        # pivot search over the remaining submatrix
        piv = None
        for i in range(r, nrows):
            for j in range(r, ncols):
                if rows[i][j] != 0:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        pi, pj = piv
        if pi != r:
            rows[pi], rows[r] = rows[r], rows[pi]
        if pj != r:
            for row in rows:
                row[pj], row[r] = row[r], row[pj]
        pv = rows[r][r]
        for i in range(r + 1, nrows):
            fi = rows[i][r]
            ri, rp = rows[i], rows[r]
            for j in range(r + 1, ncols):
                ri[j] = (pv * ri[j] - fi * rp[j]) / prev
            ri[r] = 0
        prev = pv
        r += 1
    return r


def _bareiss_det(rows, field) -> "scalar":
    n = len(rows)
    if field != QQ:
        # over GF(p) plain elimination is fine
        sign = field.one
        det = field.one
        for col in range(n):
            piv = -1
            for r in range(col, n):
                if rows[r][col] != field.zero:
                    piv = r
                    break
            if piv < 0:
                return field.zero
            if piv != col:
                rows[piv], rows[col] = rows[col], rows[piv]
                sign = field.neg(sign)
            pv = rows[col][col]
            det = field.mul(det, pv)
            inv = field.inv(pv)
            for r in range(col + 1, n):
                f = field.mul(rows[r][col], inv)
                if f != field.zero:
                    for c in range(col, n):
                        rows[r][c] = field.sub(rows[r][c], field.mul(f, rows[col][c]))
        return field.mul(sign, det)
    prev = Fraction(1)
    sign = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            piv = -1
            for r in range(k + 1, n):
                if rows[r][k] != 0:
                    piv = r
                    break
            if piv < 0:
                return Fraction(0)
            rows[piv], rows[k] = rows[k], rows[piv]
            sign = -sign
        pv = rows[k][k]
        for i in range(k + 1, n):
            fi = rows[i][k]
            for j in range(k + 1, n):
                rows[i][j] = (pv * rows[i][j] - fi * rows[k][j]) / prev
            rows[i][k] = 0
        prev = pv
    return sign * rows[n - 1][n - 1]


def _rref(rows, field):
    """Generic reduced row echelon form over a field.

    Returns (rank, pivot columns, rows); mutates the given row lists.
    """
    nrows = len(rows)
    ncols = len(rows[0])
    pivots = []
    rank = 0
    z = field.zero
    for col in range(ncols):
        piv = -1
        for r in range(rank, nrows):
            if rows[r][col] != z:
                piv = r
                break
        if piv < 0:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = field.inv(rows[rank][col])
        rows[rank] = [field.mul(inv, x) for x in rows[rank]]
        for r in range(nrows):
            if r != rank and rows[r][col] != z:
                f = rows[r][col]
                rows[r] = [field.sub(a, field.mul(f, b))
                           for a, b in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    return rank, pivots, rows
