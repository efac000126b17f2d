"""Classical matrix Lie algebras: standard and square-zero bases.

Covers the basis constructions for gl, sl, so, sp(2n) and the strictly
upper triangular algebra, verification that a basis consists of square-zero
matrices spanning the whole algebra, the isotropy criterion for skew
matrices, the trace obstruction, the characteristic-2 decomposition of the
identity, and the characteristic-2 self-adjoint algebra L(f) of a bilinear
form.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from enum import Enum
from itertools import product

from .fields import GF, Field, PrimeField, QQ
from .matrix import Matrix, MatrixError, stack_flattened


class LieAlgError(ValueError):
    pass


class AlgebraKind(str, Enum):
    gl = "gl"
    sl = "sl"
    so = "so"
    sp = "sp"
    strict_upper = "strict_upper"


def ambient_size(kind: AlgebraKind, n: int) -> int:
    return 2 * n if kind == AlgebraKind.sp else n


def algebra_dim(kind: AlgebraKind, n: int) -> int:
    if kind == AlgebraKind.gl:
        return n * n
    if kind == AlgebraKind.sl:
        return n * n - 1
    if kind in (AlgebraKind.so, AlgebraKind.strict_upper):
        return n * (n - 1) // 2
    if kind == AlgebraKind.sp:
        return 2 * n * n + n
    raise LieAlgError(f"unknown kind {kind}")


@dataclass(frozen=True)
class LieBasis:
    kind: AlgebraKind
    n: int
    ambient: int
    elements: tuple
    labels: tuple

    @property
    def field(self) -> Field:
        return self.elements[0].field

    def __len__(self):
        return len(self.elements)


@dataclass(frozen=True)
class StarReport:
    all_square_zero: bool
    span_rank: int
    target_dim: int
    in_algebra: bool
    satisfied: bool
    failing_indices: tuple

    def to_json_obj(self):
        return {"all_square_zero": self.all_square_zero,
                "span_rank": self.span_rank,
                "target_dim": self.target_dim,
                "in_algebra": self.in_algebra,
                "satisfied": self.satisfied,
                "failing_indices": list(self.failing_indices)}


@dataclass(frozen=True)
class LfReport:
    gram: Matrix
    dimension: int
    basis: tuple
    abelian: bool

    def to_json_obj(self):
        return {"gram": self.gram.to_json_obj(),
                "dimension": self.dimension,
                "abelian": self.abelian,
                "basis": [b.to_json_obj() for b in self.basis]}


# -- label helpers ----------------------------------------------------------

def _lbl(terms):
    """terms: list of (sign, i, j) with 1-based indices -> 'E(i,j)-E(k,l)' etc."""
    out = ""
    for sign, i, j in terms:
        piece = f"E({i},{j})"
        if not out:
            out = piece if sign > 0 else "-" + piece
        else:
            out += ("+" if sign > 0 else "-") + piece
    return out


def _combine(field, n, terms):
    """Signed sum of unit matrices; terms as in _lbl (1-based)."""
    m = Matrix.zeros(field, n, n)
    for sign, i, j in terms:
        e = Matrix.unit(field, n, i - 1, j - 1)
        m = m + e if sign > 0 else m - e
    return m


# -- basis constructors -----------------------------------------------------

def standard_basis(kind: AlgebraKind, n: int, field: Field) -> LieBasis:
    """The standard vector-space basis of the chosen algebra."""
    kind = AlgebraKind(kind)
    if n < 1 or (kind in (AlgebraKind.sl, AlgebraKind.so, AlgebraKind.strict_upper)
                 and n < 2):
        raise LieAlgErr(kind, n)
    terms_list = []
    if kind == AlgebraKind.gl:
        terms_list = [[(1, h, i)] for h in range(1, n + 1) for i in range(1, n + 1)]
    elif kind == AlgebraKind.sl:
        terms_list = [[(1, h, i)]
                      for h in range(1, n + 1) for i in range(1, n + 1) if h != i]
        terms_list += [[(1, h, h), (-1, 1, 1)] for h in range(2, n + 1)]
    elif kind == AlgebraKind.so:
        terms_list = [[(1, h, i), (-1, i, h)]
                      for h in range(1, n + 1) for i in range(h + 1, n + 1)]
    elif kind == AlgebraKind.strict_upper:
        terms_list = [[(1, h, i)]
                      for h in range(1, n + 1) for i in range(h + 1, n + 1)]
    elif kind == AlgebraKind.sp:
        # block-indexed in ambient size 2n
        for i in range(1, n + 1):
            terms_list.append([(1, i, n + i)])
            terms_list.append([(1, n + i, i)])
            terms_list.append([(1, i, i), (-1, n + i, n + i)])
        # block conditions for X^T J + J X = 0: D = -A^T, B and C symmetric
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                terms_list.append([(1, i, j), (-1, n + j, n + i)])
                terms_list.append([(1, j, i), (-1, n + i, n + j)])
                terms_list.append([(1, i, n + j), (1, j, n + i)])
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                terms_list.append([(1, n + i, j), (1, n + j, i)])
    amb = ambient_size(kind, n)
    elems = tuple(_combine(field, amb, t) for t in terms_list)
    labels = tuple(_lbl(t) for t in terms_list)
    return LieBasis(kind, n, amb, elems, labels)


def squarezero_basis(kind: AlgebraKind, n: int, field: Field) -> LieBasis:
    """A basis made entirely of square-zero matrices, when one exists.

    Rejects gl (trace obstruction) and so (no general construction; none at
    all over formally real fields).
    """
    kind = AlgebraKind(kind)
    if kind == AlgebraKind.gl:
        raise LieAlgError("gl admits no square-zero basis (trace obstruction)")
    if kind == AlgebraKind.so:
        raise LieAlgError("so admits no general square-zero basis construction")
    if kind == AlgebraKind.strict_upper:
        return standard_basis(kind, n, field)
    if kind == AlgebraKind.sl:
        if n < 2:
            raise LieAlgError("sl requires n >= 2")
        terms_list = [[(1, h, i)]
                      for h in range(1, n + 1) for i in range(1, n + 1) if h != i]
        terms_list += [[(1, h, h), (-1, 1, 1), (-1, 1, h), (1, h, 1)]
                       for h in range(2, n + 1)]
        amb = n
    else:  # sp
        if n < 1:
            raise LieAlgError("sp requires n >= 1")
        terms_list = []
        for i in range(1, n + 1):
            terms_list.append([(1, i, n + i)])
            terms_list.append([(1, n + i, i)])
            terms_list.append([(1, i, i), (-1, n + i, n + i),
                               (1, i, n + i), (-1, n + i, i)])
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                terms_list.append([(1, i, j), (-1, n + j, n + i)])
                terms_list.append([(1, j, i), (-1, n + i, n + j)])
                terms_list.append([(1, i, n + j), (1, j, n + i)])
                terms_list.append([(1, n + i, j), (1, n + j, i)])
        amb = 2 * n
    elems = tuple(_combine(field, amb, t) for t in terms_list)
    labels = tuple(_lbl(t) for t in terms_list)
    return LieBasis(kind, n, amb, elems, labels)


def LieAlgErr(kind, n):  # small helper to keep messages uniform
    return LieAlgError(f"invalid parameter n={n} for {AlgebraKind(kind).value}")


# -- predicates and reports -------------------------------------------------

def is_square_zero(x: Matrix) -> bool:
    if not x.is_square():
        raise MatrixError("square test needs a square matrix")
    return (x @ x).is_zero()


def symplectic_form(field: Field, n: int) -> Matrix:
    """J = [[0, I], [-I, 0]] of ambient size 2n."""
    cells = [field.zero] * (4 * n * n)
    for i in range(n):
        cells[i * 2 * n + n + i] = field.one
        cells[(n + i) * 2 * n + i] = field.neg(field.one)
    return Matrix(field, 2 * n, 2 * n, cells)


def _member_of(kind: AlgebraKind, n: int, x: Matrix) -> bool:
    f = x.field
    if kind == AlgebraKind.gl:
        return True
    if kind == AlgebraKind.sl:
        return x.trace() == f.zero
    if kind == AlgebraKind.so:
        if x.transpose() != -x:
            return False
        if f.char == 2:
            # alternating convention: zero diagonal
            return all(x[i, i] == f.zero for i in range(x.nrows))
        return True
    if kind == AlgebraKind.sp:
        j = symplectic_form(f, n)
        return (x.transpose() @ j + j @ x).is_zero()
    if kind == AlgebraKind.strict_upper:
        return all(x[i, j] == f.zero
                   for i in range(x.nrows) for j in range(i + 1))
    raise LieAlgError(f"unknown kind {kind}")


def verify_star(basis: LieBasis, kind: AlgebraKind = None, n: int = None) -> StarReport:
    """Check that a basis certifies the square-zero property for (kind, n)."""
    kind = AlgebraKind(kind if kind is not None else basis.kind)
    n = n if n is not None else basis.n
    amb = ambient_size(kind, n)
    if basis.ambient != amb:
        raise LieAlgError(
            f"basis ambient size {basis.ambient} does not match {kind.value}({n})")
    failing = []
    member_ok = True
    for idx, x in enumerate(basis.elements):
        if not is_square_zero(x):
            failing.append(idx)
        if not _member_of(kind, n, x):
            member_ok = False
            if idx not in failing:
                failing.append(idx)
    all_sq = not any(not is_square_zero(basis.elements[i])
                     for i in range(len(basis.elements)))
    span = stack_flattened(basis.field, basis.elements).rank()
    target = algebra_dim(kind, n)
    satisfied = all_sq and member_ok and span == target
    return StarReport(all_sq, span, target, member_ok, satisfied, tuple(sorted(failing)))


def so_isotropy_test(x: Matrix) -> bool:
    """Isotropy criterion: a skew matrix squares to zero iff the span of its
    columns is totally isotropic for the standard dot product.

    Checks the pairwise products of a maximal independent set of columns, a
    computation independent of forming the matrix square.
    """
    f = x.field
    if f.char == 2:
        raise LieAlgError("isotropy criterion requires characteristic != 2")
    if x.transpose() != -x:
        raise LieAlgError("isotropy criterion requires a skew-symmetric matrix")
    # maximal independent columns via elimination on the transpose
    _, pivots, _ = x.transpose().rref()
    cols = [[x[i, c] for i in range(x.nrows)] for c in pivots]
    for a in range(len(cols)):
        for b in range(a, len(cols)):
            acc = f.zero
            for u, v in zip(cols[a], cols[b]):
                acc = f.add(acc, f.mul(u, v))
            if acc != f.zero:
                return False
    return True


def trace_obstruction(n: int, field: Field) -> bool:
    """True iff the identity provably cannot be a sum of square-zero
    matrices by the trace argument: characteristic 0, or p not dividing n."""
    if n < 1:
        raise LieAlgError("n must be positive")
    if field.char == 0:
        return True
    return n % field.char != 0


def identity_decomposition_char2(n: int):
    """Square-zero matrices over GF(2) summing to the identity (n even).

    Returns 3n/2 matrices: per index pair (2i-1, 2i) the all-ones 2x2 block
    and the two off-diagonal units.
    """
    if n < 2 or n % 2:
        raise LieAlgError("identity decomposition requires even n >= 2")
    f2 = GF(2)
    m = n // 2
    out = []
    for i in range(m):
        a, b = 2 * i, 2 * i + 1  # 0-based pair
        block = (Matrix.unit(f2, n, a, a) + Matrix.unit(f2, n, a, b)
                 + Matrix.unit(f2, n, b, a) + Matrix.unit(f2, n, b, b))
        out.append(block)
        out.append(Matrix.unit(f2, n, b, a))  # v*_{2i-1} (x) v_{2i}
        out.append(Matrix.unit(f2, n, a, b))  # v*_{2i} (x) v_{2i-1}
    return out


def lf_algebra(gram: Matrix) -> LfReport:
    """Solve X^T F = F X over GF(2) for a square Gram matrix F.

    Linearizes over the n^2 entries of X, returns the kernel dimension, a
    matrix basis and whether the resulting algebra is abelian.
    """
    f = gram.field
    if not (isinstance(f, PrimeField) and f.p == 2):
        raise LieAlgError("L(f) solver works over GF(2)")
    if not gram.is_square():
        raise LieAlgError("Gram matrix must be square")
    n = gram.nrows
    # equation (i,j): sum_k F[k,j] X[k,i] + sum_k F[i,k] X[k,j] = 0
    rows = []
    for i in range(n):
        for j in range(n):
            row = [0] * (n * n)
            for k in range(n):
                row[k * n + i] = (row[k * n + i] + gram[k, j]) % 2
                row[k * n + j] = (row[k * n + j] + gram[i, k]) % 2
            rows.append(row)
    system = Matrix.from_rows(f, rows)
    kernel = system.kernel_basis()
    basis = tuple(Matrix(f, n, n, vec) for vec in kernel)
    abelian = True
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            if not (basis[a] @ basis[b] - basis[b] @ basis[a]).is_zero():
                abelian = False
                break
        if not abelian:
            break
    return LfReport(gram, len(basis), basis, abelian)


def star_bruteforce_gf2(basis: LieBasis) -> bool:
    """Exhaustive oracle over GF(2): enumerate the whole span, keep the
    square-zero elements, and ask whether they span the algebra."""
    f = basis.field
    if not (isinstance(f, PrimeField) and f.p == 2):
        raise LieAlgError("brute-force oracle works over GF(2)")
    d = len(basis.elements)
    if d > 20:
        raise LieAlgError(f"span too large to enumerate (2^{d} elements)")
    squarezero = []
    for mask in product((0, 1), repeat=d):
        m = Matrix.zeros(f, basis.ambient, basis.ambient)
        for bit, el in zip(mask, basis.elements):
            if bit:
                m = m + el
        if not m.is_zero() and is_square_zero(m):
            squarezero.append(m)
    if not squarezero:
        return d == 0
    return stack_flattened(f, squarezero).rank() == d
