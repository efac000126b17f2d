"""Representation expressions and their induced matrix actions.

An expression is built from the standard representation V by duals, direct
sums, tensor products, symmetric powers and exterior powers.  The k-th
symmetric power uses the full-symmetrization basis (sum over the distinct
arrangements of a monomial, no factorial normalization), which is valid in
every characteristic and makes the degree-2 coordinates on a 2-dimensional
space literally (z, t, u).

Two functors are provided: the Lie-algebra level action (Leibniz rule) and
the group level action (multiplicative).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, permutations
from math import comb

from .matrix import Matrix, MatrixError, block_diag


class RepParseError(ValueError):
    """Syntax error in a representation expression; carries the position."""

    def __init__(self, msg, pos):
        super().__init__(f"{msg} (at position {pos})")
        self.pos = pos


# -- AST ---------------------------------------------------------------------

@dataclass(frozen=True)
class V:
    def __str__(self):
        return "V"


@dataclass(frozen=True)
class Dual:
    inner: object

    def __str__(self):
        s = str(self.inner)
        return s + "*" if isinstance(self.inner, (V, Sym, Ext)) else f"({s})*"


@dataclass(frozen=True)
class Sum:
    left: object
    right: object

    def __str__(self):
        return f"{self.left} + {self.right}"


@dataclass(frozen=True)
class Tensor:
    left: object
    right: object

    def __str__(self):
        ls = f"({self.left})" if isinstance(self.left, Sum) else str(self.left)
        rs = f"({self.right})" if isinstance(self.right, Sum) else str(self.right)
        return f"{ls} * {rs}"


@dataclass(frozen=True)
class Sym:
    k: int
    inner: object

    def __post_init__(self):
        if self.k < 1:
            raise RepParseError("symmetric power needs k >= 1", 0)

    def __str__(self):
        return f"S{self.k}({self.inner})"


@dataclass(frozen=True)
class Ext:
    k: int
    inner: object

    def __post_init__(self):
        if self.k < 1:
            raise RepParseError("exterior power needs k >= 1", 0)

    def __str__(self):
        return f"E{self.k}({self.inner})"


RepExpr = (V, Dual, Sum, Tensor, Sym, Ext)


# -- parser ------------------------------------------------------------------

class _Parser:
    """Recursive descent over: expr := term ('+' term)*;
    term := factor ('*' factor)*; a '*' not followed by a factor start is a
    dual suffix on the preceding factor."""

    def __init__(self, src: str):
        self.src = src
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def _peek(self):
        self._skip_ws()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def _expect(self, ch):
        if self._peek() != ch:
            raise RepParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def _starts_factor(self, ch):
        return ch in ("V", "S", "E", "(")

    def parse(self):
        e = self.expr()
        self._skip_ws()
        if self.pos != len(self.src):
            raise RepParseError(f"unexpected {self.src[self.pos]!r}", self.pos)
        return e

    def expr(self):
        e = self.term()
        while self._peek() == "+":
            self.pos += 1
            e = Sum(e, self.term())
        return e

    def term(self):
        e = self.factor()
        while self._peek() == "*":
            save = self.pos
            self.pos += 1
            if self._starts_factor(self._peek()):
                e = Tensor(e, self.factor())
            else:
                self.pos = save
                break
        return e

    def factor(self):
        ch = self._peek()
        if ch == "V":
            self.pos += 1
            node = V()
        elif ch in ("S", "E"):
            kind = ch
            self.pos += 1
            k = self._int()
            self._expect("(")
            inner = self.expr()
            self._expect(")")
            node = Sym(k, inner) if kind == "S" else Ext(k, inner)
        elif ch == "(":
            self.pos += 1
            node = self.expr()
            self._expect(")")
        else:
            raise RepParseError("expected 'V', 'S', 'E' or '('", self.pos)
        # dual suffixes: a '*' not followed by a factor start
        while self._peek() == "*":
            save = self.pos
            self.pos += 1
            if self._starts_factor(self._peek()):
                self.pos = save
                break
            node = Dual(node)
        return node

    def _int(self):
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise RepParseError("expected a power index", self.pos)
        k = int(self.src[start:self.pos])
        if k == 0:
            raise RepParseError("power index must be positive", start)
        return k


def parse_rep(src: str):
    """Parse a representation expression, e.g. "V + S2(V)" or "E3(V*)"."""
    return _Parser(src).parse()


# -- dimensions and labels -----------------------------------------------------

def rep_dim(expr, n: int) -> int:
    if isinstance(expr, V):
        return n
    if isinstance(expr, Dual):
        return rep_dim(expr.inner, n)
    if isinstance(expr, Sum):
        return rep_dim(expr.left, n) + rep_dim(expr.right, n)
    if isinstance(expr, Tensor):
        return rep_dim(expr.left, n) * rep_dim(expr.right, n)
    if isinstance(expr, Sym):
        return comb(rep_dim(expr.inner, n) + expr.k - 1, expr.k)
    if isinstance(expr, Ext):
        return comb(rep_dim(expr.inner, n), expr.k)
    raise TypeError(f"not a representation expression: {expr!r}")


def rep_labels(expr, n: int):
    if isinstance(expr, V):
        return [f"v{i + 1}" for i in range(n)]
    if isinstance(expr, Dual):
        return [lab + "*" for lab in rep_labels(expr.inner, n)]
    if isinstance(expr, Sum):
        return rep_labels(expr.left, n) + rep_labels(expr.right, n)
    if isinstance(expr, Tensor):
        ll, rl = rep_labels(expr.left, n), rep_labels(expr.right, n)
        return [f"{a}.{b}" for a in ll for b in rl]
    if isinstance(expr, Sym):
        il = rep_labels(expr.inner, n)
        return [".".join(il[i] for i in mono)
                for mono in combinations_with_replacement(range(len(il)), expr.k)]
    if isinstance(expr, Ext):
        il = rep_labels(expr.inner, n)
        return ["^".join(il[i] for i in wedge)
                for wedge in combinations(range(len(il)), expr.k)]
    raise TypeError(f"not a representation expression: {expr!r}")


# -- power functors on a single matrix -----------------------------------------

def _sym_indices(d, k):
    basis = list(combinations_with_replacement(range(d), k))
    return basis, {b: i for i, b in enumerate(basis)}


def _ext_indices(d, k):
    basis = list(combinations(range(d), k))
    return basis, {b: i for i, b in enumerate(basis)}


def sym_derivative(m: Matrix, k: int) -> Matrix:
    """Leibniz action on the full-symmetrization monomial basis.

    The transition mu -> nu = mu - e_i + e_j carries coefficient
    m[j, i] * (multiplicity of j in nu).
    """
    f = m.field
    d = m.nrows
    basis, index = _sym_indices(d, k)
    out = Matrix.zeros(f, len(basis), len(basis))
    cells = list(out.cells)
    width = len(basis)
    for col, mu in enumerate(basis):
        for i in set(mu):
            pos = mu.index(i)
            for j in range(d):
                c = m[j, i]
                if c == f.zero:
                    continue
                nu = list(mu)
                nu[pos] = j
                nu = tuple(sorted(nu))
                mult = nu.count(j)
                row = index[nu]
                cells[row * width + col] = f.add(
                    cells[row * width + col], f.mul(c, f.from_int(mult)))
    return Matrix(f, width, width, cells)


def sym_group(m: Matrix, k: int) -> Matrix:
    """Multiplicative action on symmetric tensors: entry (nu, mu) sums the
    products of matrix entries over the distinct arrangements of mu, against
    a fixed arrangement of nu."""
    f = m.field
    d = m.nrows
    basis, index = _sym_indices(d, k)
    width = len(basis)
    cells = [f.zero] * (width * width)
    for col, mu in enumerate(basis):
        words = set(permutations(mu))
        for row, nu in enumerate(basis):
            acc = f.zero
            for w in words:
                prod = f.one
                for us, ws in zip(nu, w):
                    prod = f.mul(prod, m[us, ws])
                    if prod == f.zero:
                        break
                acc = f.add(acc, prod)
            cells[row * width + col] = acc
    return Matrix(f, width, width, cells)


def _sort_sign(seq):
    """(sign, sorted tuple) by counting swaps; None if repeated entries."""
    seq = list(seq)
    sign = 1
    for i in range(1, len(seq)):
        j = i
        while j > 0 and seq[j - 1] > seq[j]:
            seq[j - 1], seq[j] = seq[j], seq[j - 1]
            sign = -sign
            j -= 1
    for i in range(1, len(seq)):
        if seq[i - 1] == seq[i]:
            return 0, None
    return sign, tuple(seq)


def ext_derivative(m: Matrix, k: int) -> Matrix:
    f = m.field
    d = m.nrows
    basis, index = _ext_indices(d, k)
    width = len(basis)
    cells = [f.zero] * (width * width)
    for col, mu in enumerate(basis):
        for pos, i in enumerate(mu):
            for j in range(d):
                c = m[j, i]
                if c == f.zero:
                    continue
                cand = list(mu)
                cand[pos] = j
                sign, nu = _sort_sign(cand)
                if sign == 0:
                    continue
                row = index[nu]
                val = c if sign > 0 else f.neg(c)
                cells[row * width + col] = f.add(cells[row * width + col], val)
    return Matrix(f, width, width, cells)


def ext_group(m: Matrix, k: int) -> Matrix:
    """Compound matrix: entry (J, I) is the minor of m on rows J, columns I."""
    f = m.field
    d = m.nrows
    basis, _ = _ext_indices(d, k)
    width = len(basis)
    cells = [f.zero] * (width * width)
    for row, jj in enumerate(basis):
        for col, ii in enumerate(basis):
            sub = Matrix.from_rows(f, [[m[a, b] for b in ii] for a in jj])
            cells[row * width + col] = sub.det()
    return Matrix(f, width, width, cells)


# -- the two functors ----------------------------------------------------------

def induced_derivative_action(expr, a: Matrix) -> Matrix:
    """Matrix of the Lie-algebra element a acting on the expression space."""
    if not a.is_square():
        raise MatrixError("algebra element must be square")
    if isinstance(expr, V):
        return a
    if isinstance(expr, Dual):
        return -induced_derivative_action(expr.inner, a).transpose()
    if isinstance(expr, Sum):
        return block_diag(induced_derivative_action(expr.left, a),
                          induced_derivative_action(expr.right, a))
    if isinstance(expr, Tensor):
        ml = induced_derivative_action(expr.left, a)
        mr = induced_derivative_action(expr.right, a)
        il = Matrix.identity(a.field, ml.nrows)
        ir = Matrix.identity(a.field, mr.nrows)
        return ml.kron(ir) + il.kron(mr)
    if isinstance(expr, Sym):
        return sym_derivative(induced_derivative_action(expr.inner, a), expr.k)
    if isinstance(expr, Ext):
        return ext_derivative(induced_derivative_action(expr.inner, a), expr.k)
    raise TypeError(f"not a representation expression: {expr!r}")


def induced_group_action(expr, g: Matrix) -> Matrix:
    """Matrix of the group element g acting on the expression space."""
    if not g.is_square():
        raise MatrixError("group element must be square")
    if isinstance(expr, V):
        return g
    if isinstance(expr, Dual):
        return induced_group_action(expr.inner, g).inverse().transpose()
    if isinstance(expr, Sum):
        return block_diag(induced_group_action(expr.left, g),
                          induced_group_action(expr.right, g))
    if isinstance(expr, Tensor):
        return induced_group_action(expr.left, g).kron(
            induced_group_action(expr.right, g))
    if isinstance(expr, Sym):
        return sym_group(induced_group_action(expr.inner, g), expr.k)
    if isinstance(expr, Ext):
        return ext_group(induced_group_action(expr.inner, g), expr.k)
    raise TypeError(f"not a representation expression: {expr!r}")
