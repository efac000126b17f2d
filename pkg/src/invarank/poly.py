"""Sparse multivariate polynomials over an exact field.

Terms are a map from dense exponent tuples to nonzero coefficients.  The
printing (and pivoting) order is graded lexicographic.  Includes the exact
division needed by fraction-free elimination over the polynomial ring.
"""

from __future__ import annotations

from .fields import Field


class PolyError(ValueError):
    pass


class Poly:
    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field: Field, nvars: int, terms=None):
        self.field = field
        self.nvars = nvars
        clean = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise PolyError("exponent vector length mismatch")
                if c != field.zero:
                    clean[tuple(e)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, field, nvars):
        return cls(field, nvars)

    @classmethod
    def const(cls, field, nvars, c):
        return cls(field, nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, field, nvars, i):
        if not 0 <= i < nvars:
            raise PolyError(f"variable index {i} out of range")
        e = [0] * nvars
        e[i] = 1
        return cls(field, nvars, {tuple(e): field.one})

    @classmethod
    def monomial(cls, field, nvars, exps, c):
        return cls(field, nvars, {tuple(exps): c})

    # -- predicates --------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def total_degree(self):
        """-1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.field == other.field
                and self.nvars == other.nvars and self.terms == other.terms)

    def __hash__(self):
        return hash((self.field, self.nvars, frozenset(self.terms.items())))

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if self.field != other.field or self.nvars != other.nvars:
            raise PolyError("polynomial ring mismatch")

    def __add__(self, other):
        self._check(other)
        f = self.field
        terms = dict(self.terms)
        for e, c in other.terms.items():
            acc = f.add(terms.get(e, f.zero), c)
            if acc == f.zero:
                terms.pop(e, None)
            else:
                terms[e] = acc
        return Poly(f, self.nvars, terms)

    def __neg__(self):
        f = self.field
        return Poly(f, self.nvars, {e: f.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        f = self.field
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc = f.add(terms.get(e, f.zero), f.mul(c1, c2))
                if acc == f.zero:
                    terms.pop(e, None)
                else:
                    terms[e] = acc
        return Poly(f, self.nvars, terms)

    def scale(self, c):
        f = self.field
        return Poly(f, self.nvars, {e: f.mul(c, x) for e, x in self.terms.items()})

    # -- calculus ----------------------------------------------------------

    def diff(self, var: int) -> "Poly":
        """Formal partial derivative; exponents act through the field, so
        characteristic-p annihilation is automatic."""
        if not 0 <= var < self.nvars:
            raise PolyError(f"variable index {var} out of range")
        f = self.field
        terms = {}
        for e, c in self.terms.items():
            k = e[var]
            if k == 0:
                continue
            coeff = f.mul(c, f.from_int(k))
            if coeff == f.zero:
                continue
            ne = list(e)
            ne[var] = k - 1
            terms[tuple(ne)] = f.add(terms.get(tuple(ne), f.zero), coeff)
        return Poly(f, self.nvars, {e: c for e, c in terms.items() if c != f.zero})

    def eval(self, point):
        if len(point) != self.nvars:
            raise PolyError("point length mismatch")
        f = self.field
        acc = f.zero
        for e, c in self.terms.items():
            val = c
            for x, k in zip(point, e):
                if k:
                    val = f.mul(val, f.pow(x, k))
            acc = f.add(acc, val)
        return acc

    # -- graded lex order and exact division --------------------------------

    @staticmethod
    def _grlex_key(e):
        return (sum(e), e)

    def leading_term(self):
        e = max(self.terms, key=Poly._grlex_key)
        return e, self.terms[e]

    def divexact(self, other: "Poly") -> "Poly":
        """Exact quotient; raises PolyError if division is not exact."""
        self._check(other)
        if other.is_zero():
            raise PolyError("division by zero polynomial")
        f = self.field
        r = self
        q = Poly.zero(f, self.nvars)
        eb, cb = other.leading_term()
        while not r.is_zero():
            er, cr = r.leading_term()
            e = tuple(a - b for a, b in zip(er, eb))
            if any(x < 0 for x in e):
                raise PolyError("inexact polynomial division")
            c = f.div(cr, cb)
            mono = Poly.monomial(f, self.nvars, e, c)
            q = q + mono
            r = r - mono * other
        return q

    # -- printing ----------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=Poly._grlex_key, reverse=True):
            c = self.terms[e]
            vars_ = "*".join(
                f"x{i + 1}" + (f"^{k}" if k > 1 else "")
                for i, k in enumerate(e) if k)
            cs = self.field.fmt(c)
            if vars_:
                parts.append(vars_ if cs == "1" else f"{cs}*{vars_}")
            else:
                parts.append(cs)
        return " + ".join(parts)

    __repr__ = __str__


def poly_matrix_rank(rows) -> int:
    """Rank of a matrix of Poly entries over the rational function field.

    Fraction-free (Bareiss) elimination with exact polynomial division;
    pivots on the lowest-degree nonzero entry to limit expression swell.
    """
    rows = [list(r) for r in rows]
    nrows = len(rows)
    ncols = len(rows[0])
    field = rows[0][0].field
    nvars = rows[0][0].nvars
    prev = Poly.const(field, nvars, field.one)
    r = 0
    steps = min(nrows, ncols)
    while r < steps:
        piv = None
        best = None
        for i in range(r, nrows):
            for j in range(r, ncols):
                p = rows[i][j]
                if not p.is_zero():
                    d = p.total_degree()
                    if best is None or d < best:
                        best = d
                        piv = (i, j)
                        if d == 0:
                            break
            if best == 0:
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
            for j in range(r + 1, ncols):
                num = pv * rows[i][j] - fi * rows[r][j]
                rows[i][j] = num.divexact(prev)
            rows[i][r] = Poly.zero(field, nvars)
        prev = pv
        r += 1
    return r
