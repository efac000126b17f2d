"""Generic rank of the module of invariant vector fields and the bound on
the number of algebraically independent invariant functions.

Each Lie algebra basis element, pushed through the representation functor,
gives a linear vector field on the representation space.  Stacking the
field coefficients applied to a point x gives a matrix W(x) of linear
forms; the number of independent invariants is bounded by N - r where N is
the space dimension and r the generic rank of W.  Two strategies: seeded
random evaluation (a certified lower bound on r plus a Schwartz-Zippel
failure bound for the equality claim) and exact symbolic elimination over
the rational function field.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .fields import Field, PrimeField, QQ
from .liealg import AlgebraKind, ambient_size, squarezero_basis, standard_basis
from .matrix import Matrix, MatrixError
from .poly import Poly, poly_matrix_rank
from .reptheory import induced_derivative_action, rep_dim


class BoundError(ValueError):
    pass


RANDOM_EVAL = "RandomEval"
SYMBOLIC = "Symbolic"

# RandomEval samples integers in [-RAND_BOX, RAND_BOX] over the rationals
RAND_BOX = 1000
DEFAULT_TRIALS = 5
DEFAULT_SYMBOLIC_LIMIT = 12


@dataclass(frozen=True)
class LinearVectorField:
    """The derivation sum_j (sum_k coeff[j,k] x_k) d/dx_j."""

    coeff: Matrix

    def __post_init__(self):
        if not self.coeff.is_square():
            raise MatrixError("vector field coefficient matrix must be square")

    @property
    def dim(self) -> int:
        return self.coeff.nrows

    def component(self, j: int) -> Poly:
        """The linear form multiplying d/dx_j."""
        f = self.coeff.field
        n = self.dim
        terms = {}
        for k in range(n):
            c = self.coeff[j, k]
            if c != f.zero:
                e = [0] * n
                e[k] = 1
                terms[tuple(e)] = c
        return Poly(f, n, terms)

    def apply(self, p: Poly) -> Poly:
        """Apply the derivation to a polynomial."""
        if p.nvars != self.dim:
            raise MatrixError("variable count mismatch")
        f = self.coeff.field
        out = Poly.zero(f, p.nvars)
        for j in range(self.dim):
            dj = p.diff(j)
            if not dj.is_zero():
                out = out + self.component(j) * dj
        return out


def vector_field(a_rep: Matrix) -> LinearVectorField:
    return LinearVectorField(a_rep)


def group_derivation(a: Matrix) -> Matrix:
    """Coefficient matrix of the invariant derivation attached to a on the
    n^2 matrix coordinates x_11, ..., x_nn (row-major): the x_jk component
    is sum_i a[i,k] x_ji."""
    if not a.is_square():
        raise MatrixError("expected a square matrix")
    f = a.field
    n = a.nrows
    cells = [f.zero] * (n * n * n * n)
    width = n * n
    for j in range(n):
        for k in range(n):
            row = j * n + k
            for i in range(n):
                c = a[i, k]
                if c != f.zero:
                    col = j * n + i
                    cells[row * width + col] = f.add(cells[row * width + col], c)
    return Matrix(f, width, width, cells)


@dataclass(frozen=True)
class RankReport:
    m: int
    N: int
    r: int
    strategy: str
    trials: int
    field: Field
    seed: Optional[int]
    failure_bound: Optional[Fraction]

    def to_json_obj(self):
        return {"m": self.m, "N": self.N, "r": self.r,
                "strategy": self.strategy, "trials": self.trials,
                "field": self.field.spec, "seed": self.seed,
                "failure_bound": (None if self.failure_bound is None
                                  else str(self.failure_bound))}


@dataclass(frozen=True)
class BoundReport:
    kind: AlgebraKind
    n: int
    rep: str
    N: int
    m: int
    r: int
    bound: int
    strategy: str
    trials: int
    seed: Optional[int]
    failure_bound: Optional[Fraction]
    star_certified: bool

    def to_json_obj(self):
        return {"group": self.kind.value, "n": self.n, "rep": self.rep,
                "N": self.N, "m": self.m, "r": self.r, "bound": self.bound,
                "strategy": self.strategy, "trials": self.trials,
                "seed": self.seed,
                "failure_bound": (None if self.failure_bound is None
                                  else str(self.failure_bound)),
                "star_certified": self.star_certified}


def _sample_point(field: Field, n: int, rng: random.Random):
    if field == QQ:
        return tuple(Fraction(rng.randint(-RAND_BOX, RAND_BOX)) for _ in range(n))
    return tuple(rng.randrange(field.p) for _ in range(n))


def symbolic_limit() -> int:
    raw = os.environ.get("INVARANK_MAX_SYMBOLIC_N")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise BoundError(f"bad INVARANK_MAX_SYMBOLIC_N value {raw!r}") from None
    return DEFAULT_SYMBOLIC_LIMIT


def generic_rank(fields, strategy: str = RANDOM_EVAL, trials: int = DEFAULT_TRIALS,
                 seed: Optional[int] = None, force_symbolic: bool = False) -> RankReport:
    """Generic rank of the module spanned by linear vector fields.

    RandomEval evaluates the m x N matrix of linear forms at seeded random
    points and takes the maximum observed rank (a certified lower bound; the
    failure bound for the equality claim follows the Schwartz-Zippel lemma
    applied to a maximal nonzero minor, of degree at most min(m, N)).
    Symbolic performs exact fraction-free elimination over the polynomial
    ring and is refused above the size guard unless forced.
    """
    fields = list(fields)
    if not fields:
        raise BoundError("empty vector field list")
    N = fields[0].dim
    base = fields[0].coeff.field
    for vf in fields:
        if vf.dim != N or vf.coeff.field != base:
            raise BoundError("vector fields must share space and field")
    m = len(fields)

    if strategy == SYMBOLIC:
        limit = symbolic_limit()
        if N > limit and not force_symbolic:
            raise BoundError(
                f"symbolic strategy refused for N={N} > {limit}"
                " (set INVARANK_MAX_SYMBOLIC_N or force_symbolic to override)")
        rows = [[vf.component(j) for j in range(N)] for vf in fields]
        r = poly_matrix_rank(rows)
        return RankReport(m, N, r, SYMBOLIC, 0, base, None, None)

    if strategy != RANDOM_EVAL:
        raise BoundError(f"unknown strategy {strategy!r}")
    if trials < 1:
        raise BoundError("trials must be >= 1")
    if isinstance(base, PrimeField) and base.p <= 1000:
        raise BoundError("RandomEval needs a prime field with p > 1000")
    if seed is None:
        raise BoundError("RandomEval requires a seed")
    rng = random.Random(seed)
    sample_size = base.p if isinstance(base, PrimeField) else 2 * RAND_BOX + 1
    r = 0
    for _ in range(trials):
        point = _sample_point(base, N, rng)
        w = Matrix.from_rows(base, [list(vf.coeff.apply(point)) for vf in fields])
        r = max(r, w.rank())
    failure = Fraction(min(m, N), sample_size) ** trials
    return RankReport(m, N, r, RANDOM_EVAL, trials, base, seed, failure)


def invariant_bound(kind, n: int, expr, field: Field,
                    strategy: str = RANDOM_EVAL, trials: int = DEFAULT_TRIALS,
                    seed: Optional[int] = None, rep_src: Optional[str] = None,
                    force_symbolic: bool = False) -> BoundReport:
    """Bound N - r on the number of algebraically independent invariants.

    Uses a square-zero basis when the algebra admits one (star_certified);
    otherwise falls back to the standard basis, in which case the bound is
    computed but not certified by a square-zero basis.
    """
    kind = AlgebraKind(kind)
    if kind in (AlgebraKind.sl, AlgebraKind.sp, AlgebraKind.strict_upper):
        basis = squarezero_basis(kind, n, field)
        certified = True
    else:
        basis = standard_basis(kind, n, field)
        certified = False
    amb = ambient_size(kind, n)
    N = rep_dim(expr, amb)
    fields = [vector_field(induced_derivative_action(expr, b))
              for b in basis.elements]
    report = generic_rank(fields, strategy=strategy, trials=trials, seed=seed,
                          force_symbolic=force_symbolic)
    return BoundReport(kind, n, rep_src if rep_src is not None else str(expr),
                       N, report.m, report.r, N - report.r, report.strategy,
                       report.trials, report.seed, report.failure_bound,
                       certified)
