"""Concrete invariants, exact invariance checks, and the 2x2 first-integral
classifier.

The built-in invariants live on the 5-dimensional spaces of a vector plus a
quadratic tensor over a 2-dimensional standard space, in the coordinate
order (x, y, z, t, u) produced by the representation module:

  I1      (2xyt - x^2 u - y^2 z) / (t^2 - zu)   on "V + S2(V)"
  I1dual  x^2 z + 2xyt + y^2 u                  on "V + S2(V*)"
  I2      zu - t^2                              on "V + S2(V)"
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional

from .fields import QQ
from .invbound import LinearVectorField
from .liealg import LieBasis, is_square_zero
from .matrix import Matrix, MatrixError
from .poly import Poly
from .reptheory import induced_group_action, rep_dim


class InvariantError(ValueError):
    pass


@dataclass(frozen=True)
class RationalInvariant:
    numerator: Poly
    denominator: Poly
    nvars: int

    def __post_init__(self):
        if self.denominator.is_zero():
            raise InvariantError("zero denominator")
        if (self.numerator.nvars != self.nvars
                or self.denominator.nvars != self.nvars):
            raise InvariantError("variable count mismatch")

    @property
    def is_polynomial(self) -> bool:
        one = Poly.const(self.numerator.field, self.nvars,
                         self.numerator.field.one)
        return self.denominator == one


def _p5(terms):
    """Build a 5-variable rational-coefficient polynomial from
    {(ex, ey, ez, et, eu): int coefficient}."""
    return Poly(QQ, 5, {e: Fraction(c) for e, c in terms.items()})


_BUILTINS = {
    # (2xyt - x^2 u - y^2 z) / (t^2 - zu)
    "I1": ((
        {(1, 1, 0, 1, 0): 2, (2, 0, 0, 0, 1): -1, (0, 2, 1, 0, 0): -1}),
        {(0, 0, 0, 2, 0): 1, (0, 0, 1, 0, 1): -1}),
    # x^2 z + 2xyt + y^2 u
    "I1dual": ((
        {(2, 0, 1, 0, 0): 1, (1, 1, 0, 1, 0): 2, (0, 2, 0, 0, 1): 1}),
        {(0, 0, 0, 0, 0): 1}),
    # zu - t^2
    "I2": ((
        {(0, 0, 1, 0, 1): 1, (0, 0, 0, 2, 0): -1}),
        {(0, 0, 0, 0, 0): 1}),
}


def builtin_invariant(name: str) -> RationalInvariant:
    try:
        num, den = _BUILTINS[name]
    except KeyError:
        raise InvariantError(
            f"unknown invariant {name!r} (have: {', '.join(sorted(_BUILTINS))})"
        ) from None
    return RationalInvariant(_p5(num), _p5(den), 5)


def annihilation_check(vf: LinearVectorField, inv: RationalInvariant) -> bool:
    """Exact infinitesimal invariance: X(P) Q - P X(Q) = 0 identically."""
    if vf.dim != inv.nvars:
        raise MatrixError("dimension mismatch")
    p, q = inv.numerator, inv.denominator
    return (vf.apply(p) * q - p * vf.apply(q)).is_zero()


def group_invariance_check(expr, inv: RationalInvariant, basis: LieBasis,
                           samples: int, seed: int, max_redraws: int = 50) -> bool:
    """Finite invariance on random group elements built from square-zero
    generators.

    Each sample draws a word of length at most 3 in generators I + t B with
    random nonzero rational t, and a random integer point; the identity is
    checked by exact cross-multiplication.  Points where either denominator
    vanishes are re-drawn (bounded retries).
    """
    for b in basis.elements:
        if not is_square_zero(b):
            raise InvariantError("generators must be square-zero matrices")
    if samples < 1:
        raise InvariantError("samples must be >= 1")
    f = basis.field
    if f != QQ:
        raise InvariantError("group invariance sampling works over the rationals")
    n = basis.ambient
    N = rep_dim(expr, n)
    if N != inv.nvars:
        raise MatrixError("representation dimension does not match invariant")
    rng = random.Random(seed)
    ident = Matrix.identity(f, n)
    p, q = inv.numerator, inv.denominator
    for _ in range(samples):
        length = rng.randint(1, 3)
        g = ident
        for _ in range(length):
            b = basis.elements[rng.randrange(len(basis.elements))]
            t = Fraction(rng.choice([k for k in range(-5, 6) if k]),
                         rng.randint(1, 4))
            g = g @ (ident + b.scale(t))
        act = induced_group_action(expr, g)
        for attempt in range(max_redraws + 1):
            point = tuple(Fraction(rng.randint(-9, 9)) for _ in range(N))
            moved = act.apply(point)
            qv, qgv = q.eval(point), q.eval(moved)
            if qv == 0 or qgv == 0:
                continue
            if p.eval(moved) * qv != p.eval(point) * qgv:
                return False
            break
        else:
            raise InvariantError("could not find a point off the denominator locus")
    return True


# -- 2x2 first-integral classification ---------------------------------------

@dataclass(frozen=True)
class FirstIntegralClass:
    kind: str  # "Rational" | "Polynomial" | "TranscendentalOnly"
    case_tag: str
    witness: Optional[str] = None

    def to_json_obj(self):
        return {"class": self.kind, "case": self.case_tag, "witness": self.witness}


def _is_rational_square(x: Fraction) -> bool:
    if x < 0:
        return False
    num, den = x.numerator, x.denominator
    return isqrt(num) ** 2 == num and isqrt(den) ** 2 == den


def _linear_form_str(w) -> str:
    names = ("x", "y")
    parts = []
    for c, name in zip(w, names):
        if c == 0:
            continue
        if c == 1:
            parts.append(name)
        elif c == -1:
            parts.append(f"-{name}")
        else:
            parts.append(f"{c}*{name}")
    return " + ".join(parts).replace("+ -", "- ")


def classify_2x2(a: Matrix) -> FirstIntegralClass:
    """Classify the first integrals of the linear flow generated by a
    nonzero rational 2x2 matrix.

    Rationality of the eigenvalue ratio is decided exactly: the discriminant
    of the characteristic polynomial is a rational square, or the trace is
    zero (opposite eigenvalues).  No numeric eigenvalue computation.
    """
    if a.field != QQ:
        raise InvariantError("classifier expects a rational matrix")
    if (a.nrows, a.ncols) != (2, 2):
        raise InvariantError("classifier expects a 2x2 matrix")
    if a.is_zero():
        raise InvariantError("classifier expects a nonzero matrix")
    tr = a.trace()
    det = a.det()
    disc = tr * tr - 4 * det

    scalar = a[0, 1] == 0 and a[1, 0] == 0 and a[0, 0] == a[1, 1]
    if scalar:
        # annihilator is linear; nonzero because a != 0
        return FirstIntegralClass("Rational", "scalar",
                                  witness="ratio of eigenvalues is 1")
    if det == 0:
        # one eigenvalue is 0: a linear form constant along the flow
        w = a.transpose().kernel_basis()[0]
        return FirstIntegralClass("Polynomial", "singular",
                                  witness=_linear_form_str(w))
    if disc == 0:
        alpha = tr / 2
        return FirstIntegralClass(
            "TranscendentalOnly", "jordan-block",
            witness=f"x'*exp(-({alpha})*y'/x') in Jordan coordinates")
    if tr == 0 or _is_rational_square(disc):
        return FirstIntegralClass("Rational", "distinct-ratio-rational",
                                  witness="eigenvalue ratio lies in Q")
    return FirstIntegralClass("TranscendentalOnly", "distinct-ratio-irrational",
                              witness="eigenvalue ratio is irrational")
