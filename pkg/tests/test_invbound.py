import random
from fractions import Fraction

import pytest

from invarank.fields import GF, QQ
from invarank.invbound import (RANDOM_EVAL, SYMBOLIC, BoundError,
                               generic_rank, group_derivation,
                               invariant_bound, vector_field)
from invarank.liealg import AlgebraKind, squarezero_basis
from invarank.matrix import Matrix
from invarank.poly import Poly
from invarank.reptheory import induced_derivative_action, parse_rep


def qmat(rows):
    return Matrix.from_rows(QQ, [[Fraction(x) for x in r] for r in rows])


def algebra_fields(kind, n, src, field=QQ):
    expr = parse_rep(src)
    basis = squarezero_basis(kind, n, field)
    return [vector_field(induced_derivative_action(expr, b))
            for b in basis.elements]


# -- vector fields ----------------------------------------------------------------

def test_zero_field():
    vf = vector_field(Matrix.zeros(QQ, 3, 3))
    p = Poly(QQ, 3, {(1, 2, 0): Fraction(4)})
    assert vf.apply(p).is_zero()
    assert vf.component(1).is_zero()


def test_euler_field_grades_by_degree():
    vf = vector_field(Matrix.identity(QQ, 2))
    # component j is x_j itself
    assert vf.component(0) == Poly.variable(QQ, 2, 0)
    p = Poly(QQ, 2, {(2, 1): Fraction(1)})  # x^2 y
    assert vf.apply(p) == p.scale(Fraction(3))


def test_e12_field_components():
    vf = vector_field(Matrix.unit(QQ, 2, 0, 1))
    # x_2 d/dx_1
    assert vf.component(0) == Poly.variable(QQ, 2, 1)
    assert vf.component(1).is_zero()


def test_group_derivation_e12():
    # coordinates x11 x12 x21 x22: D = x11 d/dx12 + x21 d/dx22
    d = group_derivation(Matrix.unit(QQ, 2, 0, 1))
    vf = vector_field(d)
    assert vf.component(1) == Poly.variable(QQ, 4, 0)
    assert vf.component(3) == Poly.variable(QQ, 4, 2)
    assert vf.component(0).is_zero() and vf.component(2).is_zero()


def test_group_derivation_is_right_multiplication():
    rng = random.Random(17)
    for _ in range(10):
        n = rng.randint(2, 3)
        a = qmat([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        # X -> X a on row-major coordinates is I (x) a^T
        assert group_derivation(a) == \
            Matrix.identity(QQ, n).kron(a.transpose())


def test_group_derivation_zero():
    assert group_derivation(Matrix.zeros(QQ, 2, 2)).is_zero()


# -- generic rank ------------------------------------------------------------------

def test_sl2_on_v_full_rank():
    fields = algebra_fields(AlgebraKind.sl, 2, "V")
    rep = generic_rank(fields, strategy=RANDOM_EVAL, seed=3)
    assert (rep.m, rep.N, rep.r) == (3, 2, 2)
    sym = generic_rank(fields, strategy=SYMBOLIC)
    assert sym.r == 2 and sym.failure_bound is None


def test_single_euler_rank_one():
    fields = [vector_field(Matrix.identity(QQ, 4))]
    assert generic_rank(fields, strategy=SYMBOLIC).r == 1
    assert generic_rank(fields, seed=1).r == 1


def test_random_never_exceeds_symbolic():
    rng = random.Random(23)
    for _ in range(8):
        n = rng.randint(2, 4)
        fields = [vector_field(qmat([[rng.randint(-2, 2) for _ in range(n)]
                                     for _ in range(n)]))
                  for _ in range(rng.randint(1, 4))]
        sym = generic_rank(fields, strategy=SYMBOLIC).r
        rand = generic_rank(fields, seed=rng.randint(0, 10 ** 6)).r
        assert rand <= sym


def test_random_rank_deterministic_in_seed():
    fields = algebra_fields(AlgebraKind.sl, 2, "V + S2(V)")
    a = generic_rank(fields, seed=42)
    b = generic_rank(fields, seed=42)
    assert a == b


def test_failure_bound_value():
    fields = algebra_fields(AlgebraKind.sl, 2, "V")
    rep = generic_rank(fields, seed=9, trials=2)
    assert rep.failure_bound == Fraction(2, 2001) ** 2


def test_prime_field_rank():
    f = GF(32003)
    fields = algebra_fields(AlgebraKind.sl, 2, "V + S2(V)", field=f)
    rep = generic_rank(fields, seed=5)
    assert rep.r == 3
    assert rep.failure_bound == Fraction(3, 32003) ** 5


def test_generic_rank_errors():
    fields = algebra_fields(AlgebraKind.sl, 2, "V")
    with pytest.raises(BoundError):
        generic_rank([])
    with pytest.raises(BoundError):
        generic_rank(fields)  # no seed
    with pytest.raises(BoundError):
        generic_rank(fields, seed=1, trials=0)
    with pytest.raises(BoundError):
        generic_rank(fields, strategy="guess", seed=1)
    small = algebra_fields(AlgebraKind.sl, 2, "V", field=GF(7))
    with pytest.raises(BoundError):
        generic_rank(small, seed=1)  # p too small for sampling


def test_symbolic_size_guard():
    fields = [vector_field(Matrix.zeros(QQ, 13, 13))]
    with pytest.raises(BoundError):
        generic_rank(fields, strategy=SYMBOLIC)
    rep = generic_rank(fields, strategy=SYMBOLIC, force_symbolic=True)
    assert rep.r == 0


def test_mixed_dimension_rejected():
    a = vector_field(Matrix.zeros(QQ, 2, 2))
    b = vector_field(Matrix.zeros(QQ, 3, 3))
    with pytest.raises(BoundError):
        generic_rank([a, b], seed=1)


# -- invariant bound ----------------------------------------------------------------

def test_gl2_quadric_bound_one():
    rep = invariant_bound(AlgebraKind.gl, 2, parse_rep("V + S2(V)"), QQ,
                          strategy=SYMBOLIC)
    assert (rep.N, rep.m, rep.r, rep.bound) == (5, 4, 4, 1)
    assert not rep.star_certified


def test_sl2_quadric_bound_two():
    rep = invariant_bound(AlgebraKind.sl, 2, parse_rep("V + S2(V)"), QQ,
                          strategy=SYMBOLIC)
    assert (rep.N, rep.m, rep.r, rep.bound) == (5, 3, 3, 2)
    assert rep.star_certified


def test_bound_insensitive_to_dual():
    a = invariant_bound(AlgebraKind.gl, 2, parse_rep("V + S2(V)"), QQ,
                        strategy=SYMBOLIC)
    b = invariant_bound(AlgebraKind.gl, 2, parse_rep("V + S2(V)*"), QQ,
                        strategy=SYMBOLIC)
    assert a.bound == b.bound == 1


def test_bound_report_json():
    rep = invariant_bound(AlgebraKind.sl, 2, parse_rep("V"), QQ,
                          seed=7, rep_src="V")
    obj = rep.to_json_obj()
    assert obj["group"] == "sl" and obj["rep"] == "V"
    assert obj["bound"] == rep.N - rep.r
    assert obj["failure_bound"].count("/") == 1
