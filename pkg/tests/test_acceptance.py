"""End-to-end acceptance suite.

One test per criterion; each prints a single PASS line on success (run with
``pytest -s`` to see them inline).  Later criteria reuse rank results
recorded by the earlier ones.
"""

import json
import random
import time
from fractions import Fraction
from itertools import product

import pytest

from invarank import cli
from invarank.fields import GF, QQ
from invarank.invariants import (annihilation_check, builtin_invariant,
                                 classify_2x2, group_invariance_check)
from invarank.invbound import SYMBOLIC, invariant_bound, vector_field
from invarank.liealg import (AlgebraKind, identity_decomposition_char2,
                             is_square_zero, lf_algebra, so_isotropy_test,
                             squarezero_basis, standard_basis,
                             star_bruteforce_gf2, trace_obstruction,
                             verify_star)
from invarank.matrix import Matrix
from invarank.reptheory import induced_derivative_action, parse_rep


RESULTS = {}  # shared between criteria 1-3 and criterion 10


def report(num, text):
    print(f"PASS criterion {num}: {text}")


def run_cli_json(capsys, argv):
    code = cli.run(argv)
    captured = capsys.readouterr()
    assert code == 0, captured.err
    return json.loads(captured.out)


def skew_from_upper(field, n, coeffs):
    m = Matrix.zeros(field, n, n)
    it = iter(coeffs)
    for i in range(n):
        for j in range(i + 1, n):
            c = next(it)
            m = m + Matrix.unit(field, n, i, j).scale(c) \
                  - Matrix.unit(field, n, j, i).scale(c)
    return m


def test_criterion_01_sp6_on_wedge3(capsys):
    for field in ("q", "p:32003"):
        start = time.perf_counter()
        obj = run_cli_json(capsys, ["bound", "sp", "3", "E3(V)",
                                    "--field", field, "--seed", "7"])
        elapsed = time.perf_counter() - start
        assert (obj["N"], obj["m"], obj["r"], obj["bound"]) == (20, 21, 18, 2)
        assert elapsed < 5.0
        RESULTS[f"c1-{field}"] = obj
    report(1, "sp(6) on E3(V): N=20 m=21 r=18 bound=2 over q and p:32003, "
              "each under 5 s")


def test_criterion_02_sl2_quadric_symbolic():
    rep = invariant_bound(AlgebraKind.sl, 2, parse_rep("V + S2(V)"), QQ,
                          strategy=SYMBOLIC)
    assert (rep.r, rep.bound) == (3, 2)
    RESULTS["c2-symbolic"] = rep
    rep_r = invariant_bound(AlgebraKind.sl, 2, parse_rep("V + S2(V)"), QQ,
                            seed=101)
    RESULTS["c2-random"] = rep_r
    report(2, "sl(2) on V + S2(V), symbolic: r=3 bound=2")


def test_criterion_03_gl2_quadric_both_variants():
    for src in ("V + S2(V)", "V + S2(V)*"):
        rep = invariant_bound(AlgebraKind.gl, 2, parse_rep(src), QQ,
                              strategy=SYMBOLIC)
        assert (rep.r, rep.bound) == (4, 1)
        RESULTS[f"c3-symbolic-{src}"] = rep
        rep_r = invariant_bound(AlgebraKind.gl, 2, parse_rep(src), QQ,
                                seed=102)
        RESULTS[f"c3-random-{src}"] = rep_r
    report(3, "gl(2) on V + S2(V) and V + S2(V)*: r=4 bound=1")


def test_criterion_04_square_zero_bases():
    failures = 0
    for field in (QQ, GF(2), GF(5)):
        for n in range(2, 6):
            for kind in (AlgebraKind.sl, AlgebraKind.strict_upper):
                if not verify_star(squarezero_basis(kind, n, field)).satisfied:
                    failures += 1
        for n in range(1, 4):
            basis = squarezero_basis(AlgebraKind.sp, n, field)
            if not verify_star(basis).satisfied:
                failures += 1
    assert failures == 0
    report(4, "square-zero bases verified for sl(2..5), sp(2..6), "
              "strict_upper(2..5) over q, p:2, p:5 with zero failures")


def test_criterion_05_isotropy_oracle_equivalence():
    f3 = GF(3)
    for coeffs in product(range(3), repeat=3):
        x = skew_from_upper(f3, 3, coeffs)
        assert is_square_zero(x) == so_isotropy_test(x)
    rng = random.Random(505)
    checked = 0
    for n, p in product((4, 5, 6), (3, 5, 7)):
        field = GF(p)
        for _ in range(1200):
            coeffs = [rng.randrange(p) for _ in range(n * (n - 1) // 2)]
            x = skew_from_upper(field, n, coeffs)
            assert is_square_zero(x) == so_isotropy_test(x)
            checked += 1
    assert checked >= 10 ** 4
    report(5, "is_square_zero and so_isotropy_test agree on all 27 elements "
              f"of so(3, GF(3)) and on {checked} random so(n, GF(p)) elements")


def test_criterion_06_identity_decomposition_and_obstruction():
    for n in (2, 4, 6, 8):
        mats = identity_decomposition_char2(n)
        assert len(mats) == 3 * n // 2
        assert all(is_square_zero(m) for m in mats)
        total = mats[0]
        for m in mats[1:]:
            total = total + m
        assert total == Matrix.identity(GF(2), n)
    for n in range(1, 10):
        assert trace_obstruction(n, GF(2)) == (n % 2 == 1)
    for p in (3, 5):
        for n in range(1, 12):
            assert trace_obstruction(n, GF(p)) == (n % p != 0)
    report(6, "identity decomposes into 3n/2 square-zero matrices over GF(2) "
              "for n in {2,4,6,8}; trace obstruction matches the divisibility rule")


def test_criterion_07_char2_selfadjoint_dimensions():
    f2 = GF(2)

    def jordan(m, lam=0):
        return Matrix.from_rows(
            f2, [[lam if i == j else (1 if i == j + 1 else 0)
                  for j in range(m)] for i in range(m)])

    def blocks(tl, tr, bl, br):
        top = [list(tl.row(i)) + list(tr.row(i)) for i in range(tl.nrows)]
        bot = [list(bl.row(i)) + list(br.row(i)) for i in range(bl.nrows)]
        return Matrix.from_rows(f2, top + bot)

    # odd Jordan Gram
    for m in (1, 2):
        rep = lf_algebra(jordan(2 * m + 1))
        assert rep.dimension == m + 1 and rep.abelian
    # block A (nilpotent Jordan off-diagonal): abelian of dimension m
    for m in (2, 3):
        z, im = Matrix.zeros(f2, m, m), Matrix.identity(f2, m)
        rep = lf_algebra(blocks(z, jordan(m), im, z))
        assert rep.dimension == m and rep.abelian
    # block B: gl(m); over GF(2) the lambda != 1 variant coincides with it
    m = 3
    z, im = Matrix.zeros(f2, m, m), Matrix.identity(f2, m)
    rep = lf_algebra(blocks(z, z, im, z))
    assert rep.dimension == m * m and not rep.abelian
    rep_lam = lf_algebra(blocks(z, im.scale(0), im, z))
    assert rep_lam.dimension == m * m
    # unit-eigenvalue 2x2 Jordan block variant: abelian of dimension 4
    z2, i2 = Matrix.zeros(f2, 2, 2), Matrix.identity(f2, 2)
    rep = lf_algebra(blocks(z2, jordan(2, 1), i2, z2))
    assert rep.dimension == 4 and rep.abelian
    # hyperbolic block: sp(2m)
    for m in (2, 3):
        z, im = Matrix.zeros(f2, m, m), Matrix.identity(f2, m)
        rep = lf_algebra(blocks(z, im, im, z))
        assert rep.dimension == 2 * m * m + m and not rep.abelian
    # gl(2, GF(2)) has no square-zero basis
    assert not star_bruteforce_gf2(standard_basis(AlgebraKind.gl, 2, f2))
    report(7, "characteristic-2 self-adjoint algebra dimensions and abelian "
              "flags all match; gl(2, GF(2)) confirmed to have no square-zero basis")


def test_criterion_08_invariant_checks():
    expr = parse_rep("V + S2(V)")
    i1, i2 = builtin_invariant("I1"), builtin_invariant("I2")
    sl_fields = []
    for mk in (standard_basis, squarezero_basis):
        for b in mk(AlgebraKind.sl, 2, QQ).elements:
            sl_fields.append(vector_field(induced_derivative_action(expr, b)))
    assert len(sl_fields) == 6
    assert all(annihilation_check(vf, i2) for vf in sl_fields)
    gl_fields = [vector_field(induced_derivative_action(expr, b))
                 for b in standard_basis(AlgebraKind.gl, 2, QQ).elements]
    assert all(annihilation_check(vf, i1) for vf in gl_fields)

    sz = squarezero_basis(AlgebraKind.sl, 2, QQ)
    assert group_invariance_check(expr, i1, sz, samples=100, seed=801)
    assert group_invariance_check(expr, i2, sz, samples=100, seed=802)
    dual_expr = parse_rep("V + S2(V*)")
    assert group_invariance_check(dual_expr, builtin_invariant("I1dual"),
                                  squarezero_basis(AlgebraKind.sl, 2, QQ),
                                  samples=100, seed=803)
    # negative control: diag(2, 1) is not in SL(2) and rescales I2
    diag = Matrix.from_rows(QQ, [[Fraction(2), Fraction(0)],
                                 [Fraction(0), Fraction(1)]])
    bad = vector_field(induced_derivative_action(expr, diag))
    assert not annihilation_check(bad, i2)
    report(8, "annihilation holds for I2 (6 sl(2) fields) and I1 (4 gl(2) "
              "fields); group invariance holds for I1, I1dual, I2 at 100 "
              "samples; diag(2,1) control fails")


def test_criterion_09_classifier_and_properties():
    def qmat(rows):
        return Matrix.from_rows(QQ, [[Fraction(x) for x in r] for r in rows])

    tagged = [
        (qmat([[1, 0], [0, 2]]), "Rational"),
        (qmat([[1, 1], [1, 2]]), "TranscendentalOnly"),
        (qmat([[0, 1], [0, 0]]), "Polynomial"),
        (qmat([[1, 0], [1, 1]]), "TranscendentalOnly"),
        (qmat([[3, 0], [0, 0]]), "Polynomial"),
    ]
    for m, expected in tagged:
        assert classify_2x2(m).kind == expected

    rng = random.Random(909)
    done = 0
    while done < 1000:
        m, expected = tagged[done % len(tagged)]
        if done % 2 == 0:
            g = qmat([[rng.randint(-5, 5) for _ in range(2)] for _ in range(2)])
            if g.det() == 0:
                continue
            probe = g @ m @ g.inverse()
        else:
            c = Fraction(rng.choice([k for k in range(-6, 7) if k]),
                         rng.randint(1, 5))
            probe = m.scale(c)
        assert classify_2x2(probe).kind == expected
        done += 1
    report(9, "all five tagged 2x2 flows classify as in the table; class "
              "stable under 1000 random conjugations and scalings")


def test_criterion_10_probabilistic_soundness():
    assert RESULTS, "criteria 1-3 must run first"
    # random rank never exceeds the symbolic rank where both are available
    assert RESULTS["c2-random"].r <= RESULTS["c2-symbolic"].r
    for src in ("V + S2(V)", "V + S2(V)*"):
        assert RESULTS[f"c3-random-{src}"].r <= \
            RESULTS[f"c3-symbolic-{src}"].r
    # every RandomEval run reports failure_bound <= 1e-10 at defaults
    bounds = []
    for key, rep in RESULTS.items():
        fb = rep["failure_bound"] if isinstance(rep, dict) else rep.failure_bound
        if fb is None:
            continue
        bounds.append(Fraction(fb) if isinstance(fb, str) else fb)
    assert bounds
    assert all(fb <= Fraction(1, 10 ** 10) for fb in bounds)
    report(10, "RandomEval ranks never exceed symbolic ranks; all "
               "failure bounds are at most 1e-10")
