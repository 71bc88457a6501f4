"""Unit tests for exact Q(zeta_N) arithmetic and matrices."""

from fractions import Fraction

import pytest

from heckeforge import (CycloError, CycloContext, CyclotomicNumber,
                        CycloMatrix, cyclotomic_polynomial)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    # degree = Euler phi
    assert len(cyclotomic_polynomial(20)) - 1 == 8


def test_zeta_powers_cycle():
    ctx = CycloContext(12)
    z = ctx.zeta_pow(1)
    acc = ctx.one()
    for k in range(1, 13):
        acc = acc * z
        assert acc == ctx.zeta_pow(k)
    assert acc == ctx.one()


def test_field_arithmetic_exact():
    ctx = CycloContext(20)
    a = ctx.zeta_pow(3) + ctx.from_rational(Fraction(2, 3))
    b = ctx.zeta_pow(7) - ctx.from_rational(5)
    assert (a + b) - b == a
    assert a * b == b * a
    assert (a * b) * a.inv() == b * (a * a.inv())
    assert a * a.inv() == ctx.one()
    with pytest.raises(CycloError):
        ctx.zero().inv()


def test_conjugation_and_abs_squared():
    ctx = CycloContext(12)
    z = ctx.zeta_pow(1)
    assert z.conj() == ctx.zeta_pow(11)
    assert z.abs_squared() == ctx.one()
    # Gauss sum norm: |sum zeta_p^{t^2}|^2 = p for p = 3 inside Q(zeta_12)
    g = ctx.zero()
    for t in range(3):
        g = g + ctx.zeta_pow(4 * (t * t % 3))
    assert g.abs_squared() == ctx.from_rational(3)


def test_galois_is_automorphism():
    ctx = CycloContext(12)
    a = ctx.zeta_pow(1) + ctx.from_rational(2)
    b = ctx.zeta_pow(5) - ctx.one()
    for k in (5, 7, 11):
        assert ctx.galois(a * b, k) == ctx.galois(a, k) * ctx.galois(b, k)
    with pytest.raises(CycloError):
        ctx.galois(a, 4)


def test_rational_detection():
    ctx = CycloContext(12)
    r = ctx.from_rational(Fraction(-7, 4))
    assert r.is_rational() and r.as_rational() == Fraction(-7, 4)
    with pytest.raises(CycloError):
        ctx.zeta_pow(1).as_rational()


def test_matrix_matmul_matches_entrywise():
    ctx = CycloContext(12)
    rows_a = [[ctx.zeta_pow(i * 2 + j) for j in range(3)] for i in range(3)]
    rows_b = [[ctx.zeta_pow(5 * i + j) + ctx.from_rational(j)
               for j in range(3)] for i in range(3)]
    a = CycloMatrix.from_entries(ctx, rows_a)
    b = CycloMatrix.from_entries(ctx, rows_b)
    prod = a @ b
    for i in range(3):
        for j in range(3):
            want = ctx.zero()
            for k in range(3):
                want = want + rows_a[i][k] * rows_b[k][j]
            assert prod.entry(i, j) == want


def test_matrix_trace_scale_conj_transpose():
    ctx = CycloContext(8)
    a = CycloMatrix.from_entries(
        ctx, [[ctx.zeta_pow(1), ctx.from_rational(2)],
              [ctx.zero(), ctx.zeta_pow(3)]])
    assert a.trace() == ctx.zeta_pow(1) + ctx.zeta_pow(3)
    s = a.scale(Fraction(1, 2))
    assert s.entry(0, 1) == ctx.from_rational(1)
    ct = a.conj_transpose()
    assert ct.entry(0, 0) == ctx.zeta_pow(7)
    assert ct.entry(1, 0) == ctx.from_rational(2)


def test_matrix_identity_and_proportionality():
    ctx = CycloContext(8)
    ident = CycloMatrix.identity(ctx, 2)
    a = ident.scale(ctx.zeta_pow(3))
    c = a.proportional_to(ident)
    assert c == ctx.zeta_pow(3)
    b = CycloMatrix.from_entries(ctx, [[1, 0], [0, ctx.zeta_pow(1)]])
    assert b.proportional_to(ident) is None
    i, j, e = a.first_nonzero()
    assert (i, j) == (0, 0) and e == ctx.zeta_pow(3)
    assert CycloMatrix.zeros(ctx, 2).is_zero()
