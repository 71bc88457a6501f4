"""Unit tests for graded quadratic spaces and the mu_4-valued extended
character."""

import itertools
import random

import pytest

from heckeforge import (FqContext, GradedError, GradedQuadraticSpace,
                        Mu4Value, zeta_scaling, glplus_membership,
                        otilde_membership, extended_sn, QuadSpaceError,
                        OrthogonalMap, sgn_spinor, random_orthogonal)
from heckeforge import linalg


def _one_orbit_space(p):
    ctx = FqContext(p)
    return GradedQuadraticSpace(ctx, [("a", 2, "asym")], [[0, 1], [1, 0]])


def _orthogonal_matrices(space):
    """All of O(V) for a tiny 2-dimensional space (brute force)."""
    ctx = space.ctx
    els = list(ctx.elements())
    out = []
    for flat in itertools.product(els, repeat=4):
        rows = [flat[:2], flat[2:]]
        try:
            out.append(OrthogonalMap(space.space, rows))
        except QuadSpaceError:
            continue
    return out


def test_block_shape_validation():
    ctx = FqContext(3)
    with pytest.raises(GradedError):
        # asym block of odd dimension
        GradedQuadraticSpace(ctx, [("a", 1, "asym")], [[2]])
    with pytest.raises(GradedError):
        # asym block with a nonzero half-diagonal sub-block
        GradedQuadraticSpace(ctx, [("a", 2, "asym")], [[2, 0], [0, 2]])
    with pytest.raises(GradedError):
        # gram couples two distinct orbit-blocks
        GradedQuadraticSpace(ctx, [("a", 1, "sym"), ("b", 1, "sym")],
                             [[2, 1], [1, 1]])


def test_sqrt_sign_choice_validated():
    ctx = FqContext(3)  # sgn(-1) = -1, so the root must be +-i
    with pytest.raises(GradedError):
        GradedQuadraticSpace(ctx, [("a", 2, "asym")], [[0, 1], [1, 0]],
                             sqrt_sign_of_minus_one=Mu4Value(0))
    sp = GradedQuadraticSpace(ctx, [("a", 2, "asym")], [[0, 1], [1, 0]],
                              sqrt_sign_of_minus_one=Mu4Value(3))
    assert sp.sqrt_sign == Mu4Value(3)


def test_zeta_scaling_asym_only():
    ctx = FqContext(3)
    sp = GradedQuadraticSpace(ctx, [("a", 2, "asym"), ("b", 1, "sym")],
                              [[0, 1, 0], [1, 0, 0], [0, 0, 2]])
    z = zeta_scaling(sp, "a")
    assert z[0][0] == sp.zeta and z[2][2] == sp.ext_ctx.one
    with pytest.raises(GradedError):
        zeta_scaling(sp, "b")


def test_glplus_membership_block_permutation():
    ctx = FqContext(3)
    sp = GradedQuadraticSpace(
        ctx, [("a", 1, "sym"), ("b", 1, "sym")], [[2, 0], [0, 2]])
    swap = sp.embed_matrix([[0, 1], [1, 0]])
    ok, perm = glplus_membership(sp, swap)
    assert ok and perm == {"a": "b", "b": "a"}
    # a matrix mixing the two blocks is rejected
    mix = sp.embed_matrix([[1, 1], [1, 2]])
    ok, perm = glplus_membership(sp, mix)
    assert not ok and perm is None


def test_otilde_membership_factors_zeta_scaling():
    sp = _one_orbit_space(3)
    z = zeta_scaling(sp, "a")
    fact = otilde_membership(sp, z)
    assert fact is not None
    h, exps = fact
    assert h.is_identity()
    assert exps == {"a": 1}
    # a non-member: a shear is not orthogonal up to zeta-scalings
    assert otilde_membership(sp, sp.embed_matrix([[1, 1], [0, 1]])) is None


@pytest.mark.parametrize("p,expected", [(3, Mu4Value(1)), (5, Mu4Value(0))])
def test_extended_sn_of_zeta_scaling(p, expected):
    sp = _one_orbit_space(p)
    assert extended_sn(sp, zeta_scaling(sp, "a")) == expected


@pytest.mark.parametrize("p", [3, 5])
def test_extended_sn_homomorphism_exhaustive(p):
    sp = _one_orbit_space(p)
    z = zeta_scaling(sp, "a")
    group = []
    for h in _orthogonal_matrices(sp):
        m = sp.embed_matrix(h.matrix)
        group.append(m)
        group.append(linalg.mat_mul(m, z))
    values = {}

    def key(m):
        return tuple(tuple(x.coeffs for x in row) for row in m)

    for g in group:
        values[key(g)] = extended_sn(sp, g)
    for g1 in group:
        for g2 in group:
            prod = linalg.mat_mul(g1, g2)
            assert values[key(prod)] == values[key(g1)] * values[key(g2)]


@pytest.mark.parametrize("p", [3, 5])
def test_extended_sn_restriction_agrees(p):
    sp = _one_orbit_space(p)
    for h in _orthogonal_matrices(sp):
        assert (extended_sn(sp, sp.embed_matrix(h.matrix))
                == Mu4Value.from_sign(sgn_spinor(h)))


def test_extended_sn_quadratic_when_minus_one_square():
    # over F_5 sgn(-1) = +1, so the character is {+-1}-valued
    sp = _one_orbit_space(5)
    z = zeta_scaling(sp, "a")
    for h in _orthogonal_matrices(sp):
        for m in (sp.embed_matrix(h.matrix),
                  linalg.mat_mul(sp.embed_matrix(h.matrix), z)):
            assert extended_sn(sp, m).is_quadratic()


@pytest.mark.parametrize("p", [3, 5])
def test_consistency_square_identity(p):
    # sn~(zeta-scaling)^2 = sgn o sn(zeta-scaling^2), the latter rational
    sp = _one_orbit_space(p)
    z = zeta_scaling(sp, "a")
    z2 = linalg.mat_mul(z, z)
    lhs = extended_sn(sp, z) * extended_sn(sp, z)
    assert lhs == extended_sn(sp, z2)
    h, exps = otilde_membership(sp, z2)
    assert exps == {"a": 0}
    assert lhs == Mu4Value.from_sign(sgn_spinor(h))


def test_mu4_group():
    i = Mu4Value(1)
    assert i * i == Mu4Value(2)
    assert i ** 4 == Mu4Value(0)
    assert not i.is_quadratic() and Mu4Value(2).is_quadratic()
    assert Mu4Value.parse("-i") == Mu4Value(3)
    assert repr(Mu4Value(2)) == "-1"


def test_random_mixed_space_restriction():
    ctx = FqContext(3)
    sp = GradedQuadraticSpace(
        ctx, [("a", 2, "asym"), ("b", 1, "sym")],
        [[0, 1, 0], [1, 0, 0], [0, 0, 2]])
    rng = random.Random(0)
    for _ in range(10):
        h = random_orthogonal(sp.space, rng)
        m = sp.embed_matrix(h.matrix)
        if glplus_membership(sp, m)[0]:
            assert (extended_sn(sp, m)
                    == Mu4Value.from_sign(sgn_spinor(h)))
