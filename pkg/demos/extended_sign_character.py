"""The mu_4-valued extension of sgn o sn to the graded orthogonal group.

On a one-orbit asymmetric graded space (a hyperbolic plane paired across the
label involution), the extended group is generated by the rational
orthogonal maps and the zeta-scaling that multiplies the block by a square
root of -1.  The extended character sn~ restricts to sgn o sn on rational
elements and sends the zeta-scaling to a fixed square root of sgn(-1):
a genuine fourth root of unity when -1 is a nonsquare.  Run with python3.
"""

import itertools

from heckeforge import (FqContext, GradedQuadraticSpace, OrthogonalMap,
                        QuadSpaceError, zeta_scaling, extended_sn,
                        sgn_spinor, sgn)
from heckeforge import linalg


def orthogonal_group(space):
    els = list(space.ctx.elements())
    for flat in itertools.product(els, repeat=4):
        try:
            yield OrthogonalMap(space.space, [flat[:2], flat[2:]])
        except QuadSpaceError:
            continue


def main():
    for p in (3, 5):
        ctx = FqContext(p)
        sp = GradedQuadraticSpace(ctx, [("a", 2, "asym")], [[0, 1], [1, 0]])
        z = zeta_scaling(sp, "a")
        print(f"F_{p}: sgn(-1) = {sgn(-ctx.one)}, "
              f"fixed root = {sp.sqrt_sign}")
        print(f"  sn~(zeta-scaling) = {extended_sn(sp, z)}")
        print("  rational part (h, sgn o sn(h), sn~(h), sn~(h . zeta)):")
        for h in orthogonal_group(sp):
            m = sp.embed_matrix(h.matrix)
            mz = linalg.mat_mul(m, z)
            flat = tuple(int(c.coeffs[0]) for row in h.matrix for c in row)
            print(f"    {flat}: {sgn_spinor(h)}  "
                  f"{extended_sn(sp, m)}  {extended_sn(sp, mz)}")
        print()
    print("Over F_5 (-1 a square) every value is +-1; over F_3 the")
    print("zeta-coset genuinely needs the fourth roots of unity.")


if __name__ == "__main__":
    main()
