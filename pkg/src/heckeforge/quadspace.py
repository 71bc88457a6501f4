"""Quadratic spaces over F_q (q odd), reflections, Cartan-Dieudonne
factorization, the spinor norm, and the sign-of-spinor-norm character.

The polar bilinear form B (Gram matrix) is the primary datum; the quadratic
form is phi(v) = B(v,v)/2, which is an equivalence since q is odd.
"""

from __future__ import annotations

import itertools

from .ffield import FieldError, SignValue, sgn
from . import linalg


class QuadSpaceError(ValueError):
    pass


class SquareClass:
    """f^x / (f^x)^2, the two-element group {trivial, nonsquare}."""

    __slots__ = ("trivial",)

    def __init__(self, trivial):
        self.trivial = bool(trivial)

    @classmethod
    def of(cls, a):
        """Square class of a nonzero field element."""
        return cls(int(sgn(a)) == 1)

    def __mul__(self, other):
        return SquareClass(self.trivial == other.trivial)

    def __eq__(self, other):
        return isinstance(other, SquareClass) and self.trivial == other.trivial

    def __hash__(self):
        return hash(("SquareClass", self.trivial))

    def sign(self):
        return SignValue(1 if self.trivial else -1)

    def __repr__(self):
        return "trivial" if self.trivial else "nonsquare"


TRIVIAL = SquareClass(True)
NONSQUARE = SquareClass(False)


class QuadraticSpace:
    """A nondegenerate quadratic space (V, phi) over F_q, phi(v) = B(v,v)/2."""

    def __init__(self, ctx, gram):
        self.ctx = ctx
        gram = tuple(tuple(ctx.elem(c) for c in row) for row in gram)
        n = len(gram)
        if n < 1 or any(len(row) != n for row in gram):
            raise QuadSpaceError("gram matrix must be square")
        if gram != linalg.transpose(gram):
            raise QuadSpaceError("gram matrix must be symmetric")
        if linalg.det(gram).is_zero():
            raise QuadSpaceError("gram matrix must be nondegenerate")
        self.gram = gram
        self.dim = n
        self._half = ctx.elem(2).inv()

    @classmethod
    def diagonal(cls, ctx, entries):
        n = len(entries)
        # <a_1,...,a_n> means phi(e_i) = a_i, i.e. B(e_i,e_i) = 2 a_i
        gram = [[2 * entries[i] if i == j else 0 for j in range(n)]
                for i in range(n)]
        return cls(ctx, gram)

    @classmethod
    def hyperbolic_plane(cls, ctx):
        return cls(ctx, [[0, 1], [1, 0]])

    def bilinear(self, u, v):
        if len(u) != self.dim or len(v) != self.dim:
            raise QuadSpaceError("dimension mismatch")
        u = tuple(self.ctx.elem(x) for x in u)
        v = tuple(self.ctx.elem(x) for x in v)
        acc = self.ctx.zero
        for i in range(self.dim):
            if u[i].is_zero():
                continue
            for j in range(self.dim):
                acc = acc + u[i] * self.gram[i][j] * v[j]
        return acc

    def evaluate_form(self, v):
        """phi(v) = B(v,v)/2."""
        return self.bilinear(v, v) * self._half

    def vectors(self):
        for coeffs in itertools.product(list(self.ctx.elements()),
                                        repeat=self.dim):
            yield coeffs

    def nonzero_vectors(self):
        zero = (self.ctx.zero,) * self.dim
        for v in self.vectors():
            if v != zero:
                yield v

    def __eq__(self, other):
        return (isinstance(other, QuadraticSpace)
                and self.ctx == other.ctx and self.gram == other.gram)

    def __hash__(self):
        return hash((self.ctx, self.gram))


class OrthogonalMap:
    """An element of O(V, phi)(F_q), stored as a matrix acting on columns."""

    def __init__(self, space, matrix, check=True):
        self.space = space
        matrix = tuple(tuple(space.ctx.elem(c) for c in row) for row in matrix)
        if check:
            gt = linalg.mat_mul(linalg.mat_mul(linalg.transpose(matrix),
                                               space.gram), matrix)
            if gt != space.gram:
                raise QuadSpaceError("matrix does not preserve the form")
        self.matrix = matrix

    @classmethod
    def identity(cls, space):
        return cls(space, linalg.identity(space.ctx, space.dim), check=False)

    def __mul__(self, other):
        if self.space != other.space:
            raise QuadSpaceError("space mismatch")
        return OrthogonalMap(self.space,
                             linalg.mat_mul(self.matrix, other.matrix),
                             check=False)

    def inv(self):
        return OrthogonalMap(self.space, linalg.mat_inv(self.matrix),
                             check=False)

    def __call__(self, v):
        return linalg.mat_vec(self.matrix, tuple(self.space.ctx.elem(c)
                                                 for c in v))

    def is_identity(self):
        return self.matrix == linalg.identity(self.space.ctx, self.space.dim)

    def det(self):
        return linalg.det(self.matrix)

    def __eq__(self, other):
        return (isinstance(other, OrthogonalMap)
                and self.space == other.space and self.matrix == other.matrix)

    def __hash__(self):
        return hash((self.space, self.matrix))


def reflection(space, v):
    """The reflection r_v(w) = w - B(w,v)/phi(v) * v, for anisotropic v."""
    v = tuple(space.ctx.elem(c) for c in v)
    phi_v = space.evaluate_form(v)
    if phi_v.is_zero():
        raise QuadSpaceError("reflection vector must be anisotropic")
    inv = phi_v.inv()
    cols = []
    for j in range(space.dim):
        e = tuple(space.ctx.one if i == j else space.ctx.zero
                  for i in range(space.dim))
        c = space.bilinear(e, v) * inv
        cols.append(linalg.vec_sub(e, linalg.vec_scale(c, v)))
    matrix = linalg.transpose(cols)
    return OrthogonalMap(space, matrix, check=False)


def factor_into_reflections(g):
    """Cartan-Dieudonne: anisotropic vectors whose reflections compose
    (in list order) to g.  Length is at most dim + 2: if no direct step is
    available (the Wall/Eichler exceptional case), an auxiliary reflection
    is inserted first."""
    space = g.space
    result = []
    current = g
    wall_steps = 0
    guard = 0
    while not current.is_identity():
        guard += 1
        if guard > space.dim + 4:
            raise QuadSpaceError("reflection factorization did not terminate")
        step = None
        for v in space.nonzero_vectors():
            if space.evaluate_form(v).is_zero():
                continue
            gv = current(v)
            if gv == v:
                continue
            w = linalg.vec_sub(gv, v)
            if not space.evaluate_form(w).is_zero():
                step = w
                break
        if step is None:
            # exceptional case: g - id has totally isotropic image
            if wall_steps >= 2:
                raise QuadSpaceError("exceptional case persisted")
            wall_steps += 1
            for v in space.nonzero_vectors():
                if not space.evaluate_form(v).is_zero():
                    step = v
                    break
        r = reflection(space, step)
        result.append(step)
        current = r * current
    return result


def spinor_norm(g):
    """sn(g) in f^x/(f^x)^2, the product of phi-values over a reflection
    factorization.  Well-defined independently of the factorization."""
    cls = TRIVIAL
    for v in factor_into_reflections(g):
        cls = cls * SquareClass.of(g.space.evaluate_form(v))
    return cls


def sgn_spinor(g):
    """The composite sgn_f o sn: a {+1,-1}-valued character of O(V,phi)."""
    return spinor_norm(g).sign()


def orthogonal_sum(v1, v2):
    """Block-diagonal orthogonal sum of two quadratic spaces over the same
    field."""
    if v1.ctx != v2.ctx:
        raise QuadSpaceError("context mismatch")
    ctx = v1.ctx
    n1, n2 = v1.dim, v2.dim
    gram = []
    for i in range(n1):
        gram.append(tuple(v1.gram[i]) + (ctx.zero,) * n2)
    for i in range(n2):
        gram.append((ctx.zero,) * n1 + tuple(v2.gram[i]))
    return QuadraticSpace(ctx, gram)


def block_embed(space_sum, g1, g2):
    """g1 (+) g2 as an orthogonal map on the orthogonal sum."""
    ctx = space_sum.ctx
    n1 = len(g1.matrix)
    n2 = len(g2.matrix)
    if n1 + n2 != space_sum.dim:
        raise QuadSpaceError("dimension mismatch")
    rows = []
    for i in range(n1):
        rows.append(tuple(g1.matrix[i]) + (ctx.zero,) * n2)
    for i in range(n2):
        rows.append((ctx.zero,) * n1 + tuple(g2.matrix[i]))
    return OrthogonalMap(space_sum, rows, check=False)


def random_orthogonal(space, rng, max_reflections=None):
    """A random product of reflections (uniform enough for property tests)."""
    if max_reflections is None:
        max_reflections = 2 * space.dim
    aniso = [v for v in space.nonzero_vectors()
             if not space.evaluate_form(v).is_zero()]
    g = OrthogonalMap.identity(space)
    for _ in range(rng.randrange(max_reflections + 1)):
        g = g * reflection(space, rng.choice(aniso))
    return g
