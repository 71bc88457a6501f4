"""Graded quadratic spaces with an involutive block index, the extended
orthogonal group generated by rational orthogonal block-permutations and
zeta-scalings on asymmetric blocks, and the unique mu_4-valued character
extending sgn o sn.
"""

from __future__ import annotations

from .ffield import FieldError, adjoin_zeta, sgn
from .quadspace import QuadraticSpace, OrthogonalMap, sgn_spinor
from . import linalg


class GradedError(ValueError):
    pass


class Mu4Value:
    """The cyclic group of order 4, written {1, i, -1, -i}; stored as the
    exponent of the formal generator i."""

    __slots__ = ("k",)

    _NAMES = {0: "1", 1: "i", 2: "-1", 3: "-i"}

    def __init__(self, k):
        self.k = k % 4

    @classmethod
    def from_sign(cls, s):
        return cls(0 if int(s) == 1 else 2)

    @classmethod
    def parse(cls, text):
        for k, name in cls._NAMES.items():
            if text == name:
                return cls(k)
        raise ValueError(f"not a mu_4 value: {text!r}")

    def __mul__(self, other):
        return Mu4Value(self.k + other.k)

    def __pow__(self, e):
        return Mu4Value(self.k * e)

    def __eq__(self, other):
        if isinstance(other, int):
            return str(self) == str(other)
        return isinstance(other, Mu4Value) and self.k == other.k

    def __hash__(self):
        return hash(("Mu4", self.k))

    def is_quadratic(self):
        return self.k % 2 == 0

    def __repr__(self):
        return self._NAMES[self.k]


MU4_ONE = Mu4Value(0)
MU4_I = Mu4Value(1)


class Block:
    __slots__ = ("label", "dim", "kind", "start")

    def __init__(self, label, dim, kind, start):
        if kind not in ("asym", "sym"):
            raise GradedError("kind must be 'asym' or 'sym'")
        if kind == "asym" and dim % 2 != 0:
            raise GradedError(f"asym block {label!r} must have even dimension")
        self.label = label
        self.dim = dim
        self.kind = kind
        self.start = start

    @property
    def cols(self):
        return range(self.start, self.start + self.dim)


class GradedQuadraticSpace:
    """A quadratic space over f graded by +/- orbits of block labels.

    Each block is one orbit [(alpha, t)] of the label involution; asymmetric
    orbits pair two opposite labels, so their blocks have even f-dimension
    and the restricted Gram matrix couples only the two halves.
    Elements of the extended group live over f' = f(zeta), zeta^2 = -1.
    """

    def __init__(self, ctx, blocks, gram, sqrt_sign_of_minus_one=None):
        self.ctx = ctx
        start = 0
        self.blocks = []
        for label, dim, kind in blocks:
            self.blocks.append(Block(label, dim, kind, start))
            start += dim
        self.dim = start
        if len({b.label for b in self.blocks}) != len(self.blocks):
            raise GradedError("duplicate block labels")
        gram = tuple(tuple(ctx.elem(c) for c in row) for row in gram)
        if len(gram) != self.dim:
            raise GradedError("gram size does not match total block dimension")
        self.space = QuadraticSpace(ctx, gram)  # validates symmetry etc.
        self.gram = self.space.gram
        self._check_block_shape()
        self.ext_ctx, self.embed, self.zeta = adjoin_zeta(ctx)
        self._embed_table = {self.embed(a): a for a in ctx.elements()}
        # the character needs a fixed square root of sgn_f(-1); surfaced as
        # a constructor parameter with a deterministic default
        sm1 = int(sgn(-ctx.one))
        if sqrt_sign_of_minus_one is None:
            sqrt_sign_of_minus_one = MU4_ONE if sm1 == 1 else MU4_I
        if (sqrt_sign_of_minus_one * sqrt_sign_of_minus_one
                != Mu4Value.from_sign(sm1)):
            raise GradedError("chosen root does not square to sgn(-1)")
        self.sqrt_sign = sqrt_sign_of_minus_one

    def _check_block_shape(self):
        zero = self.ctx.zero
        for b1 in self.blocks:
            for b2 in self.blocks:
                if b1 is b2:
                    continue
                for i in b1.cols:
                    for j in b2.cols:
                        if self.gram[i][j] != zero:
                            raise GradedError(
                                "gram must be block-diagonal across orbits")
        for b in self.blocks:
            sub = tuple(tuple(self.gram[i][j] for j in b.cols)
                        for i in b.cols)
            if linalg.det(sub).is_zero():
                raise GradedError(f"block {b.label!r} is degenerate")
            if b.kind == "asym":
                # within an asym orbit the form pairs a label only with its
                # negative: both half-diagonal sub-blocks vanish
                h = b.dim // 2
                for i in range(h):
                    for j in range(h):
                        if (sub[i][j] != zero
                                or sub[h + i][h + j] != zero):
                            raise GradedError(
                                f"asym block {b.label!r} violates the "
                                "label-pairing shape")

    def block(self, label):
        for b in self.blocks:
            if b.label == label:
                return b
        raise GradedError(f"no block labelled {label!r}")

    # -- matrices over the extension field -------------------------------

    def ext_matrix(self, rows):
        m = tuple(tuple(self.ext_ctx.elem(c) for c in row) for row in rows)
        if len(m) != self.dim or any(len(r) != self.dim for r in m):
            raise GradedError("matrix dimension mismatch")
        return m

    def embed_matrix(self, m):
        return tuple(tuple(self.embed(self.ctx.elem(c)) for c in row)
                     for row in m)

    def is_rational(self, x):
        return x in self._embed_table

    def retract(self, x):
        try:
            return self._embed_table[x]
        except KeyError:
            raise GradedError("element is not f-rational") from None

    @property
    def ext_gram(self):
        return self.embed_matrix(self.gram)


def zeta_scaling(space, label):
    """Multiplication by zeta on one asymmetric orbit-block, identity on the
    rest; an element of GL(V)(f')."""
    b = space.block(label)
    if b.kind != "asym":
        raise GradedError("zeta-scaling is only defined on asym orbits")
    one = space.ext_ctx.one
    zero = space.ext_ctx.zero
    rows = []
    for i in range(space.dim):
        d = space.zeta if i in b.cols else one
        rows.append(tuple(d if i == j else zero for j in range(space.dim)))
    return tuple(rows)


def glplus_membership(space, g):
    """Whether g permutes the orbit-blocks respecting the asym/sym split.

    Returns (True, permutation mapping source label -> target label) or
    (False, None).  g must be invertible over f'.
    """
    g = space.ext_matrix(g)
    if linalg.det(g).is_zero():
        raise GradedError("singular matrix")
    zero = space.ext_ctx.zero
    perm = {}
    targets = set()
    for src in space.blocks:
        hit = set()
        for j in src.cols:
            for i in range(space.dim):
                if g[i][j] != zero:
                    for t in space.blocks:
                        if i in t.cols:
                            hit.add(t.label)
        if len(hit) != 1:
            return False, None
        tgt = space.block(hit.pop())
        if tgt.kind != src.kind or tgt.dim != src.dim:
            return False, None
        if tgt.label in targets:
            return False, None
        targets.add(tgt.label)
        perm[src.label] = tgt.label
    return True, perm


def otilde_membership(space, g):
    """Factor g as h . prod(zeta-scalings) with h an f-rational orthogonal
    element of GL+ and each asym orbit carrying zeta-exponent 0 or 1.

    Returns (h as an OrthogonalMap on the f-space, exponent dict) or None.
    """
    g = space.ext_matrix(g)
    ok, perm = glplus_membership(space, g)
    if not ok:
        return None
    pulled = linalg.mat_mul(linalg.mat_mul(linalg.transpose(g),
                                           space.ext_gram), g)
    exps = {}
    ext_gram = space.ext_gram
    for b in space.blocks:
        sub = tuple(tuple(pulled[i][j] for j in b.cols) for i in b.cols)
        ref = tuple(tuple(ext_gram[i][j] for j in b.cols) for i in b.cols)
        neg = tuple(tuple(-x for x in row) for row in ref)
        if sub == ref:
            e = 0
        elif sub == neg:
            e = 1
        else:
            return None
        if b.kind == "asym":
            exps[b.label] = e
        elif e != 0:
            return None
    # divide out the zeta-scalings (scale columns of each twisted block)
    zinv = space.zeta.inv()
    h = [list(row) for row in g]
    for b in space.blocks:
        if b.kind == "asym" and exps[b.label] == 1:
            for j in b.cols:
                for i in range(space.dim):
                    h[i][j] = h[i][j] * zinv
    rational = []
    for row in h:
        out = []
        for x in row:
            if not space.is_rational(x):
                return None
            out.append(space.retract(x))
        rational.append(tuple(out))
    try:
        h_map = OrthogonalMap(space.space, tuple(rational))
    except Exception:
        return None
    ok, _ = glplus_membership(space, space.embed_matrix(rational))
    if not ok:
        return None
    return h_map, exps


def extended_sn(space, g):
    """The unique mu_4-valued character of the extended orthogonal group
    restricting to sgn o sn on the rational part and taking the fixed root
    of sgn(-1) to the power dim/2 on each zeta-scaling."""
    fact = otilde_membership(space, g)
    if fact is None:
        raise GradedError("element is not in the extended orthogonal group")
    h, exps = fact
    value = Mu4Value.from_sign(sgn_spinor(h))
    for b in space.blocks:
        if b.kind == "asym" and exps[b.label]:
            value = value * space.sqrt_sign ** (b.dim // 2)
    return value
