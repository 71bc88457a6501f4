"""The Iwahori-Hecke convolution oracle for the SL_2 block
over F_q[t]/(t^N): Bruhat decomposition against the Iwahori subgroup, the
sign character on it, and the double-coset convolution (phi * phi) at s and
at e for the trivial and sign-twisted bi-equivariant functions.

The two resulting quadratic relations differ in the linear coefficient
((q-1) vs 0), which is the computational witness that no support-preserving
rescaling can identify the twisted and untwisted algebras.
"""

from __future__ import annotations

import random

from .ffield import FqContext, SignValue, sgn


class OracleError(ValueError):
    pass


class TruncContext:
    """F_q[t]/(t^N), q odd, N >= 2."""

    def __init__(self, fq_ctx, trunc):
        if fq_ctx.p == 2:
            raise OracleError("q must be odd")
        if trunc < 2:
            raise OracleError("N >= 2 required")
        self.fq = fq_ctx
        self.trunc = trunc

    @classmethod
    def for_q(cls, q, trunc=3):
        p, m = _prime_power(q)
        return cls(FqContext(p, m), trunc)

    def series(self, coeffs):
        return TruncSeries(self, coeffs)

    def scalar(self, c):
        return self.series([c])

    @property
    def zero(self):
        return self.series([])

    @property
    def one(self):
        return self.series([1])

    @property
    def t(self):
        return self.series([0, 1])

    def __eq__(self, other):
        return (isinstance(other, TruncContext)
                and self.fq == other.fq and self.trunc == other.trunc)

    def __hash__(self):
        return hash((self.fq, self.trunc))


def _prime_power(q):
    for p in range(2, q + 1):
        if q % p == 0:
            m = 0
            n = q
            while n % p == 0:
                n //= p
                m += 1
            if n != 1:
                raise OracleError(f"{q} is not a prime power")
            return p, m
    raise OracleError(f"{q} is not a prime power")


class TruncSeries:
    """c_0 + c_1 t + ... + c_{N-1} t^{N-1} over F_q."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        self.ctx = ctx
        fq = ctx.fq
        coeffs = [fq.elem(c) for c in coeffs[:ctx.trunc]]
        coeffs += [fq.zero] * (ctx.trunc - len(coeffs))
        self.coeffs = tuple(coeffs)

    def _coerce(self, other):
        if isinstance(other, TruncSeries):
            if other.ctx != self.ctx:
                raise OracleError("context mismatch")
            return other
        return TruncSeries(self.ctx, [other])

    def __add__(self, other):
        other = self._coerce(other)
        return TruncSeries(self.ctx, [a + b for a, b
                                      in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        other = self._coerce(other)
        return TruncSeries(self.ctx, [a - b for a, b
                                      in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return TruncSeries(self.ctx, [-a for a in self.coeffs])

    def __mul__(self, other):
        other = self._coerce(other)
        n = self.ctx.trunc
        out = [self.ctx.fq.zero] * n
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(n - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TruncSeries(self.ctx, out)

    def val(self):
        """t-adic valuation (trunc for the zero series)."""
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                return i
        return self.ctx.trunc

    def is_unit(self):
        return self.val() == 0

    def is_zero(self):
        return self.val() == self.ctx.trunc

    def inv(self):
        if not self.is_unit():
            raise OracleError("non-unit series")
        n = self.ctx.trunc
        out = [self.coeffs[0].inv()]
        for k in range(1, n):
            acc = self.ctx.fq.zero
            for i in range(1, k + 1):
                acc = acc + self.coeffs[i] * out[k - i]
            out.append(-out[0] * acc)
        return TruncSeries(self.ctx, out)

    def residue(self):
        """The image in F_q = O/(t)."""
        return self.coeffs[0]

    def __eq__(self, other):
        return (isinstance(other, TruncSeries)
                and self.ctx == other.ctx and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def __repr__(self):
        return "(" + " + ".join(f"{c}t^{i}" for i, c in enumerate(self.coeffs)
                                if not c.is_zero()) + ")" if not self.is_zero() else "0"


class Mat2:
    """An element of SL_2(F_q[t]/(t^N))."""

    __slots__ = ("ctx", "a", "b", "c", "d")

    def __init__(self, ctx, a, b, c, d):
        def co(x):
            return x if isinstance(x, TruncSeries) else ctx.series(
                x if isinstance(x, (list, tuple)) else [x])
        self.ctx = ctx
        self.a, self.b, self.c, self.d = co(a), co(b), co(c), co(d)
        det = self.a * self.d - self.b * self.c
        if det != ctx.one:
            raise OracleError("determinant must be 1")

    @classmethod
    def identity(cls, ctx):
        return cls(ctx, 1, 0, 0, 1)

    def __mul__(self, other):
        if self.ctx != other.ctx:
            raise OracleError("context mismatch")
        return Mat2(self.ctx,
                    self.a * other.a + self.b * other.c,
                    self.a * other.b + self.b * other.d,
                    self.c * other.a + self.d * other.c,
                    self.c * other.b + self.d * other.d)

    def inv(self):
        return Mat2(self.ctx, self.d, -self.b, -self.c, self.a)

    def __eq__(self, other):
        return (isinstance(other, Mat2) and self.ctx == other.ctx
                and (self.a, self.b, self.c, self.d)
                == (other.a, other.b, other.c, other.d))

    def __hash__(self):
        return hash((self.ctx, self.a, self.b, self.c, self.d))

    def __repr__(self):
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


def weyl_s(ctx):
    return Mat2(ctx, 0, 1, -1, 0)


def upper_u(ctx, x):
    return Mat2(ctx, 1, x, 0, 1)


def coroot(ctx, u):
    """alpha_2-vee(u) = diag(u, u^{-1}) for a unit u."""
    u = u if isinstance(u, TruncSeries) else ctx.series([u])
    return Mat2(ctx, u, 0, 0, u.inv())


def iwahori_member(g):
    """val pattern (unit, integral; positive, unit)."""
    return (g.a.is_unit() and g.d.is_unit() and g.c.val() >= 1)


def bruhat_decompose(g):
    """("InI", g) when g lies in the Iwahori subgroup, else
    ("IsI", (k1, k2)) with g = k1 . s . k2, k1, k2 in I."""
    ctx = g.ctx
    if g.c.val() >= 1:
        if not iwahori_member(g):
            raise OracleError("matrix escapes both cells")  # cannot happen
        return ("InI", g)
    cinv = g.c.inv()
    k1 = Mat2(ctx, -ctx.one, -(g.a * cinv), 0, -ctx.one)
    k2 = Mat2(ctx, g.c, g.d, 0, cinv)
    return ("IsI", (k1, k2))


TWISTS = ("trivial", "sign")


def epsilon_char(k, twist):
    """The mu_2-character of the Iwahori subgroup: trivial, or the sign of
    the reduced upper-left entry (trivial on the pro-p part by
    construction)."""
    if twist not in TWISTS:
        raise OracleError(f"unknown twist {twist!r}")
    if not iwahori_member(k):
        raise OracleError("epsilon is only defined on the Iwahori subgroup")
    if twist == "trivial":
        return SignValue(1)
    return sgn(k.a.residue())


def phi(g, twist):
    """The bi-(I, epsilon)-equivariant function supported on IsI with
    phi(s) = 1."""
    cell, data = bruhat_decompose(g)
    if cell != "IsI":
        return 0
    k1, k2 = data
    return int(epsilon_char(k1, twist)) * int(epsilon_char(k2, twist))


def convolve_s(twist, q, trunc=3):
    """(phi * phi)(s) = sum over coset representatives u(x)s of
    phi(u(x)s) . phi(s^{-1}u(-x)s); exact integer."""
    ctx = TruncContext.for_q(q, trunc)
    s = weyl_s(ctx)
    total = 0
    for x in ctx.fq.elements():
        h = upper_u(ctx, ctx.scalar(x)) * s
        total += phi(h, twist) * phi(h.inv() * s, twist)
    return total


def convolve_e(twist, q, trunc=3):
    """(phi * phi)(e) over the same coset representatives; exact integer."""
    ctx = TruncContext.for_q(q, trunc)
    s = weyl_s(ctx)
    total = 0
    for x in ctx.fq.elements():
        h = upper_u(ctx, ctx.scalar(x)) * s
        total += phi(h, twist) * phi(h.inv(), twist)
    return total


def random_iwahori(ctx, rng):
    fq = ctx.fq
    els = list(fq.elements())
    units = [e for e in els if not e.is_zero()]
    n = ctx.trunc
    a = ctx.series([rng.choice(units)] + [rng.choice(els)
                                          for _ in range(n - 1)])
    b = ctx.series([rng.choice(els) for _ in range(n)])
    c = ctx.series([0] + [rng.choice(els) for _ in range(n - 1)])
    d = (ctx.one + b * c) * a.inv()
    return Mat2(ctx, a, b, c, d)


def welldefinedness_check(q, trunc=3, samples=500, seed=0):
    """phi(k1 s k2) must not depend on the decomposition: build random
    g = k1 s k2 and compare eps(k1)eps(k2) with the value from
    bruhat_decompose, under the sign twist.  Returns (ok, witness)."""
    ctx = TruncContext.for_q(q, trunc)
    s = weyl_s(ctx)
    rng = random.Random(seed)
    for _ in range(samples):
        k1 = random_iwahori(ctx, rng)
        k2 = random_iwahori(ctx, rng)
        g = k1 * s * k2
        built = int(epsilon_char(k1, "sign")) * int(epsilon_char(k2, "sign"))
        if phi(g, "sign") != built:
            return False, (k1, k2)
    return True, None


def quadratic_relation(twist, q, trunc=3):
    """The pair (c_e, c_s) with phi * phi = c_e . delta_e + c_s . phi
    (support of phi * phi is {e} + IsI); the twisted and untwisted
    relations differ in the linear coefficient."""
    return convolve_e(twist, q, trunc), convolve_s(twist, q, trunc)
