"""Exact arithmetic in Q(zeta_N) and matrices over it.

Numbers are integer coefficient vectors in the power basis of the N-th
cyclotomic polynomial together with a positive common denominator, so all
representation-theoretic identities are checked with zero tolerance.
Matrices keep one integer numpy plane per basis power, which makes products
of operator matrices a short sequence of integer matrix multiplications.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np


class CycloError(ValueError):
    pass


# ---------------------------------------------------------------------------
# integer polynomial helpers (low degree first)

def _ipoly_trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _ipoly_div_exact(a, b):
    """Quotient of a by b for integer polynomials, assuming exact division
    and monic-ish leading coefficient +-1."""
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    while len(a) >= len(b) and any(a):
        _ipoly_trim(a)
        if len(a) < len(b):
            break
        lead = a[-1] // b[-1]
        shift = len(a) - len(b)
        q[shift] = lead
        for i, c in enumerate(b):
            a[shift + i] -= lead * c
    assert not any(a), "non-exact polynomial division"
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Coefficients of Phi_n, low degree first."""
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = _ipoly_div_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _euler_phi(n):
    result = n
    d = 2
    m = n
    while d * d <= m:
        if m % d == 0:
            while m % d == 0:
                m //= d
            result -= result // d
        d += 1
    if m > 1:
        result -= result // m
    return result


class CycloContext:
    """Q(zeta_N) presented as Q[x]/Phi_N(x)."""

    def __init__(self, conductor):
        self.n = conductor
        self.degree = _euler_phi(conductor)
        phi = cyclotomic_polynomial(conductor)
        assert len(phi) == self.degree + 1 and phi[-1] == 1
        self.phi = phi
        # canonical vectors for x^k, k = 0 .. n-1 (covers reduction and
        # arbitrary zeta powers)
        table = []
        cur = [0] * self.degree
        cur[0] = 1
        table.append(tuple(cur))
        for _ in range(1, max(self.n, 2 * self.degree)):
            nxt = [0] * (self.degree + 1)
            for i, c in enumerate(cur):
                nxt[i + 1] = c
            if nxt[self.degree]:
                lead = nxt[self.degree]
                for i in range(self.degree):
                    nxt[i] -= lead * phi[i]
            cur = nxt[:self.degree]
            table.append(tuple(cur))
        self.power_table = table

    def __eq__(self, other):
        return isinstance(other, CycloContext) and self.n == other.n

    def __hash__(self):
        return hash(("CycloContext", self.n))

    def __repr__(self):
        return f"CycloContext(Q(zeta_{self.n}))"

    def zero(self):
        return CyclotomicNumber(self, (0,) * self.degree, 1)

    def one(self):
        return self.from_rational(1)

    def from_rational(self, r):
        r = Fraction(r)
        num = [0] * self.degree
        num[0] = r.numerator
        return CyclotomicNumber(self, tuple(num), r.denominator)

    def zeta_pow(self, j):
        return CyclotomicNumber(self, self.power_table[j % self.n], 1)

    def reduce(self, coeffs):
        """Reduce an overlong integer coefficient list mod Phi_N."""
        out = list(coeffs[:self.degree]) + [0] * (self.degree - len(coeffs))
        for k in range(self.degree, len(coeffs)):
            c = coeffs[k]
            if c:
                row = self.power_table[k]
                for i in range(self.degree):
                    out[i] += c * row[i]
        return tuple(out)

    def galois(self, a, k):
        """The automorphism zeta -> zeta^k (k coprime to N)."""
        if gcd(k, self.n) != 1:
            raise CycloError("galois exponent must be coprime to N")
        num = [0] * self.degree
        for j, c in enumerate(a.num):
            if c:
                row = self.power_table[(j * k) % self.n]
                for i in range(self.degree):
                    num[i] += c * row[i]
        return CyclotomicNumber(self, tuple(num), a.den)


class CyclotomicNumber:
    """An element of Q(zeta_N): integer numerator vector / denominator."""

    __slots__ = ("ctx", "num", "den")

    def __init__(self, ctx, num, den):
        if den == 0:
            raise CycloError("zero denominator")
        if den < 0:
            num = tuple(-c for c in num)
            den = -den
        g = den
        for c in num:
            g = gcd(g, c)
            if g == 1:
                break
        if g > 1:
            num = tuple(c // g for c in num)
            den //= g
        self.ctx = ctx
        self.num = tuple(num)
        self.den = den

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.ctx != self.ctx:
                raise CycloError("conductor mismatch")
            return other
        return self.ctx.from_rational(other)

    def __add__(self, other):
        other = self._coerce(other)
        d = self.den * other.den
        num = tuple(a * other.den + b * self.den
                    for a, b in zip(self.num, other.num))
        return CyclotomicNumber(self.ctx, num, d)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return CyclotomicNumber(self.ctx, tuple(-c for c in self.num),
                                self.den)

    def __mul__(self, other):
        other = self._coerce(other)
        deg = self.ctx.degree
        conv = [0] * (2 * deg - 1)
        for i, a in enumerate(self.num):
            if a:
                for j, b in enumerate(other.num):
                    if b:
                        conv[i + j] += a * b
        return CyclotomicNumber(self.ctx, self.ctx.reduce(conv),
                                self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self._coerce(other).inv()

    def inv(self):
        if self.is_zero():
            raise CycloError("inversion of zero")
        deg = self.ctx.degree
        # columns: self * x^j in the power basis
        cols = []
        for j in range(deg):
            shifted = [0] * j + list(self.num)
            cols.append(self.ctx.reduce(shifted))
        mat = [[Fraction(cols[j][i]) for j in range(deg)] for i in range(deg)]
        rhs = [Fraction(self.den) if i == 0 else Fraction(0)
               for i in range(deg)]
        sol = _solve_fractions(mat, rhs)
        den = 1
        for s in sol:
            den = den * s.denominator // gcd(den, s.denominator)
        num = tuple(int(s * den) for s in sol)
        return CyclotomicNumber(self.ctx, num, den)

    def conj(self):
        """Complex conjugation zeta -> zeta^{-1}."""
        return self.ctx.galois(self, self.ctx.n - 1)

    def abs_squared(self):
        return self * self.conj()

    def is_zero(self):
        return all(c == 0 for c in self.num)

    def is_rational(self):
        return all(c == 0 for c in self.num[1:])

    def as_rational(self):
        if not self.is_rational():
            raise CycloError("not a rational number")
        return Fraction(self.num[0], self.den)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.from_rational(other)
        return (isinstance(other, CyclotomicNumber)
                and self.ctx == other.ctx
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((self.ctx, self.num, self.den))

    def __repr__(self):
        return f"Cyclo{self.num}/{self.den}@{self.ctx.n}"


def _solve_fractions(mat, rhs):
    n = len(mat)
    a = [row[:] + [rhs[i]] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


class CycloMatrix:
    """A square matrix over Q(zeta_N): one integer plane per basis power,
    over a positive common denominator."""

    __slots__ = ("ctx", "n", "planes", "den")

    def __init__(self, ctx, n, planes, den=1, normalize=True):
        self.ctx = ctx
        self.n = n
        self.planes = planes  # numpy object array (degree, n, n)
        self.den = den
        if normalize:
            self._normalize()

    def _normalize(self):
        if self.den < 0:
            self.planes = -self.planes
            self.den = -self.den
        g = self.den
        for v in self.planes.flat:
            g = gcd(g, int(v))
            if g == 1:
                return
        if g > 1:
            self.planes = self.planes // g
            self.den //= g

    @classmethod
    def zeros(cls, ctx, n):
        planes = np.zeros((ctx.degree, n, n), dtype=object)
        return cls(ctx, n, planes, 1, normalize=False)

    @classmethod
    def identity(cls, ctx, n):
        m = cls.zeros(ctx, n)
        for i in range(n):
            m.planes[0, i, i] = 1
        return m

    @classmethod
    def from_entries(cls, ctx, entries):
        """entries: list of rows of CyclotomicNumber (or rationals)."""
        n = len(entries)
        den = 1
        coerced = []
        for row in entries:
            crow = []
            for e in row:
                if not isinstance(e, CyclotomicNumber):
                    e = ctx.from_rational(e)
                crow.append(e)
                den = den * e.den // gcd(den, e.den)
            coerced.append(crow)
        planes = np.zeros((ctx.degree, n, n), dtype=object)
        for i, row in enumerate(coerced):
            for j, e in enumerate(row):
                scale = den // e.den
                for d, c in enumerate(e.num):
                    planes[d, i, j] = c * scale
        return cls(ctx, n, planes, den)

    def entry(self, i, j):
        return CyclotomicNumber(self.ctx,
                                tuple(int(self.planes[d, i, j])
                                      for d in range(self.ctx.degree)),
                                self.den)

    def __matmul__(self, other):
        if self.ctx != other.ctx or self.n != other.n:
            raise CycloError("matrix context mismatch")
        deg = self.ctx.degree
        conv = [None] * (2 * deg - 1)
        for i in range(deg):
            a = self.planes[i]
            if not a.any():
                continue
            for j in range(deg):
                b = other.planes[j]
                if not b.any():
                    continue
                prod = a @ b
                if conv[i + j] is None:
                    conv[i + j] = prod
                else:
                    conv[i + j] = conv[i + j] + prod
        planes = np.zeros((deg, self.n, self.n), dtype=object)
        for k, m in enumerate(conv):
            if m is None:
                continue
            if k < deg:
                planes[k] = planes[k] + m
            else:
                row = self.ctx.power_table[k]
                for d in range(deg):
                    if row[d]:
                        planes[d] = planes[d] + row[d] * m
        return CycloMatrix(self.ctx, self.n, planes, self.den * other.den)

    def __add__(self, other):
        if self.ctx != other.ctx or self.n != other.n:
            raise CycloError("matrix context mismatch")
        d = self.den * other.den
        planes = self.planes * other.den + other.planes * self.den
        return CycloMatrix(self.ctx, self.n, planes, d)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return CycloMatrix(self.ctx, self.n, -self.planes, self.den,
                           normalize=False)

    def scale(self, c):
        """Multiply by a scalar (CyclotomicNumber or rational)."""
        if not isinstance(c, CyclotomicNumber):
            c = self.ctx.from_rational(c)
        deg = self.ctx.degree
        conv = [None] * (2 * deg - 1)
        for d, coef in enumerate(c.num):
            if coef:
                for k in range(deg):
                    if self.planes[k].any():
                        t = coef * self.planes[k]
                        if conv[d + k] is None:
                            conv[d + k] = t
                        else:
                            conv[d + k] = conv[d + k] + t
        planes = np.zeros((deg, self.n, self.n), dtype=object)
        for k, m in enumerate(conv):
            if m is None:
                continue
            if k < deg:
                planes[k] = planes[k] + m
            else:
                row = self.ctx.power_table[k]
                for d in range(deg):
                    if row[d]:
                        planes[d] = planes[d] + row[d] * m
        return CycloMatrix(self.ctx, self.n, planes, self.den * c.den)

    def trace(self):
        deg = self.ctx.degree
        return CyclotomicNumber(
            self.ctx,
            tuple(int(sum(self.planes[d, i, i] for i in range(self.n)))
                  for d in range(deg)),
            self.den)

    def conj_transpose(self):
        deg = self.ctx.degree
        planes = np.zeros((deg, self.n, self.n), dtype=object)
        for d in range(deg):
            m = self.planes[d]
            if not m.any():
                continue
            row = self.ctx.power_table[(self.ctx.n - d) % self.ctx.n]
            mt = m.T
            for k in range(deg):
                if row[k]:
                    planes[k] = planes[k] + row[k] * mt
        return CycloMatrix(self.ctx, self.n, planes, self.den)

    def first_nonzero(self):
        """Row-major first nonzero entry, or None."""
        for i in range(self.n):
            for j in range(self.n):
                e = self.entry(i, j)
                if not e.is_zero():
                    return i, j, e
        return None

    def is_zero(self):
        return not self.planes.any()

    def __eq__(self, other):
        if not isinstance(other, CycloMatrix):
            return NotImplemented
        if self.ctx != other.ctx or self.n != other.n:
            return False
        return self.den == other.den and bool(
            (self.planes == other.planes).all())

    def __hash__(self):
        raise TypeError("CycloMatrix is unhashable")

    def proportional_to(self, other):
        """Return the scalar c with self == other.scale(c), or None."""
        fnz = other.first_nonzero()
        if fnz is None:
            return None if not self.is_zero() else self.ctx.one()
        i, j, e = fnz
        c = self.entry(i, j) / e
        return c if self == other.scale(c) else None
