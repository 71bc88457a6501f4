"""Exact arithmetic in F_q for odd q, the quadratic sign character, and
adjunction of a square root of -1.

Elements are stored as reduced coefficient tuples over Z/p with respect to
a monic irreducible modulus.  Everything is immutable; all operations are
pure functions.
"""

from __future__ import annotations

from functools import lru_cache


class FieldError(ValueError):
    pass


# ---------------------------------------------------------------------------
# polynomial helpers over Z/p (dense coefficient lists, low degree first)

def _poly_trim(f):
    while f and f[-1] == 0:
        f = f[:-1]
    return f


def _poly_mod(f, g, p):
    """Remainder of f by monic g over Z/p."""
    f = list(f)
    dg = len(g) - 1
    while len(f) - 1 >= dg and any(f):
        f = _poly_trim(f)
        if len(f) - 1 < dg:
            break
        c = f[-1]
        shift = len(f) - 1 - dg
        for i, gc in enumerate(g):
            f[shift + i] = (f[shift + i] - c * gc) % p
        f = _poly_trim(f)
    return _poly_trim(f)


def _poly_mulmod(a, b, g, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_mod(out, g, p)


def _poly_powmod(a, e, g, p):
    result = [1]
    base = _poly_mod(a, g, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, g, p)
        base = _poly_mulmod(base, base, g, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        b_monic_inv = pow(b[-1], p - 2, p)
        bm = [(c * b_monic_inv) % p for c in b]
        a, b = b, _poly_mod(a, bm, p)
        a, b = _poly_trim(a), _poly_trim(b)
    return a


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _poly_trim([(x - y) % p for x, y in zip(a, b)])


def _is_irreducible(modulus, p):
    """Rabin irreducibility test for a monic polynomial over Z/p."""
    m = len(modulus) - 1
    if m < 1 or modulus[-1] != 1:
        return False
    if m == 1:
        return True
    x = [0, 1]
    xq = x
    for _ in range(m):
        xq = _poly_powmod(xq, p, modulus, p)
    if _poly_sub(xq, x, p):
        return False
    for d in _prime_factors(m):
        k = m // d
        xk = x
        for _ in range(k):
            xk = _poly_powmod(xk, p, modulus, p)
        g = _poly_gcd(modulus, _poly_sub(xk, x, p), p)
        if len(_poly_trim(g)) - 1 >= 1:
            return False
    return True


def _least_irreducible(p, m):
    """Deterministic search for the lexicographically least monic irreducible
    polynomial of degree m over Z/p (coefficients compared low degree first)."""
    if m == 1:
        return (0, 1)
    for idx in range(p ** m):
        coeffs = []
        for i in range(m):
            coeffs.append((idx // p ** (m - 1 - i)) % p)
        cand = coeffs + [1]
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise FieldError(f"no irreducible polynomial of degree {m} over F_{p}")


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------


class FqContext:
    """The field F_q, q = p^m with p an odd prime, presented as
    F_p[x]/(modulus)."""

    def __init__(self, p, m=1, modulus=None):
        if not _is_prime(p) or p == 2:
            raise FieldError(f"p = {p} is not an odd prime")
        if m < 1:
            raise FieldError("extension degree must be >= 1")
        self.p = p
        self.m = m
        if m == 1:
            self.modulus = (0, 1)
        else:
            if modulus is None:
                modulus = _least_irreducible(p, m)
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise FieldError("modulus must be monic of degree m")
            if not _is_irreducible(list(modulus), p):
                raise FieldError("modulus is reducible")
            self.modulus = modulus
        self.q = p ** m

    def __eq__(self, other):
        return (isinstance(other, FqContext)
                and (self.p, self.m, self.modulus)
                == (other.p, other.m, other.modulus))

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        if self.m == 1:
            return f"FqContext(F_{self.p})"
        return f"FqContext(F_{self.p}^{self.m}, modulus={self.modulus})"

    def elem(self, value):
        """Build an element from an integer (constant) or coefficient list."""
        if isinstance(value, FqElement):
            if value.ctx != self:
                raise FieldError("context mismatch")
            return value
        if isinstance(value, int):
            coeffs = [value] + [0] * (self.m - 1)
        else:
            coeffs = list(value)
            if len(coeffs) > self.m:
                raise FieldError("too many coefficients")
            coeffs += [0] * (self.m - len(coeffs))
        return FqElement(self, tuple(c % self.p for c in coeffs))

    @property
    def zero(self):
        return self.elem(0)

    @property
    def one(self):
        return self.elem(1)

    def elements(self):
        """All q elements, in lexicographic coefficient order."""
        for idx in range(self.q):
            coeffs = []
            k = idx
            for _ in range(self.m):
                coeffs.append(k % self.p)
                k //= self.p
            yield FqElement(self, tuple(coeffs))

    def units(self):
        for a in self.elements():
            if not a.is_zero():
                yield a


class FqElement:
    """An element of F_q as a reduced coefficient tuple of length m."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        self.ctx = ctx
        self.coeffs = coeffs

    def _check(self, other):
        if not isinstance(other, FqElement):
            other = self.ctx.elem(other)
        if other.ctx != self.ctx:
            raise FieldError("context mismatch")
        return other

    def __add__(self, other):
        other = self._check(other)
        p = self.ctx.p
        return FqElement(self.ctx, tuple(
            (a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        p = self.ctx.p
        return FqElement(self.ctx, tuple(
            (a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        p = self.ctx.p
        return FqElement(self.ctx, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        other = self._check(other)
        ctx = self.ctx
        if ctx.m == 1:
            return FqElement(ctx, ((self.coeffs[0] * other.coeffs[0]) % ctx.p,))
        prod = _poly_mulmod(list(self.coeffs), list(other.coeffs),
                            list(ctx.modulus), ctx.p)
        prod += [0] * (ctx.m - len(prod))
        return FqElement(ctx, tuple(prod))

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return self.inv() ** (-e)
        result = self.ctx.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inv(self):
        if self.is_zero():
            raise FieldError("inversion of zero")
        return self ** (self.ctx.q - 2)

    def __truediv__(self, other):
        other = self._check(other)
        return self * other.inv()

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ctx.elem(other)
        return (isinstance(other, FqElement) and self.ctx == other.ctx
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def __repr__(self):
        if self.ctx.m == 1:
            return f"Fq({self.coeffs[0]} mod {self.ctx.p})"
        return f"Fq{self.coeffs}"


class SignValue:
    """Element of {+1, -1}, closed under multiplication."""

    __slots__ = ("value",)

    def __init__(self, value):
        if value not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        self.value = value

    def __mul__(self, other):
        if isinstance(other, SignValue):
            return SignValue(self.value * other.value)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other
        return isinstance(other, SignValue) and self.value == other.value

    def __hash__(self):
        return hash(("SignValue", self.value))

    def __int__(self):
        return self.value

    def __repr__(self):
        return "+1" if self.value == 1 else "-1"


def sgn(a):
    """The quadratic-residue character of F_q^x: +1 on squares, -1 otherwise."""
    if a.is_zero():
        raise FieldError("sgn of zero")
    power = a ** ((a.ctx.q - 1) // 2)
    return SignValue(1 if power == a.ctx.one else -1)


@lru_cache(maxsize=None)
def _square_table(ctx):
    table = {}
    for x in ctx.elements():
        sq = x * x
        if sq not in table or x.coeffs < table[sq].coeffs:
            table[sq] = x
    return table


def square_root(a):
    """A square root of a with a deterministic tie-break (least coefficient
    tuple), or None if a is a nonsquare.  square_root(0) = 0."""
    ctx = a.ctx
    if a.is_zero():
        return ctx.zero
    if int(sgn(a)) == -1:
        return None
    if ctx.q <= 10_000:
        return _square_table(ctx)[a]
    return _tonelli_shanks(a)


def _tonelli_shanks(a):
    """Tonelli-Shanks in F_q, for fields past the exhaustive-search bound."""
    ctx = a.ctx
    q = ctx.q
    s, t = 0, q - 1
    while t % 2 == 0:
        t //= 2
        s += 1
    # deterministic nonsquare search in coefficient order
    z = None
    for cand in ctx.elements():
        if not cand.is_zero() and int(sgn(cand)) == -1:
            z = cand
            break
    c = z ** t
    x = a ** ((t + 1) // 2)
    b = a ** t
    m = s
    while b != ctx.one:
        i, b2 = 0, b
        while b2 != ctx.one:
            b2 = b2 * b2
            i += 1
        e = 2 ** (m - i - 1)
        c2 = c ** e
        x = x * c2
        b = b * c2 * c2
        c = c2 * c2
        m = i
    neg = -x
    return x if x.coeffs <= neg.coeffs else neg


def adjoin_zeta(ctx):
    """Adjoin a square root of -1.

    Returns (ctx2, embed, zeta) where embed maps ctx into ctx2 and
    zeta * zeta == -1 in ctx2.  If -1 is already a square, ctx2 is ctx and
    embed is the identity.
    """
    minus_one = -ctx.one
    root = square_root(minus_one)
    if root is not None:
        return ctx, (lambda a: a), root
    big = FqContext(ctx.p, 2 * ctx.m)
    if ctx.m == 1:
        def embed(a, _big=big):
            return _big.elem(a.coeffs[0])
    else:
        # embed by sending x to the least root of the old modulus
        root_elt = None
        for cand in big.elements():
            acc = big.zero
            for c in reversed(ctx.modulus):
                acc = acc * cand + big.elem(c)
            if acc.is_zero():
                root_elt = cand
                break
        assert root_elt is not None

        def embed(a, _big=big, _r=root_elt):
            acc = _big.zero
            for c in reversed(a.coeffs):
                acc = acc * _r + _big.elem(c)
            return acc
    zeta = square_root(-big.one)
    assert zeta is not None
    return big, embed, zeta
