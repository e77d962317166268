"""Dense univariate polynomials over a :class:`~ffiwa.field.FiniteField`.

Coefficients are stored as raw field integers, low degree first, with no
trailing zeros (the zero polynomial is the empty tuple).  Factorisation is
square-free decomposition, distinct-degree, then Cantor-Zassenhaus
equal-degree splitting driven by a PRNG seeded from a hash of the input.
"""

from __future__ import annotations

import hashlib
import itertools
import random

from .errors import DomainError
from .field import FieldElement, FiniteField, GF, prime_factors
from .parse import parse_multivariate


def _trim(cs):
    n = len(cs)
    while n and not cs[n - 1]:
        n -= 1
    return tuple(cs[:n])


class Poly:
    __slots__ = ("field", "c")

    def __init__(self, field, coeffs=()):
        """Build from integers (read mod p), FieldElements or raw-tuple via :meth:`raw`."""
        self.field = field
        out = []
        for x in coeffs:
            if isinstance(x, FieldElement):
                if x.field != field:
                    raise DomainError(f"coefficient from {x.field} in polynomial over {field}")
                out.append(x.value)
            else:
                out.append(int(x) % field.p)
        self.c = _trim(out)

    @classmethod
    def raw(cls, field, cs):
        obj = cls.__new__(cls)
        obj.field = field
        obj.c = _trim(list(cs)) if cs and not cs[-1] else tuple(cs)
        return obj

    @classmethod
    def x(cls, field):
        return cls.raw(field, (0, 1))

    @classmethod
    def const(cls, field, a):
        if isinstance(a, FieldElement):
            a = a.value
        return cls.raw(field, (a,) if a else ())

    @classmethod
    def monomial(cls, field, n, a=1):
        return cls.raw(field, (0,) * n + (a,))

    @classmethod
    def parse(cls, text, field, var="T"):
        """Parse e.g. ``(u+1)*T^2+u`` with ``u`` the generator of ``field``."""
        terms = parse_multivariate(text, (var, "u"))
        deg = max((k[0] for k in terms), default=-1)
        ucoeffs = [[0] * 1 for _ in range(deg + 1)]
        for (e, eu), c in terms.items():
            row = ucoeffs[e]
            if len(row) <= eu:
                row.extend([0] * (eu + 1 - len(row)))
            row[eu] += c
        return cls.raw(field, [field.from_coeffs(row) for row in ucoeffs])

    # -- basic accessors ------------------------------------------------------
    @property
    def degree(self):
        return len(self.c) - 1

    @property
    def lc(self):
        return self.c[-1] if self.c else 0

    @property
    def coeffs(self):
        return [FieldElement(self.field, v) for v in self.c]

    def is_zero(self):
        return not self.c

    def is_one(self):
        return self.c == (1,)

    def is_monic(self):
        return bool(self.c) and self.c[-1] == 1

    def __bool__(self):
        return bool(self.c)

    def __len__(self):
        return len(self.c)

    def __getitem__(self, i):
        return self.c[i] if 0 <= i < len(self.c) else 0

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.c == other.c
        if isinstance(other, (int, FieldElement)):
            return self == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.c))

    def key(self):
        """Deterministic sort key: degree, then coefficients low first."""
        return (len(self.c), tuple(self.field.key(v) for v in self.c))

    # -- ring operations ------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise DomainError(f"mixing polynomials over {self.field} and {other.field}")
            return other
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise DomainError(f"mixing {self.field} and {other.field}")
            return Poly.const(self.field, other.value)
        if isinstance(other, int):
            return Poly.const(self.field, other % self.field.p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        add = self.field.add
        out = list(a)
        for i, y in enumerate(b):
            out[i] = add(out[i], y)
        return Poly.raw(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        neg = self.field.neg
        return Poly.raw(self.field, [neg(v) for v in self.c])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.c, other.c
        if not a or not b:
            return Poly.raw(self.field, ())
        K = self.field
        add, mul = K.add, K.mul
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = add(out[i + j], mul(x, y))
        return Poly.raw(K, out)

    __rmul__ = __mul__

    def scale(self, a):
        """Multiply by the raw scalar ``a``."""
        mul = self.field.mul
        return Poly.raw(self.field, [mul(a, v) for v in self.c])

    def shift(self, n):
        return Poly.raw(self.field, (0,) * n + self.c) if self.c else self

    def __pow__(self, e):
        if e < 0:
            raise DomainError("negative power of a polynomial")
        r, a = Poly.const(self.field, 1), self
        while e:
            if e & 1:
                r = r * a
            e >>= 1
            if e:
                a = a * a
        return r

    def __divmod__(self, other):
        other = self._coerce(other)
        if not other.c:
            raise ZeroDivisionError("polynomial division by zero")
        K = self.field
        sub, mul = K.sub, K.mul
        r = list(self.c)
        db = len(other.c) - 1
        if len(r) - 1 < db:
            return Poly.raw(K, ()), self
        inv = K.inv(other.c[-1])
        b = other.c
        qt = [0] * (len(r) - db)
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k]
            if c:
                c = mul(c, inv)
                qt[k - db] = c
                base = k - db
                for i in range(db + 1):
                    if b[i]:
                        r[base + i] = sub(r[base + i], mul(c, b[i]))
        return Poly.raw(K, qt), Poly.raw(K, r[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if r:
            raise DomainError(f"{other} does not divide {self}")
        return q

    def monic(self):
        if not self.c:
            return self
        return self.scale(self.field.inv(self.c[-1]))

    def derivative(self):
        from_int, mul = self.field.from_int, self.field.mul
        return Poly.raw(self.field, [mul(from_int(i), v) for i, v in enumerate(self.c)][1:])

    def __call__(self, x):
        """Evaluate at a field element (raw int or FieldElement) by Horner."""
        if isinstance(x, Poly):
            return self.compose(x)
        wrap = isinstance(x, FieldElement)
        a = x.value if wrap else x
        K = self.field
        add, mul = K.add, K.mul
        r = 0
        for v in reversed(self.c):
            r = add(mul(r, a), v)
        return FieldElement(K, r) if wrap else r

    def compose(self, g):
        r = Poly.raw(self.field, ())
        for v in reversed(self.c):
            r = r * g + Poly.const(self.field, v)
        return r

    def twist(self, q):
        """``self ** q`` computed as ``sum c_i**q T**(i q)`` (valid in characteristic p)."""
        K = self.field
        if not self.c:
            return self
        out = [0] * ((len(self.c) - 1) * q + 1)
        for i, v in enumerate(self.c):
            out[i * q] = K.pow(v, q) if v else 0
        return Poly.raw(K, out)

    def powmod(self, e, m):
        r = Poly.const(self.field, 1) % m
        a = self % m
        while e:
            if e & 1:
                r = (r * a) % m
            e >>= 1
            if e:
                a = (a * a) % m
        return r

    def map_coeffs(self, emb, target=None):
        """Push coefficients through a map of raw values (e.g. an Embedding)."""
        f = emb.raw if hasattr(emb, "raw") else emb
        tgt = target if target is not None else emb.target
        return Poly.raw(tgt, [f(v) for v in self.c])

    def format(self, var="T"):
        K = self.field
        if not self.c:
            return "0"
        parts = []
        for i in range(len(self.c) - 1, -1, -1):
            v = self.c[i]
            if not v:
                continue
            cs = K.format(v)
            if i == 0:
                parts.append(cs)
                continue
            mono = var if i == 1 else f"{var}^{i}"
            if v == 1:
                parts.append(mono)
            elif len(K.coeffs(v)) > 1 and "+" in cs:
                parts.append(f"({cs})*{mono}")
            else:
                parts.append(f"{cs}*{mono}")
        return "+".join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Poly({self.field!r}, {self.format()})"


# -- gcd and friends ---------------------------------------------------------


def gcd(a, b):
    while b:
        a, b = b, a % b
    return a.monic()


def xgcd(a, b):
    """Return ``(g, s, t)`` with ``g = s a + t b`` monic."""
    K = a.field
    r0, r1 = a, b
    s0, s1 = Poly.const(K, 1), Poly.raw(K, ())
    t0, t1 = Poly.raw(K, ()), Poly.const(K, 1)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return r0, s0, t0
    inv = K.inv(r0.lc)
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def resultant(f, g):
    """Resultant of two polynomials over a finite field (Euclidean remainder sequence)."""
    if not isinstance(f, Poly):
        from .resultant import resultant_int

        return resultant_int(f, g)
    if not f and not g:
        raise DomainError("resultant of two zero polynomials")
    K = f.field
    if not f or not g:
        return FieldElement(K, 0)
    res = 1
    while g.degree > 0:
        m, n = f.degree, g.degree
        r = f % g
        if not r:
            return FieldElement(K, 0)
        res = K.mul(res, K.pow(g.lc, m - r.degree))
        if (m * n) % 2:
            res = K.neg(res)
        f, g = g, r
    res = K.mul(res, K.pow(g.lc, f.degree))
    return FieldElement(K, res)


# -- factorisation -----------------------------------------------------------


def _seed_for(f):
    h = hashlib.sha256(repr((f.field.p, f.field.modulus, f.c)).encode()).digest()
    return int.from_bytes(h[:8], "big")


def _pth_root(f):
    K = f.field
    p = K.p
    e = K.order // p
    return Poly.raw(K, [K.pow(f.c[i], e) for i in range(0, len(f.c), p)])


def squarefree_decomposition(f):
    """Monic ``f`` -> list of ``(g, e)`` with ``g`` squarefree, pairwise coprime."""
    K = f.field
    p = K.p
    out = []
    if f.degree <= 0:
        return out
    df = f.derivative()
    if not df:
        return [(g, e * p) for g, e in squarefree_decomposition(_pth_root(f))]
    c = gcd(f, df)
    w = f // c
    i = 1
    while w.degree > 0:
        y = gcd(w, c)
        z = w // y
        if z.degree > 0:
            out.append((z.monic(), i))
        i += 1
        w = y
        c = c // y
    if c.degree > 0:
        out.extend((g, e * p) for g, e in squarefree_decomposition(_pth_root(c.monic())))
    return out


def distinct_degree(f):
    """Squarefree monic ``f`` -> list of ``(g, d)``; ``g`` is the product of degree-d factors."""
    K = f.field
    Q = K.order
    x = Poly.x(K)
    h = x
    out = []
    d = 0
    while f.degree >= 2 * (d + 1):
        d += 1
        h = h.powmod(Q, f)
        g = gcd(h - x, f)
        if g.degree > 0:
            out.append((g, d))
            f = f // g
            h = h % f
    if f.degree > 0:
        out.append((f, f.degree))
    return out


def equal_degree(f, d, rng):
    """Split squarefree monic ``f`` whose irreducible factors all have degree ``d``."""
    if f.degree == d:
        return [f]
    K = f.field
    n = f.degree
    while True:
        a = Poly.raw(K, [rng.randrange(K.order) for _ in range(n)])
        if a.degree < 1:
            continue
        if K.p == 2:
            t = a % f
            b = t
            for _ in range(K.s * d - 1):
                t = (t * t) % f
                b = b + t
        else:
            b = a.powmod((K.order ** d - 1) // 2, f) - 1
        g = gcd(b, f)
        if 0 < g.degree < n:
            return equal_degree(g, d, rng) + equal_degree(f // g, d, rng)


def factor(f, seed=None):
    """Factor ``f`` into monic irreducibles.

    Returns ``(unit, [(g, multiplicity), ...])`` sorted by degree then
    coefficients, with ``unit * prod(g**e) == f``.
    """
    if not f:
        raise DomainError("cannot factor the zero polynomial")
    K = f.field
    unit = FieldElement(K, f.lc)
    rng = random.Random(_seed_for(f) if seed is None else seed)
    out = []
    for g, e in squarefree_decomposition(f.monic()):
        for h, d in distinct_degree(g):
            out.extend((irr, e) for irr in equal_degree(h, d, rng))
    merged = {}
    for g, e in out:
        merged[g] = merged.get(g, 0) + e
    return unit, sorted(merged.items(), key=lambda ge: ge[0].key())


def roots(f, seed=None):
    """Distinct roots of ``f`` in its coefficient field, as raw values sorted by key."""
    if not f:
        raise DomainError("every element is a root of the zero polynomial")
    K = f.field
    f = f.monic()
    if f.degree < 1:
        return []
    x = Poly.x(K)
    g = gcd(x.powmod(K.order, f) - x, f)
    if g.degree < 1:
        return []
    rng = random.Random(_seed_for(f) if seed is None else seed)
    out = [K.neg(h.c[0]) for h in equal_degree(g, 1, rng)]
    return sorted(out, key=K.key)


def frobenius_power_x(f, k):
    """``x**(Q**k) mod f`` with ``Q`` the field order."""
    h = Poly.x(f.field) % f
    for _ in range(k):
        h = h.powmod(f.field.order, f)
    return h


def is_irreducible(f):
    """Rabin's test: ``x^(Q^n) = x mod f`` and ``gcd(x^(Q^(n/l)) - x, f) = 1`` for primes l | n."""
    if f.degree < 1:
        return False
    n = f.degree
    if n == 1:
        return True
    f = f.monic()
    x = Poly.x(f.field)
    if frobenius_power_x(f, n) != x % f:
        return False
    for ell in prime_factors(n):
        h = frobenius_power_x(f, n // ell)
        if gcd(h - x, f).degree > 0:
            return False
    return True


def _has_small_factor_free(f):
    """True iff the monic ``f`` has no irreducible factor of degree <= deg f / 2."""
    K = f.field
    x = Poly.x(K)
    h = x
    for _ in range(f.degree // 2):
        h = h.powmod(K.order, f)
        if gcd(h - x, f).degree > 0:
            return False
    return True


def smallest_irreducible(p, s):
    """Lexicographically smallest monic irreducible of degree ``s`` over F_p (low first)."""
    prime = GF(p)
    if s == 1:
        return (0, 1)
    # constant term 0 means divisible by x; start the enumeration past it
    candidates = ((c0,) + rest for c0 in range(1, p) for rest in itertools.product(range(p), repeat=s - 1))
    for lower in candidates:
        cs = lower + (1,)
        f = Poly.raw(prime, cs)
        if any(f(a) == 0 for a in range(p)):
            continue
        if _has_small_factor_free(f):
            return cs
    raise AssertionError(f"no irreducible polynomial of degree {s} over F_{p}")  # pragma: no cover


def irreducibles(K, d):
    """All monic irreducibles of degree ``d`` over ``K`` (brute force; small d only)."""
    out = []
    for lower in itertools.product(range(K.order), repeat=d):
        f = Poly.raw(K, lower + (1,))
        if is_irreducible(f):
            out.append(f)
    return out
