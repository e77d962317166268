"""Prime-power finite fields.

A field of order ``q = p**s`` is ``F_p[u]/(m(u))`` where ``m`` is the
lexicographically smallest monic irreducible of degree ``s`` (coefficient
vectors compared low degree first).  Elements are stored as integers
``sum(c_i * p**i)``; :class:`FieldElement` wraps one for interactive use,
while the polynomial and linear-algebra code works on the raw integers
through the field's ``add``/``mul``/... methods.
"""

from __future__ import annotations

import functools

from .errors import DomainError
from .parse import parse_multivariate

# log/antilog tables are built for fields up to this order
TABLE_LIMIT = 1 << 16
# full addition table for odd characteristic up to this order
ADD_TABLE_LIMIT = 729


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n):
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


def prime_power(q):
    """Return ``(p, s)`` with ``q == p**s``; raise for non prime powers."""
    if q < 2:
        raise DomainError(f"{q} is not a prime power", q)
    for p in range(2, q + 1):
        if q % p == 0:
            s = 0
            while q % p == 0:
                q //= p
                s += 1
            if q != 1 or not is_prime(p):
                raise DomainError(f"{p ** s * q} is not a prime power", q)
            return p, s
    raise DomainError(f"{q} is not a prime power", q)


class FiniteField:
    """The field with ``p**s`` elements.  Use :func:`GF` to get cached instances."""

    def __init__(self, p, s=1, modulus=None):
        if not is_prime(p):
            raise DomainError(f"characteristic {p} is not prime", p)
        if s < 1:
            raise DomainError(f"extension degree {s} must be positive", s)
        self.p = p
        self.s = s
        self.order = p ** s
        if modulus is None:
            if s == 1:
                modulus = (0, 1)
            else:
                from .poly import smallest_irreducible

                modulus = smallest_irreducible(p, s)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != s + 1 or modulus[-1] != 1:
            raise DomainError(f"modulus must be monic of degree {s}", modulus)
        self.modulus = modulus
        self._log = self._exp = None
        self._addtab = None
        self._setup()

    # -- construction of the arithmetic ---------------------------------------
    def _setup(self):
        p, s = self.p, self.s
        if s == 1:
            self.add = lambda a, b: (a + b) % p
            self.sub = lambda a, b: (a - b) % p
            self.neg = lambda a: (-a) % p
            self.mul = lambda a, b: (a * b) % p
            return
        if p == 2:
            self.add = self.sub = int.__xor__
            self.neg = lambda a: a
            self._modmask = sum(c << i for i, c in enumerate(self.modulus))
        else:
            self.add = self._add_digits
            self.sub = self._sub_digits
            self.neg = self._neg_digits
        self.mul = self._mul_generic
        if self.order <= TABLE_LIMIT:
            self._build_tables()
        if p != 2 and self.order <= ADD_TABLE_LIMIT:
            q = self.order
            tab = [self._add_digits(a, b) for a in range(q) for b in range(q)]
            negs = [self._neg_digits(a) for a in range(q)]
            self._addtab = tab
            self.add = lambda a, b: tab[a * q + b]
            self.sub = lambda a, b: tab[a * q + negs[b]]
            self.neg = negs.__getitem__

    def _build_tables(self):
        n = self.order - 1
        factors = prime_factors(n)
        for g in range(2, self.order):
            if all(self._pow_generic(g, n // ell) != 1 for ell in factors):
                break
        else:  # pragma: no cover - every finite field has a primitive element
            raise AssertionError("no primitive element found")
        exp = [0] * (2 * n)
        log = [0] * self.order
        x = 1
        for i in range(n):
            exp[i] = exp[i + n] = x
            log[x] = i
            x = self._mul_generic(x, g)
        self._exp, self._log, self._n = exp, log, n
        self.primitive = g

        def mul(a, b):
            if not a or not b:
                return 0
            return exp[log[a] + log[b]]

        self.mul = mul

    def _digits(self, a):
        p = self.p
        out = []
        while a:
            a, r = divmod(a, p)
            out.append(r)
        return out

    def _undigits(self, ds):
        p = self.p
        v = 0
        for c in reversed(ds):
            v = v * p + c
        return v

    def _add_digits(self, a, b):
        p = self.p
        out, m = 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += ((x + y) % p) * m
            m *= p
        return out

    def _neg_digits(self, a):
        p = self.p
        out, m = 0, 1
        while a:
            a, x = divmod(a, p)
            out += ((-x) % p) * m
            m *= p
        return out

    def _sub_digits(self, a, b):
        return self._add_digits(a, self._neg_digits(b))

    def _mul_generic(self, a, b):
        s = self.s
        if self.p == 2:
            mask, top = self._modmask, 1 << s
            r = 0
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if a & top:
                    a ^= mask
            return r
        p, mod = self.p, self.modulus
        da, db = self._digits(a), self._digits(b)
        if not da or not db:
            return 0
        prod = [0] * (len(da) + len(db) - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        for k in range(len(prod) - 1, s - 1, -1):
            c = prod[k] % p
            if c:
                base = k - s
                for i in range(s):
                    prod[base + i] -= c * mod[i]
        return self._undigits([c % p for c in prod[:s]])

    def _pow_generic(self, a, e):
        r = 1
        while e:
            if e & 1:
                r = self._mul_generic(r, a)
            a = self._mul_generic(a, a)
            e >>= 1
        return r

    # -- raw-integer arithmetic -----------------------------------------------
    def pow(self, a, e):
        if e == 0:
            return 1
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero has no inverse")
            return 0
        if self.s == 1:
            return pow(a, e % (self.p - 1) if e < 0 else e, self.p)
        e %= self.order - 1
        if self._log is not None:
            return self._exp[(self._log[a] * e) % self._n]
        r = 1
        mul = self.mul
        while e:
            if e & 1:
                r = mul(r, a)
            a = mul(a, a)
            e >>= 1
        return r

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("zero has no inverse in a field")
        if self.s == 1:
            return pow(a, -1, self.p)
        if self._log is not None:
            return self._exp[self._n - self._log[a]]
        return self.pow(a, self.order - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_int(self, n):
        """Image of the integer ``n`` (prime-field element)."""
        return n % self.p

    def coeffs(self, a):
        """Coefficient vector over F_p, low degree first, trailing zeros removed."""
        if self.p == 2:
            return tuple((a >> i) & 1 for i in range(a.bit_length()))
        return tuple(self._digits(a))

    def from_coeffs(self, cs):
        cs = [int(c) % self.p for c in cs]
        if len(cs) > self.s:
            # reduce a longer vector modulo the defining polynomial
            from .poly import Poly

            prime = GF(self.p)
            r = Poly(prime, cs) % Poly(prime, self.modulus)
            cs = list(r.c)
        return self._undigits(cs) if self.p != 2 else sum(c << i for i, c in enumerate(cs))

    def key(self, a):
        """Sort key: coefficient vector low degree first, padded to length s."""
        cs = self.coeffs(a)
        return tuple(cs) + (0,) * (self.s - len(cs))

    def is_square(self, a):
        if a == 0 or self.p == 2:
            return True
        return self.pow(a, (self.order - 1) // 2) == 1

    # -- element-level interface ----------------------------------------------
    def __call__(self, x):
        if isinstance(x, FieldElement):
            if x.field == self:
                return x
            raise DomainError(f"element of {x.field} is not in {self}", x)
        if isinstance(x, int):
            return FieldElement(self, x % self.p)
        if isinstance(x, (tuple, list)):
            return FieldElement(self, self.from_coeffs(x))
        if isinstance(x, str):
            return FieldElement(self, self.parse(x))
        raise TypeError(f"cannot convert {x!r} into {self}")

    def parse(self, text):
        """Raw value of an element written as a polynomial in ``u``."""
        terms = parse_multivariate(text, ("u",))
        cs = [0] * (max((k[0] for k in terms), default=0) + 1)
        for (e,), c in terms.items():
            cs[e] = c
        return self.from_coeffs(cs)

    def format(self, a, var="u"):
        cs = self.coeffs(a)
        if not cs:
            return "0"
        parts = []
        for i in range(len(cs) - 1, -1, -1):
            c = cs[i]
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                mono = var if i == 1 else f"{var}^{i}"
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(parts)

    def element(self, raw):
        return FieldElement(self, raw)

    @property
    def zero(self):
        return FieldElement(self, 0)

    @property
    def one(self):
        return FieldElement(self, 1)

    @property
    def gen(self):
        """The class of ``u``."""
        return FieldElement(self, self.from_coeffs([0, 1]))

    def elements(self):
        return (FieldElement(self, v) for v in range(self.order))

    def random_element(self, rng, nonzero=False):
        lo = 1 if nonzero else 0
        return FieldElement(self, rng.randrange(lo, self.order))

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        return f"GF({self.order})" if self.s == 1 else f"GF({self.p}^{self.s})"


@functools.lru_cache(maxsize=None)
def GF(p, s=1):
    """Cached field of order ``p**s`` with the canonical modulus."""
    return FiniteField(p, s)


def GFq(q):
    return GF(*prime_power(q))


class FieldElement:
    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value

    def _raw(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise DomainError(f"mixing elements of {self.field} and {other.field}")
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        b = self._raw(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._raw(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._raw(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._raw(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._raw(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._raw(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.div(b, self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def twist(self, q):
        """``self ** q`` (the q-power map used by twisted polynomials)."""
        return self ** q

    @property
    def coeffs(self):
        return self.field.coeffs(self.value)

    def is_zero(self):
        return self.value == 0

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"{self.field!r}({self.field.format(self.value)})"


class Embedding:
    """Ring homomorphism ``K -> L`` fixing F_p, determined by the image of ``u``."""

    def __init__(self, source, target, image):
        self.source = source
        self.target = target
        self.image = image  # raw value in target
        powers = [1]
        for _ in range(source.s - 1):
            powers.append(target.mul(powers[-1], image))
        self._powers = powers

    def __call__(self, a):
        if isinstance(a, FieldElement):
            return FieldElement(self.target, self.raw(a.value))
        return self.raw(a)

    def raw(self, a):
        if self.source.s == 1:
            return a
        add, mul = self.target.add, self.target.mul
        out = 0
        for c, pw in zip(self.source.coeffs(a), self._powers):
            if c:
                out = add(out, mul(c, pw))
        return out

    def then(self, other):
        """Composite ``self`` followed by ``other``."""
        if other.source != self.target:
            raise DomainError("embeddings do not compose")
        return Embedding(self.source, other.target, other.raw(self.image))


@functools.lru_cache(maxsize=None)
def embedding(source, target):
    """Canonical embedding ``source -> target``.

    The generator of ``source`` goes to the root of its modulus in ``target``
    with lexicographically smallest coefficient vector.
    """
    if source.p != target.p or target.s % source.s:
        raise DomainError(f"{source} does not embed in {target}")
    if source.s == 1:
        return Embedding(source, target, 0)
    if source == target:
        return Embedding(source, target, source.from_coeffs([0, 1]))
    from .poly import Poly, roots

    m = Poly(target, source.modulus)
    rts = roots(m)
    image = min(rts, key=target.key)
    return Embedding(source, target, image)
