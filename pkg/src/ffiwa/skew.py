"""Twisted polynomials ``R{tau}`` with ``tau * a = a**q * tau``.

Coefficients are either :class:`~ffiwa.poly.Poly` (elements of ``F[T]``) or
:class:`~ffiwa.field.FieldElement` (elements of a residue or extension
field).  Both expose ``twist(q)`` for the q-power map.
"""

from __future__ import annotations

from .errors import DomainError
from .field import FieldElement
from .parse import parse_multivariate
from .poly import Poly


def _is_zero(a):
    return not a


class SkewPoly:
    __slots__ = ("q", "coeffs", "zero")

    def __init__(self, q, coeffs, zero=None):
        coeffs = list(coeffs)
        if zero is None:
            if not coeffs:
                raise DomainError("zero of the coefficient ring is needed for an empty SkewPoly")
            zero = coeffs[0] - coeffs[0]
        while coeffs and _is_zero(coeffs[-1]):
            coeffs.pop()
        self.q = q
        self.coeffs = tuple(coeffs)
        self.zero = zero

    @classmethod
    def parse(cls, text, field, q=None):
        """Parse ``c0 + c1*t + c2*t^2`` with each ``ci`` a polynomial in ``T`` (and ``u``)."""
        terms = parse_multivariate(text, ("t", "T", "u"))
        q = field.order if q is None else q
        deg = max((k[0] for k in terms), default=-1)
        rows = [dict() for _ in range(deg + 1)]
        for (et, eT, eu), c in terms.items():
            rows[et][(eT, eu)] = rows[et].get((eT, eu), 0) + c
        coeffs = []
        for row in rows:
            degT = max((k[0] for k in row), default=-1)
            ucs = [[0] for _ in range(degT + 1)]
            for (eT, eu), c in row.items():
                r = ucs[eT]
                r.extend([0] * (eu + 1 - len(r)))
                r[eu] += c
            coeffs.append(Poly.raw(field, [field.from_coeffs(r) for r in ucs]))
        return cls(q, coeffs, zero=Poly(field))

    @classmethod
    def tau(cls, q, one):
        return cls(q, [one - one, one])

    @classmethod
    def constant(cls, q, a):
        return cls(q, [a], zero=a - a)

    # -- accessors ------------------------------------------------------------
    @property
    def degree(self):
        """tau-degree; -1 for the zero element."""
        return len(self.coeffs) - 1

    @property
    def constant_term(self):
        """The tau^0 coefficient (the derivative at 0 of the action)."""
        return self.coeffs[0] if self.coeffs else self.zero

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else self.zero

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.zero

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return self.q == other.q and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.q, self.coeffs))

    def _check(self, other):
        if not isinstance(other, SkewPoly):
            raise TypeError(f"SkewPoly expected, got {type(other).__name__}")
        if other.q != self.q:
            raise DomainError(f"twist mismatch: q={self.q} vs q={other.q}")

    # -- ring operations ------------------------------------------------------
    def __add__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(self.q, [self[i] + other[i] for i in range(n)], zero=self.zero)

    def __sub__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(self.q, [self[i] - other[i] for i in range(n)], zero=self.zero)

    def __neg__(self):
        return SkewPoly(self.q, [-c for c in self.coeffs], zero=self.zero)

    def __mul__(self, other):
        if not isinstance(other, SkewPoly):
            # scalar on the right is a degree-0 twisted polynomial
            return SkewPoly(self.q, [c * other for c in self.coeffs], zero=self.zero)
        return skew_mul(self, other)

    def __rmul__(self, a):
        return SkewPoly(self.q, [a * c for c in self.coeffs], zero=self.zero)

    def __pow__(self, e):
        one = SkewPoly.constant(self.q, self.zero + 1)
        r, a = one, self
        while e:
            if e & 1:
                r = r * a
            e >>= 1
            if e:
                a = a * a
        return r

    def apply(self, x):
        """Evaluate the q-linear map ``x -> sum c_i x**(q**i)``."""
        out = x - x
        xi = x
        for i, c in enumerate(self.coeffs):
            if i:
                xi = xi.twist(self.q)
            if not _is_zero(c):
                out = out + c * xi
        return out

    def linearized_form(self):
        """``sum c_i x**(q**i)``.

        Field coefficients give a :class:`Poly` in ``x`` over that field; for
        polynomial coefficients the sparse form ``{q**i: c_i}`` is returned.
        """
        if self.coeffs and isinstance(self.coeffs[0], FieldElement) or isinstance(self.zero, FieldElement):
            K = self.zero.field
            if not self.coeffs:
                return Poly(K)
            out = [0] * (self.q ** self.degree + 1)
            for i, c in enumerate(self.coeffs):
                out[self.q ** i] = c.value
            return Poly.raw(K, out)
        return {self.q ** i: c for i, c in enumerate(self.coeffs) if not _is_zero(c)}

    def map_coeffs(self, fn, zero):
        return SkewPoly(self.q, [fn(c) for c in self.coeffs], zero=zero)

    def format(self, var="T"):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            cs = c.format(var) if isinstance(c, Poly) else str(c)
            if i == 0:
                parts.append(cs)
                continue
            mono = "t" if i == 1 else f"t^{i}"
            if cs == "1":
                parts.append(mono)
            elif "+" in cs:
                parts.append(f"({cs})*{mono}")
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"SkewPoly(q={self.q}, {self.format()})"


def skew_mul(f, g):
    """Product in the twisted ring: ``(a tau^i)(b tau^j) = a b**(q**i) tau^(i+j)``."""
    f._check(g)
    if not f.coeffs or not g.coeffs:
        return SkewPoly(f.q, [], zero=f.zero)
    q = f.q
    out = [f.zero] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if _is_zero(a):
            continue
        Q = q ** i
        for j, b in enumerate(g.coeffs):
            if _is_zero(b):
                continue
            out[i + j] = out[i + j] + a * (b.twist(Q) if i else b)
    return SkewPoly(q, out, zero=f.zero)


def apply(f, x):
    return f.apply(x)


def linearized_form(f):
    return f.linearized_form()
