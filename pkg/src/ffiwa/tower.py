"""Places of F_q(T) and their behaviour in the constant Z_p-tower.

Level ``n`` of the tower is ``F_n = F_q(T) . F_{q^(p^n)}``, ``p`` the
characteristic.  A place of degree ``d`` splits there into ``gcd(d, p^n)``
places of degree ``d / gcd(d, p^n)``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import gcd

from .errors import DomainError
from .field import GF, FieldElement, embedding
from .linalg import solve
from .poly import Poly, factor, is_irreducible, roots
from .resultant import valuation


class Place:
    """``inf`` or a monic irreducible polynomial of F_q[T]."""

    __slots__ = ("field", "poly")

    def __init__(self, field, poly=None):
        self.field = field
        if poly is not None:
            if poly.field != field:
                raise DomainError(f"place polynomial over {poly.field}, expected {field}")
            if not poly.is_monic():
                raise DomainError(f"place polynomial {poly} is not monic", poly.format())
            if not is_irreducible(poly):
                raise DomainError(f"place polynomial {poly} is not irreducible over {field}", poly.format())
        self.poly = poly

    @classmethod
    def infinity(cls, field):
        return cls(field, None)

    @classmethod
    def parse(cls, text, field):
        text = str(text).strip()
        if text.lower() in ("inf", "infinity", "oo"):
            return cls.infinity(field)
        return cls(field, Poly.parse(text, field).monic())

    @property
    def is_infinite(self):
        return self.poly is None

    @property
    def degree(self):
        return 1 if self.poly is None else self.poly.degree

    @property
    def p(self):
        return self.field.p

    def residue_field(self):
        if self.is_infinite:
            raise DomainError("no polynomial reduction map at the infinite place")
        return residue_field(self)

    def key(self):
        return (1, ()) if self.poly is None else (0, self.poly.key())

    def __eq__(self, other):
        return isinstance(other, Place) and self.field == other.field and self.poly == other.poly

    def __hash__(self):
        return hash((self.field, self.poly))

    def __lt__(self, other):
        return self.key() < other.key()

    def __str__(self):
        return "inf" if self.poly is None else self.poly.format()

    def __repr__(self):
        return f"Place({self})"


class ResidueField:
    """``F_v = F_q[T]/(v)`` realised as ``GF(p, s * deg v)``.

    ``F_q`` enters through its canonical embedding and ``T`` maps to the
    smallest root of ``v`` there.
    """

    def __init__(self, place):
        K = place.field
        self.place = place
        self.base = K
        self.field = GF(K.p, K.s * place.degree)
        self.base_embedding = embedding(K, self.field)
        image = place.poly.map_coeffs(self.base_embedding, self.field)
        self.theta = min(roots(image), key=self.field.key)
        self._lift_matrix = None

    @property
    def order(self):
        return self.field.order

    def reduce(self, a):
        """Raw image of ``a`` (a Poly over F_q, or an int) in the residue field."""
        F = self.field
        if isinstance(a, int):
            return F.from_int(a)
        add, mul, emb = F.add, F.mul, self.base_embedding.raw
        r = 0
        for c in reversed(a.c):
            r = add(mul(r, self.theta), emb(c))
        return r

    def __call__(self, a):
        return FieldElement(self.field, self.reduce(a))

    def lift(self, x):
        """Representative of degree < deg v in F_q[T] of the raw residue ``x``."""
        K, F = self.base, self.field
        d, s = self.place.degree, K.s
        if self._lift_matrix is None:
            cols = []
            for j in range(d):
                tj = F.pow(self.theta, j)
                for ell in range(s):
                    b = F.mul(self.base_embedding.raw(K.from_coeffs([0] * ell + [1])), tj)
                    cs = F.key(b)
                    cols.append(list(cs))
            n = len(cols)
            self._lift_matrix = [[cols[c][r] for c in range(n)] for r in range(n)]
        prime = GF(K.p)
        sol = solve(prime, self._lift_matrix, list(F.key(x)))
        coeffs = []
        for j in range(d):
            coeffs.append(K.from_coeffs(sol[j * s:(j + 1) * s]))
        return Poly.raw(K, coeffs)


@functools.lru_cache(maxsize=None)
def residue_field(place):
    return ResidueField(place)


@dataclass(frozen=True)
class Splitting:
    count: int
    degree: int


def splitting_in_level(v, n):
    """Number and common degree of the places of ``F_n`` above ``v``."""
    if n < 0:
        raise DomainError(f"level must be nonnegative, got {n}", n)
    d = v.degree
    c = gcd(d, v.p ** n)
    return Splitting(c, d // c)


def split_by_factoring(v, n):
    """Same data by factoring ``v`` over F_{q^(p^n)}; a brute-force check of the formula."""
    if v.is_infinite:
        return Splitting(1, 1)
    K = v.field
    L = GF(K.p, K.s * K.p ** n)
    emb = embedding(K, L)
    _, facs = factor(v.poly.map_coeffs(emb, L))
    degs = {g.degree for g, _ in facs}
    if len(degs) != 1 or any(e != 1 for _, e in facs):
        raise AssertionError(f"unexpected factorisation pattern of {v} over {L}")
    return Splitting(len(facs), degs.pop())


@dataclass(frozen=True)
class DeltaSequence:
    places: tuple
    values: tuple
    stabilization_index: int
    stable_value: int

    @property
    def p(self):
        return self.places[0].p


def delta_sequence(S, n_max):
    """``delta_n = gcd`` of the degrees of the places of ``F_n`` above ``S``, n = 0..n_max."""
    S = sorted(set(S))
    if not S:
        raise DomainError("the place set S is empty")
    if n_max < 0:
        raise DomainError(f"n_max must be nonnegative, got {n_max}", n_max)
    values = []
    for n in range(n_max + 1):
        g = 0
        for v in S:
            g = gcd(g, splitting_in_level(v, n).degree)
        values.append(g)
    for a, b in zip(values, values[1:]):
        if b > a:
            raise AssertionError(f"delta sequence increased: {values}")
    N = n_max
    while N > 0 and values[N - 1] == values[N]:
        N -= 1
    p = S[0].p
    if n_max >= max(valuation(v.degree, p) for v in S) and values[-1] % p == 0:
        raise AssertionError(f"stable delta {values[-1]} divisible by p={p}")
    return DeltaSequence(tuple(S), tuple(values), N, values[N])


def totally_inert_level(S):
    """Least level from which every place above ``S`` stays inert in the rest of the tower."""
    S = list(S)
    if not S:
        raise DomainError("the place set S is empty")
    return max(valuation(v.degree, v.p) for v in S)
