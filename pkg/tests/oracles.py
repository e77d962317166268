"""Brute-force reference implementations used only by the tests.

Nothing here imports the library's arithmetic.  Field elements use the same
integer encoding ``sum c_i p^i`` and the same modulus convention (smallest
monic irreducible, low-degree coefficients compared first), so results can be
compared value for value.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


def _poly_mod_p(a, m, p):
    a = list(a)
    while len(a) >= len(m):
        c = a[-1] % p
        shift = len(a) - len(m)
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        a.pop()
    return [x % p for x in a]


def _has_root_free_factor(m, p):
    """True when ``m`` (monic, over F_p) has a monic factor of degree 1..deg/2."""
    s = len(m) - 1
    for d in range(1, s // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            g = list(tail) + [1]
            if not any(_poly_mod_p(m, g, p)):
                return True
    return False


@lru_cache(maxsize=None)
def smallest_modulus(p, s):
    for c0 in range(1, p) if s > 1 else range(p):
        for rest in itertools.product(range(p), repeat=s - 1):
            m = [c0, *rest, 1]
            if not _has_root_free_factor(m, p):
                return tuple(m)
    raise AssertionError("no irreducible found")


class OracleField:
    """GF(p^s) with multiplication by exp/log tables built from scratch."""

    def __init__(self, p, s):
        self.p, self.s, self.order = p, s, p ** s
        self.modulus = smallest_modulus(p, s)
        self._build()

    def digits(self, a):
        out = []
        for _ in range(self.s):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def undigits(self, ds):
        v = 0
        for d in reversed(ds):
            v = v * self.p + d % self.p
        return v

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        return self.undigits([x + y for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a):
        return self.undigits([-x for x in self.digits(a)])

    def _mul_slow(self, a, b):
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.s)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] += x * y
        return self.undigits(_poly_mod_p(prod, self.modulus, self.p) + [0] * self.s)

    def _build(self):
        n = self.order - 1
        for g in range(1, self.order):
            exp, x = [], 1
            seen = set()
            for _ in range(n):
                exp.append(x)
                seen.add(x)
                x = self._mul_slow(x, g)
            if len(seen) == n:
                break
        self.exp = exp + exp
        self.log = {x: i for i, x in enumerate(exp)}

    def mul(self, a, b):
        if not a or not b:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def pow(self, a, e):
        if not a:
            return 0 if e else 1
        return self.exp[(self.log[a] * e) % (self.order - 1)]

    def elements(self):
        return range(self.order)

    def roots_of(self, coeffs):
        """All roots (sorted) in this field of a polynomial with coefficients in this field."""
        out = []
        for x in self.elements():
            acc = 0
            for c in reversed(coeffs):
                acc = self.add(self.mul(acc, x), c)
            if acc == 0:
                out.append(x)
        return out

    def subfield_image(self, s_small):
        """Image of the generator of GF(p^s_small): smallest root of its modulus here."""
        m = smallest_modulus(self.p, s_small)
        return self.roots_of([self.undigits([c] + [0] * (self.s - 1)) for c in m])[0]

    def embed(self, raw_small, s_small):
        """Embed an element of GF(p^s_small), given by its integer encoding."""
        if s_small == 1:
            return raw_small % self.p
        g = self.subfield_image(s_small)
        acc, gi = 0, 1
        x = raw_small
        for _ in range(s_small):
            x, c = divmod(x, self.p)
            acc = self.add(acc, self.mul(c % self.p, gi))
            gi = self.mul(gi, g)
        return acc


@lru_cache(maxsize=None)
def oracle_field(p, s):
    return OracleField(p, s)


# -- polynomials over F_q, dense lists of encoded coefficients ----------------

def _strip(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_divmod(F, f, g):
    f, g = _strip(f), _strip(g)
    inv = F.pow(g[-1], F.order - 2)
    q = [0] * max(len(f) - len(g) + 1, 0)
    while len(f) >= len(g):
        c = F.mul(f[-1], inv)
        k = len(f) - len(g)
        q[k] = c
        for i, gc in enumerate(g):
            f[k + i] = F.add(f[k + i], F.neg(F.mul(c, gc)))
        f = _strip(f)
    return q, f


def monic_polys(F, d):
    for tail in itertools.product(range(F.order), repeat=d):
        yield list(tail) + [1]


def irreducibles_by_sieve(F, d):
    """All monic irreducibles of degree ``d`` over ``F``: no factor of degree <= d/2."""
    out = []
    for f in monic_polys(F, d):
        if not any(not poly_divmod(F, f, g)[1] for k in range(1, d // 2 + 1) for g in monic_polys(F, k)):
            out.append(f)
    return out


def factor_by_trial_division(F, f):
    """Monic irreducible factors with multiplicity, by dividing out smallest-degree factors first."""
    f = _strip(f)
    lc_inv = F.pow(f[-1], F.order - 2)
    f = [F.mul(c, lc_inv) for c in f]
    out = {}
    d = 1
    while len(f) > 1:
        if 2 * d > len(f) - 1:
            key = tuple(f)
            out[key] = out.get(key, 0) + 1
            break
        hit = False
        for g in monic_polys(F, d):
            q, r = poly_divmod(F, f, g)
            if not r:
                out[tuple(g)] = out.get(tuple(g), 0) + 1
                f = q
                hit = True
                break
        if not hit:
            d += 1
    return sorted(out.items(), key=lambda kv: (len(kv[0]), kv[0][::-1]))


# -- Drinfeld torsion ---------------------------------------------------------

def _eval_poly_T(E, coeffs_small, s_small, theta):
    acc = 0
    for c in reversed(coeffs_small):
        acc = E.add(E.mul(acc, theta), E.embed(c, s_small))
    return acc


def torsion_oracle(p, s, phi_T, v, pi, big_s):
    """Exhaustive pi-torsion of ``phi`` reduced at ``v`` inside GF(p^big_s).

    ``phi_T`` is a list of tau-coefficients, each a list of encoded F_q
    coefficients (low T-degree first); ``v`` and ``pi`` are monic coefficient
    lists.  Returns ``(sorted torsion roots, #F_v)``.  The reduction of ``T``
    is the smallest root of ``v``; the action of ``phi_pi`` is built by
    iterating the action of ``phi_T`` rather than by multiplying skew
    polynomials.
    """
    E = oracle_field(p, big_s)
    q = p ** s
    theta = E.roots_of([E.embed(c, s) for c in v])[0]
    reduced = [_eval_poly_T(E, c, s, theta) for c in phi_T]

    def phi_T_action(x):
        acc, xi = 0, x
        for i, c in enumerate(reduced):
            if i:
                xi = E.pow(xi, q)
            acc = E.add(acc, E.mul(c, xi))
        return acc

    pis = [E.embed(c, s) for c in pi]
    roots = []
    for x in E.elements():
        acc, y = 0, x
        for j, c in enumerate(pis):
            if j:
                y = phi_T_action(y)
            acc = E.add(acc, E.mul(c, y))
        if acc == 0:
            roots.append(x)
    return roots, q ** (len(v) - 1)


def fixed_points(E, roots, size):
    return [x for x in roots if E.pow(x, size) == x]


# -- plane curves -------------------------------------------------------------

def count_affine(p, s, k, terms):
    """Zeros of ``sum c_ij x^i y^j`` over GF(p^(s k)); ``terms`` maps (i, j) to encoded F_q coefficients."""
    E = oracle_field(p, s * k)
    cs = {ij: E.embed(c, s) for ij, c in terms.items()}
    n = 0
    for x in E.elements():
        for y in E.elements():
            acc = 0
            for (i, j), c in cs.items():
                acc = E.add(acc, E.mul(c, E.mul(E.pow(x, i), E.pow(y, j))))
            n += acc == 0
    return n


# -- integers -----------------------------------------------------------------

def resultant_from_roots_sign(f, g):
    """``Res(f, g) = lc(f)^deg g * prod g(alpha)``, evaluated via the Sylvester matrix with Fractions."""
    from fractions import Fraction

    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + list(reversed(f)) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(reversed(g)) + [0] * (size - n - 1 - i))
    M = [[Fraction(x) for x in r] for r in rows]
    det = Fraction(1)
    for c in range(size):
        piv = next((r for r in range(c, size) if M[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det *= M[c][c]
        for r in range(c + 1, size):
            t = M[r][c] / M[c][c]
            if t:
                M[r] = [a - t * b for a, b in zip(M[r], M[c])]
    return int(det)


def vp(n, p):
    n = abs(n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k
