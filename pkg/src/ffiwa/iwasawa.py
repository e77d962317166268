"""The Iwasawa algebra Z_p[[T]] at finite precision, elementary modules and
the growth formula ``e_n = lambda n + mu p^n + nu``.

The topological generator of the Galois group is identified with ``1 + T``
once and for all, so ``omega_n = (1 + T)^(p^n) - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import DomainError, InfiniteQuotientError, NonConformingSequenceError, PrecisionError
from .field import is_prime
from .parse import parse_int_poly
from .resultant import INFINITY, resultant_int, trim, valuation

DEFAULT_DIGITS = 32
DEFAULT_TERMS = 64
MAX_ESCALATIONS = 3


class IwasawaElement:
    """``sum c_i T^i`` with ``c_i`` known mod ``p^digits`` and terms below ``T^terms``."""

    __slots__ = ("p", "coeffs", "digits", "terms")

    def __init__(self, p, coeffs, digits=DEFAULT_DIGITS, terms=DEFAULT_TERMS):
        if not is_prime(p):
            raise DomainError(f"{p} is not prime", p)
        if digits < 1 or terms < 1:
            raise DomainError("precision must be at least one digit and one term")
        mod = p ** digits
        cs = [int(c) % mod for c in list(coeffs)[:terms]]
        self.p, self.digits, self.terms = p, digits, terms
        self.coeffs = tuple(trim(cs))

    @classmethod
    def parse(cls, text, p, digits=DEFAULT_DIGITS, terms=DEFAULT_TERMS):
        return cls(p, parse_int_poly(text), digits, terms)

    @property
    def modulus(self):
        return self.p ** self.digits

    def _meet(self, other):
        if not isinstance(other, IwasawaElement):
            other = IwasawaElement(self.p, [int(other)], self.digits, self.terms)
        if other.p != self.p:
            raise DomainError("elements over different primes")
        return other, min(self.digits, other.digits), min(self.terms, other.terms)

    def __add__(self, other):
        other, P, D = self._meet(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IwasawaElement(self.p, [x + y for x, y in zip(a, b)], P, D)

    __radd__ = __add__

    def __neg__(self):
        return IwasawaElement(self.p, [-c for c in self.coeffs], self.digits, self.terms)

    def __sub__(self, other):
        other, _, _ = self._meet(other)
        return self + (-other)

    def __mul__(self, other):
        other, P, D = self._meet(other)
        out = [0] * min(D, max(len(self.coeffs) + len(other.coeffs) - 1, 0))
        for i, a in enumerate(self.coeffs):
            if not a or i >= D:
                continue
            for j, b in enumerate(other.coeffs):
                if i + j >= D:
                    break
                out[i + j] += a * b
        return IwasawaElement(self.p, out, P, D)

    __rmul__ = __mul__

    def __pow__(self, e):
        r = IwasawaElement(self.p, [1], self.digits, self.terms)
        a = self
        while e:
            if e & 1:
                r = r * a
            e >>= 1
            if e:
                a = a * a
        return r

    def div_T(self):
        """Exact division by ``T``; the constant term must vanish at this precision."""
        if self.coeffs and self.coeffs[0] % self.modulus:
            raise DomainError("constant term is nonzero; not divisible by T")
        return IwasawaElement(self.p, self.coeffs[1:], self.digits, self.terms)

    def valuations(self):
        return [valuation(c, self.p) if c else INFINITY for c in self.coeffs]

    def is_unit(self):
        return bool(self.coeffs) and self.coeffs[0] % self.p != 0

    def __eq__(self, other):
        if not isinstance(other, IwasawaElement):
            return NotImplemented
        P, D = min(self.digits, other.digits), min(self.terms, other.terms)
        m = self.p ** P
        a = trim([c % m for c in self.coeffs[:D]])
        b = trim([c % m for c in other.coeffs[:D]])
        return self.p == other.p and a == b

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def format(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("T" if i == 1 else f"T^{i}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return "+".join(parts)

    def __repr__(self):
        return f"IwasawaElement(p={self.p}, {self.format()}, O(p^{self.digits}, T^{self.terms}))"


def mu_lambda(f):
    """Weierstrass data: ``mu`` = least coefficient valuation, ``lambda`` = first index attaining it."""
    vals = [v for v in f.valuations()]
    finite = [v for v in vals if v != INFINITY and v < f.digits]
    if not finite:
        raise PrecisionError(
            f"all coefficients vanish mod p^{f.digits} below T^{f.terms}; mu and lambda are indeterminate",
            f.format(),
        )
    mu = min(finite)
    return mu, vals.index(mu)


def mu_lambda_escalating(build, digits=DEFAULT_DIGITS, terms=DEFAULT_TERMS):
    """``mu_lambda(build(digits, terms))``, doubling the precision while the answer touches the ceiling."""
    for _ in range(MAX_ESCALATIONS + 1):
        f = build(digits, terms)
        try:
            mu, lam = mu_lambda(f)
        except PrecisionError:
            mu, lam = digits, terms
        if mu < digits - 1 and lam < terms - 1:
            return mu, lam
        digits, terms = 2 * digits, 2 * terms
    raise PrecisionError(f"mu/lambda not determined after {MAX_ESCALATIONS} escalations")


def omega_poly(p, n):
    """``(1 + T)^(p^n) - 1`` as an exact integer polynomial."""
    N = p ** n
    return [0] + [comb(N, k) for k in range(1, N + 1)]


def omega(p, n, digits=DEFAULT_DIGITS, terms=None):
    terms = max(p ** n + 1, DEFAULT_TERMS) if terms is None else terms
    return IwasawaElement(p, omega_poly(p, n), digits, terms)


def nu(p, n, digits=DEFAULT_DIGITS, terms=None):
    """``omega_n / T``, the image of ``1 + sigma + ... + sigma^(p^n - 1)``."""
    return omega(p, n, digits, terms).div_T()


def is_distinguished(f, p):
    f = trim(f)
    return len(f) >= 2 and f[-1] == 1 and all(c % p == 0 for c in f[:-1])


@dataclass(frozen=True)
class ElementaryModule:
    """``(+) Lambda/(p^mu_i)  (+)  (+) Lambda/(f_j)`` with distinguished ``f_j``."""

    p: int
    mu_parts: tuple = ()
    lambda_parts: tuple = ()

    def __post_init__(self):
        if not is_prime(self.p):
            raise DomainError(f"{self.p} is not prime", self.p)
        mus = tuple(int(m) for m in self.mu_parts)
        if any(m < 1 for m in mus):
            raise DomainError(f"mu parts must be positive, got {list(mus)}", list(mus))
        fs = []
        for f in self.lambda_parts:
            f = parse_int_poly(f) if isinstance(f, str) else trim([int(c) for c in f])
            if not is_distinguished(f, self.p):
                raise DomainError(f"{f} is not a distinguished polynomial for p={self.p}", f)
            fs.append(tuple(f))
        object.__setattr__(self, "mu_parts", mus)
        object.__setattr__(self, "lambda_parts", tuple(fs))

    @classmethod
    def from_config(cls, cfg):
        try:
            return cls(int(cfg["p"]), tuple(cfg.get("mu_parts", ())), tuple(cfg.get("lambda_parts", ())))
        except KeyError as exc:
            raise DomainError(f"module config is missing {exc.args[0]!r}", cfg) from exc

    @property
    def mu(self):
        return sum(self.mu_parts)

    @property
    def lam(self):
        return sum(len(f) - 1 for f in self.lambda_parts)


def quotient_exponent(E, n):
    """p-exponent of ``#(E / omega_n E)``."""
    if n < 0:
        raise DomainError(f"level must be nonnegative, got {n}", n)
    w = omega_poly(E.p, n)
    total = sum(E.mu_parts) * E.p ** n
    for f in E.lambda_parts:
        r = resultant_int(list(f), w)
        if r == 0:
            raise InfiniteQuotientError(
                f"f = {list(f)} shares a zero with omega_{n}; the quotient is infinite", list(f)
            )
        total += valuation(r, E.p)
    return total


def growth(E, n_max):
    return [quotient_exponent(E, n) for n in range(n_max + 1)]


@dataclass(frozen=True)
class InvariantFit:
    lam: int
    mu: int
    nu: int
    n0: int
    residuals: tuple  # per level: True when the formula matches

    def predict(self, n, p):
        return self.lam * n + self.mu * p ** n + self.nu


def fit_invariants(e, p, start=0):
    """Fit ``e_n = lambda n + mu p^n + nu`` to ``e[start], e[start+1], ...``.

    The unknowns come from the last three entries; ``n0`` is the first level
    from which every later entry matches.
    """
    e = [int(x) for x in e]
    if len(e) < 4:
        raise DomainError(f"need at least 4 levels to fit, got {len(e)}", e)
    if not is_prime(p):
        raise DomainError(f"{p} is not prime", p)
    ns = list(range(start, start + len(e)))
    n1, n2, n3 = ns[-3:]
    e1, e2, e3 = (Fraction(x) for x in e[-3:])
    # differences eliminate nu; the remaining 2x2 system is solved exactly
    a1, b1, c1 = n2 - n1, p ** n2 - p ** n1, e2 - e1
    a2, b2, c2 = n3 - n2, p ** n3 - p ** n2, e3 - e2
    den = a1 * b2 - a2 * b1
    lam = (c1 * b2 - c2 * b1) / den
    mu = (a1 * c2 - a2 * c1) / den
    nu_ = e3 - lam * n3 - mu * p ** n3
    if any(x.denominator != 1 for x in (lam, mu, nu_)) or lam < 0 or mu < 0:
        raise NonConformingSequenceError(
            f"e = {e} (p = {p}) admits no integer fit with lambda, mu >= 0 on its last three levels",
            e,
        )
    lam, mu, nu_ = int(lam), int(mu), int(nu_)
    residuals = tuple(lam * n + mu * p ** n + nu_ == x for n, x in zip(ns, e))
    k = len(e)
    while k > 0 and residuals[k - 1]:
        k -= 1
    return InvariantFit(lam, mu, nu_, ns[k], residuals)
