"""Drinfeld modules over F_q(T) given by the image of ``T``.

Torsion is only ever computed after reduction at a place of good
reduction, where it lives in a finite extension of the residue field.  The
root space of a linearized polynomial is an F_p-subspace, so it is found
as the kernel of an F_p-linear map rather than by root finding.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm

from .errors import DomainError, PreconditionError, ReductionError
from .field import GF, FieldElement, FiniteField, GFq, embedding
from .linalg import charpoly, det, identity, kernel, mat_sub, rank, rref, solve
from .parse import split_list
from .poly import Poly, factor
from .skew import SkewPoly
from .tower import Place, residue_field


class DrinfeldModule:
    """``phi: F_q[T] -> F_q[T]{tau}`` determined by ``phi_T = T + a_1 tau + ... + a_r tau^r``."""

    def __init__(self, q, phi_T):
        K = GFq(q) if isinstance(q, int) else q
        self.field = K
        self.q = K.order
        if isinstance(phi_T, SkewPoly):
            coeffs = list(phi_T.coeffs)
        else:
            coeffs = [c if isinstance(c, Poly) else Poly.parse(str(c), K) for c in phi_T]
        if any(c.field != K for c in coeffs):
            raise DomainError(f"coefficients of phi_T must lie in {K}[T]")
        self.phi_T = SkewPoly(self.q, coeffs, zero=Poly(K))
        if self.phi_T.constant_term != Poly.x(K):
            raise DomainError(
                f"tau^0 coefficient of phi_T must be T, got {self.phi_T.constant_term}",
                self.phi_T.format(),
            )
        if self.phi_T.degree < 1:
            raise DomainError("phi_T must have positive tau-degree", self.phi_T.format())

    @classmethod
    def from_config(cls, cfg):
        if "q" not in cfg or "phi_T" not in cfg:
            raise DomainError("Drinfeld config needs 'q' and 'phi_T'", cfg)
        return cls(int(cfg["q"]), split_list(cfg["phi_T"]))

    @classmethod
    def carlitz(cls, q):
        return cls(q, ["T", "1"])

    @property
    def rank(self):
        return self.phi_T.degree

    @property
    def p(self):
        return self.field.p

    def poly(self, text):
        return Poly.parse(str(text), self.field)

    def place(self, text):
        return Place.parse(text, self.field)

    def __eq__(self, other):
        return isinstance(other, DrinfeldModule) and self.phi_T == other.phi_T

    def __hash__(self):
        return hash(self.phi_T)

    def __repr__(self):
        return f"DrinfeldModule(q={self.q}, phi_T={self.phi_T.format()})"

    def config(self):
        return {"q": self.q, "phi_T": [c.format() for c in self.phi_T.coeffs]}


def phi_of(phi, a):
    """``phi_a`` for ``a`` in F_q[T], by Horner in ``phi_T``."""
    K = phi.field
    if isinstance(a, str):
        a = Poly.parse(a, K)
    if a.field != K:
        raise DomainError(f"{a} is not in {K}[T]")
    zero = Poly(K)
    out = SkewPoly(phi.q, [], zero=zero)
    for c in reversed(a.c):
        out = out * phi.phi_T + SkewPoly.constant(phi.q, Poly.const(K, c))
    return out


def bad_reduction_set(phi):
    """Finite places dividing the leading tau-coefficient of ``phi_T``."""
    lead = phi.phi_T.leading
    if lead.degree < 1:
        return frozenset()
    _, facs = factor(lead)
    return frozenset(Place(phi.field, g) for g, _ in facs)


def selmer_place_set(phi, pi):
    """``{pi, inf}`` together with the bad places of ``phi``."""
    if pi.is_infinite:
        raise PreconditionError("pi must be a finite place")
    return frozenset({pi, Place.infinity(phi.field)}) | bad_reduction_set(phi)


@dataclass(frozen=True)
class ReductionReport:
    place: Place
    kind: str
    reduced_rank: int


def reduce_skew(f, v):
    """Coefficients of ``f`` (over F_q[T]) pushed into the residue field at ``v``."""
    R = residue_field(v)
    F = R.field
    return SkewPoly(f.q, [FieldElement(F, R.reduce(c)) for c in f.coeffs], zero=FieldElement(F, 0))


def reduce(phi, v):
    """Reduce ``phi_T`` at the finite place ``v``; returns ``(reduced phi_T, report)``."""
    if v.is_infinite:
        raise PreconditionError("reduction is only defined at finite places")
    red = reduce_skew(phi.phi_T, v)
    if red.degree < 1:
        raise ReductionError(
            f"reduction of {phi.phi_T.format()} at {v} has tau-degree {red.degree}; not stable as given",
            str(v),
        )
    kind = "good" if red.degree == phi.rank else "bad"
    return red, ReductionReport(v, kind, red.degree)


def _apply_raw(E, q, coeffs, x):
    add, mul, pw = E.add, E.mul, E.pow
    out = 0
    xi = x
    for i, c in enumerate(coeffs):
        if i:
            xi = pw(xi, q)
        if c:
            out = add(out, mul(c, xi))
    return out


@dataclass
class TorsionSpace:
    """The ``pi``-torsion of ``phi`` reduced at ``v``, inside ``ambient``."""

    phi: DrinfeldModule
    place: Place
    prime: Place
    ambient: FiniteField
    basis: list
    scalar_field: object
    linearized: Poly
    splitting_degree: int
    fp_basis: list = field(repr=False)
    _emb: object = field(repr=False, default=None)
    _scalar_ops: list = field(repr=False, default=None)
    _gens_matrix: list = field(repr=False, default=None)
    _base_units: list = field(repr=False, default=None)

    @property
    def rank(self):
        return len(self.basis)

    @property
    def cardinality(self):
        return self.ambient.p ** len(self.fp_basis)

    def roots(self):
        """All elements of the space (raw values in ``ambient``), by F_p-span."""
        E = self.ambient
        pts = [0]
        for b in self.fp_basis:
            new = []
            mults = [E.mul(E.from_int(c), b) for c in range(E.p)]
            for x in pts:
                for m in mults:
                    new.append(E.add(x, m))
            pts = new
        return sorted(pts)

    def act(self, a, x):
        """Reduced ``phi_a`` applied to the raw element ``x``."""
        coeffs = [self._emb.raw(c.value) for c in reduce_skew(phi_of(self.phi, a), self.place).coeffs]
        return _apply_raw(self.ambient, self.phi.q, coeffs, x)

    def _generators(self, vectors):
        """F_p-spanning set ``{c * phi_(T^j)(b)}`` of the F_pi-span of ``vectors``."""
        E = self.ambient
        out = []
        for b in vectors:
            for coeffs in self._scalar_ops:
                y = _apply_raw(E, self.phi.q, coeffs, b)
                for c in self._base_units:
                    out.append(E.mul(c, y))
        return out

    def coordinates(self, x):
        """F_pi-coordinates of ``x`` in ``basis`` as polynomials of degree < deg pi."""
        E = self.ambient
        K = self.phi.field
        if self._gens_matrix is None:
            gens = self._generators(self.basis)
            n = len(gens)
            keys = [E.key(g) for g in gens]
            self._gens_matrix = [[keys[c][r] for c in range(n)] for r in range(E.s)]
        sol = solve(GF(E.p), self._gens_matrix, list(E.key(x)))
        if sol is None:
            raise DomainError("element is not in the torsion space")
        d, s = self.prime.degree, K.s
        out = []
        for i in range(len(self.basis)):
            block = sol[i * d * s:(i + 1) * d * s]
            coeffs = [K.from_coeffs(block[j * s:(j + 1) * s]) for j in range(d)]
            out.append(Poly.raw(K, coeffs))
        return out


def _fp_rank(E, elems):
    if not elems:
        return 0
    rows = [list(E.key(x)) for x in elems]
    return rank(GF(E.p), rows)


def torsion_space(phi, v, pi):
    """Basis over ``F_pi = F_q[T]/(pi)`` of the reduced ``pi``-torsion at ``v``."""
    if v.is_infinite or pi.is_infinite:
        raise PreconditionError("v and pi must be finite places")
    if v == pi:
        raise PreconditionError(f"v = pi = {v}: torsion count fails at the characteristic place")
    _, report = reduce(phi, v)
    if report.kind != "good":
        raise PreconditionError(f"{v} is a place of bad reduction (reduced rank {report.reduced_rank})")
    K = phi.field
    Rv = residue_field(v)
    Fv = Rv.field
    phi_pi = reduce_skew(phi_of(phi, pi.poly), v)
    L = phi_pi.linearized_form()
    _, facs = factor(L)
    k = 1
    for g, _ in facs:
        k = lcm(k, g.degree)
    E = GF(Fv.p, Fv.s * k)
    emb = embedding(Fv, E)
    q = phi.q
    coeffsE = [emb.raw(c.value) for c in phi_pi.coeffs]
    images = [list(E.key(_apply_raw(E, q, coeffsE, E.from_coeffs([0] * j + [1])))) for j in range(E.s)]
    matrix = [[images[c][r] for c in range(E.s)] for r in range(E.s)]
    prime = GF(E.p)
    ker = kernel(prime, matrix)
    fp_basis = [E.from_coeffs(vec) for vec in ker]

    scalar_ops = []
    T = Poly.x(K)
    for j in range(pi.degree):
        red = reduce_skew(phi_of(phi, T ** j), v)
        scalar_ops.append([emb.raw(c.value) for c in red.coeffs])
    base_units = [emb.raw(Rv.base_embedding.raw(K.from_coeffs([0] * ell + [1]))) for ell in range(K.s)]

    space = TorsionSpace(
        phi=phi,
        place=v,
        prime=pi,
        ambient=E,
        basis=[],
        scalar_field=residue_field(pi),
        linearized=L,
        splitting_degree=k,
        fp_basis=fp_basis,
        _emb=emb,
        _scalar_ops=scalar_ops,
        _base_units=base_units,
    )
    span = 0
    chosen = []
    for b in fp_basis:
        trial = space._generators(chosen + [b])
        r = _fp_rank(E, trial)
        if r > span:
            chosen.append(b)
            span = r
        if span == len(fp_basis):
            break
    space.basis = chosen
    expected = phi.rank * pi.degree * K.s
    if len(fp_basis) != expected or len(chosen) != phi.rank:
        raise AssertionError(
            f"torsion of {phi} at v={v}, pi={pi}: F_p-dimension {len(fp_basis)} "
            f"(expected {expected}), F_pi-rank {len(chosen)}"
        )
    return space


@dataclass(frozen=True)
class FrobeniusData:
    matrix: tuple          # raw values in the residue field at pi
    matrix_polys: tuple    # the same entries as polynomials of degree < deg pi
    char_poly: Poly        # over the residue field at pi (raw coefficients)
    h0_dim: int
    space: TorsionSpace

    @property
    def rank(self):
        return len(self.matrix)

    def char_poly_lifted(self):
        """Coefficients of ``char_poly`` as polynomials in T reduced mod pi."""
        R = self.space.scalar_field
        return [R.lift(c) for c in self.char_poly.c]


def frobenius_data(phi, v, pi, space=None):
    """Matrix of ``x -> x^(#F_v)`` on the reduced ``pi``-torsion and its fixed-space dimension."""
    space = space or torsion_space(phi, v, pi)
    E = space.ambient
    Rpi = space.scalar_field
    Fpi = Rpi.field
    qv = residue_field(v).order
    r = space.rank
    cols = []
    for b in space.basis:
        cols.append(space.coordinates(E.pow(b, qv)))
    polys = tuple(tuple(cols[j][i] for j in range(r)) for i in range(r))
    M = [[Rpi.reduce(polys[i][j]) for j in range(r)] for i in range(r)]
    if det(Fpi, M) == 0:
        raise AssertionError("Frobenius matrix is singular")
    cp = charpoly(Fpi, M)
    h0 = r - rank(Fpi, mat_sub(Fpi, M, identity(r)))
    return FrobeniusData(tuple(tuple(row) for row in M), polys, cp, h0, space)
