"""Pontryagin duals of p-primary modules over the completed local ring A_p.

Modules are described up to isomorphism: a cofinitely generated module is
``(F_p/A_p)^corank (+) (+)_i A_p/p^(e_i)`` and its dual is
``A_p^corank (+) (+)_i A_p/p^(e_i)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError

def _factors(fs):
    fs = tuple(sorted(int(e) for e in fs))
    if any(e < 1 for e in fs):
        raise DomainError(f"cyclic factor exponents must be positive, got {list(fs)}", list(fs))
    return fs

@dataclass(frozen=True)
class FiniteModule:
    residue_size: int
    factors: tuple = ()

    def __post_init__(self):
        if self.residue_size < 2:
            raise DomainError(f"residue field size must be at least 2, got {self.residue_size}")
        object.__setattr__(self, "factors", _factors(self.factors))

    @property
    def cardinality(self):
        return self.residue_size ** sum(self.factors)

    def torsion(self, n):
        """Factors of ``M[p^n]``."""
        return tuple(sorted(min(e, n) for e in self.factors))

@dataclass(frozen=True)
class CofinModule:
    corank: int
    finite_part: FiniteModule

    def __post_init__(self):
        if self.corank < 0:
            raise DomainError(f"corank must be nonnegative, got {self.corank}")

    @classmethod
    def from_config(cls, cfg):
        try:
            return cls(int(cfg.get("corank", 0)), FiniteModule(int(cfg["residue_size"]), tuple(cfg.get("factors", ()))))
        except KeyError as exc:
            raise DomainError(f"module config is missing {exc.args[0]!r}", cfg) from exc

    @property
    def residue_size(self):
        return self.finite_part.residue_size

    @property
    def p_torsion_dim(self):
        """``dim M[p]`` over the residue field."""
        return self.corank + len(self.finite_part.factors)

    def torsion(self, n):
        return tuple(sorted(self.finite_part.torsion(n) + (n,) * self.corank))

    def config(self):
        return {"residue_size": self.residue_size, "corank": self.corank, "factors": list(self.finite_part.factors)}

@dataclass(frozen=True)
class DualModule:
    """``A_p^free_rank (+) torsion``: the compact dual of a cofinitely generated module."""

    free_rank: int
    torsion: FiniteModule

    @property
    def residue_size(self):
        return self.torsion.residue_size

    def quotient(self, n):
        """Factors of ``N / p^n N``."""
        return tuple(sorted(self.torsion.torsion(n) + (n,) * self.free_rank))

def dual(M):
    if isinstance(M, FiniteModule):
        return FiniteModule(M.residue_size, M.factors)
    if isinstance(M, CofinModule):
        return DualModule(M.corank, FiniteModule(M.residue_size, M.finite_part.factors))
    if isinstance(M, DualModule):
        return CofinModule(M.free_rank, FiniteModule(M.residue_size, M.torsion.factors))
    raise TypeError(f"no dual for {type(M).__name__}")

def torsion_vs_quotient(M, n):
    """``(factors of M[p^n], factors of N/p^n N)`` with ``N`` the dual, computed separately."""
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}", n)
    if isinstance(M, FiniteModule):
        M = CofinModule(0, M)
    return M.torsion(n), dual(M).quotient(n)

@dataclass(frozen=True)
class DualityReport:
    p_torsion_dim: int
    dual_finitely_generated: bool
    dual_torsion: bool
    dual_mu: int
    dual_lambda: int
    equivalence_holds: bool
    inequality_holds: bool
    tight: bool

def finiteness_check(M):
    """Finiteness of ``M[p]`` against the shape of the dual, and ``lambda <= dim M[p]``."""
    if isinstance(M, FiniteModule):
        M = CofinModule(0, M)
    N = dual(M)
    dim = M.p_torsion_dim
    fg = torsion = True
    mu = 0
    lam = N.free_rank
    finite_mp = True
    report = DualityReport(
        p_torsion_dim=dim,
        dual_finitely_generated=fg,
        dual_torsion=torsion,
        dual_mu=mu,
        dual_lambda=lam,
        equivalence_holds=finite_mp == (fg and torsion and mu == 0),
        inequality_holds=lam <= dim,
        tight=lam == dim,
    )
    if report.tight != (not M.finite_part.factors):
        raise AssertionError(f"tightness mismatch for {M}")
    return report

@dataclass(frozen=True)
class H0Term:
    place: str
    dim: int
    provenance: str  # computed | input | bound

@dataclass(frozen=True)
class LambdaBoundReport:
    sel_dim: int
    h0_terms: tuple
    bound: int
    sel_provenance: str = "input"

def lambda_bound(sel_dim, h0_dims, rank=None):
    """``sel_dim + sum of local H^0 dimensions``.

    ``h0_dims`` holds ints (treated as user input) or :class:`H0Term`.  When
    ``rank`` is given, every term is checked against it.
    """
    sel_dim = int(sel_dim)
    if sel_dim < 0:
        raise DomainError(f"Selmer dimension must be nonnegative, got {sel_dim}", sel_dim)
    terms = []
    for i, t in enumerate(h0_dims):
        if not isinstance(t, H0Term):
            t = H0Term(f"w{i}", int(t), "input")
        if t.dim < 0:
            raise DomainError(f"H^0 dimension at {t.place} is negative: {t.dim}", t.dim)
        if rank is not None and t.dim > rank:
            raise DomainError(f"H^0 dimension {t.dim} at {t.place} exceeds the rank {rank}", t.dim)
        terms.append(t)
    return LambdaBoundReport(sel_dim, tuple(terms), sel_dim + sum(t.dim for t in terms))
