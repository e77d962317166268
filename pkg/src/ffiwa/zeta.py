"""L-polynomials and class numbers along the constant Z_p-tower.

For ``L(u) = prod(1 - alpha_i u)`` the class number over ``F_{q^N}`` is
``prod(1 - alpha_i^N)``.  It is computed twice with integer arithmetic only:
as ``det(I - C^N)`` for the companion matrix ``C`` of the reversed
polynomial, and as ``Res(M(u), u^N - 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError, DomainError, InvalidCountsError, SizeError
from .field import GF, embedding, prime_power
from .parse import parse_multivariate
from .resultant import companion, det_int, mat_pow_int, resultant_int, valuation

COUNT_GUARD = 1 << 26

# Small curves used by the experiment script and the acceptance suite.
# inf_correction is the number of points at infinity of the smooth model.
EXAMPLE_CURVES = (
    {"name": "y^2+y=x^3 / F2", "q": 2, "affine": "y^2+y+x^3", "inf_correction": 1, "genus": 1},
    {"name": "y^2+y=x^3+x / F2", "q": 2, "affine": "y^2+y+x^3+x", "inf_correction": 1, "genus": 1},
    {"name": "y^2+xy=x^3+1 / F2", "q": 2, "affine": "y^2+x*y+x^3+1", "inf_correction": 1, "genus": 1},
    {"name": "y^2=x^3-x / F3", "q": 3, "affine": "y^2-x^3+x", "inf_correction": 1, "genus": 1},
    {"name": "y^2=x^3-x+1 / F3", "q": 3, "affine": "y^2-x^3+x-1", "inf_correction": 1, "genus": 1},
    {"name": "y^2+y=x^5 / F2", "q": 2, "affine": "y^2+y+x^5", "inf_correction": 1, "genus": 2},
    {"name": "y^2+y=x^5+x^3 / F2", "q": 2, "affine": "y^2+y+x^5+x^3", "inf_correction": 1, "genus": 2},
    {"name": "y^2=x^5-x+1 / F3", "q": 3, "affine": "y^2-x^5+x-1", "inf_correction": 1, "genus": 2},
)


@dataclass(frozen=True)
class LPolynomial:
    q: int
    coeffs: tuple

    def __post_init__(self):
        cs = tuple(int(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", cs)
        if not cs or cs[0] != 1:
            raise DomainError(f"L-polynomial must start with 1, got {list(cs)}", list(cs))
        if len(cs) % 2 != 1:
            raise DomainError(f"L-polynomial must have even degree 2g, got {list(cs)}", list(cs))
        g = self.genus
        for i in range(g + 1):
            if cs[2 * g - i] != self.q ** (g - i) * cs[i]:
                raise DomainError(
                    f"functional equation fails at a_{2 * g - i}: {cs[2 * g - i]} != {self.q}^{g - i}*{cs[i]}",
                    list(cs),
                )
        if self(1) <= 0:
            raise DomainError(f"L(1) = {self(1)} is not positive", list(cs))

    @property
    def genus(self):
        return (len(self.coeffs) - 1) // 2

    @property
    def p(self):
        return prime_power(self.q)[0]

    def __call__(self, u):
        r = 0
        for c in reversed(self.coeffs):
            r = r * u + c
        return r

    def reversed_monic(self):
        """``u^(2g) L(1/u)``, the monic polynomial whose roots are the inverse roots of ``L``."""
        return list(reversed(self.coeffs))

    def point_counts(self, k_max):
        """``N_1..N_k_max`` predicted by ``L`` (Newton power sums of the inverse roots)."""
        a = self.coeffs
        s = []
        for k in range(1, k_max + 1):
            # k a_k + sum_{i=1}^{k} s_i a_{k-i} = 0 with s_i the power sums
            acc = -k * (a[k] if k < len(a) else 0)
            for i in range(1, k):
                acc -= s[i - 1] * (a[k - i] if k - i < len(a) else 0)
            s.append(acc)
        return [self.q ** k + 1 - s[k - 1] for k in range(1, k_max + 1)]


def l_from_point_counts(q, counts):
    """Rebuild ``L`` of a genus-``g`` curve from ``N_1..N_g``."""
    counts = [int(c) for c in counts]
    if not counts or any(c < 0 for c in counts):
        raise InvalidCountsError(f"need g >= 1 nonnegative point counts, got {counts}", counts)
    prime_power(q)
    g = len(counts)
    s = [q ** k + 1 - n for k, n in enumerate(counts, start=1)]
    a = [1]
    for k in range(1, g + 1):
        acc = -sum(s[i - 1] * a[k - i] for i in range(1, k + 1))
        if acc % k:
            raise InvalidCountsError(f"point counts {counts} give a non-integral coefficient a_{k}", counts)
        a.append(acc // k)
    for i in range(g - 1, -1, -1):
        a.append(q ** (g - i) * a[i])
    try:
        return LPolynomial(q, tuple(a))
    except DomainError as exc:
        raise InvalidCountsError(f"point counts {counts}: {exc}", counts) from exc


def parse_plane_curve(text, field):
    """``{(i, j): raw coefficient}`` for ``f(x, y)`` over ``field`` (``u`` = generator)."""
    terms = parse_multivariate(text, ("x", "y", "u"))
    grouped = {}
    for (i, j, e), c in terms.items():
        row = grouped.setdefault((i, j), [])
        row.extend([0] * (e + 1 - len(row)))
        row[e] += c
    out = {}
    for key, row in grouped.items():
        v = field.from_coeffs(row)
        if v:
            out[key] = v
    return out


def count_plane_curve(q, f, infinity_correction, k):
    """Affine zeros of ``f(x, y)`` over ``F_{q^k}`` plus the declared points at infinity."""
    p, s = prime_power(q)
    if k < 1:
        raise DomainError(f"extension level k must be positive, got {k}", k)
    if q ** (2 * k) > COUNT_GUARD:
        raise SizeError(f"q^(2k) = {q ** (2 * k)} exceeds the enumeration guard 2^26", {"q": q, "k": k})
    K = GF(p, s)
    L = GF(p, s * k)
    terms = parse_plane_curve(f, K) if isinstance(f, str) else dict(f)
    emb = embedding(K, L)
    terms = {key: emb.raw(v) for key, v in terms.items()}
    add, mul, pw = L.add, L.mul, L.pow
    degy = max((j for _, j in terms), default=0)
    ys = range(L.order)
    ypows = [[pw(y, j) for y in ys] for j in range(degy + 1)]
    count = 0
    for x in range(L.order):
        cy = [0] * (degy + 1)
        for (i, j), c in terms.items():
            cy[j] = add(cy[j], mul(c, pw(x, i)))
        nz = [(j, c) for j, c in enumerate(cy) if c]
        if not nz:
            count += L.order
            continue
        for y in ys:
            acc = 0
            for j, c in nz:
                acc = add(acc, mul(c, ypows[j][y]))
            if acc == 0:
                count += 1
    return count + infinity_correction


def l_from_curve(q, affine, inf_correction, genus):
    counts = [count_plane_curve(q, affine, inf_correction, k) for k in range(1, genus + 1)]
    return l_from_point_counts(q, counts)


@dataclass(frozen=True)
class ClassLevel:
    n: int
    h: int
    e: int


@dataclass(frozen=True)
class ClassTower:
    L: LPolynomial
    p: int
    levels: tuple

    @property
    def h(self):
        return tuple(lv.h for lv in self.levels)

    @property
    def e(self):
        return tuple(lv.e for lv in self.levels)


def class_number_det(L, N):
    M = L.reversed_monic()
    if len(M) == 1:
        return 1
    C = companion(M)
    CN = mat_pow_int(C, N)
    n = len(C)
    return abs(det_int([[int(i == j) - CN[i][j] for j in range(n)] for i in range(n)]))


def class_number_res(L, N):
    M = L.reversed_monic()
    return abs(resultant_int(M, [-1] + [0] * (N - 1) + [1]))


def class_tower(L, p, n_max):
    """Class numbers ``h_n`` over ``F_{q^(p^n)}`` and ``e_n = v_p(h_n)`` for n = 0..n_max."""
    if p != L.p:
        raise DomainError(f"p = {p} is not the characteristic of F_{L.q}", p)
    if n_max < 0:
        raise DomainError(f"n_max must be nonnegative, got {n_max}", n_max)
    levels = []
    for n in range(n_max + 1):
        N = p ** n
        h1 = class_number_det(L, N)
        h2 = class_number_res(L, N)
        if h1 != h2:
            raise ConsistencyError(f"class number at level {n}: determinant {h1} != resultant {h2}", n)
        if h1 <= 0:
            raise ConsistencyError(f"class number at level {n} is {h1}", n)
        levels.append(ClassLevel(n, h1, valuation(h1, p)))
    return ClassTower(L, p, tuple(levels))


@dataclass(frozen=True)
class SClassBound:
    """Upper bounds for the p-exponents of the S-class groups along the tower."""

    values: tuple
    kind: str = "upper bound"


def s_class_upper_bound(tower):
    """The full class-group exponents bound the S-class exponents from above."""
    return SClassBound(tower.e)
