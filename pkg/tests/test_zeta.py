import random

import pytest

from ffiwa.errors import DomainError, InvalidCountsError, SizeError
from ffiwa.iwasawa import fit_invariants
from ffiwa.zeta import (
    EXAMPLE_CURVES,
    LPolynomial,
    class_number_det,
    class_number_res,
    class_tower,
    count_plane_curve,
    l_from_curve,
    l_from_point_counts,
    s_class_upper_bound,
)

from oracles import count_affine, vp

# the corpus curves written out as {(i, j): coefficient of x^i y^j} over F_p
CURVE_TERMS = {
    "y^2+y=x^3 / F2": {(0, 2): 1, (0, 1): 1, (3, 0): 1},
    "y^2+y=x^3+x / F2": {(0, 2): 1, (0, 1): 1, (3, 0): 1, (1, 0): 1},
    "y^2+xy=x^3+1 / F2": {(0, 2): 1, (1, 1): 1, (3, 0): 1, (0, 0): 1},
    "y^2=x^3-x / F3": {(0, 2): 1, (3, 0): 2, (1, 0): 1},
    "y^2=x^3-x+1 / F3": {(0, 2): 1, (3, 0): 2, (1, 0): 1, (0, 0): 2},
    "y^2+y=x^5 / F2": {(0, 2): 1, (0, 1): 1, (5, 0): 1},
    "y^2+y=x^5+x^3 / F2": {(0, 2): 1, (0, 1): 1, (5, 0): 1, (3, 0): 1},
    "y^2=x^5-x+1 / F3": {(0, 2): 1, (5, 0): 2, (1, 0): 1, (0, 0): 2},
}


def test_lpoly_from_counts_examples():
    assert l_from_point_counts(2, [3]).coeffs == (1, 0, 2)
    assert l_from_point_counts(2, [5]).coeffs == (1, 2, 2)
    with pytest.raises(InvalidCountsError):
        l_from_point_counts(2, [-1])


def test_lpoly_validation():
    with pytest.raises(DomainError):
        LPolynomial(2, (1, 0, 3))
    with pytest.raises(DomainError):
        LPolynomial(2, (2, 0, 4))


def test_point_count_examples():
    assert count_plane_curve(2, "y^2+y+x^3", 1, 1) == 3
    assert count_plane_curve(2, "y^2+y+x^3", 1, 2) == 9
    assert count_plane_curve(2, "x^2+x+1", 0, 1) == 0
    with pytest.raises(SizeError):
        count_plane_curve(2, "y^2+y+x^3", 1, 14)


@pytest.mark.parametrize("curve", EXAMPLE_CURVES, ids=lambda c: c["name"])
def test_corpus_counts_match_oracle_and_lpoly(curve):
    q, g = curve["q"], curve["genus"]
    k_max = g + 1
    counts = [count_plane_curve(q, curve["affine"], curve["inf_correction"], k) for k in range(1, k_max + 1)]
    oracle = [count_affine(q, 1, k, CURVE_TERMS[curve["name"]]) + curve["inf_correction"] for k in range(1, k_max + 1)]
    assert counts == oracle
    L = l_from_curve(q, curve["affine"], curve["inf_correction"], g)
    assert L.point_counts(k_max) == counts
    for i in range(g + 1):
        assert L.coeffs[2 * g - i] == q ** (g - i) * L.coeffs[i]


def test_class_tower_of_the_supersingular_curve():
    L = LPolynomial(2, (1, 0, 2))
    t = class_tower(L, 2, 3)
    assert t.h == (3, 9, 9, 225) and t.e == (0, 0, 0, 0)
    # alpha^2 = -2 so h_n = |1 - alpha^(2^n)|^2 for n >= 1
    for n in range(1, 6):
        a = (-2) ** (2 ** (n - 1))
        assert class_number_det(L, 2 ** n) == (1 - a) ** 2 == class_number_res(L, 2 ** n)


def test_genus_zero_and_positivity():
    L = LPolynomial(3, (1,))
    assert class_tower(L, 3, 4).h == (1,) * 5
    for curve in EXAMPLE_CURVES:
        L = l_from_curve(curve["q"], curve["affine"], curve["inf_correction"], curve["genus"])
        t = class_tower(L, L.p, 5)
        assert all(h > 0 for h in t.h)
        assert t.h[0] == L(1)
        assert t.e == tuple(vp(h, L.p) for h in t.h)


def test_determinant_and_resultant_agree_on_random_lpolys():
    rng = random.Random(0)
    done = 0
    while done < 30:
        q = rng.choice([2, 3, 4])
        g = rng.randint(1, 3)
        low = [1] + [rng.randint(-4, 4) for _ in range(g)]
        cs = low + [q ** (g - i) * low[i] for i in range(g - 1, -1, -1)]
        try:
            L = LPolynomial(q, tuple(cs))
        except DomainError:
            continue
        for n in range(4):
            N = L.p ** n
            assert class_number_det(L, N) == class_number_res(L, N)
        done += 1


def test_class_tower_rejects_wrong_prime():
    with pytest.raises(DomainError):
        class_tower(LPolynomial(2, (1, 0, 2)), 3, 2)


def test_corpus_has_mu_zero():
    for curve in EXAMPLE_CURVES:
        L = l_from_curve(curve["q"], curve["affine"], curve["inf_correction"], curve["genus"])
        fit = fit_invariants(class_tower(L, L.p, 5).e, L.p)
        assert fit.mu == 0


def test_s_class_bound():
    t = class_tower(LPolynomial(2, (1, 0, 2)), 2, 3)
    b = s_class_upper_bound(t)
    assert b.values == (0, 0, 0, 0) and b.kind == "upper bound"
    fit = fit_invariants(b.values, 2)
    assert (fit.lam, fit.mu, fit.nu) == (0, 0, 0)
    assert s_class_upper_bound(class_tower(LPolynomial(2, (1,)), 2, 3)).values == (0, 0, 0, 0)
