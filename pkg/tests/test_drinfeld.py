import random

import pytest

from ffiwa.drinfeld import (
    DrinfeldModule,
    bad_reduction_set,
    frobenius_data,
    phi_of,
    reduce,
    selmer_place_set,
    torsion_space,
)
from ffiwa.errors import DomainError, PreconditionError, ReductionError
from ffiwa.field import GF, GFq
from ffiwa.linalg import eval_poly_at_matrix
from ffiwa.poly import Poly
from ffiwa.tower import Place

from grids import random_module, random_poly, torsion_grid
from oracles import fixed_points, oracle_field, torsion_oracle


RANK2_F2 = ["T", "1", "T^2+T"]


@pytest.fixture(scope="module")
def grid():
    return torsion_grid()


def test_validation():
    with pytest.raises(DomainError):
        DrinfeldModule(2, ["T+1", "1"])
    with pytest.raises(DomainError):
        DrinfeldModule(2, ["T"])
    assert DrinfeldModule.from_config({"q": 2, "phi_T": ["T", "1"]}).rank == 1


def test_phi_of_examples():
    C = DrinfeldModule.carlitz(2)
    f = phi_of(C, "T^2")
    assert f.format() == "T^2 + (T^2+T)*t + t^2"
    one = phi_of(C, "1")
    assert one.degree == 0 and one.constant_term == Poly.const(C.field, 1)


@pytest.mark.parametrize("q", [2, 3])
def test_homomorphism_and_rank_formula(q):
    rng = random.Random(q)
    K = GFq(q)
    for trial in range(8):
        phi = DrinfeldModule.carlitz(q) if trial == 0 else random_module(q, rng)
        deg = 2 if trial == 0 else 1
        for _ in range(15):
            a, b = random_poly(K, rng, deg), random_poly(K, rng, deg)
            pa, pb = phi_of(phi, a), phi_of(phi, b)
            assert phi_of(phi, a * b) == pa * pb
            assert phi_of(phi, a + b) == pa + pb
            if a:
                assert pa.degree == phi.rank * a.degree
                assert pa.constant_term == a


def test_bad_reduction_sets():
    assert bad_reduction_set(DrinfeldModule.carlitz(2)) == frozenset()
    phi = DrinfeldModule(2, RANK2_F2)
    assert sorted(map(str, bad_reduction_set(phi))) == ["T", "T+1"]
    assert bad_reduction_set(DrinfeldModule(3, ["T", "T", "2"])) == frozenset()


def test_selmer_place_sets():
    C = DrinfeldModule.carlitz(2)
    assert sorted(map(str, selmer_place_set(C, C.place("T")))) == ["T", "inf"]
    phi = DrinfeldModule(2, RANK2_F2)
    got = sorted(map(str, selmer_place_set(phi, phi.place("T^2+T+1"))))
    assert got == ["T", "T+1", "T^2+T+1", "inf"]


def test_reduction_examples():
    C = DrinfeldModule.carlitz(2)
    red, rep = reduce(C, C.place("T+1"))
    assert rep.kind == "good" and rep.reduced_rank == 1
    F = red.constant_term.field
    for x in F.elements():
        assert red.apply(x) == x + x ** 2
    phi = DrinfeldModule(2, RANK2_F2)
    _, rep = reduce(phi, phi.place("T"))
    assert rep.kind == "bad" and rep.reduced_rank == 1


def test_good_reduction_away_from_leading_coefficient():
    rng = random.Random(11)
    for _ in range(50):
        q = rng.choice([2, 3])
        phi = random_module(q, rng, max_rank=3)
        bad = bad_reduction_set(phi)
        K = phi.field
        for f in [Poly.parse(t, K) for t in ("T", "T+1")]:
            v = Place(K, f)
            try:
                _, rep = reduce(phi, v)
            except ReductionError:
                assert v in bad
                continue
            assert (rep.kind == "good") == (v not in bad)


def test_torsion_examples():
    C2 = DrinfeldModule.carlitz(2)
    ts = torsion_space(C2, C2.place("T+1"), C2.place("T"))
    assert ts.roots() == [0, 1] and ts.rank == 1 and ts.ambient == GF(2)

    C3 = DrinfeldModule.carlitz(3)
    ts = torsion_space(C3, C3.place("T+2"), C3.place("T"))
    E = ts.ambient
    assert E == GF(3, 2)
    nonzero = [x for x in ts.roots() if x]
    assert len(nonzero) == 2 and all(E.mul(x, x) == E.neg(1) for x in nonzero)


def test_torsion_preconditions():
    C = DrinfeldModule.carlitz(3)
    with pytest.raises(PreconditionError):
        torsion_space(C, C.place("T"), C.place("T"))
    with pytest.raises(PreconditionError):
        torsion_space(C, C.place("inf"), C.place("T"))
    phi = DrinfeldModule(2, RANK2_F2)
    with pytest.raises(PreconditionError):
        torsion_space(phi, phi.place("T"), phi.place("T^2+T+1"))


def test_torsion_matches_exhaustive_roots(grid):
    for phi, pi, v, ts in grid:
        K = phi.field
        E = ts.ambient
        coeffs = [list(c.c) for c in phi.phi_T.coeffs]
        roots, _ = torsion_oracle(K.p, K.s, coeffs, list(v.poly.c), list(pi.poly.c), E.s)
        assert len(roots) == ts.cardinality == phi.q ** (phi.rank * pi.degree)


def test_scalar_action(grid):
    for phi, pi, v, ts in grid[::5]:
        K = phi.field
        F = ts.scalar_field
        for a in (Poly.x(K), Poly.parse("T^2+1", K)):
            abar = F.lift(F.reduce(a))
            for x in ts.roots()[:12]:
                assert ts.act(a, x) == ts.act(abar, x)
        for x in ts.roots()[:12]:
            assert ts.act(pi.poly, x) == 0


def test_frobenius_examples():
    C = DrinfeldModule.carlitz(3)
    fd = frobenius_data(C, C.place("T+1"), C.place("T"))
    assert fd.h0_dim == 1 and fd.matrix == ((1,),)
    fd = frobenius_data(C, C.place("T+2"), C.place("T"))
    assert fd.h0_dim == 0 and fd.matrix == ((2,),)


def test_carlitz_frobenius_is_the_place_mod_pi():
    for q in (2, 3):
        C = DrinfeldModule.carlitz(q)
        K = C.field
        pairs = [("T", "T+1"), ("T+1", "T")]
        pairs += [("T^2+T+1", "T"), ("T", "T^2+T+1")] if q == 2 else [("T^2+1", "T"), ("T", "T^2+1")]
        for pi_text, v_text in pairs:
            pi, v = C.place(pi_text), C.place(v_text)
            fd = frobenius_data(C, v, pi)
            R = fd.space.scalar_field
            assert fd.matrix == ((R.reduce(v.poly),),)


def test_frobenius_against_fixed_point_oracle(grid):
    for phi, pi, v, ts in grid:
        fd = frobenius_data(phi, v, pi, ts)
        K = phi.field
        E = oracle_field(ts.ambient.p, ts.ambient.s)
        coeffs = [list(c.c) for c in phi.phi_T.coeffs]
        roots, size = torsion_oracle(K.p, K.s, coeffs, list(v.poly.c), list(pi.poly.c), E.s)
        fixed = fixed_points(E, roots, size)
        assert len(fixed) == phi.q ** (pi.degree * fd.h0_dim)
        assert 0 <= fd.h0_dim <= phi.rank
        Fpi = ts.scalar_field.field
        zero = eval_poly_at_matrix(Fpi, fd.char_poly, [list(r) for r in fd.matrix])
        assert all(x == 0 for row in zero for x in row)
