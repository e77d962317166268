import random
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ffiwa.errors import DomainError
from ffiwa.field import GF, GFq
from ffiwa.poly import Poly, irreducibles
from ffiwa.tower import (
    Place,
    delta_sequence,
    residue_field,
    split_by_factoring,
    splitting_in_level,
    totally_inert_level,
)

from oracles import factor_by_trial_division, oracle_field


def place(text, q=2):
    return Place.parse(text, GFq(q))


def test_place_parsing_and_validation():
    assert place("inf").is_infinite and place("inf").degree == 1
    assert place("T^2+T+1").degree == 2
    with pytest.raises(DomainError):
        place("T^2+1")  # (T+1)^2 over F_2
    assert str(place("2*T+1", 3)) == "T+2"  # same ideal, monic generator
    with pytest.raises(DomainError):
        Place(GF(3), Poly(GF(3), [1, 2]))


def test_residue_field_reduction_is_a_ring_map():
    v = place("T^3+T+1")
    R = residue_field(v)
    K = GF(2)
    rng = random.Random(0)
    for _ in range(50):
        a = Poly.raw(K, tuple(rng.randrange(2) for _ in range(6)))
        b = Poly.raw(K, tuple(rng.randrange(2) for _ in range(6)))
        assert R.reduce(a * b) == R.field.mul(R.reduce(a), R.reduce(b))
        assert R.reduce(R.lift(R.reduce(a))) == R.reduce(a)
    assert R.reduce(v.poly) == 0


def test_splitting_examples():
    v6 = Place(GF(2), Poly.parse("T^6+T^3+1", GF(2)))
    s = splitting_in_level(v6, 1)
    assert (s.count, s.degree) == (2, 3)
    b = split_by_factoring(v6, 1)
    assert (b.count, b.degree) == (2, 3)
    for n in range(5):
        s = splitting_in_level(place("T+1"), n)
        assert (s.count, s.degree) == (1, 1)


def test_formula_matches_trial_division_on_small_fields():
    # F_{q^(p^n)} small enough for the trial-division oracle
    for q, n, d in [(2, 1, 4), (2, 1, 6), (2, 2, 4), (3, 1, 3), (3, 1, 4), (2, 1, 3)]:
        K = GFq(q)
        O = oracle_field(K.p, K.s * K.p ** n)
        for f in irreducibles(K, d)[:4]:
            v = Place(K, f)
            cs = [O.embed(c, K.s) for c in f.c]
            facs = factor_by_trial_division(O, cs)
            s = splitting_in_level(v, n)
            assert len(facs) == s.count and {len(g) - 1 for g, _ in facs} == {s.degree}


def test_count_times_degree_is_place_degree():
    for d in range(1, 13):
        for n in range(4):
            for p in (2, 3):
                c = gcd(d, p ** n)
                assert c * (d // c) == d


def test_delta_examples():
    ds = delta_sequence([place("inf"), place("T")], 4)
    assert ds.values == (1,) * 5 and ds.stabilization_index == 0
    S = [place("T^4+T+1"), place("T^6+T^3+1")]
    ds = delta_sequence(S, 4)
    assert ds.values == (2, 1, 1, 1, 1) and ds.stabilization_index == 1 and ds.stable_value == 1


def test_inert_level_examples():
    assert totally_inert_level([place("T"), place("T^3+T+1")]) == 0
    assert totally_inert_level([place("T^4+T+1")]) == 2
    with pytest.raises(DomainError):
        totally_inert_level([])


@st.composite
def place_sets(draw):
    q = draw(st.sampled_from([2, 3]))
    K = GFq(q)
    degs = draw(st.lists(st.integers(1, 8 if q == 2 else 6), min_size=1, max_size=4))
    rng = random.Random(draw(st.integers(0, 10 ** 6)))
    out = []
    for d in degs:
        while True:
            f = Poly.raw(K, tuple(rng.randrange(q) for _ in range(d)) + (1,))
            try:
                out.append(Place(K, f))
                break
            except DomainError:
                continue
    return out


@settings(max_examples=100, deadline=None)
@given(place_sets())
def test_delta_monotone_and_stable_value_prime_to_p(S):
    ds = delta_sequence(S, 4)
    assert all(a >= b for a, b in zip(ds.values, ds.values[1:]))
    p = S[0].p
    n = totally_inert_level(S)
    assert n <= 4 and ds.values[-1] % p != 0
    for v in S:
        counts = [splitting_in_level(v, m).count for m in range(n, n + 4)]
        assert len(set(counts)) == 1
