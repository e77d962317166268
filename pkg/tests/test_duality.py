import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ffiwa.duality import (
    CofinModule,
    DualModule,
    FiniteModule,
    H0Term,
    dual,
    finiteness_check,
    lambda_bound,
    torsion_vs_quotient,
)
from ffiwa.errors import DomainError

cofin = st.builds(
    lambda r, corank, fs: CofinModule(corank, FiniteModule(r, tuple(fs))),
    st.sampled_from([2, 3, 4, 9]),
    st.integers(0, 4),
    st.lists(st.integers(1, 6), max_size=5),
)


def brute_torsion(M, n):
    """Cyclic factors of M[p^n] from the orders of the summands, one summand at a time."""
    out = []
    for e in M.finite_part.factors:
        out.append(min(e, n))
    out += [n] * M.corank
    return sorted(out)


def test_examples():
    F = FiniteModule(3, (1, 2, 3))
    assert dual(F).factors == (1, 2, 3)
    N = dual(CofinModule(2, FiniteModule(3, ())))
    assert N.free_rank == 2 and N.torsion.factors == ()
    assert torsion_vs_quotient(F, 2) == ((1, 2, 2), (1, 2, 2))
    assert torsion_vs_quotient(CofinModule(1, FiniteModule(3, ())), 3) == ((3,), (3,))


def test_finiteness_examples():
    r = finiteness_check(CofinModule(3, FiniteModule(2, ())))
    assert r.dual_lambda == r.p_torsion_dim == 3 and r.tight
    r = finiteness_check(CofinModule(1, FiniteModule(3, (2,))))
    assert (r.p_torsion_dim, r.dual_lambda) == (2, 1) and not r.tight
    assert r.equivalence_holds and r.inequality_holds


def test_validation():
    with pytest.raises(DomainError):
        FiniteModule(1, ())
    with pytest.raises(DomainError):
        FiniteModule(3, (0,))
    with pytest.raises(DomainError):
        CofinModule(-1, FiniteModule(3, ()))
    with pytest.raises(DomainError):
        CofinModule.from_config({"corank": 1})


@settings(max_examples=500, deadline=None)
@given(cofin, st.integers(1, 5))
def test_torsion_and_quotient_agree(M, n):
    left, right = torsion_vs_quotient(M, n)
    assert list(left) == list(right) == brute_torsion(M, n)


@settings(max_examples=500, deadline=None)
@given(cofin)
def test_double_dual_and_lambda_inequality(M):
    N = dual(M)
    assert isinstance(N, DualModule)
    assert dual(N) == M
    r = finiteness_check(M)
    assert r.dual_lambda <= r.p_torsion_dim
    assert r.tight == (not M.finite_part.factors)
    # the free rank of the dual ignores the finite part
    assert dual(CofinModule(M.corank, FiniteModule(M.residue_size, ()))).free_rank == N.free_rank


def test_lambda_bound_examples():
    rep = lambda_bound(0, [1, 0])
    assert rep.bound == 1 and [t.provenance for t in rep.h0_terms] == ["input", "input"]
    rep = lambda_bound(2, [H0Term("T+1", 1, "computed"), H0Term("inf", 1, "bound")], rank=1)
    assert rep.bound == 4
    with pytest.raises(DomainError):
        lambda_bound(0, [2], rank=1)
    with pytest.raises(DomainError):
        lambda_bound(-1, [])


def test_lambda_bound_monotone():
    rng = random.Random(4)
    for _ in range(200):
        sel = rng.randint(0, 5)
        h0 = [rng.randint(0, 3) for _ in range(rng.randint(0, 4))]
        base = lambda_bound(sel, h0).bound
        assert lambda_bound(sel + 1, h0).bound == base + 1
        for i in range(len(h0)):
            bumped = list(h0)
            bumped[i] += 1
            assert lambda_bound(sel, bumped).bound == base + 1
