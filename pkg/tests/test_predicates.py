import itertools

import pytest
from hypothesis import given, settings, strategies as st

import naive
from absorb import (
    CostCapExceeded,
    ImproperIdeal,
    check,
    configured,
    enumerate_ideals,
    find_I_tuple,
    ideal,
    ideal_product,
    is_I_primary,
    is_n_absorbing,
    is_n_absorbing_I_primary,
    is_n_absorbing_I_primary_colon,
    is_n_absorbing_primary,
    is_prime,
    is_primary,
    is_weakly_n_absorbing_primary,
    is_weakly_prime,
    is_weakly_primary,
    radical,
    ring,
    unit_ideal,
    zero_ideal,
)


@pytest.fixture(scope="module")
def Z12():
    return ring("Z/12")


def test_prime(Z12):
    assert is_prime(ideal(Z12, "2")).holds
    v = is_prime(ideal(Z12, "4"))
    assert not v.holds and v.witness == (2, 2)
    F = ring("Z/2[x]/(x^2+x+1)")
    assert is_prime(zero_ideal(F)).holds


def test_weakly_prime(Z12):
    assert is_weakly_prime(zero_ideal(Z12)).holds
    assert is_weakly_prime(ideal(Z12, "4")).witness == (2, 2)


def test_primary(Z12):
    assert is_primary(ideal(Z12, "4")).holds
    v = is_primary(ideal(Z12, "6"))
    assert v.witness == (2, 3)
    assert is_weakly_primary(zero_ideal(Z12)).holds
    assert is_weakly_primary(ideal(Z12, "6")).witness == (2, 3)


def test_n_absorbing():
    Z30 = ring("Z/30")
    v = is_n_absorbing(zero_ideal(Z30), 2)
    assert v.witness == (2, 3, 5)
    Z12 = ring("Z/12")
    assert is_n_absorbing(ideal(Z12, "4"), 2).holds


def test_n_absorbing_primary():
    Z30 = ring("Z/30")
    assert is_n_absorbing_primary(zero_ideal(Z30), 2).witness == (2, 3, 5)
    Z12 = ring("Z/12")
    w = is_n_absorbing_primary(zero_ideal(Z12), 2)
    assert w.witness == naive.n_absorbing_I_primary_witness(12, {0}, frozenset(), 2)


def test_primary_agrees_with_n1_absorbing_primary():
    for text in ("Z/12", "Z/16", "Z/3[x]/(x^2)", "Z/4 x Z/9"):
        R = ring(text)
        for P in enumerate_ideals(R):
            if P.is_proper():
                assert is_primary(P).holds == is_n_absorbing_primary(P, 1).holds


def test_I_primary(Z12):
    Z8 = ring("Z/8")
    assert is_I_primary(ideal(Z8, "4"), ideal(Z8, "2")).holds
    assert is_I_primary(ideal(Z12, "6"), unit_ideal(Z12)).holds
    assert is_I_primary(ideal(Z12, "6"), zero_ideal(Z12)).witness == (2, 3)


def test_n_absorbing_I_primary(Z12):
    v = is_n_absorbing_I_primary(ideal(Z12, "6"), ideal(Z12, "2"), 1)
    assert v.witness == (2, 3)
    assert v.clauses == ("b1*b2 in P", "b1*b2 not in IP", "b1 not in P", "b2 not in rad(P)")
    for n in (1, 2, 3):
        assert is_n_absorbing_I_primary(ideal(Z12, "6"), unit_ideal(Z12), n).holds


def test_colon_form(Z12):
    Z8 = ring("Z/8")
    assert is_n_absorbing_I_primary_colon(ideal(Z8, "4"), ideal(Z8, "2"), 1).holds
    assert not is_n_absorbing_I_primary_colon(ideal(Z12, "6"), ideal(Z12, "2"), 1).holds
    assert not is_n_absorbing_I_primary_colon(ideal(Z12, "6"), zero_ideal(Z12), 1).holds


def test_weakly_n_absorbing_primary(Z12):
    assert is_weakly_n_absorbing_primary(zero_ideal(Z12), 3).holds
    v = is_weakly_n_absorbing_primary(ideal(Z12, "6"), 1)
    assert v.witness == (2, 3)
    assert v.notes


def test_I_tuple():
    Z30 = ring("Z/30")
    assert find_I_tuple(zero_ideal(Z30), unit_ideal(Z30), 2) == (2, 3, 5)
    Z8 = ring("Z/8")
    # (4) is primary, so no tuple can exist
    assert find_I_tuple(ideal(Z8, "4"), ideal(Z8, "2"), 1) is None


def test_improper_P_rejected(Z12):
    with pytest.raises(ImproperIdeal):
        is_prime(unit_ideal(Z12))


def test_cost_cap():
    Z30 = ring("Z/30")
    with configured(cost_cap=1000):
        with pytest.raises(CostCapExceeded):
            is_n_absorbing(ideal(Z30, "15"), 3)
        with configured(force=True):
            assert not is_n_absorbing(zero_ideal(ring("Z/12")), 1).holds


def test_registry_dispatch(Z12):
    assert check("primary", ideal(Z12, "4")).holds
    assert check("n-absorbing-I-primary", ideal(Z12, "6"), ideal(Z12, "2"), 1).witness == (2, 3)
    with pytest.raises(ValueError):
        check("nonsense", ideal(Z12, "4"))


def test_fast_mode_witness_is_valid():
    Z30 = ring("Z/30")
    with configured(fast=True, jobs=4):
        v = is_n_absorbing_primary(zero_ideal(Z30), 2)
    assert not v.holds
    a, b, c = v.witness
    assert a * b * c % 30 == 0 and a * b % 30 != 0 and b * c % 30 != 0 and a * c % 30 != 0


@pytest.mark.parametrize("jobs", [1, 3, 8])
def test_parallel_scan_returns_minimum(jobs):
    Z30 = ring("Z/30")
    with configured(jobs=jobs):
        assert is_n_absorbing_primary(zero_ideal(Z30), 2).witness == (2, 3, 5)
        assert is_n_absorbing_I_primary(zero_ideal(Z30), unit_ideal(Z30), 2).holds


def _recheck(ring_, P, IP, w, n, symmetric):
    """Witness re-derived with scalar ring operations only."""
    rad = radical(P)
    full = ring_.prod(w)
    ok = full in P and full not in IP and ring_.prod(w[:n]) not in P
    omit = range(n + 1 if symmetric else n)
    return ok and all(ring_.prod(w[:i] + w[i + 1:]) not in rad for i in omit)


@pytest.mark.parametrize("text", ["Z/8", "Z/12", "Z/2[x]/(x^2)", "Z/3[x]/(x^2)", "Z/2 x Z/4", "Z/2[x]/(x^3)"])
@pytest.mark.parametrize("symmetric", [False, True])
def test_witnesses_recheck_and_colon_agrees(text, symmetric):
    R = ring(text)
    ideals = enumerate_ideals(R)
    for P, I, n in itertools.product([P for P in ideals if P.is_proper()], ideals, (1, 2)):
        v = is_n_absorbing_I_primary(P, I, n, symmetric)
        c = is_n_absorbing_I_primary_colon(P, I, n, symmetric)
        assert v.holds == c.holds
        if not v.holds:
            assert _recheck(R, P, ideal_product(I, P), v.witness, n, symmetric)


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 30), st.data())
def test_zn_verdicts_and_minimal_witnesses_match_naive(N, data):
    R = ring(f"Z/{N}")
    divs = naive.divisors(N)
    p = data.draw(st.sampled_from([d for d in divs if d != 1]))
    i = data.draw(st.sampled_from(divs))
    n = data.draw(st.integers(1, 2))
    symmetric = data.draw(st.booleans())
    P, I = ideal(R, str(p)), ideal(R, str(i % N))
    A = naive.ideal(N, p)
    IP = naive.product_ideal(N, naive.ideal(N, i), A)
    want = naive.n_absorbing_I_primary_witness(N, A, IP, n, symmetric)
    got = is_n_absorbing_I_primary(P, I, n, symmetric)
    assert got.witness == want
    assert got.holds == (want is None)
    assert is_n_absorbing(P, n).witness == naive.n_absorbing_witness(N, A, n)
    assert is_prime(P).witness == naive.prime_witness(N, A)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 36), st.data())
def test_implications(N, data):
    R = ring(f"Z/{N}")
    ideals = enumerate_ideals(R)
    P = data.draw(st.sampled_from([P for P in ideals if P.is_proper()]))
    I = data.draw(st.sampled_from(ideals))
    n = data.draw(st.integers(1, 2))
    if is_prime(P).holds:
        assert is_primary(P).holds and is_n_absorbing(P, n).holds
    if is_primary(P).holds:
        assert is_n_absorbing_primary(P, n).holds
    if is_n_absorbing_primary(P, n).holds:
        assert is_n_absorbing_I_primary(P, I, n).holds
        assert find_I_tuple(P, I, n) is None
    # a larger n only weakens the condition
    if is_n_absorbing_I_primary(P, I, n).holds:
        assert is_n_absorbing_I_primary(P, I, n + 1).holds
