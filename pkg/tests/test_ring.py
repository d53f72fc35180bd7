import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from absorb import (
    NonMonicPoly,
    NonPrimeModulus,
    PolyQuot,
    Product,
    SizeCapExceeded,
    Zn,
    axiom_violations,
    build_ring,
    configured,
    ideal,
    quotient_ring,
    ring,
    zero_ideal,
)
from absorb.errors import ImproperIdeal
from absorb.ideal import unit_ideal
from absorb.parsing import parse_element
from absorb.verify import DEFAULT_BATTERY


def test_zn_elements_are_residues():
    R = build_ring(Zn(12))
    assert R.size == 12
    assert R.add(7, 8) == 3
    assert R.mul(4, 3) == 0
    assert R.neg(5) == 7


def test_poly_quotient_nilpotent():
    R = build_ring(PolyQuot(2, (0, 0, 1)))
    assert R.size == 4
    assert [R.render(i) for i in range(4)] == ["0", "1", "x", "x+1"]
    x = parse_element(R, "x")
    assert R.mul(x, x) == 0
    assert R.mul(x, parse_element(R, "x+1")) == x


def test_poly_quotient_field():
    R = ring("Z/2[x]/(x^2+x+1)")
    # every nonzero element is a unit of GF(4)
    assert R.units() == [1, 2, 3]


def test_product_matches_crt():
    R = build_ring(Product((Zn(2), Zn(3))))
    S = ring("Z/6")
    # pair (a mod 2, b mod 3) with the residue having those reductions
    iso = {R.compose([k % 2, k % 3]): k for k in range(6)}
    for a, b in itertools.product(range(6), repeat=2):
        assert iso[R.add(a, b)] == S.add(iso[a], iso[b])
        assert iso[R.mul(a, b)] == S.mul(iso[a], iso[b])


def test_product_indexing_first_factor_most_significant():
    R = ring("Z/4 x Z/9")
    assert R.compose([1, 2]) == 11
    assert list(R.decompose(11)) == [1, 2]
    assert R.render(7) == "(0,7)"


@pytest.mark.parametrize("text", DEFAULT_BATTERY)
def test_battery_axioms(text):
    R = ring(text)
    assert all(v == 0 for v in axiom_violations(R).values())


def test_axioms_also_hold_without_tables():
    R = ring("Z/6 x Z/5")
    with configured(table_cap=0):
        R2 = build_ring(R.spec, cache=False)
        assert not R2.tabulated
        assert all(v == 0 for v in axiom_violations(R2).values())


def test_broadcast_matches_scalar():
    R = ring("Z/3[x]/(x^2)")
    a = np.arange(R.size)
    table = R.mul(a[:, None], a[None, :])
    for i, j in itertools.product(range(R.size), repeat=2):
        assert table[i, j] == R.mul(i, j)


def test_is_unit():
    R = ring("Z/12")
    assert R.is_unit(5)
    assert not R.is_unit(4)
    for t in DEFAULT_BATTERY:
        S = ring(t)
        assert S.is_unit(S.one)
    assert R.units() == [1, 5, 7, 11]


def test_non_prime_modulus_rejected():
    with pytest.raises(NonPrimeModulus):
        build_ring(PolyQuot(4, (0, 0, 1)))


def test_non_monic_rejected():
    with pytest.raises(NonMonicPoly):
        ring("Z/3[x]/(2x^2+1)")


def test_size_cap(monkeypatch):
    with configured(size_cap=10):
        with pytest.raises(SizeCapExceeded):
            ring("Z/11")


def test_quotient_by_six():
    R = ring("Z/12")
    q, proj = quotient_ring(R, ideal(R, "6"))
    assert q.size == 6
    for a, b in itertools.product(range(12), repeat=2):
        assert proj[R.add(a, b)] == q.add(proj[a], proj[b])
        assert proj[R.mul(a, b)] == q.mul(proj[a], proj[b])


def test_quotient_by_two_is_field_of_two():
    R = ring("Z/12")
    q, _ = quotient_ring(R, ideal(R, "2"))
    assert q.size == 2
    assert q.units() == [1]


def test_trivial_quotient_is_identity():
    R = ring("Z/4 x Z/9")
    q, proj = quotient_ring(R, zero_ideal(R))
    assert q.size == R.size
    assert list(proj) == list(range(R.size))


def test_quotient_by_whole_ring_rejected():
    R = ring("Z/8")
    with pytest.raises(ImproperIdeal):
        quotient_ring(R, unit_ideal(R))


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 40), st.integers(0, 200), st.integers(0, 200), st.integers(0, 200))
def test_zn_matches_python_modular_arithmetic(N, a, b, c):
    R = ring(f"Z/{N}")
    a, b, c = a % N, b % N, c % N
    assert R.add(a, b) == (a + b) % N
    assert R.mul(R.mul(a, b), c) == a * b * c % N
    assert R.is_unit(a) == (math.gcd(a, N) == 1)
