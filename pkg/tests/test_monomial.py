import itertools

import pytest
from hypothesis import given, strategies as st

from absorb import CostCapExceeded, VariableCountMismatch, configured
from absorb.monomial import (
    MonomialIdeal,
    build_example_2_1,
    check_example_2_1,
    colon,
    divides,
    intersection,
    member,
    minimalize,
    monomials_up_to,
    n_absorbing_I_primary_violation,
    not_n_absorbing_violation,
    product,
    radical,
    revalidate_I_primary,
    revalidate_not_absorbing,
)
from absorb.parsing import parse_monomial_list


def M(text, m):
    return minimalize(parse_monomial_list(text, m), m)


def test_minimalize():
    assert M("t1^2, t1^2*t3, t1*t2", 3).text() == ["t1^2", "t1*t2"]
    assert M("1, t1", 2).text() == ["1"]
    assert minimalize([], 2).is_zero()


def test_membership():
    assert member((3, 1), M("t1^2", 2))
    assert not member((0, 1, 1, 0), M("t1*t2, t1*t4", 4))
    assert not member((0, 0), MonomialIdeal(2, ()))
    with pytest.raises(VariableCountMismatch):
        member((1, 1), M("t1", 3))


def test_operations():
    assert product(M("t1", 2), M("t1*t2, t1^2", 2)).text() == ["t1^3", "t1^2*t2"]
    assert colon(M("t1*t2", 2), (1, 0)).text() == ["t2"]
    assert radical(M("t1^2, t1*t2", 2)).text() == ["t1"]
    assert intersection(M("t1", 2), M("t2", 2)).text() == ["t1*t2"]


def test_monomials_up_to_counts():
    # number of monomials of degree <= d in m variables is C(m+d, d)
    assert len(monomials_up_to(4, 3)) == 35
    assert monomials_up_to(2, 1) == [(0, 0), (1, 0), (0, 1)]


_mono = st.tuples(*[st.integers(0, 3)] * 3)


@given(st.lists(_mono, min_size=1, max_size=5), st.lists(_mono, min_size=1, max_size=5), _mono)
def test_membership_is_closed_under_the_operations(gj, gk, x):
    J, K = minimalize(gj, 3), minimalize(gk, 3)
    # x is in J*K iff x is a multiple of some g*h
    in_prod = any(divides(tuple(a + b for a, b in zip(g, h)), x) for g in gj for h in gk)
    assert member(x, product(J, K)) == in_prod
    assert member(x, intersection(J, K)) == (member(x, J) and member(x, K))
    some_power = any(member(tuple(k * e for e in x), J) for k in range(1, 5))
    assert member(x, radical(J)) == some_power
    # minimal generators never divide each other
    for g, h in itertools.permutations(J.gens, 2):
        assert not divides(g, h)


def test_example_n2_generators():
    ex = build_example_2_1(2)
    assert ex.nvars == 4
    assert ex.P.text() == ["t1^2*t2", "t1^2*t4", "t1*t2*t3"]
    assert ex.I.text() == ["t1*t2"]
    assert sorted(ex.IP.text()) == sorted(["t1^2*t2^2*t3", "t1^3*t2^2", "t1^3*t2*t4"])
    assert ex.radical_P.text() == ["t1*t2", "t1*t4"]


def test_example_n1_generators():
    ex = build_example_2_1(1)
    assert ex.P.text() == ["t1^2", "t1*t2"]
    assert ex.I.text() == ["t1"]


def test_example_n1_non_prime_pair():
    ex = build_example_2_1(1)
    t1, t2 = (1, 0, 0), (0, 1, 0)
    assert not_n_absorbing_violation((t1, t2), ex.P)
    assert revalidate_not_absorbing((t1, t2), ex)


@pytest.mark.parametrize("n", [1, 2])
def test_example_scan_flags_conflict(n):
    res = check_example_2_1(n, 3)
    assert res.non_absorbing_witness is not None
    assert res.i_primary_witness is not None
    assert res.i_primary_status == "monomial-refuted"
    assert any(f.startswith("conflict") for f in res.flags)
    assert res.witnesses_revalidated
    assert revalidate_I_primary(res.i_primary_witness, res.example)
    assert n_absorbing_I_primary_violation(res.i_primary_witness, res.example.P, res.example.IP, res.example.radical_P)


def test_example_scan_witnesses_are_minimal():
    res = check_example_2_1(1, 2)
    assert res.non_absorbing_witness == ((1, 0, 0), (1, 0, 0))
    assert res.i_primary_witness == ((1, 0, 0), (0, 1, 0))


def test_degree_zero_bound_is_vacuous():
    res = check_example_2_1(1, 0)
    assert res.non_absorbing_witness is None and res.i_primary_witness is None
    assert res.i_primary_status.startswith("monomial-clean")


def test_example_cost_cap():
    with configured(cost_cap=100):
        with pytest.raises(CostCapExceeded):
            check_example_2_1(2, 3)


def test_example_report_dict():
    d = check_example_2_1(2, 3).to_dict()
    assert d["not_n_absorbing_witness"] == ["t1", "t1", "t2"]
    assert d["n_absorbing_I_primary_witness"] == ["t1", "t2", "t3"]
    assert d["witnesses_revalidated"] is True
