import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from arcvol.errors import DimensionMismatch, NotPrimary, ParseError
from arcvol.monomial import (
    MonomialIdeal,
    colength,
    contains,
    format_ideal,
    ideal_sum,
    intersect,
    is_subideal,
    minimalize,
    parse_ideal,
    power,
    product,
    pure_power_degrees,
    standard_monomials,
)
from strategies import any_ideals, ideal_pairs, primary_ideals

A = MonomialIdeal(2, ((2, 0), (0, 3)))


def test_fixture_colength():
    assert colength(A) == 6
    assert colength(MonomialIdeal(2, ((2, 0), (1, 1), (0, 2)))) == 3
    assert sorted(standard_monomials(A)) == [(i, j) for i in range(2) for j in range(3)]


def test_minimalize_drops_multiples():
    a = minimalize([(2, 0), (3, 1), (0, 3), (2, 5)], 2)
    assert a.gens == ((0, 3), (2, 0))


def test_unit_and_zero_conventions():
    assert colength(MonomialIdeal.unit(3)) == 0
    with pytest.raises(NotPrimary):
        colength(MonomialIdeal.zero(2))
    with pytest.raises(NotPrimary):
        colength(MonomialIdeal(2, ((2, 0),)))
    assert MonomialIdeal(2, ((0, 0), (3, 1))).is_unit


def test_one_variable():
    assert colength(MonomialIdeal(1, ((5,),))) == 5
    assert power(MonomialIdeal(1, ((3,),)), 4).gens == ((12,),)


def test_power_example():
    assert power(A, 2).gens == ((0, 6), (2, 3), (4, 0))
    assert power(A, 0).is_unit


def test_str_and_roundtrip():
    assert str(A) == "(y^3, x^2)"
    assert parse_ideal(format_ideal(A)) == A


def test_parse_errors_cite_lines():
    with pytest.raises(ParseError, match="line 3"):
        parse_ideal("# comment\n2\n2 -1\n")
    with pytest.raises(ParseError, match="line 2"):
        parse_ideal("2\n1 2 3\n")
    with pytest.raises(ParseError, match="line 1"):
        parse_ideal("7\n", max_dim=4)
    with pytest.raises(ParseError):
        parse_ideal("\n\n")


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        ideal_sum(A, MonomialIdeal.maximal(3))
    with pytest.raises(DimensionMismatch):
        contains(A, (1, 1, 1))


@given(primary_ideals())
def test_colength_matches_enumeration(a):
    assert colength(a) == oracles.colength(a.gens, pure_power_degrees(a))
    assert len(standard_monomials(a)) == colength(a)


@given(primary_ideals(max_extra=4))
def test_minimalize_is_idempotent(a):
    assert MonomialIdeal(a.dim, a.gens) == a
    assert list(a.gens) == oracles.minimal(a.gens)


@given(ideal_pairs(max_degree=4))
def test_product_against_pairwise_sums(pair):
    a, b = pair
    assert list(product(a, b).gens) == oracles.product_gens(a.gens, b.gens)


@given(primary_ideals(dims=(2, 3), max_degree=3), st.integers(1, 3))
def test_power_against_repeated_products(a, k):
    assert list(power(a, k).gens) == oracles.power_gens(a.gens, k, a.dim)


@given(ideal_pairs())
def test_length_identity(pair):
    a, b = pair
    assert colength(ideal_sum(a, b)) + colength(intersect(a, b)) == colength(a) + colength(b)


@given(ideal_pairs(dims=(2, 3), max_degree=3))
def test_product_intersect_sum_chain(pair):
    a, b = pair
    p, i, s = product(a, b), intersect(a, b), ideal_sum(a, b)
    top = [2 * max(g[k] for g in a.gens + b.gens) for k in range(a.dim)]
    for u in itertools.product(*(range(t + 1) for t in top)):
        in_p, in_i, in_s = contains(p, u), contains(i, u), contains(s, u)
        assert in_p <= in_i <= in_s
        assert in_i == (oracles.member(a.gens, u) and oracles.member(b.gens, u))
        assert in_s == (oracles.member(a.gens, u) or oracles.member(b.gens, u))


@given(ideal_pairs())
def test_inclusion_reverses_colength(pair):
    a, b = pair
    small = intersect(a, b)
    assert is_subideal(small, a) and small <= b
    assert colength(small) >= max(colength(a), colength(b))


@given(primary_ideals(dims=(2, 3), max_degree=4), st.integers(1, 4))
def test_colength_of_powers_is_subexponential(a, p):
    assert colength(a) * p**a.dim >= colength(power(a, p))


@given(any_ideals(3))
def test_primary_detection(a):
    d = pure_power_degrees(a)
    expected = all(any(g[i] > 0 and sum(g) == g[i] for g in a.gens) for i in range(3))
    assert (d is not None) == expected
