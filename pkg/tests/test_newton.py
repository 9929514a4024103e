import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from arcvol.errors import NotPrimary, UnitIdeal, ZeroIdeal
from arcvol.monomial import MonomialIdeal, colength, is_subideal, power, product, pure_power_degrees
from arcvol.newton import (
    build,
    in_scaled_polyhedron,
    integral_closure_power,
    lct,
    multiplicity,
    newton_covolume,
    radical_valuation,
)
from arcvol.psval import evaluate, volume_exact
from strategies import primary_ideals

A = MonomialIdeal(2, ((2, 0), (0, 3)))
M2 = MonomialIdeal.maximal(2)


def test_fixture_invariants():
    P = build(A)
    assert [(f.normal, f.offset) for f in P.facets] == [((3, 2), 6)]
    assert newton_covolume(A) == 3
    assert multiplicity(A) == 6
    assert lct(A) == Fraction(5, 6)
    assert P.offsets_lcm() == 6


def test_maximal_ideal():
    assert multiplicity(M2) == 1
    assert lct(M2) == 2
    assert multiplicity(MonomialIdeal.maximal(3)) == 1


def test_lct_conventions():
    assert lct(MonomialIdeal.zero(2)) == 0
    assert lct(MonomialIdeal.unit(2)) == math.inf
    with pytest.raises(ZeroIdeal):
        build(MonomialIdeal.zero(2))
    with pytest.raises(UnitIdeal):
        build(MonomialIdeal.unit(2))
    assert lct(MonomialIdeal(2, ((2, 0),))) == Fraction(1, 2)


def test_non_primary_has_no_multiplicity():
    with pytest.raises(NotPrimary):
        multiplicity(MonomialIdeal(2, ((1, 1),)))
    with pytest.raises(NotPrimary):
        integral_closure_power(MonomialIdeal(2, ((1, 1),)), 1)


def test_closure_example():
    assert integral_closure_power(A, 1).gens == ((0, 3), (1, 2), (2, 0))
    assert integral_closure_power(M2, 3) == power(M2, 3)


def test_radical_valuation_example():
    v = radical_valuation(A)
    assert [(r.w, r.scale) for r in v.rays] == [((3, 2), Fraction(1, 6))]
    assert evaluate(v, (1, 2)) == Fraction(7, 6)


def test_three_dimensional_example():
    a = MonomialIdeal(3, ((2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 1)))
    assert multiplicity(a) == 8
    b = MonomialIdeal(3, ((3, 0, 0), (0, 5, 0), (0, 0, 2)))
    assert multiplicity(b) == 30
    assert lct(b) == Fraction(1, 3) + Fraction(1, 5) + Fraction(1, 2)


@given(primary_ideals())
def test_multiplicity_against_scipy(a):
    P = build(a)
    hs = [(f.normal, f.offset) for f in P.facets]
    if a.dim == 1:
        assert multiplicity(a) == a.gens[0][0]
        return
    approx = math.factorial(a.dim) * oracles.covolume_float(hs, a.dim)
    assert multiplicity(a) == pytest.approx(approx, rel=1e-7)


@given(primary_ideals(dims=(2, 3)))
def test_lct_against_linear_program(a):
    assert float(lct(a)) == pytest.approx(oracles.lct_lp(a.gens, a.dim), rel=1e-7)


@given(primary_ideals())
def test_facets_are_valid_and_tight(a):
    P = build(a)
    for f in P.facets:
        vals = [f.value(g) for g in a.gens]
        assert min(vals) == f.offset
        assert math.gcd(*f.normal) == 1 and all(x >= 0 for x in f.normal)
    for v in P.vertices:
        assert tuple(int(x) for x in v) in a.gens


@given(primary_ideals(dims=(2, 3), max_degree=4), st.integers(1, 3))
def test_multiplicity_of_powers(a, k):
    assert multiplicity(power(a, k)) == k**a.dim * multiplicity(a)


@given(primary_ideals(dims=(2, 3), max_degree=4), st.integers(1, 3))
def test_lct_of_powers(a, k):
    assert lct(power(a, k)) == lct(a) / k


@given(primary_ideals(max_degree=5))
def test_closure_has_same_multiplicity(a):
    assert multiplicity(integral_closure_power(a, 1)) == multiplicity(a)


@given(primary_ideals(dims=(2,), max_degree=4), st.integers(1, 2))
def test_closure_against_linear_programs(a, m):
    expected = oracles.closure_power_gens(a.gens, m, pure_power_degrees(a))
    assert list(integral_closure_power(a, m).gens) == expected


@given(primary_ideals(dims=(2, 3), max_degree=4), st.integers(1, 3), st.integers(1, 3))
def test_closure_powers_are_graded(a, m, k):
    cm, ck = integral_closure_power(a, m), integral_closure_power(a, k)
    P = build(a)
    assert all(in_scaled_polyhedron(P, g, m) for g in cm.gens)
    assert is_subideal(power(a, m), cm)
    assert is_subideal(product(cm, ck), integral_closure_power(a, m + k))


@given(primary_ideals())
def test_radical_valuation_volume_is_multiplicity(a):
    assert volume_exact(radical_valuation(a)) == multiplicity(a)


@given(primary_ideals(dims=(2, 3)))
def test_lct_bounds(a):
    n = a.dim
    assert multiplicity(a) * lct(a) ** n >= n**n
    assert math.factorial(n) * colength(a) * lct(a) ** n >= n**n
