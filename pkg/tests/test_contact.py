import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from arcvol.contact import (
    ArcSetModel,
    bp_ideal,
    bp_ideal_set,
    build_contact,
    check_inclusion_exclusion,
    intersection,
    jet_codim_contact,
    jet_codim_witness,
    minimal_weights,
    ord_contact,
    powers_in_contact_ideals,
    union,
    verify_lct_jets,
    verify_vol_codim,
    verify_vol_cont,
    volume_contact,
    volume_set,
)
from arcvol.monomial import MonomialIdeal, power
from arcvol.newton import build, integral_closure_power, lct, multiplicity
from strategies import any_ideals, primary_ideals

A = MonomialIdeal(2, ((2, 0), (0, 3)))
M2 = MonomialIdeal.maximal(2)


def test_effective_ray_examples():
    assert build_contact(M2, 1).effective_rays == ((1, 1),)
    assert build_contact(A, 6).effective_rays == ((3, 2),)
    assert build_contact(A, 1).effective_rays == ((1, 1),)


def test_order_examples():
    assert ord_contact(build_contact(M2, 1), (1, 0)) == 1
    assert ord_contact(build_contact(A, 6), (1, 1)) == 5
    assert ord_contact(build_contact(A, 6), (0, 0)) == 0


def test_bp_examples():
    assert bp_ideal(build_contact(M2, 1), 3) == power(M2, 3)
    c = build_contact(A, 6)
    assert bp_ideal(c, 6).gens == ((0, 3), (1, 2), (2, 0))
    assert bp_ideal(c, 12) == integral_closure_power(A, 2)


def test_volume_examples():
    assert volume_contact(build_contact(M2, 1)) == 1
    assert volume_contact(build_contact(A, 6)) == Fraction(1, 6)
    assert volume_contact(build_contact(A, 1)) == 1
    assert volume_contact(build_contact(MonomialIdeal(2, ((2, 0),)), 1)) == math.inf


def test_jet_codim_examples():
    assert jet_codim_contact(M2, 1) == 2
    assert jet_codim_witness(A, 6) == (5, (3, 2))
    assert jet_codim_contact(A, 1) == 2


def test_vol_codim_examples():
    assert verify_vol_codim(M2, 1).lhs == 4
    chk = verify_vol_codim(A, 6)
    assert (chk.lhs, chk.rhs, chk.ok) == (Fraction(25, 6), 4, True)
    assert verify_vol_codim(A, 1).lhs == 4


def test_vol_cont_fixture():
    rep = verify_vol_cont(A, 12, 3)
    assert rep.ok
    assert rep.equality_orders == [6, 12]
    row = next(r for r in rep.rows if r.m == 1 and r.p == 1)
    assert (row.lower, rep.multiplicity) == (1, 6)


def test_maximal_ideal_equality_everywhere():
    rep = verify_vol_cont(M2, 6, 2)
    assert rep.equality_orders == list(range(1, 7))
    assert all(r.equality for r in verify_lct_jets(M2, 10))


def test_one_variable_fixture():
    a = MonomialIdeal(1, ((3,),))
    c = build_contact(a, 3)
    assert c.effective_rays == ((1,),)
    assert volume_contact(c) == 1
    assert verify_vol_cont(a, 6, 2).equality_orders == [3, 6]


def test_lct_jets_fixture():
    rows = verify_lct_jets(A, 30)
    assert all(r.ok for r in rows)
    assert [r.m for r in rows if r.equality] == [6, 12, 18, 24, 30]


def test_inclusion_exclusion_coordinate_fixture():
    C1 = build_contact(MonomialIdeal(2, ((2, 0),)), 1)
    C2 = build_contact(MonomialIdeal(2, ((0, 2),)), 1)
    chk = check_inclusion_exclusion(C1, C2, 12)
    assert chk.ok
    assert chk.volumes[3] == 1
    assert bp_ideal_set(intersection(C1, C2), 2) == power(M2, 2)
    assert bp_ideal_set(union(C1, C2), 2).gens == ((2, 2),)


def test_union_is_idempotent():
    c = build_contact(A, 4)
    u = union(c, c)
    for p in range(1, 6):
        assert bp_ideal_set(u, p) == bp_ideal(c, p)
    assert volume_set(u) == volume_contact(c)


@given(any_ideals(2, max_degree=3), st.integers(1, 5))
def test_capped_weights_match_uncapped_box(a, m):
    c = build_contact(a, m)
    assert list(c.effective_rays) == oracles.weight_set(a.gens, m, 2, 2 * m)
    for u in oracles.box([3, 3]):
        admissible = [w for w in oracles.box([2 * m] * 2) if c.admits(w)]
        assert ord_contact(c, u) == oracles.ord_min(admissible, u)


@given(primary_ideals(dims=(3,), max_degree=3), st.integers(1, 3))
def test_capped_weights_match_uncapped_box_3d(a, m):
    assert list(build_contact(a, m).effective_rays) == oracles.weight_set(a.gens, m, 3, 2 * m)


@given(primary_ideals(dims=(2, 3), max_degree=5), st.integers(1, 8))
def test_hull_rays_give_same_orders(a, m):
    c = build_contact(a, m)
    assert set(c.hull_rays) <= set(c.effective_rays)
    for u in oracles.box([3] * a.dim):
        assert ord_contact(c, u) == oracles.ord_min(c.effective_rays, u)


@given(primary_ideals(dims=(2, 3), max_degree=5), st.integers(1, 6), st.integers(1, 3))
def test_contact_loci_shrink(a, m, k):
    small, big = build_contact(a, m + k), build_contact(a, m)
    assert all(big.admits(w) for w in small.effective_rays)
    assert volume_contact(small) <= volume_contact(big) <= 1


@given(primary_ideals(dims=(1, 2, 3), max_degree=5))
def test_divisible_order_volume_is_normalized_multiplicity(a):
    L = build(a).offsets_lcm()
    for m in (L, 2 * L):
        assert volume_contact(build_contact(a, m)) * m**a.dim == multiplicity(a)
        assert jet_codim_contact(a, m) == m * lct(a)


@given(primary_ideals(dims=(2, 3), max_degree=5), st.integers(1, 10))
def test_codim_at_least_m_lct(a, m):
    assert jet_codim_contact(a, m) >= m * lct(a)
    assert verify_vol_codim(a, m).ok


@given(primary_ideals(dims=(2, 3), max_degree=4), st.integers(1, 4))
def test_powers_land_in_contact_ideals(a, m):
    assert powers_in_contact_ideals(a, m, 3)


@given(primary_ideals(dims=(2,), max_degree=5), primary_ideals(dims=(2,), max_degree=5), st.integers(1, 4), st.integers(1, 4))
def test_inclusion_exclusion_random(a, b, m, k):
    assert check_inclusion_exclusion(build_contact(a, m), build_contact(b, k), 6).ok


def test_arc_set_model_dimension_checks():
    with pytest.raises(ValueError):
        union(build_contact(A, 1), build_contact(MonomialIdeal.maximal(3), 1))
    assert ArcSetModel.leaf(build_contact(A, 2)).effective_rays == build_contact(A, 2).effective_rays


def test_minimal_weights_intersection():
    pts = minimal_weights([(((1, 0),), 2), (((0, 1),), 3)], 2)
    assert pts == [(2, 3)]
