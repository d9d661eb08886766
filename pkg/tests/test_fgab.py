import random

import pytest
from hypothesis import given, strategies as st

from foldcusp.fgab import (
    TRIVIAL, Z, FGAbGroup, HomologyProfile, cyclic, direct_sum, ext_z2, hom_z2, invariant_factors,
    low_homology_condition, normalize, omega6_of_target, product_profile, sphere_profile, tensor,
    tensor_z2, tor, tor_z2,
)

groups = st.builds(
    FGAbGroup,
    st.integers(0, 4),
    st.lists(st.integers(2, 40), max_size=5).map(tuple),
)


def test_normalize_examples():
    assert normalize(FGAbGroup(0, (2, 3))) == FGAbGroup(0, (6,))
    assert FGAbGroup(0, (2, 3)).torsion == (6,)
    assert normalize(FGAbGroup(1)) == FGAbGroup(1, ())
    assert FGAbGroup(0, (4, 2)).torsion == (2, 4)


def test_rejects_small_torsion():
    with pytest.raises(ValueError):
        FGAbGroup(0, (1,))
    with pytest.raises(ValueError):
        invariant_factors((0, 2))


def test_chain_and_elementary_divisors():
    g = FGAbGroup(0, (12, 18))
    assert g.torsion == (6, 36)
    assert sorted(g.elementary_divisors()) == [2, 3, 4, 9]
    assert str(FGAbGroup(1, (2, 4))) == "Z + Z2 + Z4"
    assert str(TRIVIAL) == "0"


@given(groups)
def test_normalize_idempotent_and_order_preserving(g):
    assert normalize(g) == g
    assert normalize(FGAbGroup(g.free_rank, tuple(reversed(g.torsion)))).torsion_order == g.torsion_order
    for a, b in zip(g.torsion, g.torsion[1:]):
        assert b % a == 0


@given(st.lists(st.integers(2, 40), max_size=5))
def test_torsion_order_invariant(tors):
    prod = 1
    for t in tors:
        prod *= t
    assert FGAbGroup(0, tuple(tors)).torsion_order == prod


@given(groups)
def test_tensor_equals_hom(g):
    assert tensor_z2(g) == hom_z2(g)


def test_coefficient_examples():
    assert tensor_z2(Z) == cyclic(2)
    assert tensor_z2(cyclic(3)).is_trivial
    assert tensor_z2(FGAbGroup(0, (2, 4))) == FGAbGroup(0, (2, 2))
    assert hom_z2(cyclic(3)).is_trivial
    assert hom_z2(FGAbGroup(2)) == FGAbGroup(0, (2, 2))
    assert hom_z2(TRIVIAL).is_trivial
    assert ext_z2(FGAbGroup(5)).is_trivial
    assert ext_z2(cyclic(2)) == cyclic(2)
    assert ext_z2(cyclic(9)).is_trivial
    assert tor_z2(cyclic(6)) == cyclic(2)


@given(groups, groups)
def test_general_tensor_tor_against_z2(a, b):
    assert tensor(a, cyclic(2)) == tensor_z2(a)
    assert tor(a, cyclic(2)) == tor_z2(a)
    assert tensor(a, b) == tensor(b, a)
    assert tor(a, b) == tor(b, a)


def test_direct_sum():
    assert direct_sum(Z, cyclic(2), cyclic(3)) == FGAbGroup(1, (6,))
    assert direct_sum() == TRIVIAL


def test_omega6_examples():
    s7 = sphere_profile(7)
    s1s6 = product_profile(sphere_profile(1), sphere_profile(6))
    s2s5 = product_profile(sphere_profile(2), sphere_profile(5))
    assert omega6_of_target(s7).is_trivial
    assert omega6_of_target(s1s6) == FGAbGroup(1, (2,))
    assert omega6_of_target(s2s5) == FGAbGroup(1)
    assert omega6_of_target(s7).note == "mod odd torsion"


def test_condition_examples():
    s1s6 = product_profile(sphere_profile(1), sphere_profile(6))
    assert low_homology_condition(sphere_profile(7)).holds
    check = low_homology_condition(s1s6)
    assert not check
    assert check.witness == "H_1(P;Z2) = Z2"
    z3 = HomologyProfile.from_dict(7, {0: Z, 1: cyclic(3), 5: cyclic(3), 7: Z})
    assert low_homology_condition(z3).holds


def test_condition_rejects_wrong_dimension_and_nonorientable():
    with pytest.raises(ValueError):
        low_homology_condition(sphere_profile(6))
    with pytest.raises(ValueError):
        low_homology_condition(HomologyProfile.from_dict(7, {0: Z}, orientable=False))


def test_condition_matches_hom_route_on_random_profiles():
    from foldcusp.verify import random_closed_profile

    rng = random.Random(5)
    seen = set()
    for _ in range(150):
        p = random_closed_profile(rng)
        direct = low_homology_condition(p).holds
        seen.add(direct)
        assert direct == hom_z2(omega6_of_target(p)).is_trivial
    assert seen == {True, False}


def test_profile_rules():
    p = HomologyProfile.from_dict(3, {0: Z, 3: Z, 5: TRIVIAL})
    assert p.H(5) == TRIVIAL and p.H(-1) == TRIVIAL
    assert p.looks_connected
    with pytest.raises(ValueError):
        HomologyProfile.from_dict(3, {4: Z})
    rp = HomologyProfile.from_dict(3, {0: Z, 1: cyclic(2), 3: Z})
    assert rp.homology_z2(2) == cyclic(2)


def test_kunneth_profile_torsion():
    rp3 = HomologyProfile.from_dict(3, {0: Z, 1: cyclic(2), 3: Z})
    sq = product_profile(rp3, rp3)
    # H_1 = Z2 + Z2, H_2 = Tor(Z2, Z2) = Z2
    assert sq.H(1) == FGAbGroup(0, (2, 2))
    assert sq.H(2) == cyclic(2)
    assert sq.dimension == 6
