import random
from math import comb

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from foldcusp import catalog
from foldcusp.expr import build_model
from foldcusp.ringcore import pair_with_fundamental_class
from foldcusp.steenrod import SteenrodContext, SteenrodError, solve_gf2, sq, total_sq, wu_check, wu_class
from foldcusp.verify import random_products

from conftest import CATALOG, SMALL_PRODUCTS, elements, model

_CTX = {}


def ctx(name):
    if name not in _CTX:
        _CTX[name] = SteenrodContext(model(name))
    return _CTX[name]


def test_cp4_chain():
    c = ctx("CP(4)")
    a = c.ring.gen("a")
    assert sq(c, 2, a) == a**2
    chain = sq(c, 4, sq(c, 2, a))
    assert chain == a**4
    assert pair_with_fundamental_class(chain) == 1


@pytest.mark.parametrize("n", [3, 6, 9])
def test_rp_powers_match_binomial_parity(n):
    c = SteenrodContext(catalog.real_projective(n))
    a = c.ring.gen("a")
    for k in range(n + 1):
        for i in range(k + 1):
            expected = a ** (k + i) if comb(k, i) % 2 else c.ring.zero()
            assert sq(c, i, a**k) == expected


def test_total_sq_examples():
    c = ctx("RP(2)")
    a = c.ring.gen("a")
    one = c.ring.one()
    assert total_sq(c, one) == one
    assert total_sq(c, a) == a + a**2
    assert total_sq(c, one + a) == one + a + a**2


def test_wu_examples():
    assert str(wu_class(ctx("RP(2)"))) == "1 + a"
    assert str(wu_class(ctx("S(5)"))) == "1"
    assert str(wu_class(ctx("CP(2)"))) == "1 + a"
    assert wu_check(ctx("RP(2)"))
    assert total_sq(ctx("Dold(1,2)"), wu_class(ctx("Dold(1,2)"))) == model("Dold(1,2)").total_sw_class


def test_bad_sw_data_fails_wu_check():
    rp2 = catalog.real_projective(2)
    fake = catalog.ManifoldModel(
        "fake", 2, False, rp2.mod2_ring, rp2.mod2_ring.parse("1 + a"), rp2.steenrod_on_generators
    )
    assert not wu_check(SteenrodContext(fake))


def test_solve_gf2():
    assert solve_gf2([[1, 1], [0, 1]], [1, 1]) == [0, 1]
    with pytest.raises(SteenrodError, match="singular"):
        solve_gf2([[1, 1], [1, 1]], [0, 1])


def test_sq_index_validation():
    with pytest.raises(ValueError):
        sq(ctx("RP(2)"), -1, ctx("RP(2)").ring.one())


ALL = CATALOG + SMALL_PRODUCTS


@st.composite
def pairs(draw):
    name = draw(st.sampled_from(ALL))
    ring = model(name).mod2_ring
    return name, draw(elements(ring)), draw(elements(ring))


@settings(max_examples=500, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(pairs(), st.integers(0, 6))
def test_cartan(p, i):
    name, x, y = p
    c = ctx(name)
    rhs = c.ring.zero()
    for j in range(i + 1):
        rhs = rhs + sq(c, j, x) * sq(c, i - j, y)
    assert sq(c, i, x * y) == rhs


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(ALL), st.data())
def test_top_square_is_cup_square(name, data):
    ring = model(name).mod2_ring
    d = data.draw(st.integers(0, ring.top_degree))
    x = data.draw(elements(ring, homogeneous_degree=d))
    c = ctx(name)
    assert sq(c, d, x) == x * x
    assert sq(c, d + 1, x).is_zero()
    assert sq(c, 0, x) == x


@pytest.mark.parametrize("name", ALL)
def test_adem_sq1sq1(name):
    c = ctx(name)
    for key in c.ring.basis():
        assert sq(c, 1, sq(c, 1, c.ring.basis_element(key))).is_zero()


@pytest.mark.parametrize("name", ALL)
def test_wu_formula_catalog(name):
    assert wu_check(ctx(name))


@pytest.mark.parametrize("expr", random_products(12, seed=99))
def test_wu_formula_random_products(expr):
    assert wu_check(SteenrodContext(build_model(expr)))


def test_wu_formula_triple_products():
    rng = random.Random(3)
    atoms = ["RP(2)", "RP(3)", "Dold(1,1)", "S(2)", "CP(1)"]
    for _ in range(4):
        expr = " x ".join(rng.choice(atoms) for _ in range(3))
        assert wu_check(SteenrodContext(build_model(expr))), expr
