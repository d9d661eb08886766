import pytest

from foldcusp import catalog
from foldcusp.catalog import ModelError, euler_characteristic, load_structure_model, thom_boardman_codim
from foldcusp.charnum import normal_sw_class, sw_number
from foldcusp.expr import build_model
from foldcusp.ringcore import pair_with_fundamental_class

from conftest import CATALOG, SMALL_PRODUCTS, model


def test_real_projective():
    rp2 = catalog.real_projective(2)
    assert str(rp2.total_sw_class) == "1 + a + a^2"
    assert not rp2.orientable
    assert str(normal_sw_class(rp2)) == "1 + a"
    rp1 = catalog.real_projective(1)
    assert str(rp1.total_sw_class) == "1"
    assert rp1.orientable


def test_complex_projective():
    cp2 = catalog.complex_projective(2)
    assert str(cp2.total_pontryagin_class) == "1 + 3*g^2"
    cp1 = catalog.complex_projective(1)
    assert len(cp1.mod2_ring) == 2
    assert str(cp1.mod2_ring.top()) == "a"
    assert str(cp1.total_sw_class) == "1"  # (1+a)^2 = 1 + 2a + a^2 and a^2 = 0


def test_dold_y():
    y = catalog.dold(1, 2)
    assert str(y.total_sw_class) == "1 + d + c*d + d^2"
    assert y.orientable
    assert y.sw(1).is_zero() and y.sw(5).is_zero()
    assert sw_number(y, (2, 3), normal=False) == 1
    assert str(normal_sw_class(y)) == "1 + d + c*d"


def test_sphere():
    s7 = catalog.sphere(7)
    assert s7.dimension == 7 and len(s7.mod2_ring) == 2
    assert str(normal_sw_class(s7)) == "1"
    s1, rp1 = catalog.sphere(1), catalog.real_projective(1)
    assert len(s1.mod2_ring) == len(rp1.mod2_ring) and s1.total_sw_class.is_zero() == rp1.total_sw_class.is_zero()


def test_products():
    yy = build_model("Dold(1,2) x Dold(1,2)")
    assert yy.dimension == 10 and yy.orientable and len(yy.mod2_ring) == 36
    rp = build_model("RP(2)^3")
    wbar = normal_sw_class(rp)
    assert str(wbar.component(3)) == "a1*a2*a3"
    assert wbar.component(4).is_zero()
    cc = build_model("CP(2) x CP(2)", require_integral=True)
    assert str(cc.total_pontryagin_class) == "1 + 3*g1^2 + 3*g2^2 + 9*g1^2*g2^2"
    with pytest.raises(ModelError):
        catalog.product(catalog.real_projective(2), catalog.complex_projective(1), require_integral=True)


def test_product_associativity_on_pairings():
    a = catalog.real_projective(2)
    left = catalog.product(catalog.product(a, a), a)
    right = catalog.product(a, catalog.product(a, a))
    assert left.mod2_ring == right.mod2_ring
    parts = [(1, 1, 1, 1, 1, 1), (2, 2, 2), (3, 3), (2, 4), (1, 2, 3), (6,), (1, 5), (2, 2, 1, 1)]
    for p in parts:
        assert sw_number(left, p) == sw_number(right, p)
        assert sw_number(left, p, normal=False) == sw_number(right, p, normal=False)


@pytest.mark.parametrize("name", ["RP(2)", "RP(4)", "CP(2)", "CP(1) x CP(1)", "CP(3)", "S(4)", "X6"])
def test_top_sw_is_mod2_euler_characteristic(name):
    m = model(name)
    assert pair_with_fundamental_class(m.sw(m.dimension)) == euler_characteristic(m) % 2


@pytest.mark.parametrize("name", CATALOG + SMALL_PRODUCTS)
def test_model_invariants(name):
    m = model(name)
    assert m.sw(0) == m.mod2_ring.one()
    assert m.orientable == m.sw(1).is_zero()
    if m.dimension % 2:
        assert m.sw(m.dimension).is_zero()


def test_constructor_validation():
    with pytest.raises(ModelError):
        catalog.dold(0, 0)
    with pytest.raises(ModelError):
        catalog.complex_projective(0)
    good = catalog.real_projective(2)
    with pytest.raises(ModelError):
        catalog.ManifoldModel("bad", 2, True, good.mod2_ring, good.total_sw_class, good.steenrod_on_generators)


def test_thom_boardman():
    assert thom_boardman_codim("S10", 2) == 3
    assert thom_boardman_codim("S11", 0) == 2
    assert thom_boardman_codim("S11-nontransverse", 1) == 6
    assert thom_boardman_codim("cusp", 3) == 8
    with pytest.raises(ValueError):
        thom_boardman_codim("S20", 1)
    with pytest.raises(ValueError):
        thom_boardman_codim("S10", -1)


RP2_CONFIG = """# fold-ring v1
name RP2 by table
generator a 1
basis 1 a
basis 2 aa
top aa
mul a a = aa
sw 1 + a + aa
"""


def test_rp2_config_matches_catalog():
    cfg = load_structure_model(RP2_CONFIG)
    ref = catalog.real_projective(2)
    for p in [(1, 1), (2,)]:
        assert sw_number(cfg, p) == sw_number(ref, p)
        assert sw_number(cfg, p, normal=False) == sw_number(ref, p, normal=False)
    assert not cfg.orientable


@pytest.mark.parametrize(
    "text, match",
    [
        ("generator a 1\nbasis 1 a\nbasis 2 b c\nmul a a = b\nsw 1", "top"),
        ("generator a 1\nbasis 1 a\nbasis 2 aa\ntop aa\nmul a a = aa\nsw 1 + a + aa\nfrob a", "unknown directive"),
        ("generator a 1\nbasis 1 a\nbasis 2 aa\ntop aa\nmul a a = aa", "Stiefel-Whitney"),
        ("generator a 1\nbasis 1 a\nbasis 2 aa\ntop aa\nmul a a = a\nsw 1", "grad"),
    ],
)
def test_config_errors(text, match):
    with pytest.raises(ModelError, match=match):
        load_structure_model("# fold-ring v1\n" + text)


def test_config_requires_header():
    with pytest.raises(ModelError, match="header"):
        load_structure_model(RP2_CONFIG.replace("# fold-ring v1\n", ""))


def test_wall_model_shape():
    x = model("X6")
    assert x.dimension == 6 and not x.orientable
    assert len(x.mod2_ring) == 12
    assert euler_characteristic(x) == 0
