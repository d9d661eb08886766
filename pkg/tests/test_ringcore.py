import doctest

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from foldcusp import ringcore
from foldcusp.catalog import load_structure_ring
from foldcusp.ringcore import (
    MonomialRing, RingError, StructureRing, ZZ, graded_component, invert_total_class, kunneth_product,
    multiply, pair_with_fundamental_class, parse_element,
)

from conftest import CATALOG, SMALL_PRODUCTS, elements, model

RINGS = [model(m).mod2_ring for m in CATALOG + SMALL_PRODUCTS] + [
    model(m).integral_ring for m in ["CP(2)", "CP(4)", "S(4)", "CP(2) x CP(2)"]
]


def test_docstring_examples():
    assert doctest.testmod(ringcore).failed == 0


def test_multiply_examples():
    R = MonomialRing([("a", 1)], [3])
    a = R.gen("a")
    assert multiply(R.one() + a + a**2, R.one() + a) == R.one()
    x = a + a**2
    assert x * R.one() == x
    Zr = MonomialRing([("g", 2)], [5], modulus=ZZ)
    g = Zr.gen("g")
    assert (3 * g**2) * (2 * g**2) == 6 * g**4
    assert str(6 * g**4) == "6*g^4"


def test_mismatched_rings_rejected():
    a = MonomialRing([("a", 1)], [3]).gen("a")
    b = MonomialRing([("b", 1)], [3]).gen("b")
    with pytest.raises(RingError):
        multiply(a, b)


def test_graded_component_examples():
    R = MonomialRing([("a", 1)], [3])
    a = R.gen("a")
    w = R.one() + a + a**2
    assert graded_component(w, 1) == a
    assert graded_component(w, 7).is_zero()
    y = model("Dold(1,2)")
    assert graded_component(y.total_sw_class, 3) == y.mod2_ring.parse("c*d")


def test_invert_examples():
    R = MonomialRing([("a", 1)], [3])
    a = R.gen("a")
    assert invert_total_class(R.one()) == R.one()
    assert invert_total_class(R.one() + a + a**2) == R.one() + a
    Zr = MonomialRing([("g", 2)], [3], modulus=ZZ)
    g = Zr.gen("g")
    assert invert_total_class(Zr.one() + 3 * g**2) == Zr.one() - 3 * g**2
    with pytest.raises(RingError):
        invert_total_class(a)
    with pytest.raises(RingError):
        invert_total_class(Zr.one() * -1 + g)


def test_kunneth_examples():
    rp2 = model("RP(2)").mod2_ring
    ring, ia, ib = kunneth_product(rp2, rp2)
    assert len(ring) == 9
    a1, a2 = ia(rp2.gen("a")), ib(rp2.gen("a"))
    assert ring.top() == a1**2 * a2**2
    assert pair_with_fundamental_class((a1 * a2**2) * a1) == 1
    y = model("Dold(1,2)").mod2_ring
    assert len(kunneth_product(y, y)[0]) == 36
    with pytest.raises(RingError):
        kunneth_product(rp2, model("CP(2)").integral_ring)


def test_pairing_examples():
    rp2 = model("RP(2)").mod2_ring
    assert pair_with_fundamental_class(rp2.parse("a^2")) == 1
    assert pair_with_fundamental_class(rp2.parse("a")) == 0
    cp4 = model("CP(4)").integral_ring
    assert pair_with_fundamental_class(15 * cp4.gen("g") ** 4) == 15


def test_kunneth_with_structure_ring_pairs_like_monomial():
    x6 = model("X6").mod2_ring
    rp1 = model("RP(1)").mod2_ring
    ring, ia, ib = kunneth_product(x6, rp1)
    assert len(ring) == 24
    top = ia(x6.top()) * ib(rp1.top())
    assert pair_with_fundamental_class(top) == 1
    ring.check_associative()


def test_parse_element():
    y = model("Dold(1,2)").mod2_ring
    assert parse_element(y, "(1 + c)*(1 + c + d)^3") == model("Dold(1,2)").total_sw_class
    assert parse_element(y, "0").is_zero()
    with pytest.raises(RingError):
        parse_element(y, "c + q")
    with pytest.raises(RingError):
        parse_element(y, "c +")


def test_structure_ring_validation():
    with pytest.raises(RingError, match="ambiguous top"):
        StructureRing({"1": 0, "x": 1, "y": 1}, {}, ["x", "y"], None)
    with pytest.raises(RingError):
        StructureRing({"1": 0, "x": 1, "y": 2}, {("x", "x"): {"x": 1}}, ["x"], "y")


def test_nonassociative_table_reports_triple():
    # (x*y)*y = z*y = t but x*(y*y) = x*0 = 0
    text = "\n".join([
        "# fold-ring v1",
        "generator x 1",
        "generator y 1",
        "basis 1 x y",
        "basis 2 z",
        "basis 3 t",
        "top t",
        "mul x y = z",
        "mul z y = t",
        "mul x z = t",
    ])
    with pytest.raises(Exception, match="associativ"):
        load_structure_ring(text)


@st.composite
def triples(draw):
    ring = draw(st.sampled_from(RINGS))
    return tuple(draw(elements(ring)) for _ in range(3))


@settings(max_examples=1000, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(triples())
def test_associative_and_commutative(t):
    x, y, z = t
    assert (x * y) * z == x * (y * z)
    if x.ring.modulus == 2 or all(d % 2 == 0 for d in x.degrees() | y.degrees()):
        assert x * y == y * x


@settings(max_examples=300, deadline=None)
@given(triples())
def test_component_convolution(t):
    x, y, _ = t
    top = x.ring.top_degree
    for d in range(top + 1):
        conv = x.ring.zero()
        for i in range(d + 1):
            conv = conv + x.component(i) * y.component(d - i)
        assert (x * y).component(d) == conv


@settings(max_examples=300, deadline=None)
@given(triples())
def test_frobenius_mod2(t):
    x, y, _ = t
    if x.ring.modulus == 2:
        assert (x + y) ** 2 == x**2 + y**2


@pytest.mark.parametrize("name", CATALOG + SMALL_PRODUCTS)
def test_inversion_round_trip(name):
    m = model(name)
    w = m.total_sw_class
    assert w * invert_total_class(w) == m.mod2_ring.one()
    if m.has_integral_data:
        p = m.total_pontryagin_class
        assert p * invert_total_class(p) == m.integral_ring.one()
