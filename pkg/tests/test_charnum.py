import pytest
import sympy as sp

from foldcusp import catalog
from foldcusp.charnum import (
    CharNumError, cusp_parity, normal_pontryagin_number, normal_sw_class, pontryagin_gcd_estimate, sw_number,
)
from foldcusp.expr import build_model
from foldcusp.foldgroups import t_invariant
from foldcusp.ringcore import kunneth_product, transport

import oracles
from conftest import model


def test_normal_classes():
    assert str(normal_sw_class(model("RP(2)"))) == "1 + a"
    assert str(normal_sw_class(model("Dold(1,2)"))) == "1 + d + c*d"
    assert str(normal_sw_class(model("S(6)"))) == "1"


def test_sw_number_examples():
    rp2 = model("RP(2)")
    assert sw_number(rp2, (1, 1)) == 1
    assert sw_number(rp2, (2,)) == 0
    assert sw_number(model("Dold(1,2)"), (2, 3), normal=False) == 1


def test_sw_number_y_times_rp2_against_oracle():
    c, d, a = sp.symbols("c d a")
    gens, bounds, weights = (c, d, a), (2, 3, 3), (1, 2, 1)
    wbar = oracles.truncate((1 + d + c * d) * (1 + a), gens, bounds, weights, 7)
    prod = oracles.truncate(
        oracles.component(wbar, gens, weights, 3) * oracles.component(wbar, gens, weights, 4), gens, bounds, weights, 7
    )
    expected = oracles.coefficient_of(prod, gens, (1, 2, 2)) % 2
    assert sw_number(build_model("Dold(1,2) x RP(2)"), (3, 4)) == expected


def test_sw_number_degree_mismatch():
    with pytest.raises(CharNumError, match="degree 3 .* dimension 2"):
        sw_number(model("RP(2)"), (1, 2))


def test_cusp_parity_examples():
    yy = cusp_parity(build_model("Dold(1,2)^2"))
    assert (yy.k, yy.square_term, yy.product_term, yy.parity) == (2, 0, 1, 1)
    rp = cusp_parity(build_model("RP(2)^3"))
    assert (rp.k, rp.square_term, rp.product_term, rp.parity) == (1, 1, 0, 1)
    assert cusp_parity(model("S(6)")).parity == 0
    nn = cusp_parity(build_model("(Dold(1,2) x RP(2))^2"))
    assert (nn.k, nn.parity) == (3, 1)
    assert nn.as_dict()["parity"] == 1


@pytest.mark.parametrize("name", ["S(6)", "CP(3)", "CP(1)^3", "CP(1)", "S(2)", "S(3) x S(3)"])
def test_cusp_parity_even_for_orientable_small_dims(name):
    m = build_model(name)
    assert m.orientable
    assert cusp_parity(m).parity == 0


def test_cusp_parity_dimension_check():
    with pytest.raises(CharNumError):
        cusp_parity(model("CP(2)"))


@pytest.mark.parametrize(
    "n", ["RP(1)", "RP(3)", "RP(5)", "Dold(1,1)", "Dold(1,2)", "Dold(3,1)", "RP(2) x RP(1)", "Dold(1,2) x RP(2)"]
)
def test_square_summand_vanishes_on_squares(n):
    base = build_model(n)
    assert base.dimension % 2 == 1
    assert cusp_parity(build_model(f"({n})^2")).square_term == 0


@pytest.mark.parametrize("n", ["Dold(1,2)", "Dold(1,2) x RP(2)", "RP(3)", "RP(2) x RP(1)"])
def test_product_summand_is_square_of_middle_number(n):
    # over N x N the second summand equals (wbar_{k+1} wbar_k [N])^2 = wbar_{k+1} wbar_k [N]
    base = build_model(n)
    k = (base.dimension - 1) // 2
    middle = sw_number(base, (k + 1, k)) if k else sw_number(base, (1,))
    assert cusp_parity(build_model(f"({n})^2")).product_term == middle


@pytest.mark.parametrize("a, b", [("RP(2)", "RP(3)"), ("Dold(1,2)", "RP(2)"), ("CP(2)", "Dold(1,1)")])
def test_normal_class_multiplicative(a, b):
    A, B = model(a), model(b)
    ra, ka = A.mod2_ring.renamed("1")
    rb, kb = B.mod2_ring.renamed("2")
    _, ia, ib = kunneth_product(ra, rb)
    lhs = normal_sw_class(catalog.product(A, B))
    rhs = ia(transport(normal_sw_class(A), ra, ka)) * ib(transport(normal_sw_class(B), rb, kb))
    assert str(lhs) == str(rhs)
    assert lhs.terms == rhs.terms


@pytest.mark.parametrize("ns", [(2,), (4,), (2, 2), (6,), (4, 2), (2, 2, 2), (8,)])
def test_pontryagin_against_series_oracle(ns):
    w = build_model(" x ".join(f"CP({n})" for n in ns), require_integral=True)
    m = sum(ns) // 2
    assert normal_pontryagin_number(w, m) == oracles.cp_product_pontryagin(list(ns))


def test_pontryagin_examples():
    assert normal_pontryagin_number(model("CP(2)"), 1) == -3
    assert normal_pontryagin_number(model("CP(4)"), 2) == 15
    assert normal_pontryagin_number(build_model("CP(2) x CP(2)", require_integral=True), 2) == 9


def test_pontryagin_errors():
    with pytest.raises(CharNumError):
        normal_pontryagin_number(model("CP(2)"), 2)
    with pytest.raises(CharNumError):
        normal_pontryagin_number(model("RP(4)"), 1)
    with pytest.raises(CharNumError):
        normal_pontryagin_number(model("Dold(1,2)"), 1)


def test_gcd_estimates():
    one = pontryagin_gcd_estimate(4, [model("CP(2)")])
    assert (one.gcd, one.power, one.tight) == (3, 3, True)
    two = pontryagin_gcd_estimate(8, [model("CP(4)"), build_model("CP(2) x CP(2)", require_integral=True)])
    assert two.values == (15, 9) and two.gcd == 3 and two.t == t_invariant(2) == 1 and two.tight
    with pytest.raises(CharNumError):
        pontryagin_gcd_estimate(8, [])


@pytest.mark.parametrize("ns", [(2,), (4,), (2, 2), (6,), (4, 2), (2, 2, 2), (8,), (4, 4), (6, 2), (10,), (12,)])
def test_three_power_divides(ns):
    w = build_model(" x ".join(f"CP({n})" for n in ns), require_integral=True)
    m = sum(ns) // 2
    assert normal_pontryagin_number(w, m) % 3 ** t_invariant(m) == 0
