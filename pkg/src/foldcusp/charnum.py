"""Normal characteristic classes and numbers, the mod-2 cusp count, and the
algebraic cusp count of maps ``W^{4m} -> R^{6m-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .catalog import ManifoldModel
from .foldgroups import t_invariant
from .ringcore import RingElement, invert_total_class, pair_with_fundamental_class


class CharNumError(ValueError):
    pass


def normal_sw_class(model: ManifoldModel) -> RingElement:
    return invert_total_class(model.total_sw_class)


def sw_number(model: ManifoldModel, partition, normal: bool = True) -> int:
    """``w_{i_1} ... w_{i_r}[W]`` (normal classes by default)."""
    partition = tuple(int(i) for i in partition)
    if any(i < 1 for i in partition):
        raise CharNumError(f"partition entries must be positive: {partition}")
    if sum(partition) != model.dimension:
        raise CharNumError(
            f"partition {partition} has degree {sum(partition)} but {model.name} has dimension {model.dimension}"
        )
    total = normal_sw_class(model) if normal else model.total_sw_class
    x = model.mod2_ring.one()
    for i in partition:
        x = x * total.component(i)
    return pair_with_fundamental_class(x)


@dataclass(frozen=True)
class CuspParityReport:
    manifold: str
    k: int
    square_term: int  # wbar_{2k+1}^2 [W]
    product_term: int  # wbar_{2k+2} wbar_{2k} [W]
    parity: int

    def as_dict(self):
        return {
            "manifold": self.manifold,
            "k": self.k,
            "wbar_{2k+1}^2": self.square_term,
            "wbar_{2k+2}wbar_{2k}": self.product_term,
            "parity": self.parity,
        }


def cusp_parity(model: ManifoldModel) -> CuspParityReport:
    """Parity of the number of cusps of a generic map ``W^{4k+2} -> R^{6k+2}``:
    ``(wbar_{2k+1}^2 + wbar_{2k+2} wbar_{2k})[W]``.
    """
    n = model.dimension
    if n % 4 != 2:
        raise CharNumError(f"cusp parity needs dim W = 2 mod 4, got {n}")
    k = (n - 2) // 4
    wbar = normal_sw_class(model)
    mid = wbar.component(2 * k + 1)
    square = pair_with_fundamental_class(mid * mid)
    prod = pair_with_fundamental_class(wbar.component(2 * k + 2) * wbar.component(2 * k))
    return CuspParityReport(model.name, k, square, prod, (square + prod) % 2)


def normal_pontryagin_class(model: ManifoldModel) -> RingElement:
    if not model.has_integral_data:
        raise CharNumError(f"{model.name} carries no integral Pontryagin data")
    return invert_total_class(model.total_pontryagin_class)


def normal_pontryagin_number(model: ManifoldModel, m: int) -> int:
    """``pbar_m[W]`` for an oriented ``4m``-manifold, the algebraic number of cusps
    of a generic map ``W -> R^{6m-1}`` (up to the orientation sign convention)."""
    if m < 1:
        raise CharNumError("m must be positive")
    if model.dimension != 4 * m:
        raise CharNumError(f"{model.name} has dimension {model.dimension}, expected {4 * m}")
    if not model.orientable:
        raise CharNumError(f"{model.name} is not orientable")
    pbar = normal_pontryagin_class(model)
    return pair_with_fundamental_class(pbar.component(4 * m))


@dataclass(frozen=True)
class GcdEstimate:
    m: int
    values: tuple[int, ...]
    gcd: int
    t: int
    divisible: bool  # 3^t divides the gcd
    tight: bool  # gcd == 3^t

    @property
    def power(self) -> int:
        return 3**self.t


def pontryagin_gcd_estimate(dimension: int, models) -> GcdEstimate:
    """gcd of ``|pbar_m[W]|`` over ``models``, compared with ``3^t``.

    The true gcd over all oriented ``4m``-manifolds is ``3^t``; a finite family
    can only give a multiple of it, so ``tight`` is reported, not enforced.
    """
    models = list(models)
    if not models:
        raise CharNumError("need at least one manifold")
    if dimension % 4 or dimension < 4:
        raise CharNumError(f"dimension must be a positive multiple of 4, got {dimension}")
    m = dimension // 4
    values = tuple(normal_pontryagin_number(w, m) for w in models)
    g = 0
    for v in values:
        g = gcd(g, abs(v))
    t = t_invariant(m)
    return GcdEstimate(m, values, g, t, g % 3**t == 0, g == 3**t)
