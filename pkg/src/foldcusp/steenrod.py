"""Steenrod squares on the mod-2 cohomology of catalog models.

The total square ``Sq = Sq^0 + Sq^1 + ...`` is multiplicative, so on a basis
monomial ``g * rest`` it is ``Sq(g) Sq(rest)``; generator data supplies
``Sq(g)``. Wu classes are solved from the Poincare-duality pairing.
"""

from __future__ import annotations

from .catalog import ManifoldModel
from .ringcore import RingElement, pair_with_fundamental_class


class SteenrodError(ValueError):
    pass


class SteenrodContext:
    """Cached action of the total square on every basis element of ``model``."""

    def __init__(self, model: ManifoldModel):
        self.model = model
        self.ring = ring = model.mod2_ring
        self.basis_by_degree = {d: list(ks) for d, ks in ring.basis_by_degree.items()}
        gen_total = {}
        for g, sqs in model.steenrod_on_generators.items():
            total = ring.gen(g)
            for s in sqs:
                total = total + s
            gen_total[g] = total
        self._total: dict = {ring.one_key: ring.one()}
        for key in ring.basis():
            if key != ring.one_key:
                self._total[key] = self._total_of(key, gen_total)
        for key in ring.basis():
            d = ring.degree_of(key)
            x = ring.basis_element(key)
            if self.sq(0, x) != x:
                raise SteenrodError(f"Sq^0 is not the identity on {x}")
            if self.sq(d, x) != x * x:
                raise SteenrodError(f"Sq^{d} {x} != ({x})^2")

    def _total_of(self, key, gen_total):
        if key in self._total:
            return self._total[key]
        split = self.ring.factor(key)
        if split is None:
            raise SteenrodError(f"basis element {self.ring.key_name(key)} has no generator factorization")
        g, rest = split
        out = gen_total[g] * self._total_of(rest, gen_total)
        self._total[key] = out
        return out

    def sq(self, i: int, x: RingElement) -> RingElement:
        return sq(self, i, x)


def sq(ctx: SteenrodContext, i: int, x: RingElement) -> RingElement:
    if i < 0:
        raise ValueError("Steenrod square index must be non-negative")
    ring = ctx.ring
    out = ring.zero()
    for key, c in x.terms.items():
        d = ring.degree_of(key)
        if i > d:
            continue
        out = out + ctx._total[key].component(d + i) * c
    return out


def total_sq(ctx: SteenrodContext, x: RingElement) -> RingElement:
    out = ctx.ring.zero()
    for key, c in x.terms.items():
        out = out + ctx._total[key] * c
    return out


def solve_gf2(matrix: list[list[int]], rhs: list[int]) -> list[int]:
    """Solve a square system over GF(2); raises :class:`SteenrodError` if singular."""
    n = len(matrix)
    rows = [[v % 2 for v in row] + [b % 2] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot is None:
            raise SteenrodError("singular pairing matrix")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        for r in range(n):
            if r != col and rows[r][col]:
                rows[r] = [a ^ b for a, b in zip(rows[r], rows[col])]
    return [rows[r][n] for r in range(n)]


def wu_class(ctx: SteenrodContext) -> RingElement:
    """Total Wu class ``v`` with ``<v_i x, [M]> = <Sq^i x, [M]>`` for ``|x| = dim - i``."""
    ring = ctx.ring
    n = ctx.model.dimension
    v = ring.zero()
    for i in range(n // 2 + 1):
        left = ctx.basis_by_degree.get(i, [])
        right = ctx.basis_by_degree.get(n - i, [])
        if len(left) != len(right):
            raise SteenrodError(f"H^{i} and H^{n - i} have different ranks; pairing cannot be perfect")
        if not left:
            continue
        matrix = [
            [pair_with_fundamental_class(ring.basis_element(b) * ring.basis_element(y)) for b in left]
            for y in right
        ]
        rhs = [pair_with_fundamental_class(sq(ctx, i, ring.basis_element(y))) for y in right]
        coeffs = solve_gf2(matrix, rhs)
        v = v + ring.element({b: c for b, c in zip(left, coeffs)})
    return v


def wu_check(ctx: SteenrodContext) -> bool:
    return total_sq(ctx, wu_class(ctx)) == ctx.model.total_sw_class
