"""Finitely generated abelian groups and the homological checks on target manifolds.

A group is stored as a free rank plus a list of invariant factors
``d_1 | d_2 | ... | d_r`` (each ``d_i >= 2``), so structural equality is
isomorphism.

>>> FGAbGroup(0, (2, 3))
FGAbGroup(free_rank=0, torsion=(6,))
>>> print(FGAbGroup(1, (4, 2)))
Z + Z2 + Z4
>>> print(tensor_z2(FGAbGroup(1, (3, 4))))
Z2 + Z2
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from math import gcd, prod


def _prime_powers(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def invariant_factors(torsion) -> tuple[int, ...]:
    """Divisibility-chain form of a list of cyclic orders, ascending.

    >>> invariant_factors([4, 2])
    (2, 4)
    >>> invariant_factors([2, 4, 8, 3, 9, 5])
    (2, 12, 360)
    """
    by_prime: dict[int, list[int]] = defaultdict(list)
    for d in torsion:
        d = int(d)
        if d < 2:
            raise ValueError(f"torsion entry {d} is not a cyclic order >= 2")
        for p, e in _prime_powers(d).items():
            by_prime[p].append(p**e)
    if not by_prime:
        return ()
    length = max(len(v) for v in by_prime.values())
    factors = [1] * length
    for powers in by_prime.values():
        powers.sort(reverse=True)
        for i, q in enumerate(powers):
            factors[length - 1 - i] *= q
    return tuple(factors)


@dataclass(frozen=True)
class FGAbGroup:
    """``Z^free_rank + Z_{d_1} + ... + Z_{d_r}`` in divisibility-chain form.

    ``note`` is informational (e.g. "mod odd torsion") and ignored by ``==``.
    """

    free_rank: int = 0
    torsion: tuple[int, ...] = ()
    note: str = field(default="", compare=False, repr=False)

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        object.__setattr__(self, "torsion", invariant_factors(self.torsion))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def torsion_order(self) -> int:
        return prod(self.torsion)

    def elementary_divisors(self) -> list[int]:
        out = []
        for d in self.torsion:
            out.extend(p**e for p, e in _prime_powers(d).items())
        return sorted(out)

    def drop_odd_torsion(self) -> FGAbGroup:
        even = [q for q in self.elementary_divisors() if q % 2 == 0]
        return FGAbGroup(self.free_rank, tuple(even))

    def __add__(self, other: FGAbGroup) -> FGAbGroup:
        return direct_sum(self, other)

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


TRIVIAL = FGAbGroup()
Z = FGAbGroup(1)


def cyclic(d: int) -> FGAbGroup:
    """``Z_d``; ``d == 0`` gives ``Z`` and ``d == 1`` the trivial group."""
    if d == 0:
        return Z
    if d == 1:
        return TRIVIAL
    return FGAbGroup(0, (d,))


def normalize(group: FGAbGroup) -> FGAbGroup:
    return FGAbGroup(group.free_rank, group.torsion, note=group.note)


def direct_sum(*groups: FGAbGroup) -> FGAbGroup:
    return FGAbGroup(
        sum(g.free_rank for g in groups),
        tuple(d for g in groups for d in g.torsion),
    )


def _even_count(group: FGAbGroup) -> int:
    return sum(1 for d in group.torsion if d % 2 == 0)


def tensor_z2(group: FGAbGroup) -> FGAbGroup:
    return FGAbGroup(0, (2,) * (group.free_rank + _even_count(group)))


def hom_z2(group: FGAbGroup) -> FGAbGroup:
    return FGAbGroup(0, (2,) * (group.free_rank + _even_count(group)))


def ext_z2(group: FGAbGroup) -> FGAbGroup:
    return FGAbGroup(0, (2,) * _even_count(group))


def tor_z2(group: FGAbGroup) -> FGAbGroup:
    # Tor(Z_d, Z_2) and Ext(Z_d, Z_2) are both Z_gcd(d, 2).
    return FGAbGroup(0, (2,) * _even_count(group))


def _cyclic_summands(group: FGAbGroup) -> list[int]:
    return [0] * group.free_rank + list(group.torsion)


def tensor(a: FGAbGroup, b: FGAbGroup) -> FGAbGroup:
    parts = []
    for m in _cyclic_summands(a):
        for n in _cyclic_summands(b):
            g = gcd(m, n)
            if g != 1:
                parts.append(g)
    return direct_sum(*(cyclic(d) for d in parts))


def tor(a: FGAbGroup, b: FGAbGroup) -> FGAbGroup:
    parts = []
    for m in a.torsion:
        for n in b.torsion:
            g = gcd(m, n)
            if g != 1:
                parts.append(g)
    return FGAbGroup(0, tuple(parts))


@dataclass(frozen=True)
class HomologyProfile:
    """Integral homology ``H_j(P; Z)`` of a closed manifold ``P``.

    Degrees missing from ``groups`` (and all degrees outside ``[0, dimension]``)
    are zero.
    """

    dimension: int
    groups: tuple[tuple[int, FGAbGroup], ...] = ()
    orientable: bool = True
    name: str = ""

    def __post_init__(self):
        if self.dimension < 0:
            raise ValueError("dimension must be non-negative")
        clean = {}
        for j, g in dict(self.groups).items():
            if not 0 <= j <= self.dimension:
                if not g.is_trivial:
                    raise ValueError(f"H_{j} is nonzero outside [0, {self.dimension}]")
                continue
            if not g.is_trivial:
                clean[j] = g
        object.__setattr__(self, "groups", tuple(sorted(clean.items())))

    @classmethod
    def from_dict(cls, dimension, groups, orientable=True, name=""):
        return cls(dimension, tuple(groups.items()), orientable, name)

    def H(self, j: int) -> FGAbGroup:
        return dict(self.groups).get(j, TRIVIAL)

    @property
    def looks_connected(self) -> bool:
        return self.H(0) == Z

    def homology_z2(self, j: int) -> FGAbGroup:
        """``H_j(P; Z_2)`` by the universal coefficient theorem."""
        return tensor_z2(self.H(j)) + tor_z2(self.H(j - 1))


def sphere_profile(n: int) -> HomologyProfile:
    if n < 1:
        raise ValueError("sphere dimension must be >= 1")
    return HomologyProfile.from_dict(n, {0: Z, n: Z}, name=f"S{n}")


def product_profile(p: HomologyProfile, q: HomologyProfile) -> HomologyProfile:
    """Kunneth formula for integral homology of ``P x Q``."""
    n = p.dimension + q.dimension
    groups = {}
    for k in range(n + 1):
        pieces = [tensor(p.H(i), q.H(k - i)) for i in range(k + 1)]
        pieces += [tor(p.H(i), q.H(k - 1 - i)) for i in range(k)]
        groups[k] = direct_sum(*pieces)
    name = f"{p.name}x{q.name}" if p.name and q.name else ""
    return HomologyProfile.from_dict(n, groups, p.orientable and q.orientable, name)


def omega6_of_target(profile: HomologyProfile) -> FGAbGroup:
    """``H_1(P;Z_2) + H_2(P;Z) + H_6(P;Z)`` with odd torsion dropped.

    This is the 2-primary part of the oriented bordism group ``Omega_6(P)``;
    the result carries ``note == "mod odd torsion"``.
    """
    total = profile.homology_z2(1) + profile.H(2) + profile.H(6)
    reduced = total.drop_odd_torsion()
    return FGAbGroup(reduced.free_rank, reduced.torsion, note="mod odd torsion")


@dataclass(frozen=True)
class ConditionCheck:
    holds: bool
    h1_z2: FGAbGroup
    h2_z2: FGAbGroup
    witness: str = ""

    def __bool__(self):
        return self.holds


def low_homology_condition(profile: HomologyProfile) -> ConditionCheck:
    """Check ``H_1(P;Z_2) = 0 = H_2(P;Z_2)`` for a closed orientable 7-manifold.

    Also checks the equivalent form ``Hom(Omega_6(P), Z_2) = 0`` with
    ``H_6(P;Z)`` replaced by its Poincare dual ``H^1(P;Z)``, the free part of
    ``H_1``; the two answers must agree.
    """
    if profile.dimension != 7:
        raise ValueError(f"expected a 7-dimensional target, got dimension {profile.dimension}")
    if not profile.orientable:
        raise ValueError("target must be orientable")
    h1 = profile.homology_z2(1)
    h2 = profile.homology_z2(2)
    witness = ""
    if not h1.is_trivial:
        witness = f"H_1(P;Z2) = {h1}"
    elif not h2.is_trivial:
        witness = f"H_2(P;Z2) = {h2}"
    holds = not witness

    dual_h6 = FGAbGroup(profile.H(1).free_rank)
    via_bordism = hom_z2(profile.homology_z2(1) + profile.H(2) + dual_h6).is_trivial
    if via_bordism != holds:
        raise AssertionError("homological and bordism forms of the condition disagree")
    return ConditionCheck(holds, h1, h2, witness)
