"""Cobordism and bordism groups of fold maps ``(2k+1)``-manifolds into
``(3k+1)``-dimensional targets, assembled as symbolic group expressions.

Text forms (also accepted by :func:`parse_group`):

* concrete groups ``0``, ``Z``, ``Z2``, ``Z + Z2`` (summands joined by ``+``);
* symbolic bordism groups ``N(9)``, ``Omega(7)``, ``N(5;P)``, ``Omega(5;P)``,
  ``C(9,4)``, ``Cso(7,3)``;
* an undetermined 3-power ``Z(3^u)[0<=u<=1]``;
* an exact sequence ``SES[Z2 -> ? -> Omega(5;P)]`` (middle group unknown);
* ``no answer: <reason>`` when the theory gives no answer for that input.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .fgab import FGAbGroup, HomologyProfile, low_homology_condition


class OutOfRegime(ValueError):
    pass


class TableError(ValueError):
    pass


def alpha3(x: int) -> int:
    """Sum of the base-3 digits of ``x``."""
    if x < 0:
        raise ValueError("alpha3 needs x >= 0")
    s = 0
    while x:
        x, r = divmod(x, 3)
        s += r
    return s


def t_invariant(m: int) -> int:
    """``min{j : alpha3(2m + j) <= 3j}``."""
    if m < 1:
        raise ValueError("t is defined for m >= 1")
    # alpha3(4m) <= 2 * (log3(4m) + 1) <= 6m, so j = 2m always qualifies
    for j in range(2 * m + 1):
        if alpha3(2 * m + j) <= 3 * j:
            return j
    raise AssertionError("unreachable: j = 2m always satisfies the bound")


FAMILIES = ("N", "Omega", "C", "Cso")


@dataclass(frozen=True)
class SymbolicGroup:
    family: str
    index: tuple[int, ...]
    target: str = ""

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown bordism family {self.family!r}")

    def __str__(self):
        idx = ",".join(map(str, self.index))
        return f"{self.family}({idx};{self.target})" if self.target else f"{self.family}({idx})"


@dataclass(frozen=True)
class ThreePower:
    """``Z_{3^e}`` with ``e`` known only to lie in ``[0, upper]``."""

    name: str
    upper: int

    def __str__(self):
        return f"Z(3^{self.name})[0<={self.name}<={self.upper}]"


@dataclass(frozen=True)
class GroupExpression:
    concrete: FGAbGroup = field(default_factory=FGAbGroup)
    symbols: tuple[SymbolicGroup, ...] = ()
    undetermined: tuple[ThreePower, ...] = ()

    def __str__(self):
        parts = [str(s) for s in self.symbols]
        if not self.concrete.is_trivial:
            parts.append(str(self.concrete))
        parts += [str(u) for u in self.undetermined]
        return " + ".join(parts) if parts else "0"

    def __add__(self, other: GroupExpression) -> GroupExpression:
        return GroupExpression(
            self.concrete + other.concrete,
            self.symbols + other.symbols,
            self.undetermined + other.undetermined,
        )

    @property
    def is_concrete(self) -> bool:
        return not self.symbols and not self.undetermined

    def expand(self, table: BordismTable) -> GroupExpression:
        concrete = self.concrete
        left = []
        for s in self.symbols:
            g = table.lookup(s)
            if g is None:
                left.append(s)
            else:
                concrete = concrete + g
        return GroupExpression(concrete, tuple(left), self.undetermined)


@dataclass(frozen=True)
class ExactSequence:
    """``0 -> sub -> ? -> quotient -> 0``; the middle group is not determined."""

    sub: GroupExpression
    quotient: GroupExpression

    def __str__(self):
        return f"SES[{self.sub} -> ? -> {self.quotient}]"

    def expand(self, table: BordismTable) -> ExactSequence:
        return ExactSequence(self.sub.expand(table), self.quotient.expand(table))


@dataclass(frozen=True)
class NoAnswer:
    reason: str

    def __str__(self):
        return f"no answer: {self.reason}"

    def expand(self, table):
        return self


def concrete(*orders: int) -> GroupExpression:
    free = sum(1 for d in orders if d == 0)
    return GroupExpression(FGAbGroup(free, tuple(d for d in orders if d)))


def symbol(family: str, *index: int, target: str = "") -> GroupExpression:
    return GroupExpression(symbols=(SymbolicGroup(family, tuple(index), target),))


# -- bordism lookup table ----------------------------------------------------

TABLE_HEADER = "# fold-bordism v1"

_SEED = {
    "Omega(1)": (FGAbGroup(), "Thom: Omega_1 = 0"),
    "Omega(3)": (FGAbGroup(), "Thom: Omega_3 = 0"),
    "Omega(5)": (FGAbGroup(0, (2,)), "Wall: Omega_5 = Z2, generated by Dold(1,2)"),
    "Omega(6)": (FGAbGroup(), "Wall: Omega_6 = 0"),
}


@dataclass
class BordismTable:
    entries: dict[str, tuple[FGAbGroup, str]] = field(default_factory=lambda: dict(_SEED))

    def lookup(self, s: SymbolicGroup):
        hit = self.entries.get(str(s))
        return None if hit is None else hit[0]

    @classmethod
    def load(cls, text: str, seed: bool = True) -> BordismTable:
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines or lines[0] != TABLE_HEADER:
            raise TableError(f"bordism table must start with {TABLE_HEADER!r}")
        table = cls() if seed else cls({})
        for lineno, ln in enumerate(lines[1:], start=2):
            if ln.startswith("#"):
                continue
            body, _, cite = ln.partition(";")
            name, eq, group = body.partition("=")
            if not eq or not cite.strip():
                raise TableError(f"line {lineno}: expected '<symbol> = <group> ; <citation>'")
            try:
                g = parse_group(group.strip())
            except ValueError as exc:
                raise TableError(f"line {lineno}: {exc}") from None
            if not isinstance(g, GroupExpression) or not g.is_concrete:
                raise TableError(f"line {lineno}: table values must be concrete groups")
            table.entries[name.strip().replace(" ", "")] = (g.concrete, cite.strip())
        return table

    @classmethod
    def from_file(cls, path) -> BordismTable:
        return cls.load(Path(path).read_text())


_SYM = re.compile(r"^(N|Omega|Cso|C)\((\d+(?:,\d+)*)(?:;([^)]*))?\)$")
_CYC = re.compile(r"^Z(\d*)$")
_POW = re.compile(r"^Z\(3\^(\w+)\)\[0<=\w+<=(\d+)\]$")


def parse_group(text: str):
    """Inverse of ``str`` on group expressions."""
    text = text.strip()
    if text.startswith("no answer:"):
        return NoAnswer(text[len("no answer:"):].strip())
    if text.startswith("SES[") and text.endswith("]"):
        sub, mid, quot = [p.strip() for p in text[4:-1].split("->")]
        if mid != "?":
            raise ValueError(f"bad exact sequence {text!r}")
        return ExactSequence(parse_group(sub), parse_group(quot))
    out = GroupExpression()
    if text == "0":
        return out
    for part in text.split("+"):
        part = part.replace(" ", "")
        if m := _CYC.match(part):
            d = int(m.group(1)) if m.group(1) else 0
            if d == 1:
                raise ValueError("Z1 is not a valid summand")
            out = out + concrete(d)
        elif m := _SYM.match(part):
            idx = tuple(int(i) for i in m.group(2).split(","))
            out = out + symbol(m.group(1), *idx, target=m.group(3) or "")
        elif m := _POW.match(part):
            out = out + GroupExpression(undetermined=(ThreePower(m.group(1), int(m.group(2))),))
        else:
            raise ValueError(f"cannot parse group summand {part!r}")
    return out


# -- group assembly -----------------------------------------------------------


def _check_regime(n: int, k: int):
    if k < 0 or n != 2 * k + 1:
        raise OutOfRegime(
            f"(n, k) = ({n}, {k}) is outside the resolved regime n = 2k + 1; for 2k + 1 > n the "
            "forgetful morphisms to the cobordism groups of manifolds are isomorphisms"
        )


def fold_cobordism_group(n: int, k: int, oriented: bool):
    """Cobordism group of fold maps of ``n``-manifolds into ``R^{n+k}``, ``n = 2k + 1``."""
    _check_regime(n, k)
    if not oriented:
        return symbol("N", n)
    if k % 2 == 0:
        m = k // 2
        if m == 0:
            return concrete(2)
        if m == 1:
            return concrete(2, 2)
        return symbol("Omega", n)
    m = (k + 1) // 2
    return symbol("Omega", n) + concrete(3 ** t_invariant(m))


def fold_bordism_group(n: int, k: int, oriented: bool):
    """Bordism group of fold maps of ``n``-manifolds into ``(n+k)``-manifolds, ``n = 2k + 1``."""
    _check_regime(n, k)
    if not oriented:
        return symbol("C", n, k)
    if k % 2 == 0:
        m = k // 2
        if m in (0, 1):
            return concrete(2)
        return symbol("Cso", n, k)
    m = (k + 1) // 2
    return symbol("Cso", n, k) + GroupExpression(undetermined=(ThreePower("u", t_invariant(m)),))


def target_fold_group(n: int, profile: HomologyProfile, oriented: bool = True):
    """Fold cobordism group of maps of ``n``-manifolds into a closed manifold ``P``
    of dimension ``(3n - 1) / 2``."""
    if n < 1 or n % 2 == 0:
        raise OutOfRegime(f"source dimension must be odd and positive, got {n}")
    want = (3 * n - 1) // 2
    if profile.dimension != want:
        raise OutOfRegime(f"n = {n} needs a target of dimension {want}, got {profile.dimension}")
    tag = profile.name or "P"
    if not oriented:
        return symbol("N", n, target=tag)
    if not profile.orientable:
        return NoAnswer("oriented fold cobordism needs an orientable target")
    k = (n - 1) // 2
    if k % 2 == 0:
        m = k // 2
        if m == 0:
            if profile.looks_connected and profile.H(1) == FGAbGroup(1):
                return concrete(0, 2)
            return NoAnswer("only the target S^1 is resolved in dimension 1")
        if m == 1:
            check = low_homology_condition(profile)
            if not check.holds:
                return NoAnswer(f"condition H_1(P;Z2) = 0 = H_2(P;Z2) fails: {check.witness}")
            return ExactSequence(concrete(2), symbol("Omega", 5, target=tag))
        return symbol("Omega", n, target=tag)
    m = (k + 1) // 2
    return ExactSequence(
        GroupExpression(undetermined=(ThreePower("v", t_invariant(m)),)),
        symbol("Omega", n, target=tag),
    )
