"""Manifold models: mod-2 cohomology ring, total Stiefel-Whitney class,
Steenrod squares on ring generators, and (when torsion-free) integral
Pontryagin data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .ringcore import (
    Z2,
    ZZ,
    MonomialRing,
    RingElement,
    RingError,
    RingPresentation,
    StructureRing,
    kunneth_product,
    transport,
)


class ModelError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class ManifoldModel:
    name: str
    dimension: int
    orientable: bool
    mod2_ring: RingPresentation
    total_sw_class: RingElement
    # generator name -> [Sq^1 g, ..., Sq^{deg g} g]
    steenrod_on_generators: dict
    integral_ring: Optional[RingPresentation] = None
    total_pontryagin_class: Optional[RingElement] = None
    factors: tuple = field(default=(), repr=False)

    def __post_init__(self):
        ring = self.mod2_ring
        if ring.modulus != Z2:
            raise ModelError("mod2_ring must have Z2 coefficients")
        if ring.top_degree != self.dimension:
            raise ModelError(f"{self.name}: ring top degree {ring.top_degree} != dimension {self.dimension}")
        w = self.total_sw_class
        if w.component(0) != ring.one():
            raise ModelError(f"{self.name}: total Stiefel-Whitney class must start with 1")
        if self.orientable != w.component(1).is_zero():
            raise ModelError(f"{self.name}: orientability flag disagrees with w1 = {w.component(1)}")
        if self.dimension % 2 and not w.component(self.dimension).is_zero():
            raise ModelError(f"{self.name}: top Stiefel-Whitney class of an odd-dimensional manifold must vanish")
        for g, deg in ring.generators:
            sqs = self.steenrod_on_generators.get(g)
            if sqs is None or len(sqs) != deg:
                raise ModelError(f"{self.name}: need Sq^1..Sq^{deg} of generator {g}")
            for i, s in enumerate(sqs, start=1):
                if not s.is_zero() and s.degrees() != {deg + i}:
                    raise ModelError(f"{self.name}: Sq^{i} {g} = {s} is not of degree {deg + i}")
            x = ring.gen(g)
            if sqs[-1] != x * x:
                raise ModelError(f"{self.name}: Sq^{deg} {g} must equal {g}^2")
        if not self.factors:
            object.__setattr__(self, "factors", (self,))

    @property
    def has_integral_data(self) -> bool:
        return self.integral_ring is not None and self.total_pontryagin_class is not None

    def sw(self, i: int) -> RingElement:
        return self.total_sw_class.component(i)

    def __repr__(self):
        return f"ManifoldModel({self.name!r}, dim={self.dimension})"


def _sq_instability(ring: RingPresentation, g: str, lower=()):
    """Generator Sq data: the given lower squares, zero-filled, then ``g^2``."""
    deg = dict(ring.generators)[g]
    x = ring.gen(g)
    out = list(lower) + [ring.zero()] * (deg - 1 - len(lower))
    return out + [x * x]


def real_projective(n: int) -> ManifoldModel:
    if n < 1:
        raise ModelError("RP^n needs n >= 1")
    ring = MonomialRing([("a", 1)], [n + 1])
    a = ring.gen("a")
    w = (ring.one() + a) ** (n + 1)
    return ManifoldModel(
        f"RP{n}", n, w.component(1).is_zero(), ring, w, {"a": _sq_instability(ring, "a")}
    )


def complex_projective(n: int) -> ManifoldModel:
    if n < 1:
        raise ModelError("CP^n needs n >= 1")
    ring = MonomialRing([("a", 2)], [n + 1])
    a = ring.gen("a")
    w = (ring.one() + a) ** (n + 1)
    zring = MonomialRing([("g", 2)], [n + 1], modulus=ZZ)
    g = zring.gen("g")
    p = (zring.one() + g * g) ** (n + 1)
    return ManifoldModel(
        f"CP{n}",
        2 * n,
        True,
        ring,
        w,
        {"a": _sq_instability(ring, "a")},
        integral_ring=zring,
        total_pontryagin_class=p,
    )


def dold(m: int, n: int) -> ManifoldModel:
    """Dold manifold ``P(m, n) = (S^m x CP^n) / Z_2``, of dimension ``m + 2n``.

    ``H^* = Z_2[c, d] / (c^{m+1}, d^{n+1})`` with ``|c| = 1``, ``|d| = 2``,
    ``w = (1 + c)^m (1 + c + d)^{n+1}``, ``Sq^1 d = c d``.
    """
    if m < 0 or n < 0 or m + 2 * n < 1:
        raise ModelError("Dold manifold P(m, n) needs m, n >= 0 and m + 2n >= 1")
    ring = MonomialRing([("c", 1), ("d", 2)], [m + 1, n + 1])
    c, d = ring.gen("c"), ring.gen("d")
    one = ring.one()
    w = (one + c) ** m * (one + c + d) ** (n + 1)
    sq = {"c": [c * c], "d": [c * d, d * d]}
    return ManifoldModel(f"Dold({m},{n})", m + 2 * n, w.component(1).is_zero(), ring, w, sq)


def sphere(n: int) -> ManifoldModel:
    if n < 1:
        raise ModelError("S^n needs n >= 1")
    ring = MonomialRing([("s", n)], [2])
    zring = zp = None
    if n % 2 == 0:
        zring = MonomialRing([("s", n)], [2], modulus=ZZ)
        zp = zring.one()
    return ManifoldModel(
        f"S{n}", n, True, ring, ring.one(), {"s": _sq_instability(ring, "s")}, zring, zp
    )


def _rename_model(model: ManifoldModel, suffix: str):
    ring, kmap = model.mod2_ring.renamed(suffix)
    sq = {
        g + suffix: [transport(s, ring, kmap) for s in sqs]
        for g, sqs in model.steenrod_on_generators.items()
    }
    w = transport(model.total_sw_class, ring, kmap)
    zring = p = None
    if model.has_integral_data:
        zring, zmap = model.integral_ring.renamed(suffix)
        p = transport(model.total_pontryagin_class, zring, zmap)
    return ring, w, sq, zring, p


def _combine(parts, name, factors, integral: bool):
    ring, w, sq, zring, p = parts[0]
    for ring2, w2, sq2, zring2, p2 in parts[1:]:
        new, ia, ib = kunneth_product(ring, ring2)
        w = ia(w) * ib(w2)
        sq = {
            **{g: [ia(s) for s in v] for g, v in sq.items()},
            **{g: [ib(s) for s in v] for g, v in sq2.items()},
        }
        ring = new
        if integral:
            znew, za, zb = kunneth_product(zring, zring2)
            p = za(p) * zb(p2)
            zring = znew
    dim = ring.top_degree
    orientable = all(f.orientable for f in factors)
    return ManifoldModel(
        name, dim, orientable, ring, w, sq,
        zring if integral else None, p if integral else None, tuple(factors),
    )


def product(*models: ManifoldModel, require_integral: bool = False) -> ManifoldModel:
    """Cartesian product; rings by Kunneth, ``w`` by the Whitney product formula.

    Generators of the ``i``-th atomic factor get suffix ``i`` (1-based), so
    products are associative on the nose: ``product(product(A, B), C)`` and
    ``product(A, product(B, C))`` build the same presentation.
    """
    atoms = [f for m in models for f in m.factors]
    if not atoms:
        raise ModelError("product of no manifolds")
    if len(atoms) == 1:
        return atoms[0]
    integral = all(f.has_integral_data for f in atoms)
    if require_integral and not integral:
        missing = [f.name for f in atoms if not f.has_integral_data]
        raise ModelError(f"integral data requested but absent on {missing}")
    parts = [_rename_model(f, str(i)) for i, f in enumerate(atoms, start=1)]
    name = " x ".join(f.name for f in atoms)
    return _combine(parts, name, atoms, integral)


def power(model: ManifoldModel, j: int) -> ManifoldModel:
    if j < 1:
        raise ModelError("power must be >= 1")
    return product(*([model] * j))


def euler_characteristic(model: ManifoldModel) -> int:
    """Alternating sum of mod-2 Betti numbers."""
    ring = model.mod2_ring
    return sum((-1) ** d * len(ring.basis(d)) for d in range(ring.top_degree + 1))


_CODIM = {"S10": 1, "S11": 2, "S11-nontransverse": 3}
_ALIASES = {
    "Σ^{1,0}": "S10", "fold": "S10",
    "Σ^{1,1}": "S11", "cusp": "S11",
    "Σ^{1,1}-nontransverse": "S11-nontransverse",
}


def thom_boardman_codim(symbol: str, k: int) -> int:
    """Codimension in the source of a Thom-Boardman stratum of a map with codimension ``k``."""
    if k < 0:
        raise ValueError("codimension k must be non-negative")
    key = _ALIASES.get(symbol, symbol)
    if key not in _CODIM:
        raise ValueError(f"unknown singularity symbol {symbol!r}")
    return _CODIM[key] * (k + 1)


# -- structure-model configs -------------------------------------------------

HEADER = "# fold-ring v1"


def parse_structure_config(text: str) -> dict:
    """Parse the line-oriented ring/model format (see README, "Config formats")."""
    body = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not body or body[0] != HEADER:
        raise ModelError(f"config must start with the header line {HEADER!r}")
    cfg = {"name": "model", "coefficients": "Z2", "generators": [], "basis": {}, "mul": [], "sq": [], "sw": None, "top": None}
    for lineno, ln in enumerate(body[1:], start=2):
        if ln.startswith("#"):
            continue
        head, _, rest = ln.partition(" ")
        rest = rest.strip()
        if head == "name":
            cfg["name"] = rest
        elif head == "coefficients":
            if rest not in ("Z2", "Z"):
                raise ModelError(f"line {lineno}: coefficients must be Z2 or Z")
            cfg["coefficients"] = rest
        elif head == "generator":
            n, d = rest.split()
            cfg["generators"].append((n, int(d)))
        elif head == "basis":
            deg, *names = rest.split()
            for n in names:
                if n in cfg["basis"]:
                    raise ModelError(f"line {lineno}: basis element {n} declared twice")
                cfg["basis"][n] = int(deg)
        elif head == "top":
            cfg["top"] = rest
        elif head == "mul":
            lhs, _, rhs = rest.partition("=")
            x, y = lhs.split()
            cfg["mul"].append((x, y, rhs.strip(), lineno))
        elif head == "sq":
            lhs, _, rhs = rest.partition("=")
            g, i = lhs.split()
            cfg["sq"].append((g, int(i), rhs.strip(), lineno))
        elif head == "sw":
            cfg["sw"] = rest
        else:
            raise ModelError(f"line {lineno}: unknown directive {head!r}")
    return cfg


def _parse_sum(text: str) -> dict[str, int]:
    out: dict[str, int] = {}
    if text.strip() == "0":
        return out
    for part in text.replace("-", "+-").split("+"):
        part = part.strip()
        if not part:
            continue
        coef = 1
        if part.startswith("-"):
            coef, part = -1, part[1:].strip()
        if "*" in part and part.split("*", 1)[0].strip().lstrip("-").isdigit():
            c, part = part.split("*", 1)
            coef *= int(c)
            part = part.strip()
        out[part] = out.get(part, 0) + coef
    return out


def load_structure_ring(text: str) -> tuple[StructureRing, dict]:
    cfg = parse_structure_config(text)
    modulus = Z2 if cfg["coefficients"] == "Z2" else ZZ
    basis = dict(cfg["basis"])
    basis.setdefault("1", 0)
    basis = {"1": 0, **{k: v for k, v in basis.items() if k != "1"}}
    table = {}
    for x, y, rhs, lineno in cfg["mul"]:
        try:
            table[(x, y)] = _parse_sum(rhs)
        except ValueError as exc:
            raise ModelError(f"line {lineno}: {exc}") from None
    if modulus == ZZ:
        odd = [b for b, d in basis.items() if d % 2]
        if odd:
            raise ModelError(f"integral structure rings need even-degree basis elements; odd: {odd}")
    try:
        ring = StructureRing(basis, table, [g for g, _ in cfg["generators"]], cfg["top"], modulus)
    except RingError as exc:
        raise ModelError(str(exc)) from None
    for g, d in cfg["generators"]:
        if basis.get(g) != d:
            raise ModelError(f"generator {g} declared with degree {d} but basis says {basis.get(g)}")
    try:
        ring.check_associative()
    except RingError as exc:
        raise ModelError(str(exc)) from None
    return ring, cfg


def load_structure_model(text: str) -> ManifoldModel:
    """Build a :class:`ManifoldModel` from a structure-constant config.

    Unlisted ``sq`` entries below the top square default to zero; the top
    square ``Sq^{deg g} g = g^2`` is implied.
    """
    ring, cfg = load_structure_ring(text)
    if ring.modulus != Z2:
        raise ModelError("manifold configs describe mod-2 cohomology; use coefficients Z2")
    if cfg["sw"] is None:
        raise ModelError("config is missing the total Stiefel-Whitney class ('sw' line)")
    w = ring.parse(cfg["sw"])
    sq = {}
    for g, deg in ring.generators:
        lower = [ring.zero()] * (deg - 1)
        for g2, i, rhs, lineno in cfg["sq"]:
            if g2 != g:
                continue
            if not 1 <= i < deg:
                raise ModelError(f"line {lineno}: Sq^{i} {g} must be given only for 1 <= i < {deg}")
            lower[i - 1] = ring.parse(rhs)
        sq[g] = _sq_instability(ring, g, lower)
    for g2, *_rest in cfg["sq"]:
        if g2 not in sq:
            raise ModelError(f"sq line for unknown generator {g2!r}")
    missing = [b for b in ring.basis() if b != ring.one_key and ring.factor(b) is None]
    if missing:
        raise ModelError(f"basis elements {missing} are not generator multiples of other basis elements")
    return ManifoldModel(cfg["name"], ring.top_degree, w.component(1).is_zero(), ring, w, sq)
