"""Finite-dimensional graded-commutative rings over Z_2 or Z.

Two presentations are supported:

* :class:`MonomialRing` -- a truncated polynomial ring
  ``k[g_1, ..., g_r] / (g_1^{e_1}, ..., g_r^{e_r})``; basis keys are exponent
  tuples.
* :class:`StructureRing` -- an explicit basis (named elements, graded) with a
  full multiplication table; basis keys are the names.

Elements are sparse ``{basis key: coefficient}`` maps with no stored zeros.

>>> R = MonomialRing([("a", 1)], [3])
>>> a = R.gen("a")
>>> (R.one() + a + a**2) * (R.one() + a)
RingElement(1)
>>> invert_total_class(R.one() + a + a**2)
RingElement(1 + a)
"""

from __future__ import annotations

import itertools
import re
from functools import cached_property

Z2 = 2
ZZ = 0


class RingError(ValueError):
    pass


class RingPresentation:
    """Common interface; subclasses fill in the basis and the product of basis keys."""

    modulus: int
    generators: tuple[tuple[str, int], ...]
    top_degree: int
    top_key: object
    one_key: object

    # -- to be provided by subclasses
    def basis(self, degree: int | None = None) -> list:
        raise NotImplementedError

    def degree_of(self, key) -> int:
        raise NotImplementedError

    def multiply_basis(self, k1, k2) -> dict:
        raise NotImplementedError

    def key_name(self, key) -> str:
        raise NotImplementedError

    def generator_key(self, name: str):
        raise NotImplementedError

    def factor(self, key):
        """Split a positive-degree basis key as ``(generator name, rest key)``
        with ``gen * rest == key`` exactly, or return ``None``."""
        raise NotImplementedError

    def renamed(self, suffix: str) -> tuple[RingPresentation, dict]:
        """Copy with every generator name suffixed; returns ``(ring, key_map)``."""
        raise NotImplementedError

    # -- shared
    @property
    def coefficient_domain(self) -> str:
        return "Z2" if self.modulus == Z2 else "Z"

    def reduce(self, c: int) -> int:
        return c % 2 if self.modulus == Z2 else c

    @cached_property
    def basis_by_degree(self) -> dict[int, list]:
        out: dict[int, list] = {d: [] for d in range(self.top_degree + 1)}
        for k in self.basis():
            out[self.degree_of(k)].append(k)
        return out

    @property
    def generator_names(self) -> list[str]:
        return [n for n, _ in self.generators]

    def element(self, terms=None) -> RingElement:
        return RingElement(self, terms or {})

    def zero(self) -> RingElement:
        return RingElement(self, {})

    def one(self) -> RingElement:
        return RingElement(self, {self.one_key: 1})

    def gen(self, name: str) -> RingElement:
        return RingElement(self, {self.generator_key(name): 1})

    def basis_element(self, key) -> RingElement:
        return RingElement(self, {key: 1})

    def top(self) -> RingElement:
        return RingElement(self, {self.top_key: 1})

    def scalar(self, c: int) -> RingElement:
        return RingElement(self, {self.one_key: c})

    def parse(self, text: str) -> RingElement:
        return parse_element(self, text)

    def __len__(self):
        return len(self.basis())


class MonomialRing(RingPresentation):
    def __init__(self, generators, nilpotency, modulus: int = Z2):
        self.generators = tuple((str(n), int(d)) for n, d in generators)
        self.bounds = tuple(int(e) for e in nilpotency)
        self.modulus = modulus
        if len(self.bounds) != len(self.generators):
            raise RingError("one nilpotency exponent per generator is required")
        names = self.generator_names
        if len(set(names)) != len(names):
            raise RingError(f"duplicate generator names in {names}")
        for (n, d), e in zip(self.generators, self.bounds):
            if d < 1:
                raise RingError(f"generator {n} must have positive degree")
            if e < 1:
                raise RingError(f"nilpotency exponent of {n} must be >= 1")
            if modulus == ZZ and d % 2:
                raise RingError(f"integral presentations need even-degree generators; {n} has degree {d}")
        self._index = {n: i for i, n in enumerate(names)}
        self.degrees = tuple(d for _, d in self.generators)
        self.one_key = (0,) * len(self.generators)
        self.top_key = tuple(e - 1 for e in self.bounds)
        self.top_degree = self.degree_of(self.top_key)

    def __repr__(self):
        gens = ", ".join(f"{n}^{e}" for (n, _), e in zip(self.generators, self.bounds))
        return f"MonomialRing({self.coefficient_domain}[{', '.join(self.generator_names)}]/({gens}))"

    def __eq__(self, other):
        return (
            isinstance(other, MonomialRing)
            and self.generators == other.generators
            and self.bounds == other.bounds
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.generators, self.bounds, self.modulus))

    @cached_property
    def _basis(self):
        keys = list(itertools.product(*(range(e) for e in self.bounds)))
        keys.sort(key=lambda k: (self.degree_of(k), tuple(-x for x in k)))
        return keys

    def basis(self, degree=None):
        if degree is None:
            return list(self._basis)
        return list(self.basis_by_degree.get(degree, []))

    def degree_of(self, key):
        return sum(a * d for a, d in zip(key, self.degrees))

    def multiply_basis(self, k1, k2):
        s = tuple(a + b for a, b in zip(k1, k2))
        if any(x >= e for x, e in zip(s, self.bounds)):
            return {}
        return {s: 1}

    def key_name(self, key):
        parts = []
        for (n, _), a in zip(self.generators, key):
            if a == 1:
                parts.append(n)
            elif a > 1:
                parts.append(f"{n}^{a}")
        return "*".join(parts) if parts else "1"

    def generator_key(self, name):
        if name not in self._index:
            raise RingError(f"unknown generator {name!r}")
        if self.bounds[self._index[name]] < 2:
            return None
        k = [0] * len(self.generators)
        k[self._index[name]] = 1
        return tuple(k)

    def gen(self, name):
        key = self.generator_key(name)
        return self.zero() if key is None else RingElement(self, {key: 1})

    def factor(self, key):
        for i, a in enumerate(key):
            if a:
                rest = list(key)
                rest[i] -= 1
                return self.generators[i][0], tuple(rest)
        return None

    def renamed(self, suffix):
        ring = MonomialRing(
            [(n + suffix, d) for n, d in self.generators], self.bounds, self.modulus
        )
        return ring, {k: k for k in self.basis()}


class StructureRing(RingPresentation):
    """Ring given by a named graded basis and a multiplication table.

    ``table`` maps ``(name1, name2)`` to ``{name: coefficient}``; products with
    the unit are implicit, unlisted products are zero, and each unordered pair
    may be listed once (the other order follows by graded commutativity).
    """

    def __init__(self, basis_degrees, table, generators, top, modulus: int = Z2, unit: str = "1"):
        self.modulus = modulus
        self.one_key = unit
        self._degrees = dict(basis_degrees)
        if self._degrees.get(unit) != 0:
            raise RingError(f"unit {unit!r} must be a degree-0 basis element")
        zero_deg = [b for b, d in self._degrees.items() if d == 0]
        if zero_deg != [unit]:
            raise RingError(f"degree 0 must be spanned by the unit alone, got {zero_deg}")
        self._order = sorted(self._degrees, key=lambda b: (self._degrees[b], list(self._degrees).index(b)))
        self.top_degree = max(self._degrees.values())
        tops = [b for b, d in self._degrees.items() if d == self.top_degree]
        if len(tops) != 1:
            raise RingError(f"ambiguous top class: degree {self.top_degree} has basis {tops}")
        if top is not None and top != tops[0]:
            raise RingError(f"declared top class {top!r} is not the unique top-degree element {tops[0]!r}")
        self.top_key = tops[0]
        self.generators = tuple((g, self._degrees[g]) for g in generators)
        for g in generators:
            if g not in self._degrees:
                raise RingError(f"generator {g!r} is not a basis element")
        self._table: dict[tuple[str, str], dict[str, int]] = {}
        for (x, y), val in table.items():
            for b in (x, y, *val):
                if b not in self._degrees:
                    raise RingError(f"table entry {x}*{y} uses unknown basis element {b!r}")
            val = {k: self.reduce(c) for k, c in val.items() if self.reduce(c)}
            want = self._degrees[x] + self._degrees[y]
            for k in val:
                if self._degrees[k] != want:
                    raise RingError(
                        f"grading mismatch in {x}*{y}: term {k} has degree {self._degrees[k]}, expected {want}"
                    )
            sign = -1 if (self._degrees[x] * self._degrees[y]) % 2 else 1
            flipped = {k: self.reduce(sign * c) for k, c in val.items()}
            for key, v in (((x, y), val), ((y, x), flipped)):
                if key in self._table and self._table[key] != v:
                    raise RingError(f"conflicting table entries for {key[0]}*{key[1]}")
                self._table[key] = v

    def __repr__(self):
        return f"StructureRing({self.coefficient_domain}, basis={self._order})"

    def basis(self, degree=None):
        if degree is None:
            return list(self._order)
        return list(self.basis_by_degree.get(degree, []))

    def degree_of(self, key):
        return self._degrees[key]

    def multiply_basis(self, k1, k2):
        if k1 == self.one_key:
            return {k2: 1}
        if k2 == self.one_key:
            return {k1: 1}
        if self._degrees[k1] + self._degrees[k2] > self.top_degree:
            return {}
        return dict(self._table.get((k1, k2), {}))

    def key_name(self, key):
        return key

    def generator_key(self, name):
        if name not in dict(self.generators):
            raise RingError(f"unknown generator {name!r}")
        return name

    @cached_property
    def _factorization(self):
        out = {}
        for key in self._order:
            if key == self.one_key:
                continue
            if key in dict(self.generators):
                out[key] = (key, self.one_key)
                continue
            for g, _ in self.generators:
                hit = next((b for b in self._order if self.multiply_basis(g, b) == {key: 1}), None)
                if hit is not None:
                    out[key] = (g, hit)
                    break
        return out

    def factor(self, key):
        return self._factorization.get(key)

    def renamed(self, suffix):
        def rn(b):
            return b if b == self.one_key else b + suffix

        table = {(rn(x), rn(y)): {rn(k): c for k, c in v.items()} for (x, y), v in self._table.items()}
        ring = StructureRing(
            {rn(b): d for b, d in self._degrees.items()},
            table,
            [rn(g) for g, _ in self.generators],
            rn(self.top_key),
            self.modulus,
            self.one_key,
        )
        return ring, {b: rn(b) for b in self._order}

    def check_associative(self):
        """Raise :class:`RingError` naming the first non-associative basis triple."""
        basis = self._order
        for x, y, z in itertools.product(basis, repeat=3):
            lhs = self.basis_element(x) * self.basis_element(y) * self.basis_element(z)
            rhs = self.basis_element(x) * (self.basis_element(y) * self.basis_element(z))
            if lhs != rhs:
                raise RingError(f"multiplication table is not associative at ({x}, {y}, {z}): {lhs} != {rhs}")


class RingElement:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingPresentation, terms):
        self.ring = ring
        clean = {}
        for k, c in dict(terms).items():
            c = ring.reduce(int(c))
            if c:
                clean[k] = c
        self.terms = clean

    def _check(self, other):
        if isinstance(other, int):
            return self.ring.scalar(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        if other.ring is not self.ring and other.ring != self.ring:
            raise RingError("elements belong to different ring presentations")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return RingElement(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return RingElement(self.ring, {k: c * other for k, c in self.terms.items()})
        other = self._check(other)
        if other is NotImplemented:
            return other
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined")
        out = self.ring.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.scalar(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, key) -> int:
        return self.terms.get(key, 0)

    def component(self, d: int) -> RingElement:
        return graded_component(self, d)

    def degrees(self) -> set[int]:
        return {self.ring.degree_of(k) for k in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def __str__(self):
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=self.ring.basis().index)
        parts = []
        for k in keys:
            c = self.terms[k]
            name = self.ring.key_name(k)
            if c == 1:
                parts.append(name)
            elif name == "1":
                parts.append(str(c))
            elif c == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{c}*{name}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"RingElement({self})"


def multiply(x: RingElement, y: RingElement) -> RingElement:
    if x.ring != y.ring:
        raise RingError("elements belong to different ring presentations")
    ring = x.ring
    out: dict = {}
    for k1, c1 in x.terms.items():
        for k2, c2 in y.terms.items():
            for k, c in ring.multiply_basis(k1, k2).items():
                out[k] = out.get(k, 0) + c1 * c2 * c
    return RingElement(ring, out)


def graded_component(x: RingElement, d: int) -> RingElement:
    ring = x.ring
    return RingElement(ring, {k: c for k, c in x.terms.items() if ring.degree_of(k) == d})


def invert_total_class(x: RingElement) -> RingElement:
    """Inverse of a total class ``1 + (positive degree)`` via ``sum_j (1 - x)^j``."""
    ring = x.ring
    unit = x.coefficient(ring.one_key)
    if graded_component(x, 0) != ring.one():
        raise RingError(f"degree-0 component {unit} of {x} is not the unit 1")
    nil = ring.one() - x
    out = ring.one()
    power = ring.one()
    for _ in range(ring.top_degree):
        power = power * nil
        if power.is_zero():
            break
        out = out + power
    return out


def pair_with_fundamental_class(x: RingElement) -> int:
    return x.coefficient(x.ring.top_key)


def kunneth_product(a: RingPresentation, b: RingPresentation):
    """Tensor product ring with its two inclusions ``x -> x (x) 1`` and ``y -> 1 (x) y``.

    Clashing generator names are disambiguated by suffixing ``1`` / ``2``.
    """
    if a.modulus != b.modulus:
        raise RingError("cannot form a tensor product over different coefficient domains")
    amap = {k: k for k in a.basis()}
    bmap = {k: k for k in b.basis()}
    if set(a.generator_names) & set(b.generator_names):
        a0, b0 = a, b
        a, amap = a0.renamed("1")
        b, bmap = b0.renamed("2")
    else:
        a0, b0 = a, b

    if isinstance(a, MonomialRing) and isinstance(b, MonomialRing):
        ring = MonomialRing(a.generators + b.generators, a.bounds + b.bounds, a.modulus)
        na = len(a.generators)
        nb = len(b.generators)

        def incl_a(x):
            return RingElement(ring, {amap[k] + (0,) * nb: c for k, c in x.terms.items()})

        def incl_b(y):
            return RingElement(ring, {(0,) * na + bmap[k]: c for k, c in y.terms.items()})

        return ring, incl_a, incl_b

    def pair_name(ka, kb):
        na_, nb_ = a.key_name(ka), b.key_name(kb)
        if na_ == "1":
            return nb_
        if nb_ == "1":
            return na_
        return f"{na_}*{nb_}"

    degrees = {}
    names = {}
    for ka in a.basis():
        for kb in b.basis():
            n = pair_name(ka, kb)
            names[(ka, kb)] = n
            degrees[n] = a.degree_of(ka) + b.degree_of(kb)
    table = {}
    pairs = list(names)
    for i, (xa, xb) in enumerate(pairs):
        if xa == a.one_key and xb == b.one_key:
            continue
        for ya, yb in pairs[i:]:
            if ya == a.one_key and yb == b.one_key:
                continue
            sign = -1 if (b.degree_of(xb) * a.degree_of(ya)) % 2 else 1
            val = {}
            for ka, ca in a.multiply_basis(xa, ya).items():
                for kb, cb in b.multiply_basis(xb, yb).items():
                    n = names[(ka, kb)]
                    val[n] = val.get(n, 0) + sign * ca * cb
            table[(names[(xa, xb)], names[(ya, yb)])] = val
    gens = [names[(a.generator_key(g), b.one_key)] for g in a.generator_names if a.generator_key(g) is not None]
    gens += [names[(a.one_key, b.generator_key(g))] for g in b.generator_names if b.generator_key(g) is not None]
    ring = StructureRing(
        degrees, table, gens, names[(a.top_key, b.top_key)], a.modulus, unit=names[(a.one_key, b.one_key)]
    )

    def incl_a(x):
        return RingElement(ring, {names[(amap[k], b.one_key)]: c for k, c in x.terms.items()})

    def incl_b(y):
        return RingElement(ring, {names[(a.one_key, bmap[k])]: c for k, c in y.terms.items()})

    return ring, incl_a, incl_b


def transport(x: RingElement, ring: RingPresentation, key_map: dict) -> RingElement:
    return RingElement(ring, {key_map[k]: c for k, c in x.terms.items()})


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_']*)|(\^)|(\*)|(\+)|(-)|(\()|(\)))")


def parse_element(ring: RingPresentation, text: str) -> RingElement:
    """Parse sums of products such as ``"1 + a + a^2"`` or ``"3*g^2 - g1*g2"``.

    Names resolve to generators first, then to basis elements of a
    :class:`StructureRing`.
    """
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise RingError(f"cannot parse {text!r} at position {pos}")
        pos = m.end()
        kinds = ("int", "name", "^", "*", "+", "-", "(", ")")
        for kind, val in zip(kinds, m.groups()):
            if val is not None:
                tokens.append((kind, val))
                break
    i = 0

    def peek():
        return tokens[i][0] if i < len(tokens) else None

    def take():
        nonlocal i
        if i >= len(tokens):
            raise RingError(f"unexpected end of {text!r}")
        i += 1
        return tokens[i - 1]

    def atom():
        kind, val = take()
        if kind == "int":
            return ring.scalar(int(val))
        if kind == "name":
            if val in ring.generator_names:
                return ring.gen(val)
            if isinstance(ring, StructureRing) and val in ring.basis():
                return ring.basis_element(val)
            raise RingError(f"unknown name {val!r} in {text!r}")
        if kind == "(":
            e = expr()
            if take()[0] != ")":
                raise RingError(f"unbalanced parentheses in {text!r}")
            return e
        raise RingError(f"unexpected {val!r} in {text!r}")

    def power():
        base = atom()
        if peek() == "^":
            take()
            kind, val = take()
            if kind != "int":
                raise RingError(f"exponent must be an integer in {text!r}")
            base = base ** int(val)
        return base

    def term():
        sign = 1
        while peek() in ("+", "-"):
            if take()[0] == "-":
                sign = -sign
        out = power()
        while peek() == "*":
            take()
            out = out * power()
        return out * sign

    def expr():
        out = term()
        while peek() in ("+", "-"):
            kind = take()[0]
            t = term()
            out = out + t if kind == "+" else out - t
        return out

    if not tokens:
        raise RingError("empty expression")
    result = expr()
    if i != len(tokens):
        raise RingError(f"trailing input in {text!r}")
    return result
