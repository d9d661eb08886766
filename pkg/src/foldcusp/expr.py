"""Manifold expressions such as ``(Dold(1,2) x RP(2))^2``.

Grammar (whitespace is ignored outside ``Load(...)``)::

    expr    := power (("x" | "×" | "*") power)*      left associative
    power   := primary ("^" INT)*
    primary := atom | "(" expr ")"
    atom    := RP(n) | CP(n) | S(n) | Dold(m,n) | Load(path)

``Load(@name)`` refers to a ring config shipped in ``foldcusp/data``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Union

from . import catalog
from .catalog import ManifoldModel


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


ATOMS = {"RP": 1, "CP": 1, "S": 1, "Dold": 2, "Load": 1}


@dataclass(frozen=True)
class Atom:
    kind: str
    args: tuple

    @property
    def dimension(self) -> int:
        if self.kind == "RP" or self.kind == "S":
            return self.args[0]
        if self.kind == "CP":
            return 2 * self.args[0]
        if self.kind == "Dold":
            return self.args[0] + 2 * self.args[1]
        return load_model(self.args[0]).dimension


@dataclass(frozen=True)
class Product:
    left: "Node"
    right: "Node"

    @property
    def dimension(self) -> int:
        return self.left.dimension + self.right.dimension


@dataclass(frozen=True)
class Power:
    base: "Node"
    exponent: int

    @property
    def dimension(self) -> int:
        return self.base.dimension * self.exponent


Node = Union[Atom, Product, Power]


def data_path(name: str) -> Path:
    return Path(str(resources.files("foldcusp") / "data" / name))


def _resolve(path: str) -> Path:
    if path.startswith("@"):
        name = path[1:]
        return data_path(name if "." in name else name + ".ring")
    return Path(path)


def load_model(path: str) -> ManifoldModel:
    p = _resolve(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise catalog.ModelError(f"cannot read ring config {path!r}: {exc.strerror}") from None
    return catalog.load_structure_model(text)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def error(self, msg, pos=None):
        raise ExprSyntaxError(msg, self.i if pos is None else pos)

    def skip(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.i += 1

    def integer(self) -> int:
        self.skip()
        m = re.compile(r"\d+").match(self.text, self.i)
        if not m:
            self.error("expected an integer")
        self.i = m.end()
        return int(m.group())

    def parse(self) -> Node:
        node = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return node

    def expr(self) -> Node:
        node = self.power()
        while self.peek() in ("x", "×", "*"):
            self.i += 1
            node = Product(node, self.power())
        return node

    def power(self) -> Node:
        node = self.primary()
        while self.peek() == "^":
            self.i += 1
            pos = self.i
            j = self.integer()
            if j < 1:
                self.error("power must be >= 1", pos)
            node = Power(node, j)
        return node

    def primary(self) -> Node:
        if self.peek() == "(":
            self.i += 1
            node = self.expr()
            self.expect(")")
            return node
        return self.atom()

    def atom(self) -> Atom:
        self.skip()
        start = self.i
        m = re.compile(r"[A-Za-z]+").match(self.text, self.i)
        if not m:
            self.error("expected a manifold atom" if self.peek() else "unexpected end of input")
        name = m.group()
        if name not in ATOMS:
            self.error(f"unknown atom {name!r}", start)
        self.i = m.end()
        self.expect("(")
        if name == "Load":
            close = self.text.find(")", self.i)
            if close < 0:
                self.error("unterminated Load(")
            path = self.text[self.i:close].strip()
            if not path:
                self.error("empty path in Load()")
            self.i = close + 1
            return Atom("Load", (path,))
        args = [self.integer()]
        for _ in range(ATOMS[name] - 1):
            self.expect(",")
            args.append(self.integer())
        self.expect(")")
        _validate(name, args, start)
        return Atom(name, tuple(args))


def _validate(name, args, pos):
    if name in ("RP", "CP", "S") and args[0] < 1:
        raise ExprSyntaxError(f"{name}(n) needs n >= 1", pos)
    if name == "Dold" and args[0] + 2 * args[1] < 1:
        raise ExprSyntaxError("Dold(m,n) needs m + 2n >= 1", pos)


def parse_manifold(text: str) -> Node:
    return _Parser(text).parse()


def serialize(node: Node) -> str:
    if isinstance(node, Atom):
        return f"{node.kind}({','.join(map(str, node.args))})"
    if isinstance(node, Power):
        inner = serialize(node.base)
        if isinstance(node.base, Product):
            inner = f"({inner})"
        return f"{inner}^{node.exponent}"
    right = serialize(node.right)
    if isinstance(node.right, Product):
        right = f"({right})"
    return f"{serialize(node.left)} x {right}"


def atoms(node: Node) -> list[Atom]:
    """Factors of the product with powers expanded."""
    if isinstance(node, Atom):
        return [node]
    if isinstance(node, Power):
        return atoms(node.base) * node.exponent
    return atoms(node.left) + atoms(node.right)


def build_atom(a: Atom) -> ManifoldModel:
    if a.kind == "RP":
        return catalog.real_projective(*a.args)
    if a.kind == "CP":
        return catalog.complex_projective(*a.args)
    if a.kind == "S":
        return catalog.sphere(*a.args)
    if a.kind == "Dold":
        return catalog.dold(*a.args)
    return load_model(a.args[0])


def build_model(node: Node | str, require_integral: bool = False) -> ManifoldModel:
    if isinstance(node, str):
        node = parse_manifold(node)
    parts = [build_atom(a) for a in atoms(node)]
    if len(parts) == 1:
        return parts[0]
    return catalog.product(*parts, require_integral=require_integral)
