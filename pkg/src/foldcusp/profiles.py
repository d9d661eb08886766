"""Integral homology profiles of target manifolds: text format and builtins.

File format::

    # fold-profile v1
    name S1xS6
    dimension 7
    orientable yes
    H 0 1
    H 1 1
    H 6 1
    H 7 1

``H j r t1 t2 ...`` sets ``H_j(P;Z) = Z^r + Z_t1 + Z_t2 + ...``; unlisted
degrees are zero.
"""

from __future__ import annotations

from pathlib import Path

from .expr import Atom, ExprSyntaxError, Node, atoms, parse_manifold
from .fgab import TRIVIAL, Z, FGAbGroup, HomologyProfile, cyclic, product_profile, sphere_profile

HEADER = "# fold-profile v1"


class ProfileError(ValueError):
    pass


def parse_profile(text: str) -> HomologyProfile:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != HEADER:
        raise ProfileError(f"profile must start with {HEADER!r}")
    name, dim, orientable, groups = "", None, True, {}
    for lineno, ln in enumerate(lines[1:], start=2):
        if ln.startswith("#"):
            continue
        head, *rest = ln.split()
        try:
            if head == "name":
                name = " ".join(rest)
            elif head == "dimension":
                (dim,) = map(int, rest)
            elif head == "orientable":
                if rest not in (["yes"], ["no"]):
                    raise ProfileError("orientable must be yes or no")
                orientable = rest == ["yes"]
            elif head == "H":
                j, rank, *tors = map(int, rest)
                if j in groups:
                    raise ProfileError(f"H {j} given twice")
                groups[j] = FGAbGroup(rank, tuple(tors))
            else:
                raise ProfileError(f"unknown directive {head!r}")
        except ValueError as exc:
            raise ProfileError(f"line {lineno}: {exc}") from None
    if dim is None:
        raise ProfileError("missing 'dimension' line")
    try:
        return HomologyProfile.from_dict(dim, groups, orientable=orientable, name=name)
    except ValueError as exc:
        raise ProfileError(str(exc)) from None


def serialize_profile(p: HomologyProfile) -> str:
    out = [HEADER]
    if p.name:
        out.append(f"name {p.name}")
    out.append(f"dimension {p.dimension}")
    out.append(f"orientable {'yes' if p.orientable else 'no'}")
    for j, g in p.groups:
        if not g.is_trivial:
            out.append(" ".join(map(str, ["H", j, g.free_rank, *g.torsion])))
    return "\n".join(out) + "\n"


def _real_projective_profile(n: int) -> HomologyProfile:
    groups = {0: Z}
    for j in range(1, n):
        groups[j] = cyclic(2) if j % 2 else TRIVIAL
    groups[n] = Z if n % 2 else TRIVIAL
    return HomologyProfile.from_dict(n, groups, orientable=n % 2 == 1, name=f"RP{n}")


def _complex_projective_profile(n: int) -> HomologyProfile:
    groups = {2 * j: Z for j in range(n + 1)}
    return HomologyProfile.from_dict(2 * n, groups, name=f"CP{n}")


def _atom_profile(a: Atom) -> HomologyProfile:
    if a.kind == "S":
        return sphere_profile(a.args[0])
    if a.kind == "RP":
        return _real_projective_profile(a.args[0])
    if a.kind == "CP":
        return _complex_projective_profile(a.args[0])
    raise ProfileError(f"no builtin integral homology for {a.kind}(...); supply a profile file")


def profile_of(node: Node | str) -> HomologyProfile:
    """Kunneth profile of a product of spheres and projective spaces."""
    if isinstance(node, str):
        node = parse_manifold(node)
    parts = [_atom_profile(a) for a in atoms(node)]
    out = parts[0]
    for p in parts[1:]:
        out = product_profile(out, p)
    return out


def load_profile(source: str) -> HomologyProfile:
    """A profile file path, or a manifold expression such as ``S(1) x S(6)``."""
    path = Path(source)
    if path.is_file():
        return parse_profile(path.read_text())
    try:
        return profile_of(source)
    except ExprSyntaxError as exc:
        raise ProfileError(f"{source!r} is neither a profile file nor a manifold expression ({exc})") from None

