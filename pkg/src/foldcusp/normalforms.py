"""Morin cusp normal form and one-parameter families ``u = x (x^2 + psi(s))``.

For fixed ``s`` the map ``x -> x (x^2 + psi(s))`` has ``2``, ``1`` or ``0``
critical points as ``psi(s)`` is negative, zero or positive. A transverse zero
of ``psi`` is a cusp of the family; reading ``s`` upwards, a zero where ``psi``
turns negative is a *birth* (``0 -> 2`` critical points) and one where it turns
positive is a *death* (``2 -> 0``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np
from numpy.polynomial.polynomial import polyder, polyval
from scipy.optimize import brentq, minimize_scalar


class FamilyError(ValueError):
    pass


class SamplingTooCoarse(FamilyError):
    pass


@dataclass(frozen=True)
class MorinCuspMap:
    """Cusp germ ``R^{2k+2} -> R^{3k+2}``:
    ``y_j = t_j``, ``y_{2k+1} = s``, ``z_j = x t_{2j-1} + x^2 t_{2j}``, ``u = x (x^2 + s)``.
    """

    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be non-negative")

    @property
    def source_dim(self) -> int:
        return 2 * self.k + 2

    @property
    def target_dim(self) -> int:
        return 3 * self.k + 2


def eval_morin(germ: MorinCuspMap, t, s, x):
    """Evaluate the normal form; works for any numeric type (int, Fraction, sympy)."""
    t = tuple(t)
    if len(t) != 2 * germ.k:
        raise ValueError(f"expected {2 * germ.k} t-coordinates, got {len(t)}")
    y = t + (s,)
    z = tuple(x * t[2 * j] + x**2 * t[2 * j + 1] for j in range(germ.k))
    u = x * (x**2 + s)
    return y, z, u


def critical_points(psi_value: float, tol: float = 0.0) -> int:
    """Number of real roots of ``3 x^2 + psi``."""
    if abs(psi_value) <= tol:
        return 1
    return 2 if psi_value < 0 else 0


@dataclass(frozen=True)
class FamilyModel:
    psi: Callable[[float], float]
    s_min: float
    s_max: float
    sample_count: int = 2001
    tol: float = 1e-9
    dpsi: Optional[Callable[[float], float]] = None
    label: str = ""
    vectorized: bool = False  # psi and dpsi accept numpy arrays

    def __post_init__(self):
        if self.sample_count < 2:
            raise FamilyError("sample_count must be >= 2")
        if not self.s_min < self.s_max:
            raise FamilyError("need s_min < s_max")
        if self.tol <= 0:
            raise FamilyError("tolerance must be positive")

    @classmethod
    def polynomial(cls, coeffs, s_min, s_max, **kw):
        """``psi(s) = sum coeffs[i] * s^i`` (lowest degree first)."""
        c = np.asarray(coeffs, dtype=float)
        dc = polyder(c) if len(c) > 1 else np.zeros(1)
        kw.setdefault("label", "poly:" + ",".join(str(c) for c in coeffs))
        return cls(lambda s: polyval(s, c), s_min, s_max, dpsi=lambda s: polyval(s, dc), vectorized=True, **kw)

    @classmethod
    def constant(cls, value, s_min=-1.0, s_max=1.0, **kw):
        kw.setdefault("label", f"const:{value}")
        return cls(lambda s: float(value), s_min, s_max, dpsi=lambda s: 0.0, **kw)

    def derivative(self, s: float) -> float:
        if self.dpsi is not None:
            return self.dpsi(s)
        h = 1e-6 * max(1.0, self.s_max - self.s_min)
        return (self.psi(s + h) - self.psi(s - h)) / (2 * h)

    def with_samples(self, n: int) -> FamilyModel:
        return FamilyModel(self.psi, self.s_min, self.s_max, n, self.tol, self.dpsi, self.label, self.vectorized)

    def sample(self, f, xs: np.ndarray) -> np.ndarray:
        if self.vectorized:
            return np.asarray(f(xs), dtype=float)
        return np.array([f(x) for x in xs], dtype=float)


@dataclass(frozen=True)
class CuspEvent:
    s: float
    slope_sign: int  # sign of psi'(s)
    transverse: bool = True

    @property
    def kind(self) -> str:
        return "death" if self.slope_sign > 0 else "birth"


@dataclass(frozen=True)
class CuspScan:
    events: tuple[CuspEvent, ...]
    degenerate: tuple[float, ...] = ()

    @property
    def cusps(self) -> tuple[CuspEvent, ...]:
        return tuple(e for e in self.events if e.transverse)

    @property
    def births(self) -> int:
        return sum(1 for e in self.events if e.kind == "birth")

    @property
    def deaths(self) -> int:
        return sum(1 for e in self.events if e.kind == "death")

    def summary(self):
        return [(round(e.s, 9) + 0.0, e.kind) for e in self.cusps]


def detect_cusps(family: FamilyModel) -> CuspScan:
    """Zeros of ``psi`` on ``(s_min, s_max)``, tagged birth/death by the slope.

    Roots are bracketed by exact sign changes between samples and refined with
    Brent's method. Crossings with ``|psi'| < tol`` are kept as non-transverse
    events; sign-preserving touches (``|psi| <= tol`` at an extremum) are listed
    in ``degenerate``.
    """
    psi, tol = family.psi, family.tol
    if abs(psi(family.s_min)) <= tol or abs(psi(family.s_max)) <= tol:
        raise FamilyError("psi vanishes at an endpoint of the parameter interval")
    grid = np.linspace(family.s_min, family.s_max, family.sample_count)
    mids = 0.5 * (grid[:-1] + grid[1:])
    vals = family.sample(psi, grid)
    slopes = np.sign(family.sample(family.derivative, grid))
    mid_slopes = np.sign(family.sample(family.derivative, mids))

    events: list[CuspEvent] = []
    degenerate: list[float] = []

    def crossing(root, direction):
        transverse = abs(float(family.derivative(root))) >= tol
        events.append(CuspEvent(float(root), direction, transverse))
        if not transverse:
            degenerate.append(float(root))

    for i in range(len(grid) - 1):
        a, b = grid[i], grid[i + 1]
        fa, fb = vals[i], vals[i + 1]
        turns = (slopes[i] * mid_slopes[i] < 0) + (mid_slopes[i] * slopes[i + 1] < 0)
        if turns > 1:
            raise SamplingTooCoarse(f"psi' changes sign more than once in [{a:.6g}, {b:.6g}]; increase sample_count")

        if fb == 0:
            # exact zero on a sample: decide crossing or touch from the neighbours
            after = vals[i + 2]
            if fa * after < 0:
                crossing(b, 1 if after > fa else -1)
            else:
                degenerate.append(float(b))
            continue
        if fa == 0:
            continue
        if fa * fb < 0:
            if turns:
                raise SamplingTooCoarse(
                    f"psi' changes sign inside a root bracket [{a:.6g}, {b:.6g}]; increase sample_count"
                )
            crossing(brentq(psi, a, b, xtol=1e-12, maxiter=500), 1 if fb > fa else -1)
        elif turns:
            res = minimize_scalar(
                lambda s: psi(s) * np.sign(fa), bounds=(a, b), method="bounded", options={"xatol": 1e-13}
            )
            extremum = psi(res.x)
            if extremum * fa < 0 and abs(extremum) > tol:
                raise SamplingTooCoarse(
                    f"psi crosses zero twice between samples near s = {res.x:.6g}; increase sample_count"
                )
            if abs(extremum) <= tol:
                degenerate.append(float(res.x))
    return CuspScan(tuple(events), tuple(degenerate))


def critical_count_profile(family: FamilyModel, points: int = 201):
    grid = np.linspace(family.s_min, family.s_max, points)
    return [(float(s), critical_points(family.psi(s), family.tol)) for s in grid]


# -- the cancellation scenario ------------------------------------------------


def smoothstep(u: float) -> float:
    """C^1 monotone ramp from 0 (u <= 0) to 1 (u >= 1)."""
    u = min(max(u, 0.0), 1.0)
    return u * u * (3 - 2 * u)


def plateau_bump(epsilon: float, plateau: float = -1.0 / 3.0):
    """``C(s)``: 0 near both ends of ``[-eps, 1 + eps]``, ``plateau`` on
    ``[-eps/4, 1 + eps/4]``, monotone cubic ramps in between."""

    def C(s: float) -> float:
        if s <= -0.75 * epsilon or s >= 1 + 0.75 * epsilon:
            return 0.0
        if s < -0.25 * epsilon:
            return plateau * smoothstep((s + 0.75 * epsilon) / (0.5 * epsilon))
        if s <= 1 + 0.25 * epsilon:
            return plateau
        return plateau * smoothstep((1 + 0.75 * epsilon - s) / (0.5 * epsilon))

    return C


@dataclass(frozen=True)
class FamilyReport:
    label: str
    scan: CuspScan
    profile: list = field(repr=False)

    @property
    def cusp_count(self) -> int:
        return len(self.scan.cusps)

    def as_dict(self):
        return {
            "family": self.label,
            "cusps": [{"s": round(e.s, 9) + 0.0, "kind": e.kind} for e in self.scan.cusps],
            "degenerate": [round(s, 9) + 0.0 for s in self.scan.degenerate],
            "critical_counts": sorted({c for _, c in self.profile}),
        }


@dataclass(frozen=True)
class CancellationReport:
    epsilon: float
    plateau: float
    first: FamilyReport
    second: FamilyReport
    dichotomy: bool  # one family cusp-free, the other with exactly two cusps
    roles_as_described: bool  # first cusp-free with two critical points throughout, second with two cusps
    flipped: tuple[FamilyReport, ...] = ()

    def as_dict(self):
        return {
            "epsilon": self.epsilon,
            "plateau": self.plateau,
            "psi1": self.first.as_dict(),
            "psi2": self.second.as_dict(),
            "dichotomy": self.dichotomy,
            "roles_as_described": self.roles_as_described,
            "flipped": [f.as_dict() for f in self.flipped],
        }


def _report(label, psi, dpsi, lo, hi, samples):
    fam = FamilyModel(psi, lo, hi, samples, dpsi=dpsi, label=label)
    return FamilyReport(label, detect_cusps(fam), critical_count_profile(fam))


def cancellation_scenario(epsilon: float = 0.1, plateau: float = -1.0 / 3.0, samples: int = 4001) -> CancellationReport:
    """Scan ``psi1(s) = -s(s-1)`` and ``psi2(s) = C(s) - s(s-1)`` on ``[-eps, 1 + eps]``.

    When the pair does not show the described roles (``psi1`` with two
    critical points for every ``s``, ``psi2`` with a cancellation at 0 and a
    birth at 1) the sign-flipped variants ``s(s-1)`` and ``C(s) + s(s-1)`` are
    scanned as well.
    """
    if not 0 < epsilon < 0.25:
        raise FamilyError("epsilon must lie in (0, 1/4)")
    C = plateau_bump(epsilon, plateau)
    lo, hi = -epsilon, 1 + epsilon
    first = _report("psi1 = -s(s-1)", lambda s: -s * (s - 1), lambda s: 1 - 2 * s, lo, hi, samples)
    second = _report("psi2 = C(s) - s(s-1)", lambda s: C(s) - s * (s - 1), None, lo, hi, samples)
    counts = sorted([first.cusp_count, second.cusp_count])
    dichotomy = counts == [0, 2]
    first_ok = first.cusp_count == 0 and all(c == 2 for _, c in first.profile)
    second_ok = [e.kind for e in second.scan.cusps] == ["death", "birth"]
    roles = first_ok and second_ok
    flipped = ()
    if not roles:
        flipped = (
            _report("psi1' = s(s-1)", lambda s: s * (s - 1), lambda s: 2 * s - 1, lo, hi, samples),
            _report("psi2' = C(s) + s(s-1)", lambda s: C(s) + s * (s - 1), None, lo, hi, samples),
        )
    return CancellationReport(epsilon, plateau, first, second, dichotomy, roles, flipped)
