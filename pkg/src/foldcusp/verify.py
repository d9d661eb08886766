"""The twelve replication claims, each computed from the library and compared
against its expected value. Deterministic: random inputs use fixed seeds."""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass
from pathlib import Path

from . import catalog, charnum, fgab, foldgroups, normalforms, steenrod
from .catalog import ManifoldModel
from .expr import build_model, data_path
from .fgab import FGAbGroup, HomologyProfile
from .ringcore import pair_with_fundamental_class

PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"


@dataclass
class Claim:
    id: str
    title: str
    inputs: dict
    computed: object
    expected: object
    basis: str  # "stated value", "independent oracle" or "property"
    status: str
    note: str = ""

    def line(self) -> str:
        return f"{self.status} {self.id}: {self.title}" + (f" ({self.note})" if self.note else "")


def _status(ok: bool) -> str:
    return PASS if ok else FAIL


# -- shared generators ---------------------------------------------------------


def catalog_models() -> list[ManifoldModel]:
    models = [catalog.real_projective(n) for n in range(1, 7)]
    models += [catalog.complex_projective(n) for n in range(1, 5)]
    models += [catalog.sphere(n) for n in range(1, 7)]
    models += [catalog.dold(m, n) for m, n in [(0, 1), (1, 1), (1, 2), (2, 1), (3, 1), (2, 2)]]
    wall = data_path("wall_x6.ring")
    if wall.is_file():
        models.append(catalog.load_structure_model(wall.read_text()))
    return models


SMALL_ATOMS = ["RP(1)", "RP(2)", "RP(3)", "RP(4)", "CP(1)", "CP(2)", "S(2)", "S(3)", "Dold(1,1)", "Dold(1,2)"]


def random_products(count: int, seed: int = 20240601, max_basis: int = 200) -> list[str]:
    """Expressions for random products of 2 or 3 small atoms."""
    rng = random.Random(seed)
    sizes = {a: len(build_model(a).mod2_ring) for a in SMALL_ATOMS}
    out = []
    while len(out) < count:
        parts = [rng.choice(SMALL_ATOMS) for _ in range(rng.choice((2, 3)))]
        size = 1
        for p in parts:
            size *= sizes[p]
        if size <= max_basis:
            out.append(" x ".join(parts))
    return out


def random_closed_profile(rng: random.Random) -> HomologyProfile:
    """Integral homology of a (hypothetical) closed orientable 7-manifold:
    Betti numbers symmetric, torsion of ``H_j`` equal to that of ``H_{6-j}``."""
    betti = {j: rng.choice((0, 0, 1, 2)) for j in (1, 2, 3)}
    tors = {j: tuple(rng.choice((2, 3, 4, 5, 9)) for _ in range(rng.choice((0, 0, 1, 2)))) for j in (1, 2, 3)}
    groups = {0: fgab.Z, 7: fgab.Z, 6: FGAbGroup(betti[1])}
    for j in (1, 2, 3):
        groups[j] = FGAbGroup(betti[j], tors[j])
    groups[4] = FGAbGroup(betti[3], tors[2])
    groups[5] = FGAbGroup(betti[2], tors[1])
    return HomologyProfile.from_dict(7, groups)


def random_poly_families(count: int, seed: int = 7):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        deg = rng.randint(1, 5)
        coeffs = [rng.randint(-6, 6) for _ in range(deg + 1)]
        if coeffs[-1] == 0:
            continue
        fam = normalforms.FamilyModel.polynomial(coeffs, -2.0, 2.0, sample_count=801)
        if min(abs(fam.psi(-2.0)), abs(fam.psi(2.0))) <= fam.tol:
            continue
        out.append(fam)
    return out


def parity_conserved(fam: normalforms.FamilyModel) -> bool:
    scan = normalforms.detect_cusps(fam)
    lo = normalforms.critical_points(fam.psi(fam.s_min), fam.tol)
    hi = normalforms.critical_points(fam.psi(fam.s_max), fam.tol)
    return hi - lo == 2 * (scan.births - scan.deaths)


# -- the claims ------------------------------------------------------------------


def claim_rp2() -> Claim:
    rp2 = catalog.real_projective(2)
    wbar = charnum.normal_sw_class(rp2)
    got = {
        f"{i},{j}": pair_with_fundamental_class(wbar.component(i) * wbar.component(j))
        for i in range(3)
        for j in range(3)
        if i + j == 2
    }
    want = {"0,2": 0, "1,1": 1, "2,0": 0}
    return Claim("C1", "RP(2) normal numbers", {"manifold": "RP(2)"}, got, want, "stated value", _status(got == want))


def claim_dold() -> Claim:
    y = catalog.dold(1, 2)
    got = {
        "w1": str(y.sw(1)),
        "w5": str(y.sw(5)),
        "w2w3[Y]": charnum.sw_number(y, (2, 3), normal=False),
    }
    want = {"w1": "0", "w5": "0", "w2w3[Y]": 1}
    return Claim("C2", "Dold(1,2) classes", {"manifold": "Dold(1,2)"}, got, want, "stated value", _status(got == want))


def claim_cusp_parity() -> Claim:
    yy = charnum.cusp_parity(build_model("Dold(1,2)^2"))
    nn = charnum.cusp_parity(build_model("(Dold(1,2) x RP(2))^2"))
    got = {
        "Y x Y": [yy.square_term, yy.product_term, yy.parity],
        "(Y x RP2)^2": [nn.square_term, nn.product_term, nn.parity],
    }
    want = {"Y x Y": [0, 1, 1], "(Y x RP2)^2": [0, 1, 1]}
    return Claim(
        "C3", "cusp parity on Y x Y and (Y x RP2)^2",
        {"manifolds": ["Dold(1,2)^2", "(Dold(1,2) x RP(2))^2"]}, got, want, "stated value", _status(got == want),
    )


VANISHING_BASES = ["RP(1)", "RP(3)", "RP(5)", "Dold(1,1)", "Dold(1,2)", "Dold(3,1)", "RP(2) x RP(1)"]


def claim_vanishing() -> Claim:
    got = {}
    for n in VANISHING_BASES:
        got[n] = charnum.cusp_parity(build_model(f"({n})^2")).square_term
    want = {n: 0 for n in VANISHING_BASES}
    return Claim(
        "C4", "square summand vanishes on N x N", {"N": VANISHING_BASES}, got, want, "property", _status(got == want)
    )


def claim_steenrod() -> Claim:
    cp4 = catalog.complex_projective(4)
    ctx = steenrod.SteenrodContext(cp4)
    a = cp4.mod2_ring.gen("a")
    chain = steenrod.sq(ctx, 4, steenrod.sq(ctx, 2, a))
    got = {"Sq4 Sq2 a": str(chain), "pairing": pair_with_fundamental_class(chain)}
    want = {"Sq4 Sq2 a": "a^4", "pairing": 1}
    return Claim("C5", "Sq^4 Sq^2 a on CP(4)", {"manifold": "CP(4)"}, got, want, "stated value", _status(got == want))


def claim_triadic() -> Claim:
    got = {
        "t(1)": foldgroups.t_invariant(1),
        "t(8)": foldgroups.t_invariant(8),
        "group(3,1)": str(foldgroups.fold_cobordism_group(3, 1, True)),
        "group(31,15)": str(foldgroups.fold_cobordism_group(31, 15, True)),
    }
    want = {"t(1)": 1, "t(8)": 2, "group(3,1)": "Omega(3) + Z3", "group(31,15)": "Omega(31) + Z9"}
    return Claim("C6", "triadic invariant t", {"m": [1, 8]}, got, want, "stated value", _status(got == want))


def claim_pontryagin() -> Claim:
    cp2 = catalog.complex_projective(2)
    p1 = charnum.normal_pontryagin_number(cp2, 1)
    est = charnum.pontryagin_gcd_estimate(
        8, [catalog.complex_projective(4), build_model("CP(2) x CP(2)", require_integral=True)]
    )
    got = {
        "|pbar1[CP2]|": abs(p1),
        "3^t(1)": 3 ** foldgroups.t_invariant(1),
        "|pbar2|": [abs(v) for v in est.values],
        "gcd": est.gcd,
        "3^t(2)": est.power,
    }
    want = {"|pbar1[CP2]|": 3, "3^t(1)": 3, "|pbar2|": [15, 9], "gcd": 3, "3^t(2)": 3}
    return Claim(
        "C7", "normal Pontryagin numbers and 3^t", {"manifolds": ["CP(2)", "CP(4)", "CP(2) x CP(2)"]},
        got, want, "independent oracle", _status(got == want),
    )


def claim_groups() -> Claim:
    s1 = fgab.sphere_profile(1)
    got = {
        "cob(1,0,so)": str(foldgroups.fold_cobordism_group(1, 0, True)),
        "cob(5,2,so)": str(foldgroups.fold_cobordism_group(5, 2, True)),
        "cob(7,3,so)": str(foldgroups.fold_cobordism_group(7, 3, True)),
        "cob(2k+1,k)": [str(foldgroups.fold_cobordism_group(2 * k + 1, k, False)) for k in range(5)],
        "bord(5,2,so)": str(foldgroups.fold_bordism_group(5, 2, True)),
        "target(1,S1)": str(foldgroups.target_fold_group(1, s1)),
    }
    want = {
        "cob(1,0,so)": "Z2",
        "cob(5,2,so)": "Z2 + Z2",
        "cob(7,3,so)": "Omega(7) + Z3",
        "cob(2k+1,k)": [f"N({2 * k + 1})" for k in range(5)],
        "bord(5,2,so)": "Z2",
        "target(1,S1)": "Z + Z2",
    }
    return Claim("C8", "fold group assembly", {}, got, want, "stated value", _status(got == want))


def claim_condition(samples: int = 100, seed: int = 11) -> Claim:
    s7 = fgab.sphere_profile(7)
    s1s6 = fgab.product_profile(fgab.sphere_profile(1), fgab.sphere_profile(6))
    c1 = fgab.low_homology_condition(s7)
    c2 = fgab.low_homology_condition(s1s6)
    rng = random.Random(seed)
    disagreements = 0
    for _ in range(samples):
        p = random_closed_profile(rng)
        direct = fgab.low_homology_condition(p).holds
        via_hom = fgab.hom_z2(fgab.omega6_of_target(p)).is_trivial
        disagreements += direct != via_hom
    got = {"S7": c1.holds, "S1xS6": c2.holds, "S1xS6 witness": c2.witness, "disagreements": disagreements}
    want = {"S7": True, "S1xS6": False, "S1xS6 witness": "H_1(P;Z2) = Z2", "disagreements": 0}
    return Claim(
        "C9", "low-homology condition on 7-dimensional targets", {"random profiles": samples, "seed": seed},
        got, want, "property", _status(got == want),
    )


def claim_wu(count: int = 10) -> Claim:
    failures = [m.name for m in catalog_models() if not steenrod.wu_check(steenrod.SteenrodContext(m))]
    prods = random_products(count)
    failures += [e for e in prods if not steenrod.wu_check(steenrod.SteenrodContext(build_model(e)))]
    got = {"checked": len(catalog_models()) + len(prods), "failures": failures}
    want = {"checked": got["checked"], "failures": []}
    return Claim("C10", "Wu formula on catalog and random products", {"products": prods}, got, want, "property", _status(not failures))


def claim_normal_form(families: int = 200) -> Claim:
    scan = normalforms.detect_cusps(normalforms.FamilyModel.polynomial([0, -1, 1], -0.1, 1.1))
    labelled = [[s, kind] for s, kind in scan.summary()]
    const = normalforms.FamilyModel.constant(-1.0)
    const_scan = normalforms.detect_cusps(const)
    const_counts = sorted({c for _, c in normalforms.critical_count_profile(const)})
    violations = sum(not parity_conserved(f) for f in random_poly_families(families))
    got = {
        "s(s-1)": labelled,
        "const -1 cusps": len(const_scan.cusps),
        "const -1 critical counts": const_counts,
        "parity violations": violations,
    }
    want = {
        "s(s-1)": [[0.0, "death"], [1.0, "birth"]],
        "const -1 cusps": 0,
        "const -1 critical counts": [2],
        "parity violations": 0,
    }
    ok = got == want
    note = ""
    if got["s(s-1)"] != want["s(s-1)"] and labelled == [[0.0, "birth"], [1.0, "death"]]:
        note = "s(s-1) has 0 critical points for s < 0 and 2 on (0,1), so s = 0 is a birth as s increases"
    return Claim(
        "C11", "cusp detection in one-parameter families", {"epsilon": 0.1, "random families": families},
        got, want, "stated value", _status(ok), note,
    )


def claim_wall(config: Path | None) -> Claim:
    if config is None or not Path(config).is_file():
        return Claim("C12", "Wall manifold number", {"config": str(config)}, None, 0, "stated value", SKIP, "no ring config")
    x = catalog.load_structure_model(Path(config).read_text())
    wbar = charnum.normal_sw_class(x)
    sq = pair_with_fundamental_class(wbar.component(3) * wbar.component(3))
    pr = pair_with_fundamental_class(wbar.component(2) * wbar.component(4))
    wu_ok = steenrod.wu_check(steenrod.SteenrodContext(x))
    got = {"wbar3^2": sq, "wbar2 wbar4": pr, "sum": (sq + pr) % 2, "wu_check": wu_ok}
    want = {"wbar3^2": sq, "wbar2 wbar4": pr, "sum": 0, "wu_check": True}
    return Claim(
        "C12", "Wall manifold number", {"config": Path(config).name}, got, want, "stated value",
        _status(got["sum"] == 0 and wu_ok),
    )


def run_all(wall_config: Path | None = None) -> list[Claim]:
    if wall_config is None:
        wall_config = data_path("wall_x6.ring")
    return [
        claim_rp2(),
        claim_dold(),
        claim_cusp_parity(),
        claim_vanishing(),
        claim_steenrod(),
        claim_triadic(),
        claim_pontryagin(),
        claim_groups(),
        claim_condition(),
        claim_wu(),
        claim_normal_form(),
        claim_wall(wall_config),
    ]


def report(claims: list[Claim]) -> dict:
    return {
        "claims": [asdict(c) for c in claims],
        "summary": {s: sum(c.status == s for c in claims) for s in (PASS, FAIL, SKIP)},
    }

