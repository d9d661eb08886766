"""``foldcusp`` command line.

Every subcommand prints a short human-readable table; ``--report FILE`` also
writes the result as JSON. Exit status: 0 on success, 1 when the computation
is rejected (or a verification claim fails), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import charnum, foldgroups, normalforms, steenrod, verify
from .expr import ExprSyntaxError, build_model, parse_manifold, serialize
from .profiles import load_profile
from .ringcore import pair_with_fundamental_class


class UsageError(Exception):
    pass


# -- helpers -------------------------------------------------------------------


def _model(text: str, integral: bool = False):
    try:
        parse_manifold(text)
    except ExprSyntaxError as exc:
        raise UsageError(f"bad manifold expression {text!r}: {exc}") from None
    return build_model(text, require_integral=integral)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.replace(" ", "").split(",") if p)
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _float_list(text: str) -> list[float]:
    try:
        return [float(p) for p in text.replace(" ", "").split(",") if p]
    except ValueError:
        raise UsageError(f"expected comma-separated numbers, got {text!r}") from None


def _table(rows) -> str:
    rows = [(str(a), str(b)) for a, b in rows]
    width = max((len(a) for a, _ in rows), default=0)
    return "\n".join(f"{a.ljust(width)}  {b}" for a, b in rows)


def _bordism_table(path):
    if path is None:
        return foldgroups.BordismTable()
    return foldgroups.BordismTable.from_file(path)


# -- subcommands -----------------------------------------------------------------


def cmd_normal_class(args):
    m = _model(args.manifold)
    total = m.total_sw_class if args.tangent else charnum.normal_sw_class(m)
    label = "w" if args.tangent else "wbar"
    rows = [(f"{label}_{i}", total.component(i)) for i in range(m.dimension + 1)]
    rows.append((label, total))
    data = {"manifold": m.name, "class": label, "components": {str(i): str(total.component(i)) for i in range(m.dimension + 1)}}
    return _table(rows), data, 0


def cmd_sw_number(args):
    m = _model(args.manifold)
    part = _int_list(args.partition)
    v = charnum.sw_number(m, part, normal=not args.tangent)
    label = "".join(f"{'w' if args.tangent else 'wbar'}_{i}" for i in part)
    return _table([(f"{label}[{m.name}]", v)]), {"manifold": m.name, "partition": list(part), "normal": not args.tangent, "value": v}, 0


def cmd_cusp_parity(args):
    r = charnum.cusp_parity(_model(args.manifold))
    k = r.k
    rows = [
        (f"wbar_{2 * k + 1}^2", r.square_term),
        (f"wbar_{2 * k + 2} wbar_{2 * k}", r.product_term),
        ("parity", r.parity),
    ]
    return f"{r.manifold} (k = {k})\n" + _table(rows), r.as_dict(), 0


def cmd_pontryagin(args):
    m = _model(args.manifold, integral=True)
    pbar = charnum.normal_pontryagin_class(m)
    data = {"manifold": m.name, "pbar": {str(i // 4): str(pbar.component(i)) for i in range(0, m.dimension + 1, 4)}}
    rows = [(f"pbar_{i // 4}", pbar.component(i)) for i in range(0, m.dimension + 1, 4)]
    if m.dimension % 4 == 0 and m.orientable:
        mm = m.dimension // 4
        v = charnum.normal_pontryagin_number(m, mm)
        rows.append((f"pbar_{mm}[{m.name}]", v))
        data["number"] = v
    return _table(rows), data, 0


def cmd_cusp_count(args):
    models = [_model(t, integral=True) for t in args.manifolds]
    dims = {m.dimension for m in models}
    if len(dims) != 1:
        raise UsageError(f"all manifolds must share one dimension, got {sorted(dims)}")
    est = charnum.pontryagin_gcd_estimate(dims.pop(), models)
    rows = [(f"pbar_{est.m}[{m.name}]", v) for m, v in zip(models, est.values)]
    rows += [("gcd", est.gcd), (f"3^t, t = {est.t}", est.power), ("divisible", est.divisible), ("tight", est.tight)]
    data = {
        "m": est.m, "values": dict(zip((m.name for m in models), est.values)), "gcd": est.gcd,
        "t": est.t, "3^t": est.power, "divisible": est.divisible, "tight": est.tight,
    }
    return _table(rows), data, 0


def _group_output(expr, args, inputs):
    text = str(expr)
    data = {**inputs, "group": text}
    if args.table:
        expanded = expr.expand(_bordism_table(args.table))
        data["expanded"] = str(expanded)
        text += f"\nexpanded: {expanded}"
    return text, data, 0


def cmd_group(args):
    g = foldgroups.fold_cobordism_group(args.n, args.k, args.oriented)
    return _group_output(g, args, {"n": args.n, "k": args.k, "oriented": args.oriented})


def cmd_bordism_group(args):
    g = foldgroups.fold_bordism_group(args.n, args.k, args.oriented)
    return _group_output(g, args, {"n": args.n, "k": args.k, "oriented": args.oriented})


def cmd_target_group(args):
    profile = load_profile(args.target)
    g = foldgroups.target_fold_group(args.n, profile, args.oriented)
    text, data, _ = _group_output(g, args, {"n": args.n, "target": profile.name or args.target, "oriented": args.oriented})
    return text, data, 1 if isinstance(g, foldgroups.NoAnswer) else 0


def cmd_steenrod(args):
    m = _model(args.manifold)
    ctx = steenrod.SteenrodContext(m)
    x = m.mod2_ring.parse(args.element)
    ops = _int_list(args.ops) if args.ops else ()
    y = x
    for i in reversed(ops):
        y = steenrod.sq(ctx, i, y)
    label = " ".join(f"Sq^{i}" for i in ops) or "id"
    rows = [(f"{label} ({x})", y)]
    data = {"manifold": m.name, "element": str(x), "ops": list(ops), "result": str(y)}
    if y.is_homogeneous and y.degrees() <= {m.dimension}:
        data["pairing"] = pair_with_fundamental_class(y)
        rows.append(("pairing with [M]", data["pairing"]))
    return _table(rows), data, 0


def cmd_wu_check(args):
    rows, data, bad = [], {}, 0
    for text in args.manifolds:
        m = _model(text)
        ctx = steenrod.SteenrodContext(m)
        ok = steenrod.wu_check(ctx)
        bad += not ok
        rows.append((m.name, f"{'ok' if ok else 'FAILED'}  v = {steenrod.wu_class(ctx)}"))
        data[m.name] = {"wu_class": str(steenrod.wu_class(ctx)), "ok": ok}
    return _table(rows), data, 1 if bad else 0


def _family(args) -> normalforms.FamilyModel:
    lo, hi = args.range
    kw = {"sample_count": args.samples, "tol": args.tol}
    psi = args.psi
    if psi.startswith("const:"):
        return normalforms.FamilyModel.constant(_float_list(psi[6:])[0], lo, hi, **kw)
    if psi == "psi1":
        return normalforms.FamilyModel.polynomial([0, 1, -1], lo, hi, label="psi1", **kw)
    if psi == "psi2":
        c = normalforms.plateau_bump(args.epsilon, args.plateau)
        return normalforms.FamilyModel(lambda s: c(s) - s * (s - 1), lo, hi, label="psi2", **kw)
    return normalforms.FamilyModel.polynomial(_float_list(psi), lo, hi, **kw)


def cmd_normal_form(args):
    if args.scenario:
        r = normalforms.cancellation_scenario(args.epsilon, args.plateau, args.samples)
        d = r.as_dict()
        lines = []
        for fam in [d["psi1"], d["psi2"], *d["flipped"]]:
            cusps = ", ".join(f"{c['kind']} at {c['s']:g}" for c in fam["cusps"]) or "none"
            lines.append((fam["family"], f"cusps: {cusps}; critical counts {fam['critical_counts']}"))
        lines += [("dichotomy", d["dichotomy"]), ("roles as described", d["roles_as_described"])]
        return _table(lines), d, 0
    if args.range is None:
        args.range = (-args.epsilon, 1 + args.epsilon)
    fam = _family(args)
    scan = normalforms.detect_cusps(fam)
    profile = normalforms.critical_count_profile(fam)
    data = {
        "family": fam.label or args.psi,
        "range": list(args.range),
        "cusps": [{"s": s, "kind": k} for s, k in scan.summary()],
        "degenerate": [round(s, 9) + 0.0 for s in scan.degenerate],
        "critical_counts": sorted({c for _, c in profile}),
    }
    rows = [(f"s = {s:g}", k) for s, k in scan.summary()] or [("cusps", "none")]
    rows += [("degenerate", data["degenerate"]), ("critical counts", data["critical_counts"])]
    return _table(rows), data, 0


def cmd_verify(args):
    claims = verify.run_all(Path(args.wall_config) if args.wall_config else None)
    text = "\n".join(c.line() for c in claims)
    rep = verify.report(claims)
    return text, rep, 1 if rep["summary"]["FAIL"] else 0


def cmd_parse(args):
    node = parse_manifold(args.expression)
    return serialize(node), {"expression": serialize(node), "dimension": node.dimension}, 0


# -- parser ----------------------------------------------------------------------


def _orientation(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--oriented", dest="oriented", action="store_true", default=True)
    g.add_argument("--unoriented", dest="oriented", action="store_false")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="foldcusp", description="Fold maps, cusps and characteristic numbers.")
    ap.add_argument("--report", metavar="FILE", help="also write the result as JSON")
    sub = ap.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(fn=fn)
        return p

    p = add("normal-class", cmd_normal_class, "normal (or tangent) Stiefel-Whitney classes")
    p.add_argument("manifold")
    p.add_argument("--tangent", action="store_true")

    p = add("sw-number", cmd_sw_number, "a Stiefel-Whitney number")
    p.add_argument("manifold")
    p.add_argument("--partition", required=True, help="e.g. 2,3")
    p.add_argument("--tangent", action="store_true")

    p = add("cusp-parity", cmd_cusp_parity, "parity of the cusp count of a generic map")
    p.add_argument("manifold")

    p = add("pontryagin", cmd_pontryagin, "normal Pontryagin classes and number")
    p.add_argument("manifold")

    p = add("cusp-count", cmd_cusp_count, "algebraic cusp counts and their gcd against 3^t")
    p.add_argument("manifolds", nargs="+")

    for name, fn, help_ in [
        ("group", cmd_group, "cobordism group of fold maps into Euclidean space"),
        ("bordism-group", cmd_bordism_group, "bordism group of fold maps"),
    ]:
        p = add(name, fn, help_)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        _orientation(p)
        p.add_argument("--table", metavar="FILE", help="bordism lookup table to expand symbols")

    p = add("target-group", cmd_target_group, "cobordism group of fold maps into a closed manifold P")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--target", required=True, help="profile file or expression such as 'S(1) x S(6)'")
    _orientation(p)
    p.add_argument("--table", metavar="FILE")

    p = add("steenrod", cmd_steenrod, "apply Steenrod squares to a class")
    p.add_argument("manifold")
    p.add_argument("--element", required=True, help="ring element, e.g. a or c*d")
    p.add_argument("--ops", default="", help="composite, applied right to left: 4,2 means Sq^4 Sq^2")

    p = add("wu-check", cmd_wu_check, "check w = Sq(v)")
    p.add_argument("manifolds", nargs="+")

    p = add("normal-form", cmd_normal_form, "cusps of u = x(x^2 + psi(s))")
    p.add_argument("--psi", default="psi1", help="psi1, psi2, const:<v> or coefficients c0,c1,...")
    p.add_argument("--range", type=float, nargs=2, metavar=("S_MIN", "S_MAX"))
    p.add_argument("--samples", type=int, default=4001)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--epsilon", type=float, default=0.1)
    p.add_argument("--plateau", type=float, default=-1.0 / 3.0)
    p.add_argument("--scenario", action="store_true", help="scan both families of the cancellation model")

    p = add("verify-paper", cmd_verify, "run all replication claims")
    p.add_argument("--wall-config", metavar="FILE", help="ring config for X6 (default: shipped data)")

    p = add("parse", cmd_parse, "parse and normalize a manifold expression")
    p.add_argument("expression")
    return ap


def run_command(argv) -> tuple[str, dict | None, int]:
    """Run one invocation; returns (stdout text, report data, exit status)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return "", None, int(exc.code or 0)
    try:
        text, data, code = args.fn(args)
    except (UsageError, ExprSyntaxError) as exc:
        return f"usage error: {exc}", None, 2
    except (ValueError, ArithmeticError) as exc:
        module = type(exc).__module__.rsplit(".", 1)[-1]
        if module == "builtins":
            module = args.command
        return f"error [{module}]: {exc}", {"error": str(exc), "module": module}, 1
    except OSError as exc:
        return f"error: {exc}", {"error": str(exc)}, 1
    if args.report:
        Path(args.report).write_text(json.dumps({"command": args.command, "result": data}, indent=2, sort_keys=True) + "\n")
    return text, data, code


def main(argv=None) -> int:
    text, _, code = run_command(sys.argv[1:] if argv is None else argv)
    if text:
        print(text, file=sys.stderr if code == 2 else sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
