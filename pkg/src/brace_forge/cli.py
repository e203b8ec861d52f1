"""Command-line entry point.

Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import braces as br
from . import serialize as ser
from .catalog import catalog_names, catalog_order, get_group
from .embedding import build_tilde, recover_rb_complete, verify_embedding, zeta_series
from .errors import BraceForgeError, Check
from .groups import (AUT_BOUND, HOL_GROUP_BOUND, HOL_ORDER_BOUND, FiniteGroup, automorphisms,
                     structure_report)
from .multibrace import build_multibrace, verify_multibrace
from .rb_algebra import (RbMatrix, algebra_rb_orbits, enumerate_algebra_rb, expected_count,
                         group_rb_from_matrix)
from .repro import TARGETS, run_target
from .rota_baxter import (RbOperator, classify_rb_orbits, construct_rb, derived_circle_group,
                          enumerate_rb_operators, inversion_operator, is_rb_operator,
                          is_rb_operator_weight_neg1, rb_criteria, transform_rb,
                          trivial_operator)
from .ybe import (direct_rb_solution, rack_form, rack_quandle_check, solution_from_brace,
                  rack_iff_sweep, solution_from_rack, solution_from_rb,
                  verify_solution)


@dataclass
class RunConfig:
    max_order: int = 12
    max_hol: int = HOL_ORDER_BOUND
    jobs: int = 1
    fmt: str = "json"
    out: str | None = None
    seed: int = 0
    deterministic: bool = True


class UsageError(BraceForgeError):
    pass


GLOBAL_DEFAULTS = {"out": None, "format": "json", "jobs": 1, "max_order": 12,
                   "max_hol": HOL_ORDER_BOUND, "seed": 0}


# ---------------------------------------------------------------------------
# output


def _scalar(v) -> str:
    if isinstance(v, float):
        return f"{v:.3f}"
    if isinstance(v, (dict, list)):
        return json.dumps(v, ensure_ascii=False)
    return str(v)


def to_text(report: dict) -> str:
    """Aligned key/value lines; lists of flat dicts become column tables."""
    lines: list[str] = []
    scalars = [(k, v) for k, v in report.items() if not (isinstance(v, list) and v and isinstance(v[0], dict))]
    tables = [(k, v) for k, v in report.items() if isinstance(v, list) and v and isinstance(v[0], dict)]
    width = max((len(k) for k, _ in scalars), default=0)
    for k, v in scalars:
        lines.append(f"{k.ljust(width)}  {_scalar(v)}")
    for k, rows in tables:
        cols = list(rows[0])
        cells = [[_scalar(r.get(c, "")) for c in cols] for r in rows]
        widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
        lines.append("")
        lines.append(f"{k}:")
        lines.append("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip())
        for row in cells:
            lines.append("  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def emit(report: dict, cfg: RunConfig):
    text = ser.dumps(report) + "\n" if cfg.fmt == "json" else to_text(report)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# input helpers


def _group(args) -> FiniteGroup:
    if getattr(args, "in_file", None):
        return ser.group_from_json(ser.load_file(args.in_file))
    if not getattr(args, "group", None):
        raise UsageError("need --group NAME or --in FILE")
    return get_group(args.group)


def _operator(args, cfg: RunConfig) -> RbOperator:
    if getattr(args, "in_file", None):
        return ser.operator_from_json(ser.load_file(args.in_file))
    if getattr(args, "group", None) is None:
        raise UsageError("need --in FILE or --group NAME --index K")
    G = get_group(args.group)
    ops = enumerate_rb_operators(G, cfg.max_order, cfg.jobs)
    k = getattr(args, "index", 0) or 0
    if not 0 <= k < len(ops):
        raise UsageError(f"--index must lie in 0..{len(ops) - 1}")
    return ops[k]


def _brace(args, cfg: RunConfig) -> br.SkewBrace:
    if getattr(args, "in_file", None):
        return ser.brace_from_json(ser.load_file(args.in_file))
    if getattr(args, "group", None):
        return br.brace_from_rb(_operator(args, cfg))
    raise UsageError("need --in FILE or --group NAME --index K")


def _check(c: Check | bool) -> dict:
    return c.as_dict() if isinstance(c, Check) else {"ok": bool(c)}


def _members(A_or_G, members) -> list[str]:
    return [A_or_G.labels[i] for i in members]


def _parse_elements(G: FiniteGroup, text: str) -> list[int]:
    out = []
    for tok in text.split(";"):
        tok = tok.strip()
        if not tok:
            continue
        out.append(int(tok) if tok.isdigit() else G.index(tok))
    return out


# ---------------------------------------------------------------------------
# group


def cmd_group_build(args, cfg):
    G = _group(args)
    return ser.group_to_json(G), True


def cmd_group_info(args, cfg):
    G = _group(args)
    s = structure_report(G, AUT_BOUND)
    rep = {
        "name": G.name, "order": G.order, "abelian": s.is_abelian, "nilpotent": s.is_nilpotent,
        "solvable": s.is_solvable, "metabelian": s.is_metabelian,
        "center": _members(G, s.center.members), "complete": s.is_complete,
        "derived_series_orders": [x.order for x in s.derived_series],
        "upper_central_series_orders": [x.order for x in s.upper_central_series],
    }
    if G.order <= AUT_BOUND:
        rep["aut_order"] = len(automorphisms(G, AUT_BOUND))
    return rep, True


def cmd_group_list(args, cfg):
    return {"groups": [{"name": n, "order": catalog_order(n)} for n in catalog_names(args.max_listed)]}, True


# ---------------------------------------------------------------------------
# rb


def _op_row(op: RbOperator, i: int) -> dict:
    return {"index": i, "images": op.images.tolist(),
            "image_order": len(np.unique(op.images))}


def cmd_rb_enumerate(args, cfg):
    G = _group(args)
    ops = enumerate_rb_operators(G, cfg.max_order, cfg.jobs)
    return {"group": G.name, "order": G.order, "count": len(ops),
            "operators": [_op_row(op, i) for i, op in enumerate(ops)]}, True


def cmd_rb_verify(args, cfg):
    op = _operator(args, cfg)
    c = is_rb_operator(op.group, op.images) if op.weight == 1 else is_rb_operator_weight_neg1(op.group, op.images)
    rep = {"group": op.group.name, "weight": op.weight, "rb_identity": _check(c)}
    if not c and c.witness:
        rep["witness_labels"] = _members(op.group, c.witness)
    return rep, bool(c)


def cmd_rb_transform(args, cfg):
    op = _operator(args, cfg)
    phi = None
    if args.kind == "aut":
        auts = automorphisms(op.group, max(AUT_BOUND, op.group.order))
        if not 0 <= args.aut < len(auts):
            raise UsageError(f"--aut must lie in 0..{len(auts) - 1}")
        phi = auts[args.aut]
    kind = {"tilde": "tilde", "aut": "aut_conj", "swap": "weight_swap"}[args.kind]
    new = transform_rb(op, kind, phi)
    return ser.operator_to_json(new), True


def cmd_rb_construct(args, cfg):
    G = _group(args)
    if args.kind == "trivial":
        op = trivial_operator(G)
    elif args.kind == "inversion":
        op = inversion_operator(G)
    elif args.kind == "splitting":
        if not (args.H and args.L):
            raise UsageError("splitting needs --H and --L generator lists")
        H = G.closure(_parse_elements(G, args.H))
        L = G.closure(_parse_elements(G, args.L))
        op = construct_rb("splitting", G, H, L)
    else:
        raise UsageError(f"unknown construction {args.kind}")
    return ser.operator_to_json(op), True


def cmd_rb_classify(args, cfg):
    G = _group(args)
    part = classify_rb_orbits(G, merge_tilde=args.merge_tilde)
    return {"group": G.name, "operators": sum(len(o) for o in part.orbits), "orbits": part.count,
            "orbit_sizes": [len(o) for o in part.orbits],
            "representatives": [list(r) for r in part.representatives]}, True


def cmd_rb_derive(args, cfg):
    op = _operator(args, cfg)
    circ = derived_circle_group(op)
    crit = rb_criteria(op)
    s = structure_report(circ, 0)
    return {"circle_group": ser.group_to_json(circ), "circle_abelian": s.is_abelian,
            "abelian_circ_identity": _check(crit.abelian_circ_identity),
            "homomorphism_to_additive": _check(crit.homomorphism_to_additive)}, True


# ---------------------------------------------------------------------------
# algebra


def _parse_matrix(text: str) -> RbMatrix:
    try:
        return RbMatrix(json.loads(text))
    except json.JSONDecodeError as exc:
        raise UsageError(f"--matrix must be a JSON array: {exc}") from exc


def cmd_algebra_enumerate(args, cfg):
    ms = enumerate_algebra_rb(args.n)
    return {"n": args.n, "count": len(ms), "expected": expected_count(args.n),
            "matrices": [[list(r) for r in m.r] for m in ms]}, len(ms) == expected_count(args.n)


def cmd_algebra_orbits(args, cfg):
    rep = algebra_rb_orbits(args.n)
    return {"n": args.n, "count": rep.count, "orbit_sizes": rep.orbit_sizes,
            "representatives": [[list(r) for r in m.r] for m in rep.representatives]}, True


def cmd_algebra_lift(args, cfg):
    m = _parse_matrix(args.matrix)
    G = _group(args)
    P, op = group_rb_from_matrix(m, G)
    return ser.operator_to_json(op), True


# ---------------------------------------------------------------------------
# brace


def cmd_brace_from_rb(args, cfg):
    op = _operator(args, cfg)
    A = br.brace_from_rb(op) if op.weight == 1 else br.brace_from_rb_neg1(op)
    return ser.brace_to_json(A), True


def cmd_brace_verify(args, cfg):
    if not args.in_file:
        raise UsageError("brace verify needs --in FILE")
    d = ser.load_file(args.in_file)
    ser._require(d, ("add", "circ"), "brace")
    r = br.verify_brace((np.asarray(d["add"]), np.asarray(d["circ"])))
    return {"left": _check(r.left), "right": _check(r.right), "two_sided": r.two_sided,
            "trivial": r.trivial, "is_brace": r.is_brace}, bool(r.left)


def cmd_brace_invariants(args, cfg):
    A = _brace(args, cfg)
    inv = br.invariant_subsets(A)
    la = br.lambda_analysis(A)
    st = br.star_and_series(A)
    lh = br.is_lambda_homomorphic(A)
    rep = {
        "socle": _members(A, inv.socle.members),
        "left_center": _members(A, inv.left_center.members),
        "annihilator": _members(A, inv.annihilator.members),
        "lambda_ok": la.ok,
        "left_series_orders": [len(s) for s in st.left_series],
        "left_star_nilpotent": st.is_left_star_nilpotent,
        "lambda_homomorphic": lh.is_lambda_homomorphic,
        "ideals": [_members(A, S.members) for S in A.add.subgroups() if br.is_ideal(A, S.members)],
    }
    return rep, la.ok


def cmd_brace_enumerate(args, cfg):
    G = _group(args)
    bs = br.enumerate_braces(G, args.dedupe, HOL_GROUP_BOUND if cfg.max_order > HOL_GROUP_BOUND else cfg.max_order,
                             cfg.max_hol)
    rows = []
    for i, A in enumerate(bs):
        s = structure_report(A.circ, 0)
        rows.append({"index": i, "trivial": br.verify_brace(A).trivial or "-",
                     "circ_abelian": s.is_abelian,
                     "circ_element_orders": np.sort(A.circ.element_orders).tolist()})
    return {"group": G.name, "count": len(bs), "deduplicated": args.dedupe, "braces": rows}, True


def cmd_brace_quotient(args, cfg):
    A = _brace(args, cfg)
    I = _parse_elements(A.add, args.ideal)
    return ser.brace_to_json(br.quotient_brace(A, I)), True


def cmd_brace_isomorphic(args, cfg):
    A = ser.brace_from_json(ser.load_file(args.in_file))
    A2 = ser.brace_from_json(ser.load_file(args.other))
    phi = br.brace_isomorphic(A, A2)
    return {"isomorphic": phi is not None, "map": None if phi is None else phi.tolist()}, phi is not None


def cmd_brace_semidirect(args, cfg):
    A, B = get_group(args.a), get_group(args.b)
    if args.action == "trivial":
        beta = [np.arange(A.order)] * B.order
    elif args.action == "inversion":
        if not A.is_abelian() or B.order % 2:
            raise UsageError("inversion action needs abelian A and |B| even")
        gens = [B.power(1, k) for k in range(B.order)] if B.order > 1 else [0]
        beta = [None] * B.order
        for k, b in enumerate(gens):
            beta[b] = A.inv.copy() if k % 2 else np.arange(A.order)
    else:
        raise UsageError("action must be trivial or inversion")
    S = br.semidirect_brace(A, B, beta)
    return ser.brace_to_json(S), True


def cmd_brace_parity_window(args, cfg):
    r = br.parity_brace_window(args.N)
    return {"N": r.N, "checks": {k: v.as_dict() for k, v in r.checks.items()}}, r.ok


# ---------------------------------------------------------------------------
# embed


def cmd_embed_tilde(args, cfg):
    A = _brace(args, cfg)
    T = build_tilde(A)
    return {"group": ser.group_to_json(T.group), "splitting_operator": T.operator.images.tolist(),
            "psi": [int(T.psi[g]) for g in range(A.order)]}, True


def cmd_embed_verify(args, cfg):
    A = _brace(args, cfg)
    r = verify_embedding(A)
    return r.as_dict(), r.ok


def cmd_embed_zeta(args, cfg):
    A = _brace(args, cfg)
    z = zeta_series(A)
    return {"series": [_members(A, sorted(s)) for s in z.series],
            "strong_left_nilpotent": z.is_strong_left_nilpotent,
            "strong_left_ideals": z.strong_left_ideals, "psi_normal": z.psi_normal}, z.ok


def cmd_embed_recover(args, cfg):
    A = _brace(args, cfg)
    return ser.operator_to_json(recover_rb_complete(A)), True


# ---------------------------------------------------------------------------
# ybe


def cmd_ybe_from_brace(args, cfg):
    return ser.solution_to_json(solution_from_brace(_brace(args, cfg))), True


def cmd_ybe_from_rb(args, cfg):
    return ser.solution_to_json(solution_from_rb(_operator(args, cfg))), True


def cmd_ybe_verify(args, cfg):
    S = ser.solution_from_json(ser.load_file(args.in_file))
    r = verify_solution(S)
    rep = r.as_dict()
    rep["is_solution"] = r.is_solution
    rep["nondegenerate"] = r.nondegenerate
    return rep, r.is_solution


def cmd_ybe_rack_form(args, cfg):
    S = ser.solution_from_json(ser.load_file(args.in_file))
    r = rack_form(S)
    rep = {"solution": ser.solution_to_json(r.solution), "formula": _check(r.formula),
           "uniqueness_condition": _check(r.uniqueness_condition),
           "conjugate_is_solution": r.report.is_solution}
    if r.rack_report is not None:
        rep["rack"] = r.rack_report.as_dict()
    return rep, bool(r.formula) and r.report.is_solution


def cmd_ybe_from_rack(args, cfg):
    R = ser.rack_from_json(ser.load_file(args.in_file))
    S = solution_from_rack(R)
    rr = rack_quandle_check(R)
    sr = verify_solution(S)
    return {"solution": ser.solution_to_json(S), "rack": rr.as_dict(), "solution_report": sr.as_dict(),
            "iff_holds": rr.is_rack == sr.ok}, rr.is_rack == sr.ok


def cmd_ybe_rack_sweep(args, cfg):
    c = rack_iff_sweep(args.n, args.sample, cfg.seed)
    return {"n": args.n, "sampled": args.sample, "seed": cfg.seed, "iff": _check(c)}, bool(c)


def cmd_ybe_direct_rb(args, cfg):
    d = direct_rb_solution(_operator(args, cfg))
    return {"solution": ser.solution_to_json(d.solution), "valid": d.valid,
            "printed_identity": _check(d.printed_identity),
            "central_criterion": _check(d.central_criterion),
            "printed_identity_agrees": d.printed_agrees,
            "central_criterion_agrees": d.central_agrees}, d.printed_agrees and d.central_agrees


# ---------------------------------------------------------------------------
# multibrace


def cmd_multibrace_build(args, cfg):
    return ser.multibrace_to_json(build_multibrace(_operator(args, cfg), args.k)), True


def cmd_multibrace_verify(args, cfg):
    d = ser.load_file(args.in_file)
    ser._require(d, ("tables",), "multibrace")
    r = verify_multibrace([np.asarray(t) for t in d["tables"]])
    return {"levels": [_check(c) for c in r.levels], "ok": r.ok}, r.ok


# ---------------------------------------------------------------------------
# paper


def cmd_paper_repro(args, cfg):
    names = list(TARGETS) if args.example == "all" else [args.example]
    results = [run_target(n) for n in names]
    if len(results) == 1:
        rep = results[0].as_dict()
        rep.pop("seconds")
        return rep, results[0].ok
    return {"targets": [{"target": r.name, "ok": r.ok} for r in results]}, all(r.ok for r in results)


# ---------------------------------------------------------------------------
# parser


def _add_common(p: argparse.ArgumentParser, group=True, infile=True, index=False):
    if group:
        p.add_argument("--group", help="catalog name or constructor descriptor")
    if infile:
        p.add_argument("--in", dest="in_file", metavar="FILE", help="JSON input")
    if index:
        p.add_argument("--index", type=int, default=0, help="operator index in the enumeration of --group")


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="FILE", default=argparse.SUPPRESS)
    common.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS)
    common.add_argument("--max-order", type=int, default=argparse.SUPPRESS)
    common.add_argument("--max-hol", type=int, default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    parser = argparse.ArgumentParser(prog="brace-forge", parents=[common],
                                     description="Rota–Baxter operators, skew braces and Yang–Baxter solutions on finite groups")
    top = parser.add_subparsers(dest="area", required=True)

    def area(name, help_):
        p = top.add_parser(name, help=help_)
        return p.add_subparsers(dest="action", required=True)

    def cmd(sub, name, fn: Callable, **opts):
        p = sub.add_parser(name, parents=[common])
        _add_common(p, **opts)
        p.set_defaults(fn=fn)
        return p

    g = area("group", "finite groups")
    cmd(g, "build", cmd_group_build)
    cmd(g, "info", cmd_group_info)
    p = cmd(g, "list", cmd_group_list, group=False, infile=False)
    p.add_argument("--max-listed", type=int, default=None)

    r = area("rb", "Rota–Baxter operators")
    cmd(r, "enumerate", cmd_rb_enumerate)
    cmd(r, "verify", cmd_rb_verify, index=True)
    p = cmd(r, "transform", cmd_rb_transform, index=True)
    p.add_argument("--kind", choices=("tilde", "aut", "swap"), required=True)
    p.add_argument("--aut", type=int, default=0, help="automorphism index for --kind aut")
    p = cmd(r, "construct", cmd_rb_construct)
    p.add_argument("--kind", choices=("trivial", "inversion", "splitting"), required=True)
    p.add_argument("--H", help="generators of H, ';'-separated labels or indices")
    p.add_argument("--L", help="generators of L")
    p = cmd(r, "classify", cmd_rb_classify)
    p.add_argument("--merge-tilde", action="store_true")
    cmd(r, "derive", cmd_rb_derive, index=True)

    a = area("algebra", "RB operators on the split algebra k^n")
    for name, fn in (("enumerate", cmd_algebra_enumerate), ("orbits", cmd_algebra_orbits)):
        p = cmd(a, name, fn, group=False, infile=False)
        p.add_argument("--n", type=int, required=True)
    p = cmd(a, "lift", cmd_algebra_lift)
    p.add_argument("--matrix", required=True, help="JSON array, e.g. '[[0,1],[0,-1]]'")

    b = area("brace", "skew left braces")
    cmd(b, "from-rb", cmd_brace_from_rb, index=True)
    cmd(b, "verify", cmd_brace_verify, group=False)
    cmd(b, "invariants", cmd_brace_invariants, index=True)
    p = cmd(b, "enumerate", cmd_brace_enumerate)
    p.add_argument("--dedupe", action="store_true")
    p = cmd(b, "quotient", cmd_brace_quotient, index=True)
    p.add_argument("--ideal", required=True, help="';'-separated labels or indices")
    p = cmd(b, "isomorphic", cmd_brace_isomorphic, group=False)
    p.add_argument("--other", required=True, metavar="FILE")
    p = cmd(b, "semidirect", cmd_brace_semidirect, group=False, infile=False)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--action", default="inversion")
    p = cmd(b, "parity-window", cmd_brace_parity_window, group=False, infile=False)
    p.add_argument("--N", type=int, default=50)

    e = area("embed", "enveloping RB-group of a brace")
    for name, fn in (("tilde", cmd_embed_tilde), ("verify", cmd_embed_verify),
                     ("zeta", cmd_embed_zeta), ("recover", cmd_embed_recover)):
        cmd(e, name, fn, index=True)

    y = area("ybe", "Yang–Baxter solutions")
    cmd(y, "from-brace", cmd_ybe_from_brace, index=True)
    cmd(y, "from-rb", cmd_ybe_from_rb, index=True)
    cmd(y, "verify", cmd_ybe_verify, group=False)
    cmd(y, "rack-form", cmd_ybe_rack_form, group=False)
    cmd(y, "from-rack", cmd_ybe_from_rack, group=False)
    cmd(y, "direct-rb", cmd_ybe_direct_rb, index=True)
    p = cmd(y, "rack-sweep", cmd_ybe_rack_sweep, group=False, infile=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sample", type=int, default=None, help="random tables instead of all n^(n^2)")

    m = area("multibrace", "skew left k-braces")
    p = cmd(m, "build", cmd_multibrace_build, index=True)
    p.add_argument("--k", type=int, default=2)
    cmd(m, "verify", cmd_multibrace_verify, group=False)

    pp = area("paper", "reproduce worked examples")
    p = cmd(pp, "repro", cmd_paper_repro, group=False, infile=False)
    p.add_argument("--example", required=True, choices=sorted(TARGETS) + ["all"])
    return parser


def run_command(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    for key, value in GLOBAL_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    cfg = RunConfig(max_order=args.max_order, max_hol=args.max_hol, jobs=args.jobs,
                    fmt=args.format, out=args.out, seed=args.seed)
    if cfg.max_order <= 0 or cfg.max_hol <= 0 or cfg.jobs <= 0:
        sys.stderr.write("error: bounds and --jobs must be positive\n")
        return 2
    try:
        report, ok = args.fn(args, cfg)
    except (BraceForgeError, KeyError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    emit(report, cfg)
    return 0 if ok else 1


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
