"""Command-line interface.

Exit codes: 0 ok, 2 invalid input, 3 budget exceeded, 4 theorem
cross-validation disagreement.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import __version__
from .codecheck import analyze, dual_weight_enumerator
from .conjectures import get_conjecture, report_to_csv, report_to_json, scan_exponents, scan_to_csv, verify
from .cosets import all_cosets
from .errors import BudgetExceeded, ToCodesError
from .gf3m import MAX_DEFAULT_M, build_field
from .monomials import degenerate_apn_instances, known_apn_exponents, known_planar_exponents
from .theorems import THEOREM_IDS, cross_validate, disagreements, verdicts_to_csv, verdicts_to_json

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_DISAGREE = 0, 2, 3, 4


def dump_json(obj) -> str:
    """Canonical JSON: sorted keys, so parse + re-dump is byte-identical."""
    return json.dumps(obj, indent=1, sort_keys=True) + "\n"


def _field(args):
    return build_field(args.m, args.prim_poly, allow_large=args.budget_override)


def _table_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def cmd_analyze(args) -> tuple[str, int]:
    f = _field(args)
    rep = analyze(f, args.e, backend=args.backend)
    we = dual_weight_enumerator(f, rep.e, backend=args.backend) if args.dual_we else None
    if args.output == "json":
        d = rep.to_dict()
        if we is not None:
            d["dual_weight_enumerator"] = json.loads(we.to_json())
        return dump_json(d), EXIT_OK
    if args.output == "csv":
        d = rep.to_dict()
        return _table_csv(list(d), [["" if v is None else v for v in d.values()]]), EXIT_OK
    c = rep.conditions
    lines = [
        f"field        GF(3^{f.m}) defined by {f.prim_poly.pretty()}",
        f"exponent     e = {rep.e}  (|C_e| = {rep.ell_e})",
        f"generator    {rep.generator_poly.pretty()}",
        f"parameters   {rep.params_text()} {'optimal' if rep.optimal else 'not optimal'}",
        f"C1 e even    {'holds' if c.c1_even else 'fails'}",
        f"C2           {'holds' if c.c2_holds else f'fails (root x = {c.c2_witness})'}",
        f"C3           {'holds' if c.c3_holds else f'fails (root x = {c.c3_witness})'}",
        f"d derivation {rep.d_derivation}",
    ]
    if we is not None:
        lines.append(f"dual [{we.n}, {we.dim}] weight enumerator  {we.pretty()}")
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_dual_we(args) -> tuple[str, int]:
    f = _field(args)
    we = dual_weight_enumerator(f, args.e, backend=args.backend)
    if args.output == "json":
        return dump_json(json.loads(we.to_json())), EXIT_OK
    if args.output == "csv":
        return _table_csv(["weight", "count"], sorted(we.counts.items())), EXIT_OK
    return f"[{we.n}, {we.dim}] {we.pretty()}\n", EXIT_OK


def cmd_scan(args) -> tuple[str, int]:
    pred = (lambda r: r.optimal) if args.only_optimal else None
    rows = scan_exponents(args.m, pred, workers=args.workers, backend=args.backend)
    if args.output == "csv":
        return scan_to_csv(rows), EXIT_OK
    if args.output == "json":
        return dump_json([r.__dict__ for r in rows]), EXIT_OK
    n = 3**args.m - 1
    lines = [f"m={args.m} n={n}: {len(rows)} exponents, {sum(r.optimal for r in rows)} optimal"]
    seen = set()
    for r in rows:
        if r.leader in seen:
            continue
        seen.add(r.leader)
        tag = "planar" if r.planar else "APN" if r.apn else f"uniformity {r.uniformity}"
        lines.append(
            f"  coset {r.leader:>6}  [{n}, {r.k}, {r.d}] {'optimal' if r.optimal else '':7}  {tag}"
        )
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_families(args) -> tuple[str, int]:
    m = args.m
    groups = {
        "planar": known_planar_exponents(m),
        "apn": known_apn_exponents(m),
        "apn_degenerate": degenerate_apn_instances(m),
    }
    if args.output == "json":
        out = {
            k: [{"e": x.e, "raw": x.raw, "family": x.family, "h": x.h, "aliases": list(x.aliases)} for x in v]
            for k, v in groups.items()
        }
        return dump_json({"m": m, **out}), EXIT_OK
    if args.output == "csv":
        rows = [[k, x.e, x.raw, x.family, "" if x.h is None else x.h, ";".join(x.aliases)]
                for k, v in groups.items() for x in v]
        return _table_csv(["kind", "e", "raw", "family", "h", "aliases"], rows), EXIT_OK
    lines = []
    for k, title in (("planar", "planar exponents"), ("apn", "APN exponents"),
                     ("apn_degenerate", "APN-family instances that are planar")):
        if not groups[k] and k == "apn_degenerate":
            continue
        lines.append(f"{title} (m={m}):")
        for x in groups[k]:
            extra = f"  also {', '.join(x.aliases)}" if x.aliases else ""
            lines.append(f"  e={x.e:<8} {x.tag}{extra}")
        if not groups[k]:
            lines.append("  none")
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_verify_theorem(args) -> tuple[str, int]:
    ms = range(args.m_min, args.m_max + 1)
    hs = None if args.h is None else [args.h]
    verdicts = cross_validate(args.theorem, ms, hs, backend=args.backend)
    bad = disagreements(verdicts)
    code = EXIT_DISAGREE if bad else EXIT_OK
    if args.output == "csv":
        return verdicts_to_csv(verdicts), code
    if args.output == "json":
        return dump_json(json.loads(verdicts_to_json(verdicts))), code
    lines = [f"{args.theorem} m in [{args.m_min}, {args.m_max}]: {len(verdicts)} cells, {len(bad)} disagreements"]
    for v in bad:
        lines.append(f"  disagree m={v.m} h={v.h} e={v.e}: predicted {v.predicted_params or v.predicted_optimal}, "
                     f"observed {list(v.brute_force_params)}")
    inap = [v for v in verdicts if v.status == "inapplicable"]
    if inap:
        lines.append("  inapplicable: " + ", ".join(f"(m={v.m}, h={v.h})" for v in inap))
    return "\n".join(lines) + "\n", code


def cmd_verify_conjecture(args) -> tuple[str, int]:
    cache = None
    if args.resume:
        cache = os.environ.get("TOC_CACHE_DIR") or ".tocodes_cache"
    rep = verify(args.conjecture, args.m_max, allow_large=args.budget_override, workers=args.workers,
                 backend=args.backend, cache_dir=cache)
    if args.output == "csv":
        return report_to_csv(rep), EXIT_OK
    if args.output == "json":
        return dump_json(json.loads(report_to_json(rep))), EXIT_OK
    spec = get_conjecture(args.conjecture)
    lines = [f"e = {spec.formula}; {spec.statement}", rep.summary()]
    for c in rep.cells:
        if c.status in ("optimal", "not optimal"):
            lines.append(f"  m={c.m:<3} h={'-' if c.h is None else c.h:<3} e={c.e:<10} "
                         f"C1={int(c.c1)} C2={int(c.c2)} C3={int(c.c3)} [{3**c.m - 1}, {c.k}, {c.d}] {c.status}"
                         + ("" if c.in_hypothesis else "  (outside hypothesis)"))
        else:
            lines.append(f"  m={c.m:<3} h={'-' if c.h is None else c.h:<3} {c.status}")
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_field_info(args) -> tuple[str, int]:
    f = _field(args)
    info = {
        "m": f.m,
        "q": f.q,
        "n": f.n,
        "prim_poly": f.prim_poly.to_text(),
        "prim_poly_pretty": f.prim_poly.pretty(),
        "alpha": f.alpha,
        "cosets": len(all_cosets(f.n)) if f.m <= 10 else None,
    }
    if args.output == "json":
        return dump_json(info), EXIT_OK
    if args.output == "csv":
        return _table_csv(list(info), [["" if v is None else v for v in info.values()]]), EXIT_OK
    lines = [f"GF(3^{f.m}): q = {f.q}, n = {f.n}", f"primitive polynomial {f.prim_poly.pretty()}"]
    if info["cosets"] is not None:
        lines.append(f"{info['cosets']} cyclotomic cosets modulo n")
    shown = min(f.n, 3 * f.m)
    lines.append("alpha^i: " + " ".join(str(f.element(i)) for i in range(shown)) + (" ..." if shown < f.n else ""))
    return "\n".join(lines) + "\n", EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tocodes", description="Optimal ternary cyclic codes C_(1,e).")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("human", "json", "csv"), default="human")
    common.add_argument("--budget-override", action="store_true", help=f"allow fields beyond m={MAX_DEFAULT_M}")
    common.add_argument("--backend", choices=("numba", "numpy"), default=None)
    common.add_argument("--workers", type=int, default=1)
    fieldp = argparse.ArgumentParser(add_help=False)
    fieldp.add_argument("--m", type=int, required=True)
    fieldp.add_argument("--prim-poly", default=None, help="coefficients low to high, e.g. 1,2,0,1")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common, fieldp], help="parameters and optimality of C_(1,e)")
    a.add_argument("--e", type=int, required=True)
    a.add_argument("--dual-we", action="store_true", help="append the dual weight enumerator")
    a.set_defaults(func=cmd_analyze)

    d = sub.add_parser("dual-we", parents=[common, fieldp], help="weight enumerator of the dual code")
    d.add_argument("--e", type=int, required=True)
    d.set_defaults(func=cmd_dual_we)

    s = sub.add_parser("scan", parents=[common], help="classify every even exponent not in C_1")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--only-optimal", action="store_true")
    s.set_defaults(func=cmd_scan)

    fa = sub.add_parser("families", parents=[common], help="registered planar and APN exponents")
    fa.add_argument("--m", type=int, required=True)
    fa.set_defaults(func=cmd_families)

    t = sub.add_parser("verify-theorem", parents=[common], help="predicate vs brute force")
    t.add_argument("theorem", choices=THEOREM_IDS)
    t.add_argument("--m-min", type=int, default=2)
    t.add_argument("--m-max", type=int, default=6)
    t.add_argument("--h", type=int, default=None)
    t.set_defaults(func=cmd_verify_theorem)

    c = sub.add_parser("verify-conjecture", parents=[common], help="run a conjecture campaign")
    c.add_argument("conjecture", type=int, choices=range(1, 10), metavar="{1..9}")
    c.add_argument("--m-max", type=int, default=MAX_DEFAULT_M)
    c.add_argument("--resume", action="store_true", help="reuse per-cell results cached under TOC_CACHE_DIR")
    c.set_defaults(func=cmd_verify_conjecture)

    fi = sub.add_parser("field-info", parents=[common, fieldp], help="describe GF(3^m)")
    fi.set_defaults(func=cmd_field_info)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "workers", 1) < 1:
        print("error: --workers must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        text, code = args.func(args)
    except BudgetExceeded as exc:
        print(f"error: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ToCodesError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
