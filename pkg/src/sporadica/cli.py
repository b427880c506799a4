"""Command-line front end: ``sporadica <command> ...``."""
from __future__ import annotations

import argparse
import json
import sys

from .errors import SporadicaError


def _emit(args, text: str, data) -> None:
    if args.json:
        print(json.dumps(data, indent=1, default=str))
    else:
        print(text)


def _config(args):
    from .checks import load_config
    cfg = load_config(getattr(args, "config", None))
    if args.budget is not None:
        cfg.budget = args.budget
    if args.seed is not None:
        cfg.seed = args.seed
    if args.terms is not None:
        cfg.terms = args.terms
    return cfg


# -- handlers ---------------------------------------------------------------------------

def cmd_field(args):
    from .gfq import make_field, verify_axioms, verify_frobenius
    F = make_field(args.p, args.f)
    axioms, frob = verify_axioms(F), verify_frobenius(F)
    terms = []
    for i in range(len(F.modulus) - 1, -1, -1):
        c = F.modulus[i]
        if c:
            mono = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
            terms.append(mono if c == 1 else (str(c) if i == 0 else f"{c}{mono}"))
    poly = " + ".join(terms)
    lines = [f"F_{F.q}: characteristic {F.p}, degree {F.f}",
             f"modulus {poly}, generator {F.generator}"]
    lines += [f"{k}: {'pass' if v else 'fail'}" for k, v in {**axioms, **frob}.items()]
    _emit(args, "\n".join(lines), {"q": F.q, "p": F.p, "f": F.f, "modulus": list(F.modulus),
                                  "axioms": axioms, "frobenius": frob})
    return 0 if all(axioms.values()) and all(frob.values()) else 1


def cmd_group_order(args):
    from .catalog import family_order
    fo = family_order(args.family, *args.params)
    _emit(args, str(fo.value), {"family": args.family, "params": args.params, "order": str(fo.value),
                                "factorization": str(fo)})
    return 0


def _load_group(path):
    from .permgrp import bsgs, read_generators
    degree, gens = read_generators(path)
    return bsgs(gens, degree=degree, max_order=None)


def cmd_perm(args):
    from .permgrp import transitivity_degree
    G = _load_group(args.file)
    if args.what == "order":
        _emit(args, str(G.order_int), {"degree": G.degree, "order": str(G.order_int)})
    else:
        rep = transitivity_degree(G)
        _emit(args, str(rep), {"transitivity_degree": rep.transitivity_degree, "sharp": rep.sharp,
                               "order": str(G.order_int), "orbits": rep.orbit_count,
                               "stabilizer_chain_orders": [str(o) for o in rep.stabilizer_chain_orders]})
    return 0


def cmd_mathieu_build(args):
    from .codes import golay_lexicode
    from .mathieu import BuildInfo, chain_m12, chain_m24, m12_build, m24_build
    code = golay_lexicode()
    budget = _config(args).budget
    seed = args.seed if args.seed is not None else 24
    info = BuildInfo()
    G = m24_build(code, budget=budget, seed=seed, info=info)
    if args.which == "m24":
        data = {"group": "M24", "order": G.order_int, "nodes": info.nodes,
                "certified_order": info.certified_order, "generators": len(G.generators)}
        _emit(args, f"M24: order {G.order_int} ({info.nodes} search nodes, {len(G.generators)} generators)", data)
        return 0
    M12 = m12_build(G, code, seed=seed)
    if args.which == "m12":
        _emit(args, f"M12: order {M12.order_int}", {"group": "M12", "order": M12.order_int})
        return 0
    lines, data = [], {}
    for ch in (chain_m24(G), chain_m12(M12)):
        for label, order, rep in zip(ch.labels, ch.orders, ch.action_reports):
            lines.append(f"{label}: {rep}")
            data[label] = {"order": order, "transitivity_degree": rep.transitivity_degree, "sharp": rep.sharp}
    _emit(args, "\n".join(lines), data)
    return 0


def cmd_mathieu_export(args):
    from .codes import golay_lexicode
    from .mathieu import chain_m12, chain_m24, export, m12_build, m24_from_file
    code = golay_lexicode()
    G = m24_from_file(code=code)
    name = args.group.upper()
    m24_labels = ["M24", "M23", "M22", "M21", "M20"]
    m12_labels = ["M12", "M11", "M10", "M9", "M8"]
    if name in m24_labels:
        H = chain_m24(G).restricted(m24_labels.index(name))
    elif name in m12_labels:
        H = chain_m12(m12_build(G, code)).restricted(m12_labels.index(name))
    else:
        raise SporadicaError(f"unknown group {args.group!r}; expected one of {m24_labels + m12_labels}")
    if args.output:
        export(H, args.output)
        print(f"{name}: order {H.order_int} on {H.degree} points written to {args.output}", file=sys.stderr)
    else:
        from .permgrp import format_generators
        sys.stdout.write(format_generators(H.degree, H.generators))
    return 0


def cmd_codes_golay(args):
    from .codes import format_code, golay_lexicode, octads_steiner_check, weight_distribution
    code = golay_lexicode()
    dist = weight_distribution(code)
    octads, steiner = octads_steiner_check(code)
    text = format_code(code).rstrip("\n") + "\n" + f"weights {dist}\n{len(octads)} octads, Steiner S(5,8,24): " \
        + ("yes" if steiner else "no")
    _emit(args, text, {"basis": [f"{w:06x}" for w in code.basis], "weight_distribution": dist,
                       "octads": len(octads), "steiner": steiner})
    return 0


def cmd_leech_census(args):
    from .leech import minimal_vectors
    c32, c16 = minimal_vectors()
    lines = [f"{name}: {n}" for name, n in c32.shapes.items()]
    lines.append(f"norm 32 total: {c32.total}")
    lines.append(f"norm 16 total: {c16.total}")
    _emit(args, "\n".join(lines), {"norm32": c32.to_dict(), "norm16": c16.to_dict()})
    return 0


def cmd_catalog_dump(args):
    from .catalog import sporadic_table
    table = sporadic_table()
    if args.json or args.format == "json":
        print(json.dumps([e.to_dict() for e in table], indent=1))
        return 0
    for e in table:
        order = str(e.order) if e.exact else f"≈ {e.approx}"
        flag = "  [flagged]" if e.flagged else ""
        print(f"{e.symbol:6} {e.level:8} {order}{flag}")
    return 0


def cmd_reps_table(args):
    from .reps import dixon_table
    T = dixon_table(_load_group(args.file))
    if args.json:
        print(T.to_json())
    else:
        sys.stdout.write(T.format_text())
    return 0


def cmd_moonshine(args):
    from .moonshine import j_expansion, moonshine_check, ramanujan_string
    if args.what == "j":
        n = args.terms if args.terms is not None else 10
        j = j_expansion(n)
        coeffs = {k: j[k] for k in range(-1, n + 1)}
        _emit(args, "\n".join(f"q^{k}: {c}" for k, c in coeffs.items()), {str(k): c for k, c in coeffs.items()})
        return 0
    if args.what == "check":
        results = [r for r in moonshine_check(2) if r.exponent > 0]
        lines = []
        for r in results:
            dec = " + ".join(f"{m}·{d}" if m > 1 else str(d) for d, m in (r.decomposition or {}).items())
            lines.append(f"{'pass' if r.ok else 'fail'} q^{r.exponent}: {r.coefficient} = {dec or '?'}")
        _emit(args, "\n".join(lines), [{"exponent": r.exponent, "coefficient": r.coefficient,
                                        "decomposition": r.decomposition, "status": "pass" if r.ok else "fail"}
                                       for r in results])
        return 0 if all(r.ok for r in results) else 1
    s = ramanujan_string(args.digits)
    _emit(args, s, {"value": s, "digits": args.digits})
    return 0


def cmd_run_all(args):
    from .checks import exit_code, report_json, run_all, summarize
    cfg = _config(args)
    results = run_all(cfg)
    if args.json:
        print(report_json(results))
    else:
        for r in results:
            line = f"{r.status:7} {r.check_id:34} {r.computed}"
            if r.status != "pass":
                line += f"  (expected {r.expected})"
            print(line)
        s = summarize(results)
        print(f"{len(results)} checks: {s['pass']} pass, {s['fail']} fail, {s['unknown']} unknown")
    for r in results:
        if r.status == "unknown":
            print(f"warning: {r.check_id} is unknown: {r.computed}", file=sys.stderr)
    return exit_code(results)


# -- parser ---------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS, help="search node budget")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized steps")
    common.add_argument("--terms", type=int, default=argparse.SUPPRESS, help="number of j-coefficients")

    p = argparse.ArgumentParser(prog="sporadica", parents=[common],
                                description="Finite fields, Mathieu groups, the Leech lattice and moonshine.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(parent, name, fn, **kw):
        sp = parent.add_parser(name, parents=[common], **kw)
        sp.set_defaults(func=fn)
        return sp

    sp = add(sub, "field", cmd_field, help="build F_{p^f} and check its axioms")
    sp.add_argument("p", type=int)
    sp.add_argument("f", type=int)

    grp = sub.add_parser("group").add_subparsers(dest="action", required=True)
    sp = add(grp, "order", cmd_group_order, help="order of a named family member")
    sp.add_argument("family")
    sp.add_argument("params", type=int, nargs="*")

    sp = add(sub, "perm", cmd_perm, help="order or transitivity of a generator file")
    sp.add_argument("what", choices=["order", "transitivity"])
    sp.add_argument("file")

    mat = sub.add_parser("mathieu").add_subparsers(dest="action", required=True)
    sp = add(mat, "build", cmd_mathieu_build, help="construct M24, M12 or both chains")
    sp.add_argument("which", choices=["m24", "m12", "chains"])
    sp = add(mat, "export", cmd_mathieu_export, help="write generators of a Mathieu group")
    sp.add_argument("group")
    sp.add_argument("-o", "--output")

    codes = sub.add_parser("codes").add_subparsers(dest="action", required=True)
    add(codes, "golay", cmd_codes_golay, help="the Golay code as a lexicode")

    leech = sub.add_parser("leech").add_subparsers(dest="action", required=True)
    add(leech, "census", cmd_leech_census, help="count minimal vectors by shape")

    cat = sub.add_parser("catalog").add_subparsers(dest="action", required=True)
    sp = add(cat, "dump", cmd_catalog_dump, help="the 26 sporadic groups")
    sp.add_argument("--format", choices=["text", "json"], default="text")

    reps = sub.add_parser("reps").add_subparsers(dest="action", required=True)
    sp = add(reps, "table", cmd_reps_table, help="character table of a generator file")
    sp.add_argument("file")

    sp = add(sub, "moonshine", cmd_moonshine, help="j-function coefficients and checks")
    sp.add_argument("what", choices=["j", "check", "ramanujan"])
    sp.add_argument("--digits", type=int, default=40)

    sp = add(sub, "run-all", cmd_run_all, help="run every check and report")
    sp.add_argument("--config", help="key = value config file")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("json", False), ("budget", None), ("seed", None), ("terms", None)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args)
    except SporadicaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
