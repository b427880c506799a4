"""The verification report: every numeric claim recomputed, one CheckResult each."""
from __future__ import annotations

import json
import os
import time
from dataclasses import asdict, dataclass, field, fields
from functools import cached_property
from pathlib import Path

from .errors import ConfigError, SearchBudgetExceeded

PASS, FAIL, UNKNOWN = "pass", "fail", "unknown"


@dataclass
class CheckResult:
    check_id: str
    paper_anchor: str
    expected: str
    computed: str
    status: str
    wall_time: float

    def to_dict(self) -> dict:
        return asdict(self)


REPORT_FIELDS = tuple(f.name for f in fields(CheckResult))


@dataclass
class Config:
    budget: int = 10**9
    seed: int = 24
    terms: int = 200
    field_bound: int = 512
    psl_points: int = 100
    dixon_bound: int = 200
    ramanujan_digits: int = 40

    @classmethod
    def keys(cls) -> list[str]:
        return [f.name for f in fields(cls)]


def parse_config(text: str, base: Config | None = None) -> Config:
    """Read ``key = value`` lines; blank lines and ``#`` comments are skipped."""
    cfg = Config(**asdict(base)) if base else Config()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"expected key = value, got {raw.strip()!r}", lineno)
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in Config.keys():
            raise ConfigError(f"unknown key {key!r}", lineno)
        try:
            setattr(cfg, key, int(value.replace("_", "")))
        except ValueError:
            raise ConfigError(f"value for {key} must be an integer, got {value!r}", lineno) from None
        if getattr(cfg, key) < 0:
            raise ConfigError(f"value for {key} must be non-negative", lineno)
    return cfg


def load_config(path=None, env=None) -> Config:
    """Defaults, then the config file, then SPORADICA_BUDGET from the environment."""
    cfg = parse_config(Path(path).read_text()) if path else Config()
    env = os.environ if env is None else env
    if env.get("SPORADICA_BUDGET"):
        try:
            cfg.budget = int(env["SPORADICA_BUDGET"])
        except ValueError:
            raise ConfigError(f"SPORADICA_BUDGET must be an integer, got {env['SPORADICA_BUDGET']!r}") from None
    return cfg


class Context:
    """Shared constructions for one run, built on first use."""

    def __init__(self, cfg: Config):
        self.cfg = cfg
        self.m24_note = ""

    @cached_property
    def golay(self):
        from .codes import golay_lexicode
        return golay_lexicode()

    @cached_property
    def m24_search(self):
        """M24 from the search, or None if the node budget ran out."""
        from .mathieu import BuildInfo, m24_build
        info = BuildInfo()
        try:
            G = m24_build(self.golay, budget=self.cfg.budget, seed=self.cfg.seed, info=info)
        except SearchBudgetExceeded as exc:
            self.m24_note = f"search budget exhausted after {exc.nodes} nodes"
            return None
        self.m24_note = f"{info.nodes} search nodes"
        return G

    @cached_property
    def m24(self):
        from .mathieu import m24_from_file
        return self.m24_search or m24_from_file(code=self.golay)

    @cached_property
    def m24_chain(self):
        from .mathieu import chain_m24
        return chain_m24(self.m24)

    @cached_property
    def m12(self):
        # the configured budget governs the M24 search only; the dodecad search is small
        from .mathieu import DEFAULT_BUDGET, m12_build
        return m12_build(self.m24, self.golay, budget=DEFAULT_BUDGET, seed=self.cfg.seed)

    @cached_property
    def m12_chain(self):
        from .mathieu import chain_m12
        return chain_m12(self.m12)

    @cached_property
    def leech(self):
        from .leech import minimal_vectors
        return minimal_vectors(self.golay)

    @cached_property
    def j(self):
        from .moonshine import j_expansion
        return j_expansion(max(self.cfg.terms, 3))


_CHECKS = []


def check(check_id: str, anchor: str):
    def deco(fn):
        _CHECKS.append((check_id, anchor, fn))
        return fn
    return deco


def _cmp(expected, computed) -> str:
    return PASS if expected == computed else FAIL


# -- fields -------------------------------------------------------------------------

@check("gfq.axioms", "finite fields F_q: sum and product tables")
def _c_axioms(ctx):
    from .gfq import make_field, prime_power, prime_powers_up_to, verify_axioms
    qs = prime_powers_up_to(ctx.cfg.field_bound)
    bad = [q for q in qs if not all(verify_axioms(make_field(*prime_power(q))).values())]
    return f"all {len(qs)} fields q <= {ctx.cfg.field_bound} pass", \
        f"all {len(qs)} fields q <= {ctx.cfg.field_bound} pass" if not bad else f"failures at q = {bad}"


@check("gfq.f4_table", "F_4 = {0, 1, w, w-bar}: w.w = w-bar, w.w-bar = 1, w + w-bar = 1")
def _c_f4(ctx):
    from .gfq import frobenius, make_field
    F = make_field(2, 2)
    w = F.generator
    wb = frobenius(F, 1, w)
    got = (w * w == wb, w * wb == F.one, w + wb == F.one, wb != w)
    return "w.w=w-bar, w.w-bar=1, w+w-bar=1", \
        "w.w=w-bar, w.w-bar=1, w+w-bar=1" if all(got) else f"table mismatch {got}"


@check("gfq.frobenius", "Aut(F_q) = Z_f; prime fields have none")
def _c_frob(ctx):
    from .gfq import make_field, prime_power, prime_powers_up_to, verify_frobenius
    qs = prime_powers_up_to(ctx.cfg.field_bound)
    bad = [q for q in qs if not all(verify_frobenius(make_field(*prime_power(q))).values())]
    return "automorphisms for every q", "automorphisms for every q" if not bad else f"failures at {bad}"


# -- matrix groups --------------------------------------------------------------------

@check("matgrp.psl_cross_check", "|PSL_n(q)| = |SL_n(q)| / gcd(n, q-1)")
def _c_psl_all(ctx):
    from .matgrp import group_order, psl_action, psl_cases
    from .permgrp import bsgs
    cases = psl_cases(ctx.cfg.psl_points)
    bad = [(n, q) for n, q in cases
           if bsgs(psl_action(n, q), max_order=None).order_int != group_order("PSL", n, q).value]
    return f"{len(cases)} cases agree", f"{len(cases) - len(bad)} cases agree" + (f", mismatches {bad}" if bad else "")


for _n, _q, _order in [(2, 5, 60), (2, 7, 168), (2, 9, 360), (2, 8, 504), (2, 11, 660), (2, 13, 1092),
                       (3, 4, 20160), (4, 2, 20160)]:
    def _make(n=_n, q=_q, order=_order):
        def fn(ctx):
            from .matgrp import group_order, psl_action
            from .permgrp import bsgs
            formula = group_order("PSL", n, q).value
            engine = bsgs(psl_action(n, q)).order_int
            return str(order), str(formula) if formula == engine else f"formula {formula}, engine {engine}"
        return fn
    check(f"matgrp.psl_{_n}_{_q}", f"order of PSL_{_n}({_q})")(_make())


@check("matgrp.pgl2_sharp3", "PGL_2(q) on the projective line is sharp 3-transitive")
def _c_pgl2(ctx):
    from .matgrp import pgl2_action
    from .permgrp import bsgs, transitivity_degree
    qs = [2, 3, 4, 5, 7, 8, 9, 11, 13]
    bad = []
    for q in qs:
        G = bsgs(pgl2_action(q))
        rep = transitivity_degree(G)
        ok = rep.transitivity_degree >= 3 and rep.stabilizer_chain_orders[3] == 1
        if not ok or G.order_int != (q + 1) * q * (q - 1):
            bad.append(q)
    return f"sharp 3-transitive of order (q+1)q(q-1) for q in {qs}", \
        f"sharp 3-transitive of order (q+1)q(q-1) for q in {[q for q in qs if q not in bad]}"


@check("matgrp.psl2_2_transitive", "PSL_2(q) is only 2-transitive")
def _c_psl2_2trans(ctx):
    from .matgrp import psl_action
    from .permgrp import bsgs, transitivity_degree
    ks = {q: transitivity_degree(bsgs(psl_action(2, q))).transitivity_degree for q in (4, 5, 7, 8, 9, 11, 13)}
    odd = {q: k for q, k in ks.items() if q % 2}
    # for even q, PSL_2(q) = PGL_2(q) is 3-transitive
    return "k=2 for odd q", "k=2 for odd q" if set(odd.values()) == {2} else f"degrees {odd}"


@check("matgrp.psl3_4_action", "PSL_3(4) on 21 points: nonsharp 2-transitive")
def _c_psl34(ctx):
    from .matgrp import psl_action
    from .permgrp import bsgs, transitivity_degree
    rep = transitivity_degree(bsgs(psl_action(3, 4)))
    return "k=2, order 20160", str(rep)


@check("matgrp.pgammal2_9", "PGammaL_2(9) of order 1440")
def _c_pgammal(ctx):
    from .matgrp import pgammal2_action, pgl2_action
    from .permgrp import bsgs
    return "1440 (PGL_2(9): 720)", \
        f"{bsgs(pgammal2_action(9)).order_int} (PGL_2(9): {bsgs(pgl2_action(9)).order_int})"


@check("matgrp.psl2_3_alt4", "PSL_2(3) = Alt_4 is not simple")
def _c_psl23(ctx):
    from .matgrp import psl_action
    from .permgrp import alternating, bsgs, is_isomorphic, is_simple
    G = bsgs(psl_action(2, 3))
    iso = is_isomorphic(G, alternating(4)) is not None
    return "order 12, isomorphic to Alt_4, not simple", \
        f"order {G.order_int}, {'isomorphic' if iso else 'not isomorphic'} to Alt_4, {is_simple(G).verdict}"


# -- permutation groups --------------------------------------------------------------------

@check("permgrp.sym_sharp", "S_n is sharp n-transitive")
def _c_sym(ctx):
    from .permgrp import symmetric, transitivity_degree
    res = [(n, str(transitivity_degree(symmetric(n)))) for n in range(2, 9)]
    want = [(n, f"k={n} sharp, order {__import__('math').factorial(n)}") for n in range(2, 9)]
    return "S_2..S_8 sharp n-transitive", "S_2..S_8 sharp n-transitive" if res == want else str(res)


@check("permgrp.alt_sharp", "Alt_n is only sharp (n-2)-transitive")
def _c_alt(ctx):
    from .permgrp import alternating, transitivity_degree
    bad = []
    for n in range(4, 10):
        r = transitivity_degree(alternating(n))
        if r.transitivity_degree != n - 2 or not r.sharp:
            bad.append((n, str(r)))
    return "Alt_4..Alt_9 sharp (n-2)-transitive", "Alt_4..Alt_9 sharp (n-2)-transitive" if not bad else str(bad)


@check("permgrp.class_counts", "S_n has Part(n) classes")
def _c_classes(ctx):
    from .catalog import partition_count
    from .permgrp import conjugacy_classes, symmetric
    got = [len(conjugacy_classes(symmetric(n))) for n in range(1, 8)]
    return str([partition_count(n) for n in range(1, 8)]), str(got)


@check("permgrp.derived", "commutator subgroups: S_4' = Alt_4, Alt_5 perfect")
def _c_derived(ctx):
    from .permgrp import alternating, derived_subgroup, symmetric
    return "12, 60", f"{derived_subgroup(symmetric(4)).order_int}, {derived_subgroup(alternating(5)).order_int}"


@check("permgrp.klein_normal", "V = Z_2 x Z_2 normal in S_4")
def _c_klein(ctx):
    from .permgrp import normal_closure, parse_perm, recognize_small, symmetric
    N = normal_closure(symmetric(4), [parse_perm("(1 2)(3 4)", 4)])
    return "order 4, V", f"order {N.order_int}, {recognize_small(N)}"


@check("permgrp.icosahedron_stabilizer", "rotations of the icosahedron: vertex stabilizer Z_5")
def _c_ico(ctx):
    from .permgrp import icosahedral_vertices, orbit_stabilizer, recognize_small
    G = icosahedral_vertices()
    orb, stab = orbit_stabilizer(G, 0)
    return "orbit 12, stabilizer Z_5", f"orbit {len(orb)}, stabilizer {recognize_small(stab)}"


@check("permgrp.recognize", "presentations: Q, Q_m, D_n, V")
def _c_recog(ctx):
    from .permgrp import cyclic, dicyclic, dihedral, klein, quaternion, recognize_small
    got = [recognize_small(G) for G in (quaternion(), dicyclic(3), dihedral(5), klein(), cyclic(5))]
    return "Q, Q_3, D_5, V, Z_5", ", ".join(got)


def _iso_check(a, b, want):
    def fn(ctx):
        from .permgrp import is_isomorphic
        G, H = a(ctx), b(ctx)
        got = is_isomorphic(G, H) is not None
        return ("isomorphic" if want else "not isomorphic"), ("isomorphic" if got else "not isomorphic")
    return fn


def _alt(n):
    return lambda ctx: __import__("sporadica.permgrp", fromlist=["alternating"]).alternating(n)


def _psl(n, q):
    def build(ctx):
        from .matgrp import psl_action
        from .permgrp import bsgs
        return bsgs(psl_action(n, q))
    return build


check("permgrp.iso_alt6_psl2_9", "Alt_6 and PSL_2(9) are isomorphic")(_iso_check(_alt(6), _psl(2, 9), True))
check("permgrp.iso_alt8_psl4_2", "GL_4(2) = PSL_4(2) is isomorphic with Alt_8")(_iso_check(_alt(8), _psl(4, 2), True))
check("permgrp.iso_alt8_psl3_4", "Alt_8 and PSL_3(4) are not isomorphic")(_iso_check(_alt(8), _psl(3, 4), False))


@check("permgrp.simple_alt", "Alt_n simple for n > 4")
def _c_simple_alt(ctx):
    from .permgrp import alternating, is_simple
    return "Alt_5..Alt_8 simple", \
        "Alt_5..Alt_8 " + ", ".join(sorted({is_simple(alternating(n)).verdict for n in range(5, 9)}))


@check("permgrp.not_simple", "Alt_4 and S_4 are solvable, not simple")
def _c_not_simple(ctx):
    from .permgrp import alternating, is_simple, symmetric
    a, s = is_simple(alternating(4)), is_simple(symmetric(4))
    return "Alt_4 not simple (witness 4), S_4 not simple", \
        f"Alt_4 {a.verdict} (witness {a.witness.order_int if a.witness else '-'}), S_4 {s.verdict}"


@check("permgrp.simple_psl", "Jordan-Dickson: PSL_n(q) simple for the small table and PSL_3(4)")
def _c_simple_psl(ctx):
    from .matgrp import psl_action
    from .permgrp import bsgs, is_simple
    cases = [(2, 5), (2, 7), (2, 8), (2, 9), (2, 11), (2, 13), (3, 4)]
    verdicts = {f"PSL_{n}({q})": is_simple(bsgs(psl_action(n, q))).verdict for n, q in cases}
    bad = {k: v for k, v in verdicts.items() if v != "simple"}
    return "all simple", "all simple" if not bad else str(bad)


@check("permgrp.cauchy", "even-order groups have involutions")
def _c_cauchy(ctx):
    from .matgrp import psl_action
    from .permgrp import alternating, bsgs, conjugacy_classes, dihedral, quaternion, symmetric
    groups = [symmetric(5), alternating(6), dihedral(7), quaternion(), bsgs(psl_action(2, 7)),
              bsgs(psl_action(3, 4)), ctx.m12_chain.restricted(1)]
    ok = all(any(c.order == 2 for c in conjugacy_classes(G)) for G in groups if G.order_int % 2 == 0)
    return "involution in every even-order group tested", \
        "involution in every even-order group tested" if ok else "missing involution"


# -- codes ----------------------------------------------------------------------------------

@check("codes.golay_weights", "binary Golay code [24, 12, 8]")
def _c_golay(ctx):
    from .codes import weight_distribution
    return str({0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}), str(weight_distribution(ctx.golay))


@check("codes.steiner", "octads form the Witt design S(5, 8, 24)")
def _c_steiner(ctx):
    from .codes import octads_steiner_check
    octads, ok = octads_steiner_check(ctx.golay)
    return "759 octads, every 5-set in exactly one", \
        f"{len(octads)} octads, " + ("every 5-set in exactly one" if ok else "Steiner property fails")


# -- Mathieu groups --------------------------------------------------------------------------

@check("mathieu.m24_order", "|M_24| = 24.23.22.21.20.48, automorphisms of the Golay code")
def _c_m24(ctx):
    G = ctx.m24_search
    if G is None:
        return "244823040", ctx.m24_note, UNKNOWN
    return "244823040", str(G.order_int)


@check("mathieu.m24_transitivity", "M_24 is 5-transitive, not sharp")
def _c_m24_trans(ctx):
    from .permgrp import transitivity_degree
    G = ctx.m24_search
    if G is None:
        return "k=5, order 244823040", ctx.m24_note, UNKNOWN
    return "k=5, order 244823040", str(transitivity_degree(G))


@check("mathieu.m24_chain", "M_24 > M_23 > M_22 > M_21 > M_20")
def _c_m24_chain(ctx):
    ch = ctx.m24_chain
    got = [f"{o} k={r.transitivity_degree}{' sharp' if r.sharp else ''}" for o, r in zip(ch.orders, ch.action_reports)]
    return "['244823040 k=5', '10200960 k=4', '443520 k=3', '20160 k=2', '960 k=1']", str(got)


@check("mathieu.m21_psl3_4", "M_21 = PSL_3(4)")
def _c_m21(ctx):
    from .matgrp import psl_action
    from .permgrp import bsgs, is_isomorphic
    iso = is_isomorphic(ctx.m24_chain.restricted(3), bsgs(psl_action(3, 4)))
    return "isomorphic", "isomorphic" if iso is not None else "not isomorphic"


@check("mathieu.m12_order", "|M_12| = 12.|M_11| = 95040")
def _c_m12(ctx):
    return "95040", str(ctx.m12.order_int)


@check("mathieu.m12_chain", "M_12 > M_11 > M_10 > M_9 > M_8, sharp 5..1-transitive")
def _c_m12_chain(ctx):
    ch = ctx.m12_chain
    got = [f"{o} k={r.transitivity_degree}{' sharp' if r.sharp else ''}" for o, r in zip(ch.orders, ch.action_reports)]
    return "['95040 k=5 sharp', '7920 k=4 sharp', '720 k=3 sharp', '72 k=2 sharp', '8 k=1 sharp']", str(got)


@check("mathieu.m8_quaternion", "M_8 = Q")
def _c_m8(ctx):
    from .permgrp import recognize_small
    return "Q", recognize_small(ctx.m12_chain.restricted(4))


@check("mathieu.m9_order", "M_9 of order 72, sharp 2-transitive (structure not asserted)")
def _c_m9(ctx):
    r = ctx.m12_chain.action_reports[3]
    return "order 72, k=2 sharp", f"order {ctx.m12_chain.orders[3]}, k={r.transitivity_degree}{' sharp' if r.sharp else ''}"


@check("mathieu.simple", "M_11, M_12, M_22 simple")
def _c_m_simple(ctx):
    from .permgrp import is_simple
    groups = {"M11": ctx.m12_chain.restricted(1), "M12": ctx.m12, "M22": ctx.m24_chain.restricted(2)}
    got = {k: is_simple(G).verdict for k, G in groups.items()}
    return str({k: "simple" for k in groups}), str(got)


@check("mathieu.large_simplicity", "simplicity of M_23 and M_24 beyond the certified range")
def _c_m_unknown(ctx):
    from .permgrp import is_simple
    got = {"M23": is_simple(ctx.m24_chain.restricted(1)).verdict, "M24": is_simple(ctx.m24).verdict}
    status = UNKNOWN if set(got.values()) == {"unknown"} else FAIL
    return "simple (not certifiable here)", str(got), status


@check("mathieu.diagram_ii", "S_6, PGL_2(9), M_10 of order 720, pairwise not isomorphic")
def _c_diagram(ctx):
    from .matgrp import pgl2_action
    from .permgrp import bsgs, is_isomorphic, symmetric
    groups = {"S6": symmetric(6), "PGL2(9)": bsgs(pgl2_action(9)), "M10": ctx.m12_chain.restricted(2)}
    names = list(groups)
    orders = {k: G.order_int for k, G in groups.items()}
    pairs = [(a, b) for i, a in enumerate(names) for b in names[i + 1:]]
    iso = [f"{a}~{b}" for a, b in pairs if is_isomorphic(groups[a], groups[b]) is not None]
    return "orders 720, no isomorphic pair", \
        f"orders {sorted(set(orders.values()))[0] if len(set(orders.values())) == 1 else orders}, " + \
        ("no isomorphic pair" if not iso else f"isomorphic: {iso}")


@check("mathieu.diagram_ii_extensions", "the three order-720 groups extend to PGammaL_2(9)")
def _c_diagram_ext(ctx):
    from .matgrp import pgammal2_action, pgl2_action, psigmal2_action, twisted_psl2_action
    from .permgrp import bsgs, is_isomorphic, symmetric
    top = bsgs(pgammal2_action(9))
    subs = [bsgs(pgl2_action(9)), bsgs(psigmal2_action(9)), bsgs(twisted_psl2_action(9))]
    inside = all(H.is_subgroup_of(top) and H.order_int == 720 for H in subs)
    s6 = is_isomorphic(subs[1], symmetric(6)) is not None
    m10 = is_isomorphic(subs[2], ctx.m12_chain.restricted(2)) is not None
    return "index-2 subgroups PGL_2(9), S_6, M_10 of PGammaL_2(9) (1440)", \
        f"index-2 subgroups PGL_2(9), {'S_6' if s6 else '?'}, {'M_10' if m10 else '?'} of " \
        f"PGammaL_2(9) ({top.order_int})" if inside else "embedding fails"


# -- Leech lattice ---------------------------------------------------------------------------

@check("leech.kissing", "196560 spheres touch a central one")
def _c_kiss(ctx):
    return "196560", str(ctx.leech[0].total)


@check("leech.shapes", "minimal vectors by shape")
def _c_shapes(ctx):
    return str({"4^2 0^22": 1104, "4 2^4 0^19": 0, "3 1^23": 98304, "2^8 0^16": 97152}), str(ctx.leech[0].shapes)


@check("leech.none_shorter", "no vectors of length two")
def _c_short(ctx):
    return "0", str(ctx.leech[1].total)


# -- catalog ---------------------------------------------------------------------------------

@check("catalog.count", "26 sporadic groups: 5 + 7 + 8 + 6")
def _c_count(ctx):
    from collections import Counter
    from .catalog import sporadic_table
    c = Counter(e.level for e in sporadic_table())
    return "Mathieu 5, Leech 7, Monster 8, Pariah 6", \
        f"Mathieu {c['Mathieu']}, Leech {c['Leech']}, Monster {c['Monster']}, Pariah {c['Pariah']}"


@check("catalog.laws", "orders divisible by 12 and by three primes")
def _c_laws(ctx):
    from .catalog import global_laws, sporadic_table
    exact = [e for e in sporadic_table() if e.exact and not e.flagged]
    bad = [e.symbol for e in exact if not global_laws(e.value, strict=False).passes]
    return f"{len(exact)} exact entries pass", f"{len(exact) - len(bad)} exact entries pass" + (f"; fail {bad}" if bad else "")


@check("catalog.j4_flag", "J_4 digit string as printed")
def _c_j4(ctx):
    from .catalog import global_laws, sporadic
    e = sporadic("J4")
    law = global_laws(e.value, strict=False)
    why = "12 divides the order" if law.divisible_by_12 else "12 does not divide the order"
    return "flagged, 12 does not divide the order", ("flagged" if e.flagged else "not flagged") + f", {why}"


@check("catalog.monster_exact", "|M| = 2^46.3^20.5^9.7^6.11^2.13^3.17.19.23.29.31.41.47.59.71")
def _c_monster(ctx):
    from .catalog import monster_order
    return "808017424794512875886459904961710757005754368000000000", str(monster_order().value)


@check("catalog.monster_magnitude", "|M| ~ 8.08e54")
def _c_monster_mag(ctx):
    from .catalog import monster_order
    return "8.08e+54", f"{float(monster_order().value):.2e}"


@check("catalog.monster_primes", "15 of the first 20 primes divide |M|; 37 is the first omitted")
def _c_mprimes(ctx):
    from .catalog import monster_prime_census
    c = monster_prime_census()
    return "15, first omitted 37", f"{c.count_in_first20}, first omitted {c.first_omitted}"


@check("catalog.monster_dims", "1, 196883 = 47.59.71, 21296876 = 2^2.31.41.59.71 divide |M|")
def _c_mdims(ctx):
    from .catalog import monster_dimension_checks
    from .factored import FactoredInteger
    ok = all(monster_dimension_checks().values())
    return "all divide; 47·59·71; 2^2·31·41·59·71", \
        f"{'all divide' if ok else 'not all divide'}; {FactoredInteger(196883)}; {FactoredInteger(21296876)}"


@check("catalog.simple_under_2000", "simple groups of order below 2000")
def _c_small(ctx):
    from .catalog import simple_under_2000
    return "[60, 168, 360, 504, 660, 1092]", str([o for o, _ in simple_under_2000(certify=True)])


@check("catalog.g2_2", "|G_2(q)| = q^6(q^6-1)(q^2-1) = 12096 at q=2")
def _c_g2(ctx):
    from .catalog import family_order
    return "12096", str(family_order("G2", 2).value)


@check("catalog.abelian_counts", "abelian groups of order p^f: Part(f)")
def _c_abelian(ctx):
    from .catalog import abelian_count
    return "3, 42", f"{abelian_count(2, 3)}, {abelian_count(2, 10)}"


@check("catalog.co0", "|Co_0| = 2 |Co_1| = 2^22.3^9.5^4.7^2.11.13.23")
def _c_co0(ctx):
    from .catalog import co0_order, sporadic
    return str(co0_order().value), str(2 * sporadic("Co1").value)


@check("catalog.mathieu_orders", "catalog Mathieu orders equal the constructed ones")
def _c_cat_m(ctx):
    from .catalog import sporadic
    built = dict(zip(["M24", "M23", "M22"], ctx.m24_chain.orders[:3]))
    built.update(dict(zip(["M12", "M11"], ctx.m12_chain.orders[:2])))
    return str({k: sporadic(k).value for k in built}), str(built)


# -- representations ---------------------------------------------------------------------------

@check("reps.s4_dims", "4! = 24 = 2.1^2 + 2.3^2 + 1.2^2")
def _c_s4(ctx):
    from .permgrp import symmetric
    from .reps import burnside_check, dixon_table
    dims = dixon_table(symmetric(4)).dims
    return "[1, 1, 2, 3, 3], sum of squares 24", f"{dims}, sum of squares {sum(d * d for d in dims)}" \
        if burnside_check(24, dims) else str(dims)


def reps_corpus(bound: int = 200):
    """Named groups of order at most ``bound`` used for character-table checks."""
    from .matgrp import psl_action
    from .permgrp import (alternating, bsgs, cyclic, dicyclic, dihedral, direct_product, klein, quaternion,
                          symmetric)
    groups = {
        "Z_1": cyclic(1), "Z_5": cyclic(5), "Z_6": cyclic(6), "Z_12": cyclic(12), "V": klein(),
        "S_3": symmetric(3), "S_4": symmetric(4), "S_5": symmetric(5), "Alt_4": alternating(4),
        "Alt_5": alternating(5), "D_4": dihedral(4), "D_5": dihedral(5), "D_6": dihedral(6), "Q": quaternion(),
        "Q_3": dicyclic(3), "Q_4": dicyclic(4), "Z_2xS_3": direct_product(cyclic(2), symmetric(3)),
        "Z_3xQ": direct_product(cyclic(3), quaternion()), "PSL_2(7)": bsgs(psl_action(2, 7)),
        "Z_2xAlt_4": direct_product(cyclic(2), alternating(4)),
    }
    return {k: G for k, G in groups.items() if G.order_int <= bound}


@check("reps.dixon_corpus", "irreps: count = classes, sum of squares = |G|, dims divide |G|")
def _c_dixon(ctx):
    from .permgrp import conjugacy_classes
    from .reps import burnside_check, dixon_table
    corpus = reps_corpus(ctx.cfg.dixon_bound)
    bad = []
    for name, G in corpus.items():
        T = dixon_table(G)
        ok = (len(T.table) == len(conjugacy_classes(G)) and burnside_check(G.order_int, T.dims)
              and all(G.order_int % d == 0 for d in T.dims) and T.row_orthogonality() and T.column_orthogonality())
        if not ok:
            bad.append(name)
    return f"{len(corpus)} groups pass", f"{len(corpus) - len(bad)} groups pass" + (f"; fail {bad}" if bad else "")


@check("reps.linear_characters", "number of 1-dim irreps is |G/G'|")
def _c_linear(ctx):
    from .permgrp import alternating, cyclic, symmetric
    from .reps import linear_char_count
    return "S_4: 2, Alt_5: 1, Z_6: 6", \
        f"S_4: {linear_char_count(symmetric(4))}, Alt_5: {linear_char_count(alternating(5))}, " \
        f"Z_6: {linear_char_count(cyclic(6))}"


# -- moonshine ---------------------------------------------------------------------------------

@check("moonshine.j_coefficients", "j = 1/q + 744 + 196884 q + 21493760 q^2 + ...")
def _c_j(ctx):
    j = ctx.j
    return "[1, 744, 196884, 21493760]", str([j[k] for k in range(-1, 3)])


@check("moonshine.j_q3", "q^3 coefficient of j (regression)")
def _c_jq3(ctx):
    from .moonshine import J_Q3
    return str(J_Q3), str(ctx.j[3])


@check("moonshine.delta_routes", "Delta = q prod (1-q^n)^24, two independent expansions")
def _c_delta(ctx):
    from .moonshine import delta_direct, delta_pentagonal
    n = ctx.cfg.terms
    same = delta_direct(n + 1) == delta_pentagonal(n + 1)
    return f"agree to order {n}", f"agree to order {n}" if same else "disagree"


@check("moonshine.decompositions", "196884 = 1 + 196883, 21493760 = 1 + 196883 + 21296876")
def _c_dec(ctx):
    from .moonshine import moonshine_decompose
    return "{1: 1, 196883: 1}; {1: 1, 196883: 1, 21296876: 1}", \
        f"{moonshine_decompose(ctx.j[1])}; {moonshine_decompose(ctx.j[2])}"


@check("moonshine.j_positive", "coefficients of j are positive")
def _c_jpos(ctx):
    j = ctx.j
    neg = [k for k in range(1, ctx.cfg.terms + 1) if j[k] <= 0]
    return f"positive for 1 <= n <= {ctx.cfg.terms}", \
        f"positive for 1 <= n <= {ctx.cfg.terms}" if not neg else f"nonpositive at {neg}"


@check("moonshine.ramanujan", "exp(pi sqrt 163) = 262537412640768743.99999999999925...")
def _c_ram(ctx):
    from .moonshine import ramanujan_string
    s = ramanujan_string(max(ctx.cfg.ramanujan_digits, 30))
    return "262537412640768743.99999999999925", s[:33]


# -- running -----------------------------------------------------------------------------------

def check_ids() -> list[str]:
    return [cid for cid, _, _ in _CHECKS]


def run_all(cfg: Config | None = None, only=None, progress=None) -> list[CheckResult]:
    """Run every check in registration order (a fixed order)."""
    cfg = cfg or Config()
    ctx = Context(cfg)
    out = []
    for cid, anchor, fn in _CHECKS:
        if only and not any(cid.startswith(o) for o in only):
            continue
        t0 = time.perf_counter()
        try:
            res = fn(ctx)
            expected, computed = str(res[0]), str(res[1])
            status = res[2] if len(res) > 2 else _cmp(expected, computed)
        except Exception as exc:  # a crashing check is reported, not raised
            expected, computed, status = "no error", f"{type(exc).__name__}: {exc}", FAIL
        r = CheckResult(cid, anchor, expected, computed, status, round(time.perf_counter() - t0, 3))
        out.append(r)
        if progress:
            progress(r)
    return out


def report_json(results) -> str:
    return json.dumps({
        "checks": [r.to_dict() for r in results],
        "summary": summarize(results),
    }, indent=1)


def summarize(results) -> dict[str, int]:
    return {s: sum(1 for r in results if r.status == s) for s in (PASS, FAIL, UNKNOWN)}


def exit_code(results) -> int:
    return 1 if any(r.status == FAIL for r in results) else 0
