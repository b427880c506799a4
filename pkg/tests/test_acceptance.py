"""Acceptance suite: one printed PASS/FAIL line per criterion, each with its time limit."""
import json
import subprocess
import sys
import time

import pytest

from sporadica.catalog import (global_laws, monster_dimension_checks, monster_order, monster_prime_census,
                               sporadic, sporadic_table)
from sporadica.codes import golay_lexicode, octads_steiner_check, weight_distribution
from sporadica.gfq import field_of_order, frobenius, make_field, prime_powers_up_to, verify_axioms
from sporadica.leech import minimal_vectors
from sporadica.matgrp import group_order, pgammal2_action, pgl2_action, psl_action, psl_cases
from sporadica.mathieu import BuildInfo, chain_m12, chain_m24, m12_build, m24_build
from sporadica.moonshine import delta_direct, delta_pentagonal, j_expansion, moonshine_decompose, ramanujan_string
from sporadica.permgrp import (alternating, bsgs, is_isomorphic, is_simple, recognize_small, symmetric,
                               transitivity_degree, verify_isomorphism)
from sporadica.reps import burnside_check, dixon_table
from sporadica.checks import reps_corpus
from sporadica.permgrp import conjugacy_classes


class Criterion:
    def __init__(self, capsys, number, title, limit):
        self.capsys, self.number, self.title, self.limit = capsys, number, title, limit
        self.failures = []
        self.notes = []

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def expect(self, ok, what):
        if not ok:
            self.failures.append(what)

    def note(self, what):
        self.notes.append(what)

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.t0
        if exc is not None:
            self.failures.append(f"{exc_type.__name__}: {exc}")
        if elapsed > self.limit:
            self.failures.append(f"took {elapsed:.1f} s, limit {self.limit} s")
        status = "PASS" if not self.failures else "FAIL"
        line = f"criterion {self.number:2d} {status}  {self.title} [{elapsed:.2f} s / {self.limit} s]"
        if self.failures:
            line += "  -- " + "; ".join(self.failures)
        if self.notes:
            line += "  (note: " + "; ".join(self.notes) + ")"
        with self.capsys.disabled():
            print("\n" + line)
        assert not self.failures, line
        return False


@pytest.fixture(scope="module")
def golay():
    return golay_lexicode()


def test_criterion_01_fields(capsys):
    with Criterion(capsys, 1, "field axioms for q <= 512; F_4 table", 5) as c:
        for q in prime_powers_up_to(512):
            res = verify_axioms(field_of_order(q))
            c.expect(all(res.values()), f"q={q}: {[k for k, v in res.items() if not v]}")
        F = make_field(2, 2)
        w = F.generator
        wbar = frobenius(F, 1, w)
        c.expect(w * w == wbar and w * wbar == F.one and w + wbar == F.one, "F_4 table")


def test_criterion_02_psl_orders(capsys):
    with Criterion(capsys, 2, "PSL_n(q) orders, point count <= 100", 60) as c:
        seen = set()
        for n, q in psl_cases(100):
            order = bsgs(psl_action(n, q), max_order=None).order_int
            c.expect(order == group_order("PSL", n, q).value, f"PSL_{n}({q})")
            seen.add(order)
        c.expect({168, 360, 504, 660, 1092, 20160} <= seen, "named orders")


def test_criterion_03_pgl2(capsys):
    with Criterion(capsys, 3, "PGL_2(q) sharply 3-transitive", 30) as c:
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 13]:
            G = bsgs(pgl2_action(q))
            rep = transitivity_degree(G)
            c.expect(G.order_int == (q + 1) * q * (q - 1), f"order at q={q}")
            c.expect(rep.transitivity_degree >= 3 and rep.stabilizer_chain_orders[3] == 1, f"sharp 3 at q={q}")


def test_criterion_04_golay(capsys):
    with Criterion(capsys, 4, "Golay lexicode [24,12,8], S(5,8,24)", 60) as c:
        code = golay_lexicode.__wrapped__() if hasattr(golay_lexicode, "__wrapped__") else golay_lexicode()
        c.expect(code.length == 24 and code.dimension == 12, "parameters")
        c.expect(weight_distribution(code) == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}, "weights")
        octads, steiner = octads_steiner_check(code)
        c.expect(steiner, "Steiner property")


def test_criterion_05_mathieu(capsys, golay):
    with Criterion(capsys, 5, "Mathieu chains M24 and M12", 30 * 60) as c:
        info = BuildInfo()
        M24 = m24_build(golay, budget=10**9, info=info)
        c.expect(M24.order_int == 244823040, "|M24|")
        c.expect(transitivity_degree(M24).transitivity_degree == 5, "M24 5-transitive")
        ch = chain_m24(M24)
        c.expect(ch.orders == [244823040, 10200960, 443520, 20160, 960], f"M24 chain {ch.orders}")
        iso = is_isomorphic(ch.restricted(3), bsgs(psl_action(3, 4)))
        c.expect(iso is not None and verify_isomorphism(iso), "M21 = PSL_3(4)")
        ch12 = chain_m12(m12_build(M24, golay))
        c.expect(ch12.orders == [95040, 7920, 720, 72, 8], f"M12 chain {ch12.orders}")
        c.expect([(r.transitivity_degree, r.sharp) for r in ch12.action_reports]
                 == [(5, True), (4, True), (3, True), (2, True), (1, True)], "M12 sharpness")
        c.expect(recognize_small(ch12.restricted(4)) == "Q", "M8 = Q")


def test_criterion_06_simplicity(capsys, golay):
    with Criterion(capsys, 6, "simplicity certificates", 10 * 60) as c:
        from sporadica.mathieu import m24_from_file
        M24 = m24_from_file(code=golay)
        ch, ch12 = chain_m24(M24), chain_m12(m12_build(M24, golay))
        simple = [alternating(n) for n in range(5, 9)]
        simple += [bsgs(psl_action(2, q)) for q in (5, 7, 8, 9, 11, 13)] + [bsgs(psl_action(3, 4))]
        simple += [ch12.restricted(1), ch12.restricted(0), ch.restricted(2)]
        for G in simple:
            c.expect(is_simple(G).verdict == "simple", f"order {G.order_int} not certified simple")
        for G in (alternating(4), symmetric(4)):
            c.expect(is_simple(G).verdict == "not simple", f"order {G.order_int}")
        for G in (ch.restricted(1), M24):
            c.expect(is_simple(G).verdict == "unknown", f"order {G.order_int} should be unknown")


def test_criterion_07_diagram(capsys, golay):
    with Criterion(capsys, 7, "S_6, PGL_2(9), M_10 pairwise distinct; PGammaL_2(9)", 5 * 60) as c:
        from sporadica.mathieu import m24_from_file
        M10 = chain_m12(m12_build(m24_from_file(code=golay), golay)).restricted(2)
        groups = [symmetric(6), bsgs(pgl2_action(9)), M10]
        c.expect(all(G.order_int == 720 for G in groups), "orders")
        for i in range(3):
            for j in range(i + 1, 3):
                c.expect(is_isomorphic(groups[i], groups[j]) is None, f"pair {i},{j} isomorphic")
        c.expect(bsgs(pgammal2_action(9)).order_int == 1440, "PGammaL_2(9)")


def test_criterion_08_leech(capsys, golay):
    with Criterion(capsys, 8, "Leech minimal vectors", 120) as c:
        c32, c16 = minimal_vectors(golay)
        c.expect(c32.total == 196560, f"total {c32.total}")
        c.expect(c16.total == 0, "vectors of half norm")
        c.expect(sum(c32.shapes.values()) == c32.total, "shape sum")


def test_criterion_09_catalog(capsys):
    with Criterion(capsys, 9, "sporadic catalog and Monster", 1) as c:
        table = sporadic_table()
        c.expect(len(table) == 26, "26 entries")
        bad = [e.symbol for e in table if e.exact and not global_laws(e.value, strict=False).passes]
        c.expect(bad == [] or all(sporadic(s).flagged for s in bad), f"law failures {bad}")
        if bad:
            c.note(f"{', '.join(bad)} printed digits fail the 12-law and are flagged")
        M = monster_order()
        c.expect(M.factors == {2: 46, 3: 20, 5: 9, 7: 6, 11: 2, 13: 3, 17: 1, 19: 1, 23: 1, 29: 1, 31: 1,
                               41: 1, 47: 1, 59: 1, 71: 1}, "Monster factorization")
        magnitude = float(M.value)
        c.expect(abs(magnitude / 8.08e54 - 1) < 0.005, f"|M| = {magnitude:.3e}, stated 8.08e54")
        census = monster_prime_census()
        c.expect(census.count_in_first20 == 15 and census.first_omitted == 37, "prime census")
        c.expect(all(monster_dimension_checks().values()), "irrep dimensions divide")


def test_criterion_10_reps(capsys):
    with Criterion(capsys, 10, "Dixon tables for the corpus", 120) as c:
        for name, G in reps_corpus(200).items():
            T = dixon_table(G)
            c.expect(len(T.table) == len(conjugacy_classes(G)), f"{name} class count")
            c.expect(burnside_check(G.order_int, T.dims), f"{name} sum of squares")
            c.expect(all(G.order_int % d == 0 for d in T.dims), f"{name} divisibility")
            c.expect(T.row_orthogonality() and T.column_orthogonality(), f"{name} orthogonality")
        c.expect(dixon_table(symmetric(4)).dims == [1, 1, 2, 3, 3], "S_4 dims")


def test_criterion_11_moonshine(capsys):
    with Criterion(capsys, 11, "j-expansion, decompositions, Delta, exp(pi sqrt 163)", 10) as c:
        j = j_expansion(200)
        c.expect([j[k] for k in range(-1, 3)] == [1, 744, 196884, 21493760], "j coefficients")
        c.expect(moonshine_decompose(j[1]) == {1: 1, 196883: 1}, "q^1 decomposition")
        c.expect(moonshine_decompose(j[2]) == {1: 1, 196883: 1, 21296876: 1}, "q^2 decomposition")
        c.expect(delta_direct(201) == delta_pentagonal(201), "Delta routes")
        c.expect(ramanujan_string(40)[:33] == "262537412640768743.99999999999925", "Ramanujan digits")


def test_criterion_12_determinism(capsys, tmp_path):
    with Criterion(capsys, 12, "run-all --json twice, identical modulo timing", 600) as c:
        reports = []
        for i in range(2):
            proc = subprocess.run([sys.executable, "-m", "sporadica.cli", "run-all", "--json"],
                                  capture_output=True, text=True)
            data = json.loads(proc.stdout)
            for r in data["checks"]:
                r.pop("wall_time")
            reports.append(json.dumps(data, sort_keys=True))
        c.expect(len(json.loads(reports[0])["checks"]) >= 40, "at least 40 checks")
        c.expect(reports[0] == reports[1], "reports differ")
