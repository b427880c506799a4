import math
import random

import pytest

from sporadica.errors import SearchBudgetExceeded
from sporadica.mathieu import (M12_ORDER, M24_ORDER, BuildInfo, apply_to_word, dodecad_orbit, export,
                               is_code_automorphism, m24_build, m24_from_file)
from sporadica.codes import least_dodecad, weight
from sporadica.matgrp import psl_action
from sporadica.permgrp import bsgs, is_isomorphic, is_simple, recognize_small, transitivity_degree


def test_search_builds_m24(golay):
    info = BuildInfo()
    G = m24_build(golay, info=info)
    assert G.order_int == M24_ORDER == 244823040
    assert info.certified_order == M24_ORDER
    assert info.nodes < 10**4
    assert all(is_code_automorphism(golay, g) for g in G.generators)


def test_shipped_generators_agree(golay, m24):
    built = m24_build(golay)
    assert m24.order_int == built.order_int
    assert all(built.contains(g) for g in m24.generators)


def test_budget_exhaustion(golay):
    with pytest.raises(SearchBudgetExceeded):
        m24_build(golay, budget=0)


def test_m24_transitivity(m24):
    rep = transitivity_degree(m24)
    assert rep.transitivity_degree == 5 and not rep.sharp


def test_automorphisms_preserve_weights(golay, m24):
    rng = random.Random(3)
    for _ in range(20):
        g = m24.random_element(rng)
        for w in rng.sample(sorted(golay.words), 20):
            v = apply_to_word(g, w)
            assert v in golay and weight(v) == weight(w)


def test_m24_chain(m24_chain):
    assert m24_chain.orders == [244823040, 10200960, 443520, 20160, 960]
    degrees = [r.transitivity_degree for r in m24_chain.action_reports]
    assert degrees == [5, 4, 3, 2, 1]


def test_m21_is_psl3_4(m24_chain):
    M21 = m24_chain.restricted(3)
    assert M21.degree == 21
    iso = is_isomorphic(M21, bsgs(psl_action(3, 4)))
    assert iso is not None


def test_dodecad_orbit(golay, m24):
    assert len(dodecad_orbit(m24, least_dodecad(golay))) == 2576
    assert M24_ORDER // 2576 == M12_ORDER


def test_m12_chain(m12_chain):
    assert m12_chain.orders == [95040, 7920, 720, 72, 8]
    for k, r in zip([5, 4, 3, 2, 1], m12_chain.action_reports):
        assert r.transitivity_degree == k and r.sharp


def test_m8_is_quaternion(m12_chain):
    assert recognize_small(m12_chain.restricted(4)) == "Q"


def test_small_mathieu_simple(m12, m12_chain, m24_chain):
    assert is_simple(m12_chain.restricted(1)).is_simple
    assert is_simple(m12).is_simple
    assert is_simple(m24_chain.restricted(2)).is_simple
    assert is_simple(m24_chain.restricted(1)).verdict == "unknown"


def test_m10_not_s6_not_pgl(m12_chain):
    from sporadica.matgrp import pgl2_action
    from sporadica.permgrp import symmetric
    M10 = m12_chain.restricted(2)
    assert M10.order_int == math.factorial(6)
    assert is_isomorphic(M10, symmetric(6)) is None
    assert is_isomorphic(M10, bsgs(pgl2_action(9))) is None


def test_export_roundtrip(tmp_path, m24, golay):
    path = tmp_path / "m24.gens"
    export(m24, path)
    assert m24_from_file(path, golay).order_int == M24_ORDER
