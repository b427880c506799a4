import itertools
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sporadica.errors import DegreeMismatch, MalformedSyntax, OrderBoundExceeded, PointOutOfRange, RepeatedPoint
from sporadica.permgrp import (GroupBSGS, Permutation, alternating, brute_force_closure, bsgs,
                               conjugacy_classes, coset_action, cyclic, derived_subgroup,
                               dicyclic, dihedral, direct_product, format_generators, icosahedral_vertices,
                               is_isomorphic, is_simple, klein, normal_closure, orbit_stabilizer, parse_generators,
                               parse_perm, quaternion, recognize_small, symmetric, transitivity_degree,
                               verify_isomorphism)
from sporadica.permgrp.classes import centralizer_order_brute
from sporadica.permgrp.perm import mul


def perms(degree, max_gens=3):
    return st.lists(st.permutations(list(range(degree))), min_size=1, max_size=max_gens)


# -- parsing ---------------------------------------------------------------------------

def test_parse_cycles_roundtrip():
    p = parse_perm("(1 2 3)(4 5)", 6)
    assert tuple(p) == (1, 2, 0, 4, 3, 5)
    assert str(p) == "(1 2 3)(4 5)"
    assert parse_perm("()", 3).is_identity()


@pytest.mark.parametrize("text,err", [("(1 2", MalformedSyntax), ("(1 1)", RepeatedPoint),
                                      ("(1 9)", PointOutOfRange), ("(1 a)", MalformedSyntax)])
def test_parse_errors(text, err):
    with pytest.raises(err):
        parse_perm(text, 5)


def test_generator_file_roundtrip():
    G = symmetric(5)
    degree, gens = parse_generators(format_generators(5, G.generators).splitlines())
    assert degree == 5 and [tuple(g) for g in gens] == [tuple(g) for g in G.generators]


def test_composition_left_to_right():
    a = parse_perm("(1 2)", 3)
    b = parse_perm("(2 3)", 3)
    # apply a first, then b: 1 -> 2 -> 3
    assert (a * b)[0] == 2
    assert mul(a, b) == tuple(a * b)


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        bsgs([(1, 0, 2), (1, 0)])


# -- orders against brute-force closure ----------------------------------------------------

@settings(max_examples=60, deadline=None)
@given(st.integers(3, 7).flatmap(perms))
def test_order_matches_closure(gens):
    G = bsgs(gens)
    elements = brute_force_closure(gens)
    assert G.order_int == len(elements)
    for g in itertools.islice(elements, 50):
        assert G.contains(g)


@settings(max_examples=40, deadline=None)
@given(st.integers(4, 7).flatmap(perms), st.randoms(use_true_random=False))
def test_membership_negative(gens, rnd):
    G = bsgs(gens)
    elements = brute_force_closure(gens)
    n = len(gens[0])
    for _ in range(20):
        x = list(range(n))
        rnd.shuffle(x)
        assert G.contains(x) == (tuple(x) in elements)


def test_named_orders():
    assert [symmetric(n).order_int for n in range(1, 9)] == [math.factorial(n) for n in range(1, 9)]
    assert alternating(8).order_int == 20160
    assert dihedral(5).order_int == 10
    assert quaternion().order_int == 8
    assert dicyclic(3).order_int == 12
    assert klein().order_int == 4
    assert direct_product(cyclic(2), symmetric(3)).order_int == 12


def test_order_bound():
    with pytest.raises(OrderBoundExceeded):
        bsgs(symmetric(20).generators)
    assert bsgs(symmetric(20).generators, max_order=None).order_int == math.factorial(20)


def test_add_generator_incremental():
    G = GroupBSGS([parse_perm("(1 2 3 4 5)", 5)])
    assert G.order_int == 5
    assert G.add_generator(parse_perm("(1 2)", 5))
    assert G.order_int == 120
    assert not G.add_generator(parse_perm("(2 3)", 5))


def test_stabilizers_and_orbits():
    G = symmetric(6)
    orb, stab = orbit_stabilizer(G, 2)
    assert sorted(orb) == list(range(6)) and stab.order_int == 120
    assert G.pointwise_stabilizer([0, 1, 2]).order_int == 6
    H = bsgs([parse_perm("(1 2)(3 4)", 6)])
    assert sorted(map(sorted, H.orbits())) == [[0, 1], [2, 3], [4], [5]]


def test_with_base_prefix_keeps_group():
    G = alternating(6)
    H = G.with_base_prefix([5, 4])
    assert H.base[:2] == [5, 4] and H.order_int == 360
    assert all(H.contains(g) for g in G.generators)


def test_subgroup_and_normality():
    S4 = symmetric(4)
    V = normal_closure(S4, [parse_perm("(1 2)(3 4)", 4)])
    assert V.order_int == 4 and V.is_normal_in(S4) and V.is_subgroup_of(S4)
    C = bsgs([parse_perm("(1 2)", 4)])
    assert not C.is_normal_in(S4)


def test_derived_series():
    assert derived_subgroup(symmetric(4)).order_int == 12
    assert derived_subgroup(alternating(4)).order_int == 4
    assert derived_subgroup(alternating(5)).order_int == 60


# -- transitivity ---------------------------------------------------------------------------

def brute_transitivity(G):
    """Largest k such that G acts transitively on ordered k-tuples (test oracle)."""
    n = G.degree
    elements = list(G.elements())
    k = 0
    while k < n:
        start = tuple(range(k + 1))
        images = {tuple(g[i] for i in start) for g in elements}
        if len(images) != math.perm(n, k + 1):
            break
        k += 1
    return k


@pytest.mark.parametrize("G", [symmetric(5), alternating(5), alternating(6), dihedral(5), cyclic(7),
                               icosahedral_vertices(), klein()], ids=str)
def test_transitivity_matches_brute_force(G):
    rep = transitivity_degree(G)
    assert rep.transitivity_degree == brute_transitivity(G)


def test_report_strings():
    assert str(transitivity_degree(symmetric(5))) == "k=5 sharp, order 120"
    assert str(transitivity_degree(alternating(6))) == "k=4 sharp, order 360"
    rep = transitivity_degree(cyclic(2))
    assert rep.transitivity_degree == 2 and rep.sharp
    intrans = bsgs([parse_perm("(1 2)", 4)])
    assert transitivity_degree(intrans).transitivity_degree == 0


# -- conjugacy classes -----------------------------------------------------------------------

def brute_classes(G):
    elements = list(G.elements())
    seen, sizes = set(), []
    for x in elements:
        if x in seen:
            continue
        cls = {tuple(mul(mul(tuple(Permutation(g).inverse()), x), g)) for g in elements}
        seen |= cls
        sizes.append(len(cls))
    return sorted(sizes)


@pytest.mark.parametrize("G", [symmetric(4), alternating(5), dihedral(6), quaternion(), dicyclic(5),
                               direct_product(cyclic(3), symmetric(3))], ids=str)
def test_classes_against_brute_force(G):
    cs = conjugacy_classes(G)
    assert sorted(c.size for c in cs) == brute_classes(G)
    assert sum(c.size for c in cs) == G.order_int
    for c in cs:
        assert G.order_int // c.size == centralizer_order_brute(G, c.representative)


def test_classes_deterministic():
    a = [(tuple(c.representative), c.size) for c in conjugacy_classes(alternating(6), seed=1)]
    b = [(tuple(c.representative), c.size) for c in conjugacy_classes(alternating(6), seed=99)]
    assert a == b


# -- simplicity ---------------------------------------------------------------------------------

def brute_normal_subgroup_orders(G):
    """Orders of all normal subgroups, from unions of classes (test oracle)."""
    elements = list(G.elements())
    classes = []
    seen = set()
    for x in elements:
        if x in seen:
            continue
        cls = frozenset(tuple(mul(mul(tuple(Permutation(g).inverse()), x), g)) for g in elements)
        seen |= cls
        classes.append(cls)
    e = tuple(range(G.degree))
    nontrivial = [c for c in classes if e not in c]
    orders = set()
    for r in range(len(nontrivial) + 1):
        for combo in itertools.combinations(nontrivial, r):
            S = {e}.union(*combo)
            if G.order_int % len(S):
                continue
            if all(tuple(mul(a, b)) in S for a in S for b in S):
                orders.add(len(S))
    return orders


@pytest.mark.parametrize("G", [symmetric(3), symmetric(4), alternating(4), alternating(5), dihedral(5),
                               cyclic(7), cyclic(6), quaternion()], ids=str)
def test_simplicity_against_brute_force(G):
    orders = brute_normal_subgroup_orders(G)
    simple = orders == {1, G.order_int} and G.order_int > 1
    assert is_simple(G).is_simple == simple


def test_simplicity_unknown_above_bound():
    assert is_simple(alternating(11)).verdict == "unknown"
    w = is_simple(alternating(4)).witness
    assert w.order_int == 4


# -- isomorphism ----------------------------------------------------------------------------------

def test_isomorphism_is_homomorphism():
    rng = random.Random(5)
    G = alternating(5)
    H = icosahedral_vertices()
    iso = is_isomorphic(G, H)
    assert iso is not None and verify_isomorphism(iso)
    for _ in range(30):
        a, b = G.random_element(rng), G.random_element(rng)
        assert tuple(iso(a * b)) == tuple(iso(a) * iso(b))


def test_non_isomorphic_same_order():
    assert is_isomorphic(quaternion(), dihedral(4)) is None
    assert is_isomorphic(cyclic(6), symmetric(3)) is None
    assert is_isomorphic(dicyclic(3), alternating(4)) is None
    assert is_isomorphic(cyclic(6), direct_product(cyclic(2), cyclic(3))) is not None


def test_coset_action_regular_vs_natural():
    S4 = symmetric(4)
    H = S4.pointwise_stabilizer([0])
    A = coset_action(S4, H)
    assert A.degree == 4 and is_isomorphic(A, S4) is not None


def test_recognize_small():
    assert recognize_small(quaternion()) == "Q"
    assert recognize_small(dicyclic(4)) == "Q_4"
    assert recognize_small(dihedral(6)) == "D_6"
    assert recognize_small(klein()) == "V"
    assert recognize_small(cyclic(9)) == "Z_9"
    assert recognize_small(symmetric(4)) == "other"
