import cmath

import numpy as np
import pytest

from sporadica.checks import reps_corpus
from sporadica.cyclotomic import Cyclo, cyclotomic_poly
from sporadica.permgrp import alternating, conjugacy_classes, cyclic, symmetric
from sporadica.permgrp.perm import inv, mul
from sporadica.reps import burnside_check, dixon_table, linear_char_count

CORPUS = reps_corpus(200)


def class_index_map(G, classes):
    """Each element -> index of its class, by brute-force conjugation."""
    elements = list(G.elements())
    where = {}
    for i, c in enumerate(classes):
        x = tuple(c.representative)
        for g in elements:
            where[mul(mul(inv(g), x), g)] = i
    return elements, where


def class_matrices(G, classes):
    """M_j[k][l] = #{x in C_j : x * g_l in C_k}, g_l the representative of C_l."""
    elements, where = class_index_map(G, classes)
    r = len(classes)
    members = [[] for _ in range(r)]
    for x in elements:
        members[where[x]].append(x)
    mats = np.zeros((r, r, r))
    for j in range(r):
        for l, c in enumerate(classes):
            g = tuple(c.representative)
            for x in members[j]:
                mats[j, where[mul(x, g)], l] += 1
    return mats


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_table_against_numeric_oracle(name):
    """Central characters omega(C_j) = |C_j| chi(g_j) / chi(1) are eigenvalues of the class matrices."""
    G = CORPUS[name]
    T = dixon_table(G)
    mats = class_matrices(G, T.classes)
    for j, c in enumerate(T.classes):
        eig = np.linalg.eigvals(mats[j])
        ours = [c.size * complex(row[j]) / complex(row[0]) for row in T.table]
        for w in ours:
            assert np.min(np.abs(eig - w)) < 1e-6
        # eigenvalues are matched with multiplicity
        assert np.allclose(sorted(eig, key=lambda z: (round(z.real, 6), round(z.imag, 6))),
                           sorted(ours, key=lambda z: (round(z.real, 6), round(z.imag, 6))), atol=1e-6)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_table_laws(name):
    G = CORPUS[name]
    T = dixon_table(G)
    assert len(T.table) == len(conjugacy_classes(G))
    assert burnside_check(G.order_int, T.dims)
    assert all(G.order_int % d == 0 for d in T.dims)
    assert T.row_orthogonality() and T.column_orthogonality()
    assert all(x == 1 for x in T.table[0])


def test_known_dimensions():
    assert dixon_table(symmetric(4)).dims == [1, 1, 2, 3, 3]
    assert dixon_table(alternating(5)).dims == [1, 3, 3, 4, 5]
    assert dixon_table(cyclic(5)).dims == [1] * 5
    assert sorted(CORPUS) and dixon_table(CORPUS["PSL_2(7)"]).dims == [1, 3, 3, 6, 7, 8]


def test_a5_golden_ratio():
    T = dixon_table(alternating(5))
    values = {round(complex(x).real, 6) for row in T.table for x in row}
    phi = (1 + 5 ** 0.5) / 2
    assert round(phi, 6) in values and round(1 - phi, 6) in values


def test_linear_characters():
    assert linear_char_count(symmetric(4)) == 2
    assert linear_char_count(alternating(5)) == 1
    assert linear_char_count(cyclic(6)) == 6


def test_cyclotomic_arithmetic():
    z = Cyclo(5, {1: 1})
    one = Cyclo.integer(5, 1)
    assert z * z * z * z * z == one
    assert sum((Cyclo(5, {k: 1}) for k in range(1, 5)), Cyclo.integer(5, 0)) == Cyclo.integer(5, -1)
    assert abs(complex(z) - cmath.exp(2j * cmath.pi / 5)) < 1e-12
    assert cyclotomic_poly(6) == (1, -1, 1)
