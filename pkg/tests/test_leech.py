import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sporadica.codes import support
from sporadica.errors import NotGolay, NotInLattice
from sporadica.leech import census, in_lattice, minimal_vectors, norm_check, shape_name, shapes
from sporadica.codes import BinaryCode, lexicode


def lattice_vector(golay, words, signs, shift):
    """A vector from the standard generators: 2*codeword, 4*e_i +- 4*e_j, and the odd vector (-3, 1^23)."""
    v = [0] * 24
    for w in words:
        for i in support(w):
            v[i] += 2
    for i, j, s in signs:
        v[i] += 4
        v[j] += 4 * s
    if shift:
        v = [x + (1 if i else -3) for i, x in enumerate(v)]
    return v


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_generated_vectors_are_in_lattice(golay, data):
    words = data.draw(st.lists(st.sampled_from(sorted(golay.words)[:200]), max_size=3))
    pairs = data.draw(st.lists(st.tuples(st.integers(0, 23), st.integers(0, 23), st.sampled_from([1, -1]))
                               .filter(lambda t: t[0] != t[1]), max_size=3))
    shift = data.draw(st.booleans())
    v = lattice_vector(golay, words, pairs, shift)
    assert in_lattice(golay, v)
    assert norm_check(v, golay) % 16 == 0


def test_rejections(golay):
    with pytest.raises(NotInLattice):
        norm_check([1] + [0] * 23, golay)
    assert not in_lattice(golay, [2, 2] + [0] * 22)
    assert not in_lattice(golay, [4] + [0] * 23)
    assert in_lattice(golay, [4, 4] + [0] * 22)


def test_shapes_enumeration():
    for s in shapes(32):
        assert sum(x * x for x in s) == 32 and len(s) <= 24
    names = {shape_name(s) for s in shapes(32)}
    assert {"4^2 0^22", "3 1^23", "2^8 0^16", "4 2^4 0^19"} <= names


@pytest.mark.slow
def test_kissing_number(golay):
    c32, c16 = minimal_vectors(golay)
    assert c32.total == 196560
    assert c32.shapes["4^2 0^22"] == 1104
    assert c32.shapes["2^8 0^16"] == 97152
    assert c32.shapes["3 1^23"] == 98304
    assert c16.total == 0


def test_short_vectors_absent(golay):
    assert census(golay, 16).total == 0


def test_requires_golay():
    with pytest.raises(NotGolay):
        minimal_vectors(BinaryCode(24, [1 << i for i in range(12)]))
