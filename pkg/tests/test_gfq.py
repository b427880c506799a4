import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sporadica.errors import DivisionByZero, FieldTooLarge, ForeignElement, NonPrime, NotPrimePower
from sporadica.gfq import (arith, field_of_order, frobenius, invert, make_field, prime_power,
                           prime_powers_up_to, verify_axioms, verify_frobenius)

SMALL = [q for q in prime_powers_up_to(32)]


def literal_axioms(F):
    """Every triple, no shortcuts: the slow oracle for the certified check."""
    q = F.q
    add, mul = F.add, F.mul
    for a, b in itertools.product(range(q), repeat=2):
        assert add(a, b) == add(b, a)
        assert mul(a, b) == mul(b, a)
    for a, b, c in itertools.product(range(q), repeat=3):
        assert add(add(a, b), c) == add(a, add(b, c))
        assert mul(mul(a, b), c) == mul(a, mul(b, c))
        assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
    for a in range(q):
        assert add(a, 0) == a and mul(a, 1) == a
        assert sum(1 for b in range(q) if add(a, b) == 0) == 1
        if a:
            assert sum(1 for b in range(q) if mul(a, b) == 1) == 1


@pytest.mark.parametrize("q", SMALL)
def test_axioms_literal_oracle(q):
    F = field_of_order(q)
    literal_axioms(F)
    assert all(verify_axioms(F).values())


def test_certified_axioms_detect_a_broken_table():
    F = make_field(2, 3)
    broken = make_field.__wrapped__(2, 3)
    add, mul = broken.tables()
    mul = mul.copy()
    # swap two products symmetrically: commutativity and inverses survive
    mul[3, 5], mul[5, 3], mul[3, 6], mul[6, 3] = mul[3, 6], mul[3, 6], mul[3, 5], mul[3, 5]
    broken.tables = lambda: (add, mul)
    assert all(verify_axioms(F).values())
    assert not all(verify_axioms(broken).values())


def test_all_fields_to_512():
    qs = prime_powers_up_to(512)
    assert len(qs) == sum(1 for n in range(2, 513) if prime_power(n))
    for q in qs:
        F = field_of_order(q)
        assert all(verify_axioms(F).values()), q
        assert all(verify_frobenius(F).values()), q


def test_f4_table():
    F = make_field(2, 2)
    w = F.generator
    wbar = w * w
    assert {F.zero, F.one, w, wbar} == set(F.elements())
    assert w * wbar == F.one
    assert w + wbar == F.one
    assert wbar == frobenius(F, 1, w)


def test_modulus_is_least_primitive():
    assert make_field(2, 2).modulus == (1, 1, 1)
    assert make_field(2, 3).modulus == (1, 1, 0, 1)
    assert make_field(3, 2).modulus == (2, 1, 1)


def test_errors():
    with pytest.raises(NonPrime):
        make_field(6, 1)
    with pytest.raises(NotPrimePower):
        field_of_order(12)
    with pytest.raises(FieldTooLarge):
        make_field(2, 40)
    F = make_field(5)
    with pytest.raises(DivisionByZero):
        invert(F, F.zero)
    with pytest.raises(ForeignElement):
        F.one + make_field(7).one


def test_parse_and_arith():
    F = make_field(3, 2)
    g = F.parse("g^1")
    assert F.parse("g^8") == F.one
    assert arith(F, "mul", g, g) == F.parse("g^2")
    assert arith(F, "sub", g, g) == F.zero
    assert invert(F, g) * g == F.one


def test_frobenius_group_order():
    F = make_field(2, 4)
    for k in range(1, 4):
        assert any(frobenius(F, k, x) != x for x in F.elements())
    assert all(frobenius(F, 0, x) == x for x in F.elements())
    with pytest.raises(ValueError):
        frobenius(F, 4, F.one)
    P = make_field(7)
    assert all(frobenius(P, 0, x) == x for x in P.elements())
    with pytest.raises(ValueError):
        frobenius(P, 1, P.one)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([4, 8, 9, 16, 25, 27, 49, 64, 81, 125, 128, 243, 256]), st.data())
def test_field_laws_random(q, data):
    F = field_of_order(q)
    a, b, c = (F.element(data.draw(st.integers(0, q - 1))) for _ in range(3))
    assert a * (b + c) == a * b + a * c
    assert (a - b) + b == a
    if b:
        assert (a / b) * b == a
        assert b ** (q - 1) == F.one
    assert frobenius(F, 1, a * b) == frobenius(F, 1, a) * frobenius(F, 1, b)
    assert frobenius(F, 1, a + b) == frobenius(F, 1, a) + frobenius(F, 1, b)
