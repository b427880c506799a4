import pytest
from sympy import factorint, partition

from sporadica.catalog import (MONSTER_FACTORS, SUPPORTED_FAMILIES, abelian_count, co0_order, family_order,
                               global_laws, monster_dimension_checks, monster_order, monster_prime_census,
                               partition_count, simple_under_2000, sporadic, sporadic_table)
from sporadica.errors import LawViolation, UnsupportedFamily
from sporadica.factored import FactoredInteger


def test_table_shape():
    table = sporadic_table()
    assert len(table) == 26
    assert len({e.symbol for e in table}) == 26
    levels = [e.level for e in table]
    assert [levels.count(x) for x in ("Mathieu", "Leech", "Monster", "Pariah")] == [5, 7, 8, 6]


def test_exact_entries_factor_consistently():
    for e in sporadic_table():
        if e.exact:
            assert e.order.value == e.value
            assert dict(factorint(e.value)) == e.order.factors


def test_laws_hold_except_flagged():
    for e in sporadic_table():
        if e.exact and not e.flagged:
            assert global_laws(e.value).passes, e.symbol
    j4 = sporadic("J4")
    assert j4.flagged and not global_laws(j4.value, strict=False).passes


def test_law_violation():
    with pytest.raises(LawViolation):
        global_laws(30)
    assert global_laws(60).smallest_case


def test_mathieu_orders(m24_chain, m12_chain):
    for sym, order in zip(["M24", "M23", "M22"], m24_chain.orders):
        assert sporadic(sym).value == order
    for sym, order in zip(["M12", "M11"], m12_chain.orders):
        assert sporadic(sym).value == order


def test_monster():
    M = monster_order()
    assert M.factors == MONSTER_FACTORS
    assert len(str(M.value)) == 54
    assert str(M.value).startswith("80801742479451287588645990496171075700575436")
    c = monster_prime_census()
    assert c.count_in_first20 == 15 and c.first_omitted == 37
    assert c.omitted == [37, 43, 53, 61, 67]
    assert all(monster_dimension_checks().values())
    assert sporadic("M").value == M.value


def test_co0():
    assert co0_order().value == 2 * sporadic("Co1").value
    assert co0_order().factors == {2: 22, 3: 9, 5: 4, 7: 2, 11: 1, 13: 1, 23: 1}


def test_approximate_entries():
    approx = {e.symbol for e in sporadic_table() if not e.exact}
    assert approx == {"B", "Fi24", "Fi23", "Fi22", "HN", "Th"}
    for e in sporadic_table():
        assert e.approx_float() >= 7920


def test_family_orders():
    assert family_order("Alt", 5).value == 60
    assert family_order("Zp", 7).value == 7
    assert family_order("G2", 2).value == 12096
    assert family_order("PSL", 2, 7).value == 168
    assert set(SUPPORTED_FAMILIES) >= {"Alt", "PSL", "G2"}
    with pytest.raises(UnsupportedFamily):
        family_order("E8", 2)


def test_simple_under_2000():
    assert [o for o, _ in simple_under_2000(certify=True)] == [60, 168, 360, 504, 660, 1092]


@pytest.mark.parametrize("n", range(0, 60))
def test_partitions_against_sympy(n):
    assert partition_count(n) == partition(n)


def test_abelian_counts():
    assert abelian_count(2, 3) == 3
    assert abelian_count(5, 10) == 42


def test_factored_integer():
    a = FactoredInteger(360)
    assert str(a) == "2^3·3^2·5"
    assert (a * 7).value == 2520
    assert (a // 8).value == 45
    assert (a ** 2).value == 129600
    assert a.divides(720) and not a.divides(100)
