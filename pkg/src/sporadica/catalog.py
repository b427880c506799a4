"""Orders of finite simple groups: family formulas and the sporadic table."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from functools import lru_cache
from math import factorial, prod

from sympy import prime, primerange

from .errors import LawViolation, UnsupportedFamily
from .factored import FactoredInteger
from .gfq import is_prime, prime_power
from .matgrp import group_order

SUPPORTED_FAMILIES = ("Zp", "Alt", "GL", "SL", "PGL", "PSL", "G2")
# families named in the classification whose orders are not tabulated here
OMITTED_FAMILIES = ("PSp", "POmega", "PSU", "F4", "E6", "E7", "E8", "2B2", "2G2", "2F4", "3D4", "2E6")


def family_order(family: str, *params) -> FactoredInteger:
    """Exact order of a group from one of the supported families.

    ``Zp`` takes a prime p, ``Alt`` takes n, ``G2`` takes q and the matrix
    families take (n, q).
    """
    if family == "Zp":
        (p,) = params
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        return FactoredInteger(p)
    if family == "Alt":
        (n,) = params
        if n < 2:
            raise ValueError("n must be at least 2")
        return FactoredInteger(factorial(n) // 2)
    if family == "G2":
        (q,) = params
        if prime_power(q) is None:
            from .errors import NotPrimePower
            raise NotPrimePower(f"{q} is not a prime power")
        return FactoredInteger(q**6) * (q**6 - 1) * (q**2 - 1)
    if family in ("GL", "SL", "PGL", "PSL"):
        n, q = params
        return group_order(family, n, q)
    raise UnsupportedFamily(f"no order formula for family {family!r}")


# -- sporadic groups -------------------------------------------------------------

@dataclass(frozen=True)
class SporadicEntry:
    name: str
    symbol: str
    level: str  # Mathieu, Leech, Monster or Pariah
    value: int | None  # exact order, when known
    approx: str  # "≈" value as printed, for inexact entries
    exact: bool
    source_note: str
    flagged: bool = False

    @property
    def order(self) -> FactoredInteger | None:
        return FactoredInteger(self.value) if self.exact else None

    def approx_float(self) -> float:
        if self.exact:
            return float(self.value)
        mant, exp = self.approx.split("e")
        return float(mant) * 10 ** int(exp)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["value"] = str(self.value) if self.value is not None else None
        d["factorization"] = str(self.order) if self.exact else None
        return d


def _f(**factors) -> int:
    return prod(int(p[1:]) ** e for p, e in factors.items())


MONSTER_FACTORS = {2: 46, 3: 20, 5: 9, 7: 6, 11: 2, 13: 3, 17: 1, 19: 1, 23: 1, 29: 1,
                   31: 1, 41: 1, 47: 1, 59: 1, 71: 1}
M24_VALUE = 24 * 23 * 22 * 21 * 20 * 48
CO0_FACTORS = {2: 22, 3: 9, 5: 4, 7: 2, 11: 1, 13: 1, 23: 1}
# largest prime dividing |M|; every other factored entry is 71-smooth
SMOOTHNESS_BOUND = 71


def _exact(name, symbol, level, value, note):
    return SporadicEntry(name, symbol, level, value, "", True, note)


def _approx(name, symbol, level, approx, note):
    return SporadicEntry(name, symbol, level, None, approx, False, note)


def _raw_table() -> list[SporadicEntry]:
    return [
        _exact("Mathieu 11", "M11", "Mathieu", 11 * 10 * 9 * 8, "sharp 4-transitive chain: 11.10.9.8"),
        _exact("Mathieu 12", "M12", "Mathieu", 12 * 7920, "12 * |M11|"),
        _exact("Mathieu 22", "M22", "Mathieu", 22 * 21 * 20 * 48, "22 * |M21|, M21 = 21.20.48"),
        _exact("Mathieu 23", "M23", "Mathieu", 23 * 22 * 21 * 20 * 48, "23 * |M22|"),
        _exact("Mathieu 24", "M24", "Mathieu", M24_VALUE, "24.23.22.21.20.48"),
        _exact("Conway 1", "Co1", "Leech", _f(p2=21, p3=9, p5=4, p7=2, p11=1, p13=1, p23=1), "factorization as printed"),
        _exact("Conway 2", "Co2", "Leech", _f(p2=18, p3=6, p5=3, p7=1, p11=1, p23=1), "factorization as printed"),
        _exact("Conway 3", "Co3", "Leech", _f(p2=10, p3=7, p5=3, p7=1, p11=1, p23=1), "factorization as printed"),
        _exact("Higman-Sims", "HS", "Leech", _f(p2=9, p3=2, p5=3, p7=1, p11=1), "factorization as printed"),
        _exact("McLaughlin", "McL", "Leech", _f(p2=7, p3=6, p5=3, p7=1, p11=1), "factorization as printed"),
        _exact("Hall-Janko", "J2", "Leech", _f(p2=7, p3=3, p5=2, p7=1), "factorization as printed"),
        _exact("Suzuki", "Suz", "Leech", _f(p2=13, p3=7, p5=2, p7=1),
               "factorization as printed; lists no factor 11 or 13"),
        _exact("Monster", "M", "Monster", prod(p**e for p, e in MONSTER_FACTORS.items()),
               "exact product of the prime factorization; table gives ≈ 8e54"),
        _approx("Baby Monster", "B", "Monster", "4e33", "only ≈ value printed"),
        _approx("Fischer 24", "Fi24", "Monster", "1e24", "only ≈ value printed"),
        _approx("Fischer 23", "Fi23", "Monster", "4e18", "only ≈ value printed"),
        _approx("Fischer 22", "Fi22", "Monster", "64e12", "only ≈ value printed"),
        _approx("Harada-Norton", "HN", "Monster", "2e14", "only ≈ value printed"),
        _approx("Thompson", "Th", "Monster", "9e17", "only ≈ value printed"),
        _exact("Held", "He", "Monster", 4030387200, "digits as printed"),
        _exact("Rudvalis", "Ru", "Pariah", 145926144000, "digits as printed, with factorization"),
        _exact("O'Nan", "ON", "Pariah", 460815505920, "digits as printed"),
        _exact("Lyons", "Ly", "Pariah", 51765179004000000, "digits as printed"),
        _exact("Janko 4", "J4", "Pariah", 86775571046077563880, "digits as printed"),
        _exact("Janko 3", "J3", "Pariah", 50232960, "digits as printed"),
        _exact("Janko 1", "J1", "Pariah", 175560, "digits as printed"),
    ]


def cross_check(entry: SporadicEntry) -> list[str]:
    """Reasons an exact entry looks corrupt: a prime factor above 71."""
    if not entry.exact:
        return []
    big = [p for p in entry.order.primes if p > SMOOTHNESS_BOUND]
    return [f"prime factor {p} exceeds {SMOOTHNESS_BOUND}" for p in big]


@lru_cache(maxsize=None)
def _table() -> tuple[SporadicEntry, ...]:
    out = []
    for e in _raw_table():
        problems = cross_check(e)
        if problems:
            e = SporadicEntry(e.name, e.symbol, e.level, e.value, e.approx, e.exact,
                              e.source_note + "; fails cross-check: " + ", ".join(problems), True)
        out.append(e)
    return tuple(out)


def sporadic_table() -> list[SporadicEntry]:
    return list(_table())


def sporadic(symbol: str) -> SporadicEntry:
    for e in _table():
        if e.symbol == symbol:
            return e
    raise KeyError(symbol)


def co0_order() -> FactoredInteger:
    """|Co_0| = |Aut(Leech lattice)| = 2 |Co_1|."""
    return FactoredInteger.from_factors(CO0_FACTORS)


def monster_order() -> FactoredInteger:
    return FactoredInteger.from_factors(MONSTER_FACTORS)


@dataclass(frozen=True)
class LawReport:
    order: int
    divisible_by_12: bool
    distinct_primes: int
    smallest_case: bool  # 60 = 2^2.3.5 is the least order meeting both laws

    @property
    def passes(self) -> bool:
        return self.divisible_by_12 and self.distinct_primes >= 3


def global_laws(order, strict: bool = True) -> LawReport:
    """Check 12 | order and at least three distinct prime divisors."""
    fo = order if isinstance(order, FactoredInteger) else FactoredInteger(order)
    rep = LawReport(fo.value, fo.value % 12 == 0, len(fo.primes), fo.value == 60)
    if strict and not rep.passes:
        raise LawViolation(f"{fo.value} = {fo} violates the laws: 12 | order {rep.divisible_by_12}, "
                           f"{rep.distinct_primes} distinct primes")
    return rep


# -- small simple groups, abelian counts, Monster primes ---------------------

SIMPLE_UNDER_2000 = [
    (60, "Alt_5", ("PSL", 2, 5)),
    (168, "PSL_3(2)=PSL_2(7)", ("PSL", 2, 7)),
    (360, "Alt_6=PSL_2(9)", ("PSL", 2, 9)),
    (504, "PSL_2(8)", ("PSL", 2, 8)),
    (660, "PSL_2(11)", ("PSL", 2, 11)),
    (1092, "PSL_2(13)", ("PSL", 2, 13)),
]


def simple_under_2000(certify: bool = False) -> list[tuple[int, str]]:
    """Non-abelian simple groups of order below 2000.

    With ``certify``, each is built as a PSL_2 permutation group, its order
    compared with the table, and its simplicity certified.
    """
    if certify:
        from .matgrp import psl_action
        from .permgrp import bsgs, is_simple
        for order, label, (_, n, q) in SIMPLE_UNDER_2000:
            G = bsgs(psl_action(n, q))
            if G.order_int != order or not is_simple(G).is_simple:
                raise AssertionError(f"{label} failed certification")
    return [(order, label) for order, label, _ in SIMPLE_UNDER_2000]


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """Part(n) by Euler's pentagonal recurrence."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def abelian_count(p: int, f: int) -> int:
    """Number of abelian groups of order p^f, which is Part(f)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not 0 <= f <= 100:
        raise ValueError("f must lie in 0..100")
    return partition_count(f)


@dataclass(frozen=True)
class PrimeCensus:
    primes: list[int]
    first20: list[int]
    present: list[int]
    omitted: list[int]

    @property
    def count_in_first20(self) -> int:
        return len(self.present)

    @property
    def first_omitted(self) -> int | None:
        return self.omitted[0] if self.omitted else None


def monster_prime_census() -> PrimeCensus:
    M = monster_order()
    first20 = [prime(i) for i in range(1, 21)]
    present = [p for p in first20 if M.value % p == 0]
    omitted = [p for p in first20 if M.value % p]
    return PrimeCensus(M.primes, first20, present, omitted)


MONSTER_IRREP_DIMS = (1, 196883, 21296876)


def monster_dimension_checks() -> dict[int, bool]:
    M = monster_order().value
    return {d: M % d == 0 for d in MONSTER_IRREP_DIMS}


def primes_below(n: int) -> list[int]:
    return list(primerange(2, n))
