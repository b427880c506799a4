"""Exact q-series for the j-function, the moonshine sums, and exp(pi sqrt 163)."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import isqrt

from .errors import NoDecomposition

MAX_TERMS = 1000


@dataclass(frozen=True)
class IntSeries:
    """sum c_k q^(val + k) + O(q^prec), with integer coefficients."""

    val: int
    coeffs: tuple[int, ...]
    prec: int

    def __post_init__(self):
        if self.val + len(self.coeffs) > self.prec:
            object.__setattr__(self, "coeffs", tuple(self.coeffs[: max(self.prec - self.val, 0)]))

    @classmethod
    def from_dict(cls, terms: dict[int, int], prec: int) -> IntSeries:
        if not terms:
            return cls(prec, (), prec)
        lo = min(terms)
        hi = min(max(terms) + 1, prec)
        return cls(lo, tuple(terms.get(k, 0) for k in range(lo, hi)), prec)

    @classmethod
    def one(cls, prec: int) -> IntSeries:
        return cls(0, (1,), prec)

    def __getitem__(self, k: int) -> int:
        if k >= self.prec:
            raise IndexError(f"q^{k} lies beyond the precision O(q^{self.prec})")
        i = k - self.val
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def terms(self) -> list[tuple[int, int]]:
        return [(self.val + i, c) for i, c in enumerate(self.coeffs)]

    def normalized(self) -> IntSeries:
        """Strip leading zeros, so ``val`` is the true valuation."""
        c = list(self.coeffs)
        v = self.val
        while c and c[0] == 0:
            c.pop(0)
            v += 1
        while c and c[-1] == 0:
            c.pop()
        if not c:
            return IntSeries(self.prec, (), self.prec)
        return IntSeries(v, tuple(c), self.prec)

    def truncate(self, prec: int) -> IntSeries:
        return IntSeries(self.val, self.coeffs, min(prec, self.prec))

    def __add__(self, other: IntSeries) -> IntSeries:
        prec = min(self.prec, other.prec)
        lo = min(self.val, other.val)
        hi = min(prec, max(self.val + len(self.coeffs), other.val + len(other.coeffs)))
        return IntSeries(lo, tuple(self[k] + other[k] for k in range(lo, max(hi, lo))), prec)

    def __neg__(self) -> IntSeries:
        return IntSeries(self.val, tuple(-c for c in self.coeffs), self.prec)

    def __sub__(self, other: IntSeries) -> IntSeries:
        return self + (-other)

    def __mul__(self, other) -> IntSeries:
        if isinstance(other, int):
            return IntSeries(self.val, tuple(c * other for c in self.coeffs), self.prec)
        a, b = self.normalized(), other.normalized()
        prec = min(a.prec + b.val, b.prec + a.val)
        val = a.val + b.val
        n = max(prec - val, 0)
        out = [0] * n
        bc = b.coeffs
        for i, x in enumerate(a.coeffs[:n]):
            if x:
                lim = min(len(bc), n - i)
                for j in range(lim):
                    out[i + j] += x * bc[j]
        return IntSeries(val, tuple(out), prec)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntSeries:
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            a = self.normalized()
            return IntSeries.one(a.prec - a.val)
        result = None
        base = self
        while True:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if not k:
                return result
            base = base * base

    def inverse(self) -> IntSeries:
        """1/self; the leading coefficient must be +1 or -1."""
        a = self.normalized()
        if not a.coeffs or a.coeffs[0] not in (1, -1):
            raise ValueError("leading coefficient must be a unit")
        lead = a.coeffs[0]
        n = a.prec - a.val  # relative precision
        c = a.coeffs
        out = [0] * n
        out[0] = lead
        for k in range(1, n):
            s = 0
            for i in range(1, min(k, len(c) - 1) + 1):
                s += c[i] * out[k - i]
            out[k] = -lead * s
        return IntSeries(-a.val, tuple(out), n - a.val)

    def __truediv__(self, other: IntSeries) -> IntSeries:
        return self * other.inverse()

    def __eq__(self, other):
        if not isinstance(other, IntSeries):
            return NotImplemented
        prec = min(self.prec, other.prec)
        lo = min(self.val, other.val)
        return all(self[k] == other[k] for k in range(lo, prec))

    def __hash__(self):
        return hash(self.normalized().coeffs)

    def __str__(self):
        parts = [f"{c}q^{k}" for k, c in self.terms() if c]
        return " + ".join(parts + [f"O(q^{self.prec})"])


def sigma3_sieve(n: int) -> list[int]:
    """sigma_3(k) for k = 0..n-1 (index 0 unused)."""
    s = [0] * n
    for d in range(1, n):
        d3 = d**3
        for m in range(d, n, d):
            s[m] += d3
    return s


def eisenstein_e4(prec: int) -> IntSeries:
    s = sigma3_sieve(prec)
    return IntSeries(0, tuple([1] + [240 * x for x in s[1:]]), prec)


def euler_product_pentagonal(prec: int) -> IntSeries:
    """prod (1 - q^n) = sum (-1)^k q^(k(3k-1)/2) over all integers k."""
    c = [0] * prec
    k = 0
    while True:
        hit = False
        for e in ({k * (3 * k - 1) // 2, k * (3 * k + 1) // 2} if k else {0}):
            if e < prec:
                c[e] += -1 if k % 2 else 1
                hit = True
        if not hit:
            break
        k += 1
    return IntSeries(0, tuple(c), prec)


def delta_pentagonal(prec: int) -> IntSeries:
    """q prod (1 - q^n)^24, from the sparse pentagonal series."""
    p = euler_product_pentagonal(prec)
    return IntSeries(1, (p**24).coeffs, prec)


def delta_direct(prec: int) -> IntSeries:
    """q prod (1 - q^n)^24 by multiplying out each factor in turn."""
    n = prec - 1
    c = [0] * n
    c[0] = 1
    for m in range(1, n):
        for _ in range(24):
            for k in range(n - 1, m - 1, -1):
                c[k] -= c[k - m]
    return IntSeries(1, tuple(c), prec)


def j_expansion(n: int, delta=delta_pentagonal) -> IntSeries:
    """j = E4^3 / Delta with coefficients of q^-1 .. q^n."""
    if not 1 <= n <= MAX_TERMS:
        raise ValueError(f"terms must lie in 1..{MAX_TERMS}")
    prec = n + 2
    e4 = eisenstein_e4(prec)
    j = (e4 * e4 * e4) / delta(prec + 1)
    return j.truncate(n + 1)


J_Q3 = 864299970  # frozen after the E4^3/Delta and eta-product routes agreed


# -- moonshine sums -------------------------------------------------------------

MONSTER_DIMS = (1, 196883, 21296876)
MULTIPLICITY_BOUND = 10
# 1/q and 744 come before the pattern starts
EXEMPT_EXPONENTS = (-1, 0)


def moonshine_decompose(coeff: int, dims=MONSTER_DIMS, bound: int = MULTIPLICITY_BOUND) -> dict[int, int]:
    """Multiplicities m_d <= bound with sum m_d * d = coeff.

    Among all solutions the one with the least total multiplicity is
    returned (ties broken by favouring larger dimensions).
    """
    dims = sorted(set(dims), reverse=True)
    best = None
    for ms in itertools.product(range(bound + 1), repeat=len(dims)):
        if sum(m * d for m, d in zip(ms, dims)) == coeff:
            key = (sum(ms), tuple(-m for m in ms))
            if best is None or key < best[0]:
                best = (key, ms)
    if best is None:
        raise NoDecomposition(f"{coeff} is not a sum of {dims} with multiplicities <= {bound}")
    return {d: m for d, m in sorted(zip(dims, best[1])) if m}


@dataclass(frozen=True)
class MoonshineCheck:
    exponent: int
    coefficient: int
    decomposition: dict[int, int] | None
    exempt: bool

    @property
    def ok(self) -> bool:
        return self.exempt or self.decomposition is not None


def moonshine_check(terms: int = 2) -> list[MoonshineCheck]:
    j = j_expansion(max(terms, 1))
    out = []
    for k in range(-1, terms + 1):
        c = j[k]
        exempt = k in EXEMPT_EXPONENTS
        try:
            dec = moonshine_decompose(c)
        except NoDecomposition:
            dec = None
        out.append(MoonshineCheck(k, c, dec, exempt))
    return out


# -- exp(pi sqrt 163) ------------------------------------------------------------

GUARD_DIGITS = 15


def _arctan_inv(x: int, one: int) -> int:
    """arctan(1/x) scaled by ``one``."""
    total = term = one // x
    x2 = x * x
    k = 1
    sign = -1
    while term:
        term //= x2
        total += sign * (term // (2 * k + 1))
        sign = -sign
        k += 1
    return total


def fixed_pi(one: int) -> int:
    """pi * one by Machin's formula."""
    return 4 * (4 * _arctan_inv(5, one) - _arctan_inv(239, one))


def fixed_exp(x: int, one: int) -> int:
    """exp(x / one) * one for x >= 0, by halving and the Taylor series."""
    k = 0
    while x > one:
        x //= 2
        k += 1
    total = term = one
    n = 1
    while term:
        term = term * x // (one * n)
        total += term
        n += 1
    for _ in range(k):
        total = total * total // one
    return total


def ramanujan_constant(digits: int = 40) -> tuple[int, str]:
    """exp(pi sqrt 163) as (integer part, first ``digits`` fractional digits).

    Computed in fixed point with guard digits; the squaring in fixed_exp
    multiplies relative error by 2^k, so extra guard digits cover it.
    """
    if not 30 <= digits <= 200:
        raise ValueError("digits must lie in 30..200")
    work = digits + GUARD_DIGITS + 30
    one = 10**work
    root = isqrt(163 * one * one)
    x = fixed_pi(one) * root // one
    val = fixed_exp(x, one)
    ip, frac = divmod(val, one)
    fs = str(frac).rjust(work, "0")[:digits]
    return ip, fs


def ramanujan_string(digits: int = 40) -> str:
    ip, fs = ramanujan_constant(digits)
    return f"{ip}.{fs}"
