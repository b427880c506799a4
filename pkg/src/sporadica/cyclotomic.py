"""Exact elements of Z[zeta_e], kept in the power basis modulo Phi_e."""
from __future__ import annotations

import cmath
from functools import lru_cache
from math import gcd


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients (low degree first) of the n-th cyclotomic polynomial."""
    # x^n - 1 divided by Phi_d for every proper divisor d
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _exact_div(num, list(cyclotomic_poly(d)))
    return tuple(num)


def _exact_div(a, b):
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = a[i + len(b) - 1] // b[-1]
        out[i] = c
        for j, y in enumerate(b):
            a[i + j] -= c * y
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    return out


def _reduce(poly: dict[int, int], e: int) -> tuple[int, ...]:
    """Reduce sum c_k x^k (k mod e) modulo Phi_e."""
    phi = cyclotomic_poly(e)
    deg = len(phi) - 1
    c = [0] * e
    for k, v in poly.items():
        c[k % e] += v
    for i in range(e - 1, deg - 1, -1):
        t = c[i]
        if t:
            # phi is monic: x^deg = -sum phi_j x^j
            for j in range(deg):
                c[i - deg + j] -= t * phi[j]
            c[i] = 0
    return tuple(c[:deg])


class Cyclo:
    """An element of Z[zeta_e] with zeta_e = exp(2 pi i / e)."""

    __slots__ = ("e", "coeffs")

    def __init__(self, e: int, terms: dict[int, int] | None = None, coeffs=None):
        self.e = e
        self.coeffs = tuple(coeffs) if coeffs is not None else _reduce(terms or {}, e)

    @classmethod
    def integer(cls, e: int, n: int) -> Cyclo:
        return cls(e, {0: n})

    def _terms(self) -> dict[int, int]:
        return {k: c for k, c in enumerate(self.coeffs) if c}

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Cyclo(self.e, coeffs=tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.e, coeffs=tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict[int, int] = {}
        for i, x in self._terms().items():
            for j, y in other._terms().items():
                out[(i + j) % self.e] = out.get((i + j) % self.e, 0) + x * y
        return Cyclo(self.e, out)

    __rmul__ = __mul__

    def _coerce(self, other) -> Cyclo:
        if isinstance(other, Cyclo):
            if other.e != self.e:
                raise ValueError("cyclotomic elements of different levels")
            return other
        return Cyclo.integer(self.e, int(other))

    def conjugate(self) -> Cyclo:
        return Cyclo(self.e, {(-k) % self.e: c for k, c in self._terms().items()})

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Cyclo.integer(self.e, other)
        if not isinstance(other, Cyclo):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        return hash((self.e, tuple(c)))

    def as_int(self) -> int | None:
        if all(c == 0 for c in self.coeffs[1:]):
            return self.coeffs[0] if self.coeffs else 0
        return None

    def __complex__(self):
        z = cmath.exp(2j * cmath.pi / self.e)
        return sum(c * z**k for k, c in enumerate(self.coeffs))

    def vector(self) -> list[int]:
        """Coefficients in the basis 1, zeta, ..., zeta^(phi(e)-1)."""
        return list(self.coeffs)

    def __str__(self):
        n = self.as_int()
        if n is not None:
            return str(n)
        w = complex(self)
        re, im = round(w.real, 3) + 0.0, round(w.imag, 3) + 0.0
        if im == 0:
            return f"{re:g}"
        sign = "+" if im >= 0 else "-"
        return f"{re:g}{sign}{abs(im):g}i"

    def __repr__(self):
        return f"Cyclo({self.e}, {self.vector()})"


def totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)
