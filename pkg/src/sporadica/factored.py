"""Arbitrary-precision integers carried together with their factorization."""
from __future__ import annotations

from functools import total_ordering
from math import prod

from sympy import factorint, isprime


@total_ordering
class FactoredInteger:
    """A positive integer stored with its prime factorization.

    Arithmetic is limited to what order computations need: products,
    exact quotients and powers.  Construct from an ``int`` (factored on
    the spot) or from a ``{prime: exponent}`` mapping via :meth:`from_factors`.
    """

    __slots__ = ("value", "factors")

    def __init__(self, value: int):
        value = int(value)
        if value < 1:
            raise ValueError(f"FactoredInteger needs a positive value, got {value}")
        self.value = value
        self.factors = {p: e for p, e in sorted(factorint(value).items())}

    @classmethod
    def from_factors(cls, factors: dict[int, int]) -> FactoredInteger:
        for p, e in factors.items():
            if e < 0 or not isprime(p):
                raise ValueError(f"bad factor {p}^{e}")
        obj = cls.__new__(cls)
        obj.factors = {p: e for p, e in sorted(factors.items()) if e > 0}
        obj.value = prod(p**e for p, e in obj.factors.items())
        return obj

    @classmethod
    def product(cls, terms) -> FactoredInteger:
        out = cls(1)
        for t in terms:
            out = out * t
        return out

    def __int__(self):
        return self.value

    __index__ = __int__

    def __hash__(self):
        return hash(self.value)

    def __eq__(self, other):
        if isinstance(other, FactoredInteger):
            return self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __lt__(self, other):
        return self.value < int(other)

    def __mul__(self, other):
        other = _coerce(other)
        merged = dict(self.factors)
        for p, e in other.factors.items():
            merged[p] = merged.get(p, 0) + e
        return FactoredInteger.from_factors(merged)

    __rmul__ = __mul__

    def __floordiv__(self, other):
        other = _coerce(other)
        merged = dict(self.factors)
        for p, e in other.factors.items():
            if merged.get(p, 0) < e:
                raise ValueError(f"{other.value} does not divide {self.value}")
            merged[p] -= e
        return FactoredInteger.from_factors(merged)

    def __pow__(self, k: int):
        return FactoredInteger.from_factors({p: e * k for p, e in self.factors.items()})

    def divides(self, n) -> bool:
        return int(n) % self.value == 0

    @property
    def primes(self) -> list[int]:
        return list(self.factors)

    def __str__(self):
        if self.value == 1:
            return "1"
        return "·".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors.items())

    def __repr__(self):
        return f"FactoredInteger({self.value}={self})"


def _coerce(x) -> FactoredInteger:
    return x if isinstance(x, FactoredInteger) else FactoredInteger(x)
