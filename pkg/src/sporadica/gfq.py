"""Finite fields F_q, q = p^f, in Zech-logarithm representation.

Elements are identified with integers in ``[0, q)``: the value
``c_0 + c_1 p + ... + c_{f-1} p^{f-1}`` stands for the residue class of
``c_0 + c_1 x + ... + c_{f-1} x^{f-1}`` modulo the field's modulus
polynomial.  Arithmetic never touches polynomials after construction:
products go through discrete logs to a fixed primitive element ``g`` and
sums through the Zech table ``Z(k) = log(1 + g^k)``.

:class:`FieldTable` exposes fast arithmetic on these raw integers (used by
the matrix code); :class:`FieldElement` is the checked, user-facing wrapper.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import numpy as np

from .errors import DivisionByZero, FieldTooLarge, ForeignElement, NonPrime

MAX_FIELD_ORDER = 2**20
ZECH_ZERO = -1  # sentinel: 1 + g^k == 0


def is_prime(n: int) -> bool:
    """Trial-division primality test."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, f)`` with ``q == p**f`` and p prime, else None."""
    if q < 2:
        return None
    p = prime_factors(q)[0]
    f, r = 0, q
    while r % p == 0:
        r //= p
        f += 1
    return (p, f) if r == 1 else None


# -- polynomials over Z_p, coefficient lists low -> high ---------------------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, m, p):
    a = list(a)
    inv_lead = pow(m[-1], -1, p)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] * inv_lead % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return _trim(a[:dm])


def _poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _poly_powmod(base, e, m, p):
    result, base = [1], _poly_mod(base, m, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), m, p)
        base = _poly_mod(_poly_mul(base, base, p), m, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def is_irreducible(poly, p: int) -> bool:
    """Ben-Or test: no factor of degree <= deg/2 divides ``poly``."""
    f = len(poly) - 1
    if f <= 1:
        return f == 1
    xp = [0, 1]
    for _ in range(f // 2):
        xp = _poly_powmod(xp, p, poly, p)
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        g = _poly_gcd(poly, _trim(diff), p)
        if len(g) > 1:
            return False
    return True


def _x_is_primitive(poly, p, q):
    for r in prime_factors(q - 1):
        if _poly_powmod([0, 1], (q - 1) // r, poly, p) == [1]:
            return False
    return True


def find_modulus(p: int, f: int) -> tuple[int, ...]:
    """Least monic primitive polynomial of degree f over Z_p.

    Candidates ``x^f + c_{f-1} x^{f-1} + ... + c_0`` are scanned in
    increasing order of ``sum(c_i p^i)``.
    """
    q = p**f
    for code in range(q):
        coeffs = [(code // p**i) % p for i in range(f)] + [1]
        if coeffs[0] == 0:
            continue
        if is_irreducible(coeffs, p) and _x_is_primitive(coeffs, p, q):
            return tuple(coeffs)
    raise AssertionError(f"no primitive polynomial of degree {f} over F_{p}")


# -- field table --------------------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    p: int
    f: int

    @property
    def q(self) -> int:
        return self.p**self.f

    def __str__(self):
        return f"F({self.p}^{self.f})"


class FieldTable:
    """A fully materialized finite field.  Immutable after construction."""

    def __init__(self, p: int, f: int):
        self.spec = FieldSpec(p, f)
        self.p, self.f = p, f
        self.q = q = p**f
        self.modulus = find_modulus(p, f)
        n = q - 1

        # powers of x, as integer codes
        x_pow = [0] * n
        v = 1
        top_unit = p ** (f - 1)
        # x^f = -sum c_i x^i; precompute the digit vector to subtract for each top digit
        red = [self._scale_digits([(-c) % p for c in self.modulus[:-1]], t) for t in range(p)]
        for k in range(n):
            x_pow[k] = v
            if p == 2:
                v <<= 1
                if v >> f:
                    v ^= (1 << f) | red[1]
            else:
                t, low = divmod(v, top_unit)
                v = self._add_digits(low * p, red[t])
        log_x = [0] * q
        log_x[0] = ZECH_ZERO
        for k, val in enumerate(x_pow):
            log_x[val] = k
        if len(set(x_pow)) != n:
            raise AssertionError("modulus residue x is not primitive")

        # least primitive element by integer code
        gen = next(val for val in range(1, q) if gcd(log_x[val], n) == 1)
        lg = log_x[gen]
        exp = [x_pow[(k * lg) % n] for k in range(n)]
        log = [ZECH_ZERO] * q
        for k, val in enumerate(exp):
            log[val] = k
        self._exp = exp + exp  # doubled, so products need no reduction
        self._log = log

        zech = [ZECH_ZERO] * n
        for k in range(n):
            val = exp[k]
            d0 = val % p
            s = val - d0 + (d0 + 1) % p  # adding 1 touches only the constant digit
            zech[k] = log[s] if s else ZECH_ZERO
        self.zech_table = tuple(zech)
        if p == 2:
            self._neg = list(range(q))
        else:
            half = n // 2  # g^((q-1)/2) = -1
            self._neg = [0] + [self._exp[log[val] + half] for val in range(1, q)]
        self.generator = FieldElement(self, gen)

    # digit helpers, used only during construction
    def _digits(self, v):
        return [(v // self.p**i) % self.p for i in range(self.f)]

    def _undigits(self, ds):
        return sum(d * self.p**i for i, d in enumerate(ds))

    def _scale_digits(self, ds, t):
        return self._undigits([(d * t) % self.p for d in ds])

    def _add_digits(self, a, b):
        if self.p == 2:
            return a ^ b
        p, out, unit = self.p, 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * unit
            a //= p
            b //= p
            unit *= p
        return out

    # -- raw arithmetic on integer codes ---------------------------------
    def add(self, a: int, b: int) -> int:
        if a == 0:
            return b
        if b == 0:
            return a
        la, lb = self._log[a], self._log[b]
        z = self.zech_table[lb - la]  # negative index wraps mod q-1
        if z == ZECH_ZERO:
            return 0
        return self._exp[la + z]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("0 has no inverse")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def power(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivisionByZero("0 has no inverse")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def log(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("log of 0")
        return self._log[a]

    def exp(self, k: int) -> int:
        return self._exp[k % (self.q - 1)]

    def frob(self, a: int, k: int = 1) -> int:
        if a == 0:
            return 0
        return self._exp[(self._log[a] * self.p**k) % (self.q - 1)]

    # -- elements --------------------------------------------------------
    def element(self, value: int) -> FieldElement:
        if not 0 <= value < self.q:
            raise ValueError(f"{value} is not an element code of {self.spec}")
        return FieldElement(self, value)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, v) for v in range(self.q)]

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def parse(self, token: str) -> FieldElement:
        """Parse ``"0"`` or ``"g^k"`` (``"1"`` and ``"g"`` are accepted too)."""
        token = token.strip()
        if token == "0":
            return self.zero
        if token == "1":
            return self.one
        m = re.fullmatch(r"g(?:\^(-?\d+))?", token)
        if not m:
            raise ValueError(f"bad field element token {token!r}")
        return FieldElement(self, self.exp(int(m.group(1) or 1)))

    def __repr__(self):
        return f"FieldTable({self.spec}, modulus={self.modulus})"

    def __str__(self):
        return str(self.spec)

    # numpy views for vectorized checks
    def tables(self) -> tuple[np.ndarray, np.ndarray]:
        """Full addition and multiplication tables, computed through the Zech/log maps."""
        q, n = self.q, self.q - 1
        exp = np.array(self._exp[:n], dtype=np.int64)
        log = np.array(self._log, dtype=np.int64)
        zech = np.array(self.zech_table, dtype=np.int64)
        a = np.arange(q)[:, None]
        b = np.arange(q)[None, :]
        la, lb = log[a], log[b]
        z = zech[(lb - la) % n]
        summed = np.where(z == ZECH_ZERO, 0, exp[(la + z) % n])
        add = np.where(a == 0, b, np.where(b == 0, a, summed))
        mul = np.where((a == 0) | (b == 0), 0, exp[(la + lb) % n])
        return add, mul


@dataclass(frozen=True, eq=False)
class FieldElement:
    field: FieldTable
    value: int

    @property
    def representation(self) -> str:
        return "zero" if self.value == 0 else "log"

    @property
    def log(self) -> int | None:
        return None if self.value == 0 else self.field.log(self.value)

    def _check(self, other):
        if not isinstance(other, FieldElement) or other.field is not self.field:
            raise ForeignElement(f"{other!r} is not an element of {self.field.spec}")

    def __eq__(self, other):
        return isinstance(other, FieldElement) and other.field is self.field and other.value == self.value

    def __hash__(self):
        return hash((id(self.field), self.value))

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.add(self.value, other.value))

    def __sub__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.sub(self.value, other.value))

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.mul(self.value, other.value))

    def __truediv__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.div(self.value, other.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.power(self.value, e))

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return "0" if self.value == 0 else f"g^{self.log}"

    def __repr__(self):
        return f"<{self} in {self.field.spec}>"


@lru_cache(maxsize=None)
def make_field(p: int, f: int = 1) -> FieldTable:
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    if f < 1:
        raise ValueError(f"exponent must be positive, got {f}")
    if p**f > MAX_FIELD_ORDER:
        raise FieldTooLarge(f"q = {p}^{f} exceeds {MAX_FIELD_ORDER}")
    return FieldTable(p, f)


def field_of_order(q: int) -> FieldTable:
    pf = prime_power(q)
    if pf is None:
        from .errors import NotPrimePower
        raise NotPrimePower(f"{q} is not a prime power")
    return make_field(*pf)


def arith(t: FieldTable, op: str, a: FieldElement, b: FieldElement) -> FieldElement:
    for x in (a, b):
        if not isinstance(x, FieldElement) or x.field is not t:
            raise ForeignElement(f"{x!r} does not belong to {t.spec}")
    fn = {"add": t.add, "sub": t.sub, "mul": t.mul}[op]
    return FieldElement(t, fn(a.value, b.value))


def invert(t: FieldTable, a: FieldElement) -> FieldElement:
    if not isinstance(a, FieldElement) or a.field is not t:
        raise ForeignElement(f"{a!r} does not belong to {t.spec}")
    return FieldElement(t, t.inv(a.value))


def frobenius(t: FieldTable, k: int, a: FieldElement) -> FieldElement:
    """The field automorphism a -> a^(p^k), 0 <= k < f."""
    if not isinstance(a, FieldElement) or a.field is not t:
        raise ForeignElement(f"{a!r} does not belong to {t.spec}")
    if not 0 <= k < t.f:
        raise ValueError(f"Frobenius index must lie in [0, {t.f}), got {k}")
    return FieldElement(t, t.frob(a.value, k))


# -- exhaustive verification ----------------------------------------------

def verify_axioms(t: FieldTable) -> dict[str, bool]:
    """Certify the field axioms over every element of ``t``.

    Commutativity, identities and inverses are checked on the full q x q
    tables.  Associativity uses Light's test: the set of elements g with
    x(gy) = (xg)y for all x, y is closed under the operation, so checking
    it for a generating set covers every triple.  The additive generators
    are the unit digit vectors; the multiplicative ones are 0 and g.
    Distributivity likewise reduces to c in the additive generating set
    once addition is known to be associative and commutative.
    """
    q, p = t.q, t.p
    add, mul = t.tables()
    idx = np.arange(q)
    basis = [p**i for i in range(t.f)]
    g = t.generator.value
    res = {}
    res["add_commutative"] = bool((add == add.T).all())
    res["mul_commutative"] = bool((mul == mul.T).all())
    res["add_identity"] = bool((add[0] == idx).all())
    res["mul_identity"] = bool((mul[1] == idx).all() and (mul[0] == 0).all())
    res["add_inverse_unique"] = bool(((add == 0).sum(axis=1) == 1).all())
    res["mul_inverse_unique"] = bool(((mul[1:, 1:] == 1).sum(axis=1) == 1).all())
    res["add_associative"] = all(
        (add[idx[:, None], add[c][None, :]] == add[add[:, c][:, None], idx[None, :]]).all()
        for c in basis
    )
    res["mul_associative"] = all(
        (mul[idx[:, None], mul[c][None, :]] == mul[mul[:, c][:, None], idx[None, :]]).all()
        for c in (0, g)
    )
    res["distributive"] = all(
        (mul[idx[:, None], add[:, c][None, :]] == add[mul, mul[:, c][:, None]]).all()
        for c in basis
    )
    acc = np.zeros(q, dtype=np.int64)
    for _ in range(p):
        acc = add[acc, idx]
    res["characteristic_p"] = bool((acc == 0).all())
    powers = [t.exp(k) for k in range(q - 1)]
    res["multiplicative_cyclic"] = sorted(powers) == list(range(1, q)) and t.power(g, q - 1) == 1
    return res


def verify_frobenius(t: FieldTable) -> dict[str, bool]:
    """Each a -> a^(p^k) is an automorphism; k=0 is the identity; the f maps are distinct."""
    add, mul = t.tables()
    maps = [np.array([t.frob(v, k) for v in range(t.q)]) for k in range(t.f)]
    ok_add = all((m[add] == add[m[:, None], m[None, :]]).all() for m in maps)
    ok_mul = all((m[mul] == mul[m[:, None], m[None, :]]).all() for m in maps)
    distinct = len({tuple(m) for m in maps}) == t.f
    return {
        "additive": ok_add,
        "multiplicative": ok_mul,
        "identity_at_zero": bool((maps[0] == np.arange(t.q)).all()),
        "pairwise_distinct": distinct,
        "bijective": all(len(set(m.tolist())) == t.q for m in maps),
    }


def prime_powers_up_to(n: int) -> list[int]:
    return [q for q in range(2, n + 1) if prime_power(q)]
