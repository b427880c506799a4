"""Permutations on {0, ..., n-1} and their text formats.

Composition is left to right: ``(a * b)(x) = b(a(x))``, i.e. apply ``a``
first.  Points are 0-based in memory and 1-based in every text format.
"""
from __future__ import annotations

import re
from math import lcm
from pathlib import Path

from ..errors import DegreeMismatch, MalformedSyntax, PointOutOfRange, RepeatedPoint


def mul(a: tuple, b: tuple) -> tuple:
    """Raw product of image tuples: apply ``a`` then ``b``."""
    return tuple(map(b.__getitem__, a))


def inv(a: tuple) -> tuple:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def identity(n: int) -> tuple:
    return tuple(range(n))


def perm_order(a: tuple) -> int:
    seen = bytearray(len(a))
    out = 1
    for i in range(len(a)):
        if not seen[i]:
            length, j = 0, i
            while not seen[j]:
                seen[j] = 1
                j = a[j]
                length += 1
            out = lcm(out, length)
    return out


def cycle_type(a: tuple) -> tuple[int, ...]:
    seen = bytearray(len(a))
    lengths = []
    for i in range(len(a)):
        if not seen[i]:
            length, j = 0, i
            while not seen[j]:
                seen[j] = 1
                j = a[j]
                length += 1
            lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


class Permutation(tuple):
    """An immutable permutation stored as its image tuple."""

    __slots__ = ()

    def __new__(cls, images):
        t = tuple.__new__(cls, images)
        if sorted(t) != list(range(len(t))):
            raise ValueError(f"not a permutation: {tuple(t)}")
        return t

    @classmethod
    def _trusted(cls, images):
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls._trusted(range(n))

    @classmethod
    def from_cycles(cls, cycles, degree: int) -> Permutation:
        """Build from 0-based cycles."""
        img = list(range(degree))
        seen = set()
        for cyc in cycles:
            for x in cyc:
                if not 0 <= x < degree:
                    raise PointOutOfRange(f"point {x + 1} outside 1..{degree}")
                if x in seen:
                    raise RepeatedPoint(f"point {x + 1} repeated")
                seen.add(x)
            for i, x in enumerate(cyc):
                img[x] = cyc[(i + 1) % len(cyc)]
        return cls._trusted(img)

    @property
    def degree(self) -> int:
        return len(self)

    @property
    def images(self) -> tuple:
        return tuple(self)

    def __call__(self, x: int) -> int:
        return self[x]

    def __mul__(self, other):
        if len(other) != len(self):
            raise DegreeMismatch(f"degrees {len(self)} and {len(other)} differ")
        return Permutation._trusted(map(other.__getitem__, self))

    def __rmul__(self, other):
        return NotImplemented

    def __pow__(self, k: int) -> Permutation:
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Permutation.identity(len(self))
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> Permutation:
        return Permutation._trusted(inv(self))

    def order(self) -> int:
        return perm_order(self)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self))

    def conjugate(self, by) -> Permutation:
        """``by^-1 * self * by``."""
        return Permutation._trusted(mul(mul(inv(by), self), by))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, 0-based, each starting at its least point."""
        seen = set()
        out = []
        for i in range(len(self)):
            if i in seen or self[i] == i:
                continue
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self[j]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return cycle_type(self)

    def __str__(self):
        return format_perm(self)

    def __repr__(self):
        return f"Permutation({format_perm(self)}, degree={len(self)})"


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_perm(text: str, degree: int) -> Permutation:
    """Parse 1-based cycle notation such as ``"(1 2)(3 4 5)"``.

    Points may be separated by spaces or commas; ``""`` and ``"()"`` give
    the identity.  Every point may appear at most once.
    """
    stripped = text.strip()
    if stripped in ("", "()"):
        return Permutation.identity(degree)
    pos = 0
    cycles = []
    for m in _CYCLE.finditer(stripped):
        if stripped[pos:m.start()].strip():
            raise MalformedSyntax(f"unexpected text {stripped[pos:m.start()]!r} in {text!r}")
        pos = m.end()
        body = m.group(1).replace(",", " ").split()
        try:
            pts = [int(tok) - 1 for tok in body]
        except ValueError:
            raise MalformedSyntax(f"non-integer point in {text!r}") from None
        if pts:
            cycles.append(pts)
    if stripped[pos:].strip():
        raise MalformedSyntax(f"unexpected text {stripped[pos:]!r} in {text!r}")
    return Permutation.from_cycles(cycles, degree)


def format_perm(p) -> str:
    cyc = Permutation.cycles(p) if not isinstance(p, Permutation) else p.cycles()
    if not cyc:
        return "()"
    return "".join("(" + " ".join(str(x + 1) for x in c) + ")" for c in cyc)


def read_generators(path) -> tuple[int, list[Permutation]]:
    """Read a generator file: ``degree N`` then one permutation per line.

    Blank lines and ``#`` comments are ignored.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in Path(path).read_text().splitlines()]
    lines = [ln for ln in lines if ln]
    return parse_generators(lines)


def parse_generators(lines) -> tuple[int, list[Permutation]]:
    if isinstance(lines, str):
        lines = [ln.split("#", 1)[0].strip() for ln in lines.splitlines()]
        lines = [ln for ln in lines if ln]
    if not lines:
        raise MalformedSyntax("empty generator file")
    m = re.fullmatch(r"degree\s+(\d+)", lines[0])
    if not m:
        raise MalformedSyntax(f"first line must be 'degree N', got {lines[0]!r}")
    degree = int(m.group(1))
    return degree, [parse_perm(ln, degree) for ln in lines[1:]]


def format_generators(degree: int, gens) -> str:
    return "\n".join([f"degree {degree}"] + [format_perm(g) for g in gens]) + "\n"


def write_generators(path, degree: int, gens) -> None:
    Path(path).write_text(format_generators(degree, gens))
