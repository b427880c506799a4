"""Short vectors of the Leech lattice in integer coordinates.

A vector x in Z^24 lies in the lattice (scaled so the minimal norm is 32)
when, for m = 0 or 1:

* every x_i is congruent to m mod 2,
* sum(x_i) is congruent to 4m mod 8,
* the positions with x_i = 2 mod 4 (m = 0), or x_i = 1 mod 4 (m = 1), form
  a Golay codeword.

Vectors are counted shape by shape, a shape being the multiset of |x_i|.
Every vector of a shape has its mod-4 position set in the code, so running
over codewords for that set (and over the free signs) meets every lattice
vector of the shape; each candidate is then tested against all three
conditions.  Shapes come from all ways of writing the norm as a sum of at
most 24 squares of one parity, so no shape is missed.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field

from .codes import BinaryCode, golay_lexicode, mask, weight
from .errors import NotGolay, NotInLattice

KISSING_NORM = 32
DIM = 24


def lattice_parity(code: BinaryCode, v) -> int | None:
    """m when ``v`` lies in the lattice, otherwise None."""
    v = list(v)
    if len(v) != DIM:
        return None
    m = v[0] & 1
    if any((x & 1) != m for x in v):
        return None
    if (sum(v) - 4 * m) % 8:
        return None
    key = 2 if m == 0 else 1
    if mask(i for i, x in enumerate(v) if x % 4 == key) not in code:
        return None
    return m


def in_lattice(code: BinaryCode, v) -> bool:
    return lattice_parity(code, v) is not None


def norm_check(v, code: BinaryCode | None = None) -> int:
    """Norm sum(x_i^2) of a lattice vector; NotInLattice if the congruences fail."""
    code = code or golay_lexicode()
    if not in_lattice(code, v):
        raise NotInLattice(f"{tuple(v)} violates the lattice congruences")
    n = sum(x * x for x in v)
    if n % 16:
        raise AssertionError(f"lattice vector of norm {n}, not a multiple of 16")
    return n


def shapes(norm: int) -> list[tuple[int, ...]]:
    """Descending tuples of positive ints, all of one parity, with squares summing to ``norm``.

    Odd shapes must fill all 24 coordinates; even shapes pad with zeros.
    """
    out = []

    def rec(rest, top, parts):
        if rest == 0:
            out.append(tuple(parts))
            return
        if len(parts) == DIM:
            return
        for a in range(min(top, int(rest**0.5)), 0, -1):
            rec(rest - a * a, a, parts + [a])

    rec(norm, norm, [])
    keep = []
    for s in out:
        if all(a % 2 == 0 for a in s):
            keep.append(s)
        elif all(a % 2 for a in s) and len(s) == DIM:
            keep.append(s)
    return keep


def shape_name(s: tuple[int, ...]) -> str:
    c = Counter(s)
    if len(s) < DIM:
        c[0] = DIM - len(s)
    return " ".join(f"{a}^{k}" if k > 1 else str(a) for a, k in sorted(c.items(), reverse=True))


def _arrangements(values, positions):
    """Ways to place the multiset ``values`` on the list ``positions``."""
    seen = set()
    for perm in itertools.permutations(values):
        if perm not in seen:
            seen.add(perm)
            yield dict(zip(positions, perm))


def _vectors_of_shape(code: BinaryCode, s: tuple[int, ...]):
    words_by_weight: dict[int, list[int]] = {}
    for w in code.words:
        words_by_weight.setdefault(weight(w), []).append(w)
    if s[0] % 2 == 0:
        twos = [a for a in s if a % 4 == 2]
        fours = [a for a in s if a % 4 == 0]
        for c in sorted(words_by_weight.get(len(twos), [])):
            tpos = [i for i in range(DIM) if c >> i & 1]
            rest = [i for i in range(DIM) if not c >> i & 1]
            for fpos in itertools.combinations(rest, len(fours)):
                for t_arr in _arrangements(twos, tpos):
                    for f_arr in _arrangements(fours, list(fpos)):
                        absval = [0] * DIM
                        for i, a in itertools.chain(t_arr.items(), f_arr.items()):
                            absval[i] = a
                        support = tpos + list(fpos)
                        for signs in itertools.product((1, -1), repeat=len(support)):
                            v = list(absval)
                            for i, e in zip(support, signs):
                                v[i] *= e
                            yield v
    else:
        big = [a for a in s if a != 1]
        for bpos in itertools.permutations(range(DIM), len(big)):
            if len(set(zip(bpos, big))) != len(big):
                continue
            absval = [1] * DIM
            for i, a in zip(bpos, big):
                absval[i] = a
            if any(bpos[k] > bpos[k + 1] for k in range(len(big) - 1) if big[k] == big[k + 1]):
                continue
            for c in sorted(code.words):
                # sign makes x = 1 mod 4 exactly on c
                yield [a if ((a % 4 == 1) == bool(c >> i & 1)) else -a for i, a in enumerate(absval)]


@dataclass
class LeechCensus:
    norm: int
    shapes: dict[str, int] = field(default_factory=dict)
    candidates: int = 0

    @property
    def total(self) -> int:
        return sum(self.shapes.values())

    def to_dict(self) -> dict:
        return {"norm": self.norm, "shapes": dict(self.shapes), "total": self.total}


def census(code: BinaryCode, norm: int) -> LeechCensus:
    out = LeechCensus(norm)
    for s in shapes(norm):
        n = 0
        for v in _vectors_of_shape(code, s):
            out.candidates += 1
            if in_lattice(code, v):
                n += 1
        out.shapes[shape_name(s)] = n
    return out


def minimal_vectors(code: BinaryCode | None = None) -> tuple[LeechCensus, LeechCensus]:
    """Census at the minimal norm 32 and at the half norm 16."""
    code = code or golay_lexicode()
    if code.length != 24 or code.dimension != 12 or min(weight(w) for w in code.words if w) != 8:
        raise NotGolay("the construction needs the [24, 12, 8] Golay code")
    return census(code, KISSING_NORM), census(code, KISSING_NORM // 2)
