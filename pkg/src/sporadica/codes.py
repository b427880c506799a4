"""Binary linear codes, the extended Golay code as a lexicode, and its octads.

Words are Python ints; bit i is coordinate (point) i.
"""
from __future__ import annotations

import itertools
from collections import Counter
from functools import cached_property, lru_cache

import numpy as np

from .errors import CodeTooLarge, NotGolay

MAX_ENUM_DIMENSION = 16


def weight(w: int) -> int:
    return bin(w).count("1")


def support(w: int) -> list[int]:
    return [i for i in range(w.bit_length()) if w >> i & 1]


def mask(points) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


class BinaryCode:
    """A binary linear code given by a basis of ``length``-bit words."""

    def __init__(self, length: int, basis):
        self.length = length
        self.basis = tuple(int(b) for b in basis)
        for b in self.basis:
            if b >> length:
                raise ValueError(f"word {b:#x} longer than {length} bits")
        if _rank(self.basis) != len(self.basis):
            raise ValueError("basis words are linearly dependent")

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @cached_property
    def words(self) -> frozenset[int]:
        return frozenset(self.iter_words())

    def iter_words(self):
        """All codewords, in Gray-code order starting from 0."""
        if self.dimension > MAX_ENUM_DIMENSION:
            raise CodeTooLarge(f"dimension {self.dimension} exceeds {MAX_ENUM_DIMENSION}")
        w = 0
        yield w
        for i in range(1, 1 << self.dimension):
            w ^= self.basis[(i & -i).bit_length() - 1]
            yield w

    def __contains__(self, w: int) -> bool:
        return w in self.words

    def __len__(self):
        return 1 << self.dimension

    def words_of_weight(self, k: int) -> list[int]:
        return sorted(w for w in self.words if weight(w) == k)

    def __repr__(self):
        return f"BinaryCode(length={self.length}, dimension={self.dimension})"


def _rank(words) -> int:
    pivots: dict[int, int] = {}
    for w in words:
        while w:
            top = w.bit_length() - 1
            if top not in pivots:
                pivots[top] = w
                break
            w ^= pivots[top]
    return len(pivots)


def lexicode(n: int, d: int) -> list[int]:
    """Greedy code: scan all n-bit words upwards, keep those at distance >= d from every kept word.

    A bitmap marks every word within distance d - 1 of a kept word, so
    the next kept word is the next unmarked one.
    """
    ball = np.array(
        sorted(mask(c) for r in range(d) for c in itertools.combinations(range(n), r)),
        dtype=np.int64 if n > 30 else np.int32,
    )
    blocked = np.zeros(1 << n, dtype=np.uint8)
    buf = np.empty_like(ball)
    kept = []
    pos, end, chunk = 0, 1 << n, 1 << 14
    while pos < end:
        seg = blocked[pos:pos + chunk]
        i = int(seg.argmin())
        if seg[i]:
            pos += chunk
            continue
        w = pos + i
        kept.append(w)
        np.bitwise_xor(ball, w, out=buf)
        blocked[buf] = 1
        pos = w + 1
    return kept


def pivot_basis(words) -> list[int]:
    """The first words (in the given order) that are independent of those before them."""
    basis = []
    for w in words:
        if _rank(basis + [w]) > len(basis):
            basis.append(w)
    return basis


@lru_cache(maxsize=None)
def _golay_words() -> tuple[int, ...]:
    return tuple(lexicode(24, 8))


def golay_lexicode() -> BinaryCode:
    """The extended binary Golay code, as the length-24 distance-8 lexicode.

    Raises NotGolay unless the greedy set is exactly the span of its pivots.
    """
    kept = _golay_words()
    code = BinaryCode(24, pivot_basis(kept))
    if code.dimension != 12 or len(kept) != 4096 or set(kept) != code.words:
        raise NotGolay("lexicode is not a linear [24, 12] code")
    return code


def weight_distribution(c: BinaryCode) -> dict[int, int]:
    counts = Counter(weight(w) for w in c.iter_words())
    return dict(sorted(counts.items()))


def minimum_distance(c: BinaryCode) -> int:
    return min(weight(w) for w in c.iter_words() if w)


def is_self_orthogonal(c: BinaryCode) -> bool:
    """Every pair of basis words meets evenly (implies the same for all codewords)."""
    return all(weight(a & b) % 2 == 0 for a in c.basis for b in c.basis)


def octads_steiner_check(c: BinaryCode) -> tuple[list[int], bool]:
    """The weight-8 words, and whether each 5-set of points lies in exactly one of them."""
    octads = c.words_of_weight(8)
    if len(octads) != 759:
        raise NotGolay(f"{len(octads)} words of weight 8, expected 759")
    seen = Counter()
    for o in octads:
        for five in itertools.combinations(support(o), 5):
            seen[mask(five)] += 1
    total = sum(1 for _ in itertools.combinations(range(c.length), 5))
    steiner = len(seen) == total and all(v == 1 for v in seen.values())
    return octads, steiner


def octads_containing(octads, points) -> list[int]:
    m = mask(points)
    return [o for o in octads if o & m == m]


def least_dodecad(c: BinaryCode) -> int:
    """The weight-12 codeword whose sorted support is lexicographically least."""
    return min(c.words_of_weight(12), key=support)


def format_code(c: BinaryCode) -> str:
    width = (c.length + 3) // 4
    return "\n".join(f"{b:0{width}x}" for b in c.basis) + "\n"


def parse_code(text: str, length: int = 24) -> BinaryCode:
    words = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            words.append(int(line, 16))
    return BinaryCode(length, words)
