"""Conjugacy classes and simplicity for groups of moderate order."""
from __future__ import annotations

import random
from dataclasses import dataclass
from operator import itemgetter

from ..errors import OrderBoundExceeded
from .bsgs import GroupBSGS, normal_closure
from .perm import Permutation, inv, perm_order

CLASS_ORDER_BOUND = 10**6
CLASS_SEED = 20240601


@dataclass(frozen=True)
class ConjugacyClass:
    representative: Permutation
    size: int
    order: int

    def __iter__(self):
        # allows ``rep, size = cls`` unpacking
        yield self.representative
        yield self.size


def _encoder(degree: int):
    if degree <= 256:
        return bytes, lambda b: tuple(b)
    return tuple, tuple


def _conjugation_orbit(x, conjugators, encode):
    """Class of ``x`` as the orbit under conjugation by the generators."""
    seen = {x}
    todo = [x]
    while todo:
        y = todo.pop()
        for s, gather in conjugators:
            # s^-1 y s sends s(i) to s(y(i))
            w = tuple(map(s.__getitem__, y))
            z = encode(gather(w))
            if z not in seen:
                seen.add(z)
                todo.append(z)
    return seen


def conjugacy_classes(G: GroupBSGS, seed: int = CLASS_SEED, bound: int = CLASS_ORDER_BOUND) -> list[ConjugacyClass]:
    """All classes of G, each with its lexicographically least element as representative.

    Classes are found from seeded random elements and then, if needed, by
    walking the whole group; the class-size sum is checked against |G|.
    Classes are sorted by (element order, size, representative).
    """
    order = G.order_int
    if order > bound:
        raise OrderBoundExceeded(f"group order {order} exceeds class bound {bound}")
    encode, decode = _encoder(G.degree)
    gens = [tuple(g) for g in G.generators if not Permutation.is_identity(g)]
    conjugators = []
    for s in gens:
        si = inv(s)
        conjugators.append((s, itemgetter(*si) if len(si) > 1 else (lambda w: w)))
    member: set = set()
    found = []

    def absorb(g):
        key = encode(g)
        if key in member:
            return
        orbit = _conjugation_orbit(key, conjugators, encode)
        member.update(orbit)
        found.append((min(orbit), len(orbit)))

    absorb(G._id)
    rng = random.Random(seed)
    # random search finds big classes quickly; small ones turn up as powers
    tries = 0
    while len(member) < order and tries < 40 * (len(found) + 4):
        g = tuple(G.random_element(rng))
        tries += 1
        k = perm_order(g)
        p = g
        for _ in range(1, k):
            absorb(p)
            p = tuple(map(g.__getitem__, p))
    if len(member) < order:
        for g in G.elements():
            absorb(tuple(g))
            if len(member) >= order:
                break
    if len(member) != order:
        raise RuntimeError("class sizes do not add up to the group order")
    out = []
    for key, size in found:
        rep = Permutation._trusted(decode(key))
        out.append(ConjugacyClass(rep, size, perm_order(rep)))
    out.sort(key=lambda c: (c.order, c.size, tuple(c.representative)))
    return out


def centralizer_order_brute(G: GroupBSGS, g) -> int:
    """|C_G(g)| by scanning every element (test oracle)."""
    g = tuple(g)
    return sum(1 for x in G.elements() if tuple(map(g.__getitem__, x)) == tuple(map(x.__getitem__, g)))


@dataclass(frozen=True)
class SimplicityResult:
    verdict: str  # "simple", "not simple" or "unknown"
    witness: GroupBSGS | None = None
    reason: str = ""

    @property
    def is_simple(self):
        return self.verdict == "simple"

    def __str__(self):
        if self.witness is not None:
            return f"{self.verdict} (normal subgroup of order {self.witness.order_int})"
        return self.verdict


def Simple(reason=""):
    return SimplicityResult("simple", None, reason)


def NotSimple(witness=None, reason=""):
    return SimplicityResult("not simple", witness, reason)


def Unknown(reason=""):
    return SimplicityResult("unknown", None, reason)


def is_simple(G: GroupBSGS, bound: int = CLASS_ORDER_BOUND) -> SimplicityResult:
    """Certify simplicity: every nontrivial class must normally generate G."""
    order = G.order_int
    if order == 1:
        return NotSimple(reason="trivial group")
    if order > bound:
        return Unknown(f"order {order} above certified bound {bound}")
    for c in conjugacy_classes(G, bound=bound):
        if c.order == 1:
            continue
        N = normal_closure(G, [c.representative])
        if N.order_int != order:
            return NotSimple(N, f"class of order-{c.order} elements generates a proper normal subgroup")
    return Simple("every nontrivial class generates the whole group")
