"""Groups given by generators, certified by a base and strong generating set.

The construction is the deterministic Schreier-Sims algorithm.  Base points
are taken from an optional prefix and then as the smallest point moved by
the first generator that fixes the current base.  Schreier generators are
processed in (orbit point, generator index) order, and each one is sifted
once: a generator that strips to the identity stays stripped as the chain
below it only grows, so it is remembered and never redone.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from math import prod

from ..errors import DegreeMismatch, OrderBoundExceeded, PointOutOfRange
from ..factored import FactoredInteger
from .perm import Permutation, inv, mul

DEFAULT_MAX_ORDER = 10**10


class _Level:
    __slots__ = ("point", "gens", "trans", "trans_inv", "orbit", "checked")

    def __init__(self, point: int, n: int):
        self.point = point
        self.gens: list[tuple] = []
        ident = tuple(range(n))
        self.trans = {point: ident}
        self.trans_inv = {point: ident}
        self.orbit = [point]
        self.checked: set[tuple[int, int]] = set()

    def add_gen(self, h: tuple) -> None:
        self.gens.append(h)
        old = len(self.orbit)
        trans, trans_inv, orbit = self.trans, self.trans_inv, self.orbit
        i = 0
        while i < len(orbit):
            p = orbit[i]
            for s in ((h,) if i < old else self.gens):
                x = s[p]
                if x not in trans:
                    u = mul(trans[p], s)
                    trans[x] = u
                    trans_inv[x] = inv(u)
                    orbit.append(x)
            i += 1


class GroupBSGS:
    """A permutation group with a verified stabilizer chain.

    ``generators`` are kept as given; ``strong_generators`` and ``base``
    certify ``order`` as the product of the basic orbit lengths.
    """

    def __init__(self, generators, degree: int | None = None, base=(), max_order=DEFAULT_MAX_ORDER):
        gens = [tuple(g) for g in generators]
        if degree is None:
            if not gens:
                raise ValueError("degree is required for a group with no generators")
            degree = len(gens[0])
        for g in gens:
            if len(g) != degree:
                raise DegreeMismatch(f"generator of degree {len(g)} in a group of degree {degree}")
        for b in base:
            if not 0 <= b < degree:
                raise PointOutOfRange(f"base point {b} outside 0..{degree - 1}")
        self.degree = degree
        self.max_order = max_order
        self.generators = [Permutation._trusted(g) for g in gens]
        self._id = tuple(range(degree))
        self.levels: list[_Level] = [_Level(b, degree) for b in base]
        self.strong: list[tuple] = []
        for g in gens:
            if g != self._id:
                self._insert(g, 0)
        self._schreier_sims(len(self.levels) - 1)

    # -- construction ------------------------------------------------------
    def _insert(self, h: tuple, start: int) -> int:
        """Add ``h`` as a strong generator at levels ``start..j``; return j."""
        j = start
        while j < len(self.levels) and h[self.levels[j].point] == self.levels[j].point:
            j += 1
        if j == len(self.levels):
            moved = next(i for i, x in enumerate(h) if i != x)
            self.levels.append(_Level(moved, self.degree))
        self.strong.append(h)
        for lvl in self.levels[start:j + 1]:
            lvl.add_gen(h)
        if self.max_order is not None and self.order_int > self.max_order:
            raise OrderBoundExceeded(f"group order exceeds {self.max_order}")
        return j

    def _sift(self, g: tuple, start: int = 0):
        """Strip ``g`` through levels ``start..``; return (residue, level reached)."""
        for lvl_index in range(start, len(self.levels)):
            lvl = self.levels[lvl_index]
            x = g[lvl.point]
            if x == lvl.point:
                continue
            ui = lvl.trans_inv.get(x)
            if ui is None:
                return g, lvl_index
            g = tuple(map(ui.__getitem__, g))
        return g, len(self.levels)

    def _schreier_sims(self, i: int) -> None:
        while i >= 0:
            lvl = self.levels[i]
            restart = None
            for p in lvl.orbit:
                up = lvl.trans[p]
                for si, s in enumerate(lvl.gens):
                    if (p, si) in lvl.checked:
                        continue
                    ui = lvl.trans_inv[s[p]]
                    g = tuple(map(ui.__getitem__, map(s.__getitem__, up)))
                    if g != self._id:
                        h, j = self._sift(g, i + 1)
                        if h != self._id:
                            restart = self._insert(h, i + 1)
                            break
                    lvl.checked.add((p, si))
                if restart is not None:
                    break
            if restart is None:
                i -= 1
            else:
                i = restart

    def add_generator(self, g) -> bool:
        """Extend the group by ``g``; return False if it was already a member."""
        g = tuple(g)
        if len(g) != self.degree:
            raise DegreeMismatch(f"generator of degree {len(g)} in a group of degree {self.degree}")
        h, j = self._sift(g)
        if h == self._id:
            return False
        self.generators.append(Permutation._trusted(g))
        # h lies in the stabilizer of the first j base points
        self._insert(h, 0)
        self._schreier_sims(len(self.levels) - 1)
        return True

    @classmethod
    def _from_levels(cls, parent: GroupBSGS, start: int) -> GroupBSGS:
        """The pointwise stabilizer of ``parent.base[:start]``, sharing its chain."""
        obj = cls.__new__(cls)
        obj.degree = parent.degree
        obj.max_order = parent.max_order
        obj._id = parent._id
        obj.levels = [_copy_level(lvl) for lvl in parent.levels[start:]]
        obj.strong = list(obj.levels[0].gens) if obj.levels else []
        obj.generators = [Permutation._trusted(g) for g in obj.strong]
        return obj

    # -- queries -------------------------------------------------------------
    @property
    def base(self) -> list[int]:
        return [lvl.point for lvl in self.levels]

    @property
    def strong_generators(self) -> list[Permutation]:
        return [Permutation._trusted(g) for g in self.strong]

    @property
    def basic_orbits(self) -> list[list[int]]:
        return [list(lvl.orbit) for lvl in self.levels]

    @property
    def order_int(self) -> int:
        return prod(len(lvl.orbit) for lvl in self.levels)

    @property
    def order(self) -> FactoredInteger:
        return FactoredInteger(self.order_int)

    def __len__(self):
        return self.order_int

    def contains(self, g) -> bool:
        g = tuple(g)
        if len(g) != self.degree:
            return False
        return self._sift(g)[0] == self._id

    __contains__ = contains

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def is_trivial(self) -> bool:
        return not self.levels

    def is_abelian(self) -> bool:
        gens = [g for g in self.generators if tuple(g) != self._id]
        return all(mul(a, b) == mul(b, a) for a, b in itertools.combinations(gens, 2))

    def random_element(self, rng: random.Random) -> Permutation:
        g = self._id
        for lvl in reversed(self.levels):
            g = mul(g, lvl.trans[rng.choice(lvl.orbit)])
        return Permutation._trusted(g)

    def elements(self):
        """Every element exactly once, in a fixed order."""
        transversals = [[lvl.trans[p] for p in lvl.orbit] for lvl in reversed(self.levels)]
        for combo in itertools.product(*transversals):
            g = self._id
            for u in combo:
                g = mul(g, u)
            yield Permutation._trusted(g)

    def orbit(self, x: int) -> list[int]:
        if not 0 <= x < self.degree:
            raise PointOutOfRange(f"point {x} outside 0..{self.degree - 1}")
        seen = {x}
        out = [x]
        for p in out:
            for s in self.strong:
                y = s[p]
                if y not in seen:
                    seen.add(y)
                    out.append(y)
        return out

    def orbits(self, points=None) -> list[list[int]]:
        todo = list(range(self.degree)) if points is None else list(points)
        seen = set()
        out = []
        for x in todo:
            if x not in seen:
                orb = self.orbit(x)
                seen.update(orb)
                out.append(sorted(orb))
        return out

    def with_base_prefix(self, prefix) -> GroupBSGS:
        """Same group, with a chain whose base starts with ``prefix``."""
        prefix = list(prefix)
        if self.base[:len(prefix)] == prefix:
            return self
        return GroupBSGS(self.strong or [], degree=self.degree, base=prefix, max_order=None)

    def pointwise_stabilizer(self, points) -> GroupBSGS:
        points = list(points)
        if not points:
            return self
        chain = self.with_base_prefix(points)
        return GroupBSGS._from_levels(chain, len(points))

    def subgroup(self, gens) -> GroupBSGS:
        return GroupBSGS(gens, degree=self.degree, max_order=self.max_order)

    def is_subgroup_of(self, other: GroupBSGS) -> bool:
        return all(other.contains(g) for g in self.generators)

    def is_normal_in(self, other: GroupBSGS) -> bool:
        return self.is_subgroup_of(other) and all(
            self.contains(mul(mul(inv(s), g), s)) for s in other.generators for g in self.generators
        )

    def restrict(self, points) -> GroupBSGS:
        """Action on an invariant set of points, relabelled 0..len-1 in the given order."""
        points = list(points)
        index = {x: i for i, x in enumerate(points)}
        gens = []
        for g in self.generators:
            try:
                gens.append(tuple(index[g[x]] for x in points))
            except KeyError:
                raise ValueError("point set is not invariant under the group") from None
        return GroupBSGS(gens, degree=len(points), max_order=self.max_order)

    def __repr__(self):
        return f"<GroupBSGS degree={self.degree} order={self.order_int} base={self.base}>"


def _copy_level(lvl: _Level) -> _Level:
    new = _Level.__new__(_Level)
    new.point = lvl.point
    new.gens = list(lvl.gens)
    new.trans = dict(lvl.trans)
    new.trans_inv = dict(lvl.trans_inv)
    new.orbit = list(lvl.orbit)
    new.checked = set(lvl.checked)
    return new


def bsgs(gens, degree: int | None = None, max_order=DEFAULT_MAX_ORDER) -> GroupBSGS:
    return GroupBSGS(gens, degree=degree, max_order=max_order)


# -- orbits, stabilizers, transitivity ----------------------------------------

def orbit_stabilizer(G: GroupBSGS, x: int) -> tuple[list[int], GroupBSGS]:
    if not 0 <= x < G.degree:
        raise PointOutOfRange(f"point {x} outside 0..{G.degree - 1}")
    chain = G.with_base_prefix([x])
    orbit = sorted(chain.levels[0].orbit) if chain.levels else [x]
    return orbit, GroupBSGS._from_levels(chain, 1)


@dataclass
class ActionReport:
    orbit_count: int
    transitivity_degree: int
    sharp: bool
    stabilizer_chain_orders: list[int] = field(default_factory=list)
    points: int = 0

    def __str__(self):
        return f"k={self.transitivity_degree}{' sharp' if self.sharp else ''}, order {self.stabilizer_chain_orders[0]}"


def transitivity_degree(G: GroupBSGS, points=None) -> ActionReport:
    """Largest k such that the iterated point stabilizers stay transitive.

    ``points`` is the (invariant) domain, all points by default.  The
    stabilized points are taken in increasing order; stabilizers of
    different points of one orbit are conjugate, so the choice is immaterial.
    The action is sharp when the k-point stabilizer is trivial.
    """
    domain = sorted(range(G.degree) if points is None else points)
    orbit_count = len(G.orbits(domain))
    chain = G.with_base_prefix(domain[:-1] if len(domain) > 1 else domain)
    base = chain.base
    orders = [G.order_int]
    k = 0
    while k < len(domain):
        remaining = len(domain) - k
        if k < len(base) and base[k] == domain[k]:
            orbit_len = len(chain.levels[k].orbit)
        else:
            # the stabilizer of domain[:k] is trivial, or fixes domain[k]
            orbit_len = 1
        if orbit_len != remaining:
            break
        k += 1
        orders.append(orders[-1] // orbit_len)
    sharp = k >= 1 and orders[k] == 1
    return ActionReport(orbit_count, k, sharp, orders[:k + 1], len(domain))


# -- normal structure --------------------------------------------------------

def normal_closure(G: GroupBSGS, elements) -> GroupBSGS:
    """Smallest normal subgroup of G containing ``elements``."""
    N = GroupBSGS([], degree=G.degree, max_order=G.max_order)
    queue = []
    for e in elements:
        if N.add_generator(e):
            queue.append(tuple(e))
    target = G.order_int
    gens = [(tuple(s), inv(s)) for s in G.generators]
    while queue and N.order_int < target:
        n = queue.pop()
        for s, si in gens:
            c = mul(mul(si, n), s)
            if N.add_generator(c):
                queue.append(c)
    return N


def commutator(a, b) -> tuple:
    """``a^-1 b^-1 a b``."""
    return mul(mul(mul(inv(a), inv(b)), a), b)


def derived_subgroup(G: GroupBSGS) -> GroupBSGS:
    gens = [tuple(g) for g in G.generators]
    comms = [commutator(a, b) for a, b in itertools.combinations(gens, 2)]
    return normal_closure(G, [c for c in comms if c != G._id])


def brute_force_closure(gens, degree: int | None = None, limit: int = 10**6) -> set[tuple]:
    """All elements generated by ``gens``, by breadth-first closure (test oracle)."""
    gens = [tuple(g) for g in gens]
    n = degree if degree is not None else len(gens[0])
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = mul(x, s)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        if len(seen) > limit:
            raise OrderBoundExceeded(f"closure exceeds {limit} elements")
        frontier = nxt
    return seen
