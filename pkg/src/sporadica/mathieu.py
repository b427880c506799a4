"""The Mathieu groups, built as automorphisms of the Golay code.

M24 is generated by code automorphisms found with a backtrack over point
images.  Once five points are mapped, the octad through them must go to
the octad through their images; this refinement leaves very few choices.
M12 is the stabilizer of a dodecad, and the two chains come from
successive point stabilizers.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from importlib import resources
from math import prod
from pathlib import Path

from .codes import BinaryCode, golay_lexicode, least_dodecad, mask, octads_steiner_check, support
from .errors import NotGolay, SearchBudgetExceeded
from .permgrp.bsgs import ActionReport, GroupBSGS, transitivity_degree
from .permgrp.perm import Permutation, read_generators, write_generators

M24_ORDER = 244823040
M12_ORDER = 95040
DEFAULT_BUDGET = 10**9
SEARCH_SEED = 24
FULL = (1 << 24) - 1


class OctadIndex:
    """Lookup from any 5-set of points to the unique octad containing it."""

    def __init__(self, code: BinaryCode):
        octads, steiner = octads_steiner_check(code)
        if not steiner:
            raise NotGolay("octads do not form a Steiner system S(5,8,24)")
        self.code = code
        self.octads = octads
        self.by_five: dict[int, int] = {}
        for o in octads:
            for five in itertools.combinations(support(o), 5):
                self.by_five[mask(five)] = o


def is_code_automorphism(code: BinaryCode, perm) -> bool:
    return all(apply_to_word(perm, b) in code for b in code.basis)


def apply_to_word(perm, w: int) -> int:
    out = 0
    while w:
        low = w & -w
        out |= 1 << perm[low.bit_length() - 1]
        w ^= low
    return out


class _Search:
    """Depth-first search for code automorphisms with given images of a few points."""

    def __init__(self, index: OctadIndex, budget: int, keep: int = 0):
        self.index = index
        self.code = index.code
        self.budget = budget
        self.nodes = 0
        # points of ``keep`` must map into ``keep`` (a set stabilizer)
        self.keep = keep

    def initial_domains(self):
        if not self.keep:
            return [FULL] * 24
        inside, outside = self.keep, FULL ^ self.keep
        return [inside if self.keep >> x & 1 else outside for x in range(24)]

    def run(self, prefix, targets, limit=1):
        """Up to ``limit`` automorphisms sending prefix[i] to targets[i]."""
        domains = self.initial_domains()
        found: list[tuple] = []
        assigned: list[tuple[int, int]] = []
        for x, y in zip(prefix, targets):
            if not domains[x] >> y & 1:
                return found
            if not self._assign(domains, assigned, x, y):
                return found
        self._dfs(domains, assigned, found, limit)
        return found

    def _assign(self, domains, assigned, x, y) -> bool:
        """Set x -> y and refine; False on contradiction."""
        queue = [(x, y)]
        while queue:
            x, y = queue.pop()
            if not domains[x] >> y & 1:
                return False
            domains[x] = 1 << y
            bit = 1 << y
            for z in range(24):
                if z != x and domains[z] & bit:
                    domains[z] &= ~bit
                    if not domains[z]:
                        return False
            # new 5-sets: x with four of the earliest mapped points
            early = assigned[:8]
            assigned.append((x, y))
            if len(early) >= 4:
                for four in itertools.combinations(early, 4):
                    src = mask([p for p, _ in four]) | (1 << x)
                    dst = mask([q for _, q in four]) | bit
                    o, o2 = self.index.by_five[src], self.index.by_five[dst]
                    rest_src, rest_dst = o ^ src, o2 ^ dst
                    for z in range(24):
                        if rest_src >> z & 1:
                            d = domains[z] & rest_dst
                        elif not src >> z & 1:
                            d = domains[z] & ~o2
                        else:
                            continue
                        if d != domains[z]:
                            if not d:
                                return False
                            domains[z] = d
            for z in range(24):
                d = domains[z]
                if d & (d - 1) == 0 and not any(p == z for p, _ in assigned) and (z, d.bit_length() - 1) not in queue:
                    queue.append((z, d.bit_length() - 1))
        return True

    def _dfs(self, domains, assigned, found, limit):
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchBudgetExceeded(f"search exceeded {self.budget} nodes", self.nodes)
        done = {p for p, _ in assigned}
        if len(done) == 24:
            perm = [0] * 24
            for p, q in assigned:
                perm[p] = q
            if is_code_automorphism(self.code, perm):
                found.append(tuple(perm))
            return len(found) >= limit
        x = min((z for z in range(24) if z not in done), key=lambda z: (bin(domains[z]).count("1"), z))
        d = domains[x]
        while d:
            low = d & -d
            d ^= low
            doms = list(domains)
            asg = list(assigned)
            if self._assign(doms, asg, x, low.bit_length() - 1):
                if self._dfs(doms, asg, found, limit):
                    return True
        return False


def count_extensions(index: OctadIndex, prefix, targets, budget=DEFAULT_BUDGET, keep: int = 0) -> int:
    """Number of code automorphisms sending prefix to targets (exhaustive)."""
    return len(_Search(index, budget, keep).run(prefix, targets, limit=10**9))


@dataclass
class BuildInfo:
    nodes: int = 0
    candidates: int = 0
    certified_order: int = 0
    source: str = "search"


def _canonical_group(gens, degree, max_order=None):
    gens = sorted(set(tuple(g) for g in gens))
    return GroupBSGS([Permutation._trusted(g) for g in gens], degree=degree, max_order=max_order)


def m24_build(code: BinaryCode | None = None, budget: int = DEFAULT_BUDGET, seed: int = SEARCH_SEED,
              info: BuildInfo | None = None) -> GroupBSGS:
    """M24 as the automorphism group of the Golay code.

    Random images of the base (0, 1, 2, 3, 4) are completed to automorphisms
    until the generated group reaches the order bound 24.23.22.21.20 * s,
    where s is the number of automorphisms fixing the base pointwise.  The
    bound holds for the full automorphism group, so reaching it certifies
    equality.
    """
    code = code or golay_lexicode()
    info = info if info is not None else BuildInfo()
    index = OctadIndex(code)
    search = _Search(index, budget)
    base = (0, 1, 2, 3, 4)
    fixers = search.run(base, base, limit=10**9)
    bound = prod(range(20, 25)) * len(fixers)
    info.certified_order = bound
    rng = random.Random(seed)
    G = GroupBSGS([], degree=24, max_order=None)
    gens = []
    while G.order_int < bound:
        target = tuple(rng.sample(range(24), 5))
        info.candidates += 1
        for g in search.run(base, target, limit=1):
            if G.add_generator(g):
                gens.append(g)
    info.nodes = search.nodes
    return _canonical_group(gens, 24)


def m24_from_file(path=None, code: BinaryCode | None = None) -> GroupBSGS:
    """Load exported M24 generators and check they are Golay code automorphisms."""
    code = code or golay_lexicode()
    if path is None:
        text = resources.files("sporadica").joinpath("data/m24.gens").read_text()
        from .permgrp.perm import parse_generators
        degree, gens = parse_generators(text)
    else:
        degree, gens = read_generators(path)
    if degree != 24 or not all(is_code_automorphism(code, g) for g in gens):
        raise NotGolay("generators do not preserve the Golay code")
    return _canonical_group(gens, 24)


def dodecad_orbit(G: GroupBSGS, d: int) -> set[int]:
    orbit = {d}
    todo = [d]
    while todo:
        w = todo.pop()
        for s in G.generators:
            v = apply_to_word(s, w)
            if v not in orbit:
                orbit.add(v)
                todo.append(v)
    return orbit


def m12_build(G: GroupBSGS | None = None, code: BinaryCode | None = None, budget: int = DEFAULT_BUDGET,
              seed: int = SEARCH_SEED, info: BuildInfo | None = None) -> GroupBSGS:
    """Set stabilizer of the least dodecad, restricted to its 12 points.

    The stabilizer order is |M24| divided by the dodecad orbit length; the
    search stops once the generated subgroup has that order.  Points are
    relabelled 0..11 in increasing order.
    """
    code = code or golay_lexicode()
    G = G or m24_build(code, budget=budget)
    info = info if info is not None else BuildInfo()
    d = least_dodecad(code)
    target_order = G.order_int // len(dodecad_orbit(G, d))
    info.certified_order = target_order
    pts = support(d)
    index = OctadIndex(code)
    search = _Search(index, budget, keep=d)
    rng = random.Random(seed)
    S = GroupBSGS([], degree=24, max_order=None)
    gens = []
    base = tuple(pts[:5])
    while S.order_int < target_order:
        target = tuple(rng.sample(pts, 5))
        info.candidates += 1
        for g in search.run(base, target, limit=1):
            if S.add_generator(g):
                gens.append(g)
    info.nodes = search.nodes
    S = _canonical_group(gens, 24)
    M12 = S.restrict(pts)
    if M12.order_int != S.order_int:
        raise AssertionError("restriction to the dodecad is not faithful")
    return _canonical_group(M12.generators, 12)


@dataclass
class MathieuChain:
    labels: list[str]
    groups: list[GroupBSGS]
    action_reports: list[ActionReport] = field(default_factory=list)
    fixed: list[int] = field(default_factory=list)

    @property
    def orders(self) -> list[int]:
        return [G.order_int for G in self.groups]

    def restricted(self, i: int) -> GroupBSGS:
        """Group i acting on the points not yet fixed, relabelled in order."""
        G = self.groups[i]
        rest = [x for x in range(G.degree) if x not in self.fixed[:i]]
        return G.restrict(rest)


def _chain(G: GroupBSGS, labels) -> MathieuChain:
    fixed = list(range(len(labels) - 1))
    chain = G.with_base_prefix(fixed)
    groups, reports = [], []
    for i, label in enumerate(labels):
        H = GroupBSGS._from_levels(chain, i) if i else G
        rest = list(range(i, G.degree))
        groups.append(H)
        reports.append(transitivity_degree(H, rest))
    return MathieuChain(list(labels), groups, reports, fixed)


def chain_m24(G: GroupBSGS) -> MathieuChain:
    """M24 > M23 > M22 > M21 > M20 by fixing points 0, 1, 2, 3."""
    return _chain(G, ["M24", "M23", "M22", "M21", "M20"])


def chain_m12(G: GroupBSGS) -> MathieuChain:
    """M12 > M11 > M10 > M9 > M8 by fixing points 0, 1, 2, 3."""
    return _chain(G, ["M12", "M11", "M10", "M9", "M8"])


def export(G: GroupBSGS, path) -> None:
    write_generators(path, G.degree, G.generators)


def shipped_generators_path() -> Path:
    return Path(str(resources.files("sporadica").joinpath("data/m24.gens")))
