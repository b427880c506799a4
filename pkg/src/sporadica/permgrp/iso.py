"""Isomorphism testing and recognition of small groups."""
from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass

from ..errors import OrderBoundExceeded
from .bsgs import GroupBSGS
from .classes import CLASS_SEED, _conjugation_orbit, _encoder, conjugacy_classes
from .perm import Permutation, inv, mul, perm_order

ISO_ORDER_BOUND = 25000


def class_fingerprint(classes) -> Counter:
    """Multiset of (element order, class size) over the classes."""
    return Counter((c.order, c.size) for c in classes)


@dataclass
class Isomorphism:
    """A verified isomorphism G -> H, given by generator images.

    Images of arbitrary elements are read off the graph subgroup of G x H.
    """
    source: GroupBSGS
    target: GroupBSGS
    generators: list[Permutation]
    images: list[Permutation]
    _graph: GroupBSGS

    def __call__(self, g) -> Permutation:
        d = self.source.degree
        e = self.target.degree
        x = tuple(g) + tuple(range(d, d + e))
        residue, _ = self._graph._sift(x)
        if residue[:d] != tuple(range(d)):
            raise ValueError("element is not in the source group")
        h = tuple(y - d for y in residue[d:])
        return Permutation._trusted(inv(h))

    def __str__(self):
        return ", ".join(f"{g} -> {h}" for g, h in zip(self.generators, self.images))


def _pair(g, h, d, e):
    return tuple(g) + tuple(x + d for x in h)


def _try_map(G, H, gens, imgs):
    order = G.order_int
    d, e = G.degree, H.degree
    try:
        graph = GroupBSGS([_pair(g, h, d, e) for g, h in zip(gens, imgs)],
                          degree=d + e, base=range(d), max_order=order)
    except OrderBoundExceeded:
        return None
    if graph.order_int != order:
        return None
    if GroupBSGS(imgs, degree=e, max_order=order).order_int != order:
        return None
    return graph


def _word_orders(a, b):
    """Orders of a few short words; an isomorphism must preserve them."""
    ab = mul(a, b)
    abi = mul(a, inv(b))
    aab = mul(a, ab)
    abb = mul(ab, b)
    comm = mul(mul(inv(a), inv(b)), ab)
    return tuple(perm_order(w) for w in (ab, abi, aab, abb, comm, mul(ab, abi)))


def _two_generators(G: GroupBSGS, classes, rng):
    """A generating pair (g1, g2) with g2 taken from as small a class as possible."""
    order = G.order_int
    ranked = sorted((c for c in classes if c.order > 1), key=lambda c: c.size)
    for c in ranked:
        g2 = tuple(c.representative)
        for _ in range(200):
            g1 = tuple(G.random_element(rng))
            if GroupBSGS([g1, g2], degree=G.degree, max_order=order).order_int == order:
                return g1, g2
    return None


def is_isomorphic(G: GroupBSGS, H: GroupBSGS, seed: int = CLASS_SEED, bound: int = ISO_ORDER_BOUND):
    """Return an :class:`Isomorphism` G -> H, or None when none exists.

    A None answer is certified: either the (element order, class size)
    fingerprints differ, or an exhaustive search over class-compatible
    images of a generating pair finds nothing.
    """
    order = G.order_int
    if order != H.order_int:
        return None
    if order > bound:
        raise OrderBoundExceeded(f"order {order} exceeds isomorphism bound {bound}")
    if order == 1:
        return Isomorphism(G, H, [], [], GroupBSGS([], degree=G.degree + H.degree))
    cg = conjugacy_classes(G)
    ch = conjugacy_classes(H)
    if class_fingerprint(cg) != class_fingerprint(ch):
        return None
    rng = random.Random(seed)
    if G.is_abelian() and H.is_abelian():
        gens = _abelian_gens(G, rng)
    else:
        pair = _two_generators(G, cg, rng)
        if pair is None:
            raise RuntimeError("no generating pair found")
        gens = list(pair)
    return _search(G, H, gens, cg, ch)


def _abelian_gens(G, rng):
    gens = []
    S = GroupBSGS([], degree=G.degree)
    while S.order_int < G.order_int:
        g = tuple(G.random_element(rng))
        if S.add_generator(g):
            gens.append(g)
    return gens


def _class_of(x, classes, conjugators, encode):
    key = encode(x)
    orbit = _conjugation_orbit(key, conjugators, encode)
    m = min(orbit)
    for c in classes:
        if encode(c.representative) == m:
            return c, orbit
    raise ValueError("element not found among the classes")


def _conjugators(G):
    out = []
    for s in G.generators:
        s = tuple(s)
        si = inv(s)
        out.append((s, (lambda w, si=si: tuple(w[i] for i in si))))
    return out


def _search(G, H, gens, cg, ch):
    eg, dg = _encoder(G.degree)
    eh, dh = _encoder(H.degree)
    cjg, cjh = _conjugators(G), _conjugators(H)
    # candidate images for each generator: whole matching classes in H
    cands = []
    for k, g in enumerate(gens):
        c, _ = _class_of(g, cg, cjg, eg)
        pool = []
        for d in ch:
            if (d.order, d.size) != (c.order, c.size):
                continue
            if k == 0:
                pool.append(tuple(d.representative))
            else:
                key = eh(tuple(d.representative))
                pool.extend(sorted(tuple(dh(x)) for x in _conjugation_orbit(key, cjh, eh)))
        cands.append(pool)
    target = _word_orders(gens[0], gens[1]) if len(gens) == 2 else None
    for imgs in itertools.product(*cands):
        if target is not None and _word_orders(imgs[0], imgs[1]) != target:
            continue
        if len(gens) > 2 and any(mul(imgs[i], imgs[j]) != mul(imgs[j], imgs[i])
                                 for i, j in itertools.combinations(range(len(gens)), 2)):
            continue
        graph = _try_map(G, H, gens, imgs)
        if graph is None:
            continue
        iso = Isomorphism(G, H, [Permutation._trusted(g) for g in gens],
                          [Permutation._trusted(h) for h in imgs], graph)
        if not verify_isomorphism(iso):
            raise RuntimeError("constructed map failed verification")
        return iso
    return None


def verify_isomorphism(iso: Isomorphism) -> bool:
    """Check the map on the original generators and all their products of length 2."""
    gens = [tuple(g) for g in iso.source.generators]
    imgs = {g: tuple(iso(g)) for g in gens}
    for g, h in imgs.items():
        if not iso.target.contains(h) or perm_order(g) != perm_order(h):
            return False
    for a, b in itertools.product(gens, repeat=2):
        if tuple(iso(mul(a, b))) != mul(imgs[a], imgs[b]):
            return False
    return GroupBSGS(list(imgs.values()), degree=iso.target.degree).order_int == iso.target.order_int


# -- small group recognition -----------------------------------------------------

def _is_prime_power(n):
    for p in range(2, n + 1):
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            return (p, k) if n == 1 else None
    return None


def recognize_small(G: GroupBSGS) -> str:
    """Name G as Z_n, V, E_{p^k}, D_n, Q, Q_m, or "other" (|G| <= 64)."""
    n = G.order_int
    if n > 64:
        return "other"
    elems = [tuple(g) for g in G.elements()]
    orders = {g: perm_order(g) for g in elems}
    exponent_max = max(orders.values())
    if exponent_max == n:
        return f"Z_{n}"
    if G.is_abelian():
        pk = _is_prime_power(n)
        if pk and exponent_max == pk[0]:
            return "V" if n == 4 else f"E_{n}"
        return "other"
    if n % 2:
        return "other"
    half = n // 2
    for r in (g for g in elems if orders[g] == half):
        cyc = set()
        x = G._id
        for _ in range(half):
            cyc.add(x)
            x = mul(x, r)
        outside = [g for g in elems if g not in cyc]
        if all(orders[g] == 2 for g in outside):
            return f"D_{half}"
        if half % 2 == 0 and all(orders[g] == 4 for g in outside):
            m = half // 2
            central = _power(r, m)
            if all(mul(s, s) == central for s in outside):
                return "Q" if m == 2 else f"Q_{m}"
    return "other"


def _power(g, k):
    out = tuple(range(len(g)))
    for _ in range(k):
        out = mul(out, g)
    return out
