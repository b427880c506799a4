"""Small named permutation groups used as test subjects and references."""
from __future__ import annotations

from .bsgs import DEFAULT_MAX_ORDER, GroupBSGS
from .perm import Permutation, mul


def _cycle(points, n):
    return Permutation.from_cycles([list(points)], n)


def symmetric(n: int, max_order=None) -> GroupBSGS:
    if n < 2:
        return GroupBSGS([], degree=max(n, 1))
    return GroupBSGS([_cycle((0, 1), n), _cycle(range(n), n)], max_order=max_order)


def alternating(n: int, max_order=None) -> GroupBSGS:
    if n < 3:
        return GroupBSGS([], degree=max(n, 1))
    long = range(n) if n % 2 else range(1, n)
    return GroupBSGS([_cycle((0, 1, 2), n), _cycle(long, n)], max_order=max_order)


def cyclic(n: int) -> GroupBSGS:
    if n < 2:
        return GroupBSGS([], degree=1)
    return GroupBSGS([_cycle(range(n), n)])


def dihedral(n: int) -> GroupBSGS:
    """Symmetries of a regular n-gon, order 2n (regular action for n < 3)."""
    if n < 3:
        return regular_group(lambda a, b: ((a[0] + b[0]) % n, a[1] ^ b[1]),
                             [(a, e) for e in range(2) for a in range(n)],
                             [(1 % n, 0), (0, 1)])
    rot = _cycle(range(n), n)
    ref = Permutation([(-i) % n for i in range(n)])
    return GroupBSGS([rot, ref])


def dicyclic(m: int) -> GroupBSGS:
    """The dicyclic group of order 4m in its regular representation.

    Elements are r^a s^e with r of order 2m, s^2 = r^m and s^-1 r s = r^-1.
    """
    n = 2 * m

    def product(x, y):
        (a, e), (b, f) = x, y
        if e == 0:
            return ((a + b) % n, f)
        if f == 1:
            return ((a - b + m) % n, 0)
        return ((a - b) % n, 1)

    return regular_group(product, [(a, e) for e in range(2) for a in range(n)], [(1, 0), (0, 1)])


def quaternion() -> GroupBSGS:
    return dicyclic(2)


def klein() -> GroupBSGS:
    return GroupBSGS([Permutation([1, 0, 3, 2]), Permutation([2, 3, 0, 1])])


def regular_group(product, elements, gens) -> GroupBSGS:
    """Right regular representation of a group given by its multiplication."""
    index = {x: i for i, x in enumerate(elements)}
    perms = [Permutation([index[product(x, g)] for x in elements]) for g in gens]
    return GroupBSGS(perms, degree=len(elements))


def direct_product(G: GroupBSGS, H: GroupBSGS, max_order=DEFAULT_MAX_ORDER) -> GroupBSGS:
    """G x H acting on the disjoint union of their point sets."""
    d, e = G.degree, H.degree
    gens = [tuple(g) + tuple(range(d, d + e)) for g in G.generators]
    gens += [tuple(range(d)) + tuple(x + d for x in h) for h in H.generators]
    return GroupBSGS(gens, degree=d + e, max_order=max_order)


def coset_action(G: GroupBSGS, H: GroupBSGS) -> GroupBSGS:
    """Action of G by right multiplication on the right cosets of H.

    Cosets are numbered in breadth-first order from H itself.  Meant for
    small H, since each coset is keyed by its least element.
    """
    helems = [tuple(h) for h in H.elements()]
    gens = [tuple(g) for g in G.generators]

    def key(g):
        return min(mul(h, g) for h in helems)

    ident = G._id
    reps = [ident]
    index = {key(ident): 0}
    images = [[] for _ in gens]
    i = 0
    while i < len(reps):
        for j, s in enumerate(gens):
            t = mul(reps[i], s)
            k = key(t)
            if k not in index:
                index[k] = len(reps)
                reps.append(t)
            images[j].append(index[k])
        i += 1
    return GroupBSGS([Permutation(img) for img in images], degree=len(reps))


def icosahedral_vertices() -> GroupBSGS:
    """Rotations of the icosahedron on its 12 vertices: Alt_5 on the cosets of a Z_5."""
    A5 = alternating(5)
    return coset_action(A5, GroupBSGS([_cycle(range(5), 5)]))
