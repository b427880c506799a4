"""Character tables by the Dixon-Burnside method, and related counts.

Class sums span the centre of the group algebra.  Each irreducible
character chi gives a common eigenvector w_j = |C_j| chi(g_j) / chi(1)
of the class-multiplication matrices.  The eigenvectors are found modulo
a prime p = 1 (mod exponent), so every character value reduces into F_p,
and exact values are recovered from eigenvalue multiplicities.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import isqrt, lcm

from .cyclotomic import Cyclo
from .errors import OrderBoundExceeded
from .gfq import is_prime, prime_factors
from .permgrp.bsgs import GroupBSGS, derived_subgroup
from .permgrp.classes import ConjugacyClass, _conjugation_orbit, _encoder, conjugacy_classes
from .permgrp.perm import inv, mul

DIXON_ORDER_BOUND = 2000


def burnside_check(order: int, dims) -> bool:
    """True iff the squares of ``dims`` add up to ``order``."""
    return sum(d * d for d in dims) == order


def linear_char_count(G: GroupBSGS) -> int:
    """|G / G'|, the number of one-dimensional characters."""
    return G.order_int // derived_subgroup(G).order_int


# -- linear algebra mod p ----------------------------------------------------------

def _rref(rows, p):
    """Row-reduce in place; return (rows, pivot columns)."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        t = pow(rows[r][c], -1, p)
        rows[r] = [x * t % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _nullspace(A, p):
    """Basis of {u : A u = 0} for a square matrix A."""
    n = len(A)
    R, piv = _rref(A, p)
    free = [c for c in range(n) if c not in piv]
    out = []
    for f in free:
        u = [0] * n
        u[f] = 1
        for row, c in zip(R, piv):
            u[c] = -row[f] % p
        out.append(u)
    return out


def _charpoly(A, p):
    """Characteristic polynomial (low degree first) via Hessenberg reduction mod p."""
    n = len(A)
    H = [list(r) for r in A]
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if H[i][m - 1] % p), None)
        if piv is None:
            continue
        if piv != m:
            H[m], H[piv] = H[piv], H[m]
            for row in H:
                row[m], row[piv] = row[piv], row[m]
        t = pow(H[m][m - 1], -1, p)
        for i in range(m + 1, n):
            f = H[i][m - 1] * t % p
            if f:
                H[i] = [(x - f * y) % p for x, y in zip(H[i], H[m])]
                for row in H:
                    row[m] = (row[m] + f * row[i]) % p
    # polynomials of leading principal submatrices
    polys = [[1]]
    for k in range(n):
        # p_{k+1}(x) = (x - h_kk) p_k(x) - sum_i h_ik * prod h_{j,j-1} * p_i(x)
        nxt = [0] + polys[k]
        for i, c in enumerate(polys[k]):
            nxt[i] = (nxt[i] - H[k][k] * c) % p
        prod_sub = 1
        for i in range(k - 1, -1, -1):
            prod_sub = prod_sub * H[i + 1][i] % p
            if not prod_sub:
                break
            coef = H[i][k] * prod_sub % p
            for j, c in enumerate(polys[i]):
                nxt[j] = (nxt[j] - coef * c) % p
        polys.append(nxt)
    return polys[n]


def _roots(poly, p):
    out = []
    for x in range(p):
        acc = 0
        for c in reversed(poly):
            acc = (acc * x + c) % p
        if acc == 0:
            out.append(x)
    return out


# -- the table ---------------------------------------------------------------------

@dataclass
class CharacterTable:
    order: int
    classes: list[ConjugacyClass]
    table: list[list[Cyclo]]
    exponent: int
    prime: int
    inverse_class: list[int]

    @property
    def dims(self) -> list[int]:
        return [row[0].as_int() for row in self.table]

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def float_view(self) -> list[list[complex]]:
        return [[complex(x) for x in row] for row in self.table]

    def row_orthogonality(self) -> bool:
        """sum_g chi_a(g) chi_b(g^-1) = |G| [a == b], exactly."""
        sizes = [c.size for c in self.classes]
        for a, ra in enumerate(self.table):
            for b, rb in enumerate(self.table):
                s = Cyclo.integer(self.exponent, 0)
                for j, h in enumerate(sizes):
                    s = s + ra[j] * rb[self.inverse_class[j]] * h
                if s != (self.order if a == b else 0):
                    return False
        return True

    def column_orthogonality(self) -> bool:
        """sum_chi chi(g) chi(h^-1) = |C(g)| [g ~ h], exactly."""
        for j, cj in enumerate(self.classes):
            for k in range(len(self.classes)):
                s = Cyclo.integer(self.exponent, 0)
                for row in self.table:
                    s = s + row[j] * row[self.inverse_class[k]]
                if s != (self.order // cj.size if j == k else 0):
                    return False
        return True

    def to_json(self) -> str:
        return json.dumps({
            "order": self.order,
            "exponent": self.exponent,
            "prime": self.prime,
            "classes": [{"representative": str(c.representative), "size": c.size, "element_order": c.order}
                        for c in self.classes],
            "characters": [[x.vector() for x in row] for row in self.table],
        }, indent=1)

    def format_text(self) -> str:
        # label classes as 1a, 2a, 2b, ... by element order
        seen: dict[int, int] = {}
        labels = []
        for c in self.classes:
            k = seen.get(c.order, 0)
            seen[c.order] = k + 1
            labels.append(f"{c.order}{chr(ord('a') + k % 26)}")
        cells = [["", *labels], ["size", *(str(c.size) for c in self.classes)]]
        for i, row in enumerate(self.table):
            cells.append([f"X.{i + 1}", *(str(x) for x in row)])
        width = max(len(x) for r in cells for x in r)
        return "\n".join(" ".join(x.rjust(width) for x in r) for r in cells) + "\n"


def dixon_prime(order: int, exponent: int) -> int:
    """Least prime p = 1 (mod exponent) with p > 2 sqrt(order)."""
    bound = 2 * isqrt(order) + 2
    p = exponent + 1
    while p <= bound or not is_prime(p):
        p += exponent
    return p


def _root_of_unity(e, p):
    qs = prime_factors(p - 1)
    g = next(g for g in range(2, p) if all(pow(g, (p - 1) // q, p) != 1 for q in qs))
    return pow(g, (p - 1) // e, p)


def dixon_table(G: GroupBSGS, bound: int = DIXON_ORDER_BOUND) -> CharacterTable:
    order = G.order_int
    if order > bound:
        raise OrderBoundExceeded(f"order {order} exceeds the character-table bound {bound}")
    classes = conjugacy_classes(G)
    r = len(classes)
    encode, _ = _encoder(G.degree)
    conjugators = []
    for s in G.generators:
        s = tuple(s)
        si = inv(s)
        conjugators.append((s, (lambda w, si=si: tuple(w[i] for i in si))))
    class_of: dict = {}
    for idx, c in enumerate(classes):
        for x in _conjugation_orbit(encode(c.representative), conjugators, encode):
            class_of[x] = idx
    elements = [tuple(g) for g in G.elements()]
    reps = [tuple(c.representative) for c in classes]
    inverse_class = [class_of[encode(inv(g))] for g in reps]

    # a[i][j][k] = #{x in C_i : x^-1 z_k in C_j}
    a = [[[0] * r for _ in range(r)] for _ in range(r)]
    for k, z in enumerate(reps):
        for x in elements:
            i = class_of[encode(x)]
            j = class_of[encode(mul(inv(x), z))]
            a[i][j][k] += 1

    exponent = lcm(*(c.order for c in classes))
    p = dixon_prime(order, exponent)
    spaces = [[[int(i == j) for j in range(r)] for i in range(r)]]  # rows span each subspace
    for i in range(1, r):
        if all(len(s) == 1 for s in spaces):
            break
        Mi = a[i]
        nxt = []
        for basis in spaces:
            if len(basis) == 1:
                nxt.append(basis)
                continue
            basis, piv = _rref(basis, p)
            # matrix of M_i on the subspace, in coordinates read at pivot columns
            images = [[sum(Mi[j][k] * b[k] for k in range(r)) % p for j in range(r)] for b in basis]
            m = len(basis)
            A = [[images[t][piv[s]] for t in range(m)] for s in range(m)]
            found = 0
            for lam in _roots(_charpoly(A, p), p):
                shifted = [[(A[s][t] - (lam if s == t else 0)) % p for t in range(m)] for s in range(m)]
                vecs = _nullspace(shifted, p)
                if not vecs:
                    continue
                found += len(vecs)
                nxt.append([[sum(u[t] * basis[t][k] for t in range(m)) % p for k in range(r)] for u in vecs])
            if found != m:
                raise ArithmeticError("class matrix is not diagonalizable mod p")
        spaces = nxt
    if len(spaces) != r or any(len(s) != 1 for s in spaces):
        raise ArithmeticError("class matrices did not separate the characters")

    z = _root_of_unity(exponent, p)
    sizes = [c.size for c in classes]
    power_class = []
    for g in reps:
        n = classes[class_of[encode(g)]].order
        row, x = [], tuple(range(len(g)))
        for _ in range(n):
            row.append(class_of[encode(x)])
            x = mul(x, g)
        power_class.append(row)

    table = []
    for (w,) in spaces:
        t = pow(w[0], -1, p)
        w = [x * t % p for x in w]
        s = sum(w[j] * w[inverse_class[j]] * pow(sizes[j], -1, p) for j in range(r)) % p
        d2 = order * pow(s, -1, p) % p
        d = next((d for d in range(1, isqrt(order) + 1) if d * d % p == d2 and order % d == 0), None)
        if d is None:
            raise ArithmeticError("no character degree matches")
        chi_p = [d * w[j] * pow(sizes[j], -1, p) % p for j in range(r)]
        row = []
        for j in range(r):
            n = classes[j].order
            zn = pow(z, exponent // n, p)
            n_inv = pow(n, -1, p)
            terms = {}
            for k in range(n):
                m = n_inv * sum(chi_p[power_class[j][l]] * pow(zn, (-k * l) % n, p) for l in range(n)) % p
                if m > d:
                    raise ArithmeticError("eigenvalue multiplicity out of range")
                if m:
                    terms[k * (exponent // n)] = m
            row.append(Cyclo(exponent, terms))
        table.append(row)
    table.sort(key=lambda row: (row[0].as_int(), any(x != 1 for x in row), [x.vector() for x in row]))
    ct = CharacterTable(order, classes, table, exponent, p, inverse_class)
    if not (burnside_check(order, ct.dims) and all(order % d == 0 for d in ct.dims) and ct.row_orthogonality()):
        raise ArithmeticError("character table failed its checks")
    return ct
