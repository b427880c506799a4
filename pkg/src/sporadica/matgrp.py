"""Matrices over finite fields, classical group orders and projective actions."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, prod

from .errors import NotPrimePower, PrimeFieldNoTwist, SpaceTooLarge
from .factored import FactoredInteger
from .gfq import FieldElement, FieldTable, field_of_order, prime_power
from .permgrp.perm import Permutation

MAX_POINTS = 10**6
MAX_ACTION_POINTS = 10**4


class MatrixOverFq:
    """An n x n matrix over a FieldTable, entries held as element codes."""

    __slots__ = ("field", "n", "rows")

    def __init__(self, field: FieldTable, rows):
        rows = tuple(tuple(_code(field, x) for x in row) for row in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        self.field, self.n, self.rows = field, n, rows

    @classmethod
    def identity(cls, field: FieldTable, n: int) -> MatrixOverFq:
        return cls(field, [[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def entries(self) -> list[list[FieldElement]]:
        return [[self.field.element(x) for x in row] for row in self.rows]

    def __getitem__(self, ij) -> FieldElement:
        i, j = ij
        return self.field.element(self.rows[i][j])

    def __mul__(self, other: MatrixOverFq) -> MatrixOverFq:
        if other.field is not self.field or other.n != self.n:
            raise ValueError("matrices over different fields or of different size")
        F = self.field
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            out.append([_dot(F, row, col) for col in cols])
        return MatrixOverFq(F, out)

    def __eq__(self, other):
        return isinstance(other, MatrixOverFq) and other.field is self.field and other.rows == self.rows

    def __hash__(self):
        return hash(self.rows)

    def apply_row(self, v) -> tuple:
        """Row vector times matrix, on element codes."""
        F = self.field
        return tuple(_dot(F, v, col) for col in zip(*self.rows))

    def __str__(self):
        return format_matrix(self)

    def __repr__(self):
        return f"MatrixOverFq({self.field}, {format_matrix(self)!r})"


def _code(field, x) -> int:
    if isinstance(x, FieldElement):
        if x.field is not field:
            raise ValueError(f"entry {x} is not in {field}")
        return x.value
    if isinstance(x, str):
        return field.parse(x).value
    x = int(x)
    if not 0 <= x < field.q:
        raise ValueError(f"{x} is not an element code of {field}")
    return x


def _dot(F, u, v) -> int:
    s = 0
    for a, b in zip(u, v):
        if a and b:
            s = F.add(s, F.mul(a, b))
    return s


def det_inv(m: MatrixOverFq) -> tuple[FieldElement, MatrixOverFq | None]:
    """Determinant and inverse by Gauss-Jordan elimination; inverse is None when singular."""
    F, n = m.field, m.n
    a = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(m.rows)]
    det = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return F.zero, None
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = F.neg(det)
        pv = a[c][c]
        det = F.mul(det, pv)
        pinv = F.inv(pv)
        a[c] = [F.mul(x, pinv) for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                t = F.neg(a[r][c])
                a[r] = [F.add(x, F.mul(t, y)) for x, y in zip(a[r], a[c])]
    return F.element(det), MatrixOverFq(F, [row[n:] for row in a])


def parse_matrix(field: FieldTable, text: str) -> MatrixOverFq:
    """Rows separated by ';', entries by whitespace, e.g. ``"1 g^2; 0 1"``."""
    rows = [r.split() for r in text.strip().split(";")]
    return MatrixOverFq(field, [[field.parse(t) for t in r] for r in rows])


def format_matrix(m: MatrixOverFq) -> str:
    return "; ".join(" ".join(str(x) for x in row) for row in m.entries)


# -- orders ----------------------------------------------------------------------

def _check_q(q: int) -> None:
    if prime_power(q) is None:
        raise NotPrimePower(f"{q} is not a prime power")


def gl_order(n: int, q: int) -> FactoredInteger:
    """(q^n - 1)(q^n - q)...(q^n - q^(n-1))."""
    _check_q(q)
    if n < 1:
        raise ValueError("n must be at least 1")
    return FactoredInteger.product(FactoredInteger(q**n - q**i) for i in range(n))


FAMILIES = ("GL", "SL", "PGL", "PSL")


def group_order(family: str, n: int, q: int) -> FactoredInteger:
    """Order of GL, SL, PGL or PSL; the PSL centre has order gcd(n, q-1)."""
    family = family.upper()
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    _check_q(q)
    if n < 2:
        raise ValueError("n must be at least 2")
    gl = gl_order(n, q)
    if family == "GL":
        return gl
    sl = gl // (q - 1)
    if family in ("SL", "PGL"):
        return sl
    return sl // gcd(n, q - 1)


# -- projective space ------------------------------------------------------------

@dataclass(frozen=True)
class ProjectivePoint:
    field: FieldTable
    coords: tuple[int, ...]

    @property
    def elements(self) -> tuple[FieldElement, ...]:
        return tuple(self.field.element(x) for x in self.coords)

    def __str__(self):
        return "(" + ":".join(str(x) for x in self.elements) + ")"


def canonical(field: FieldTable, v) -> tuple[int, ...]:
    """Scale so that the first nonzero coordinate is 1."""
    v = tuple(_code(field, x) for x in v)
    lead = next((x for x in v if x), None)
    if lead is None:
        raise ValueError("the zero vector is not a projective point")
    if lead == 1:
        return v
    t = field.inv(lead)
    return tuple(field.mul(x, t) for x in v)


class ProjectiveSpace:
    """All points of P^k(F_q), lexicographically ordered by element codes."""

    def __init__(self, field: FieldTable, k: int):
        if k < 1:
            raise ValueError("dimension must be at least 1")
        q = field.q
        count = (q ** (k + 1) - 1) // (q - 1)
        if count > MAX_POINTS:
            raise SpaceTooLarge(f"P^{k}({field}) has {count} points")
        self.field, self.k = field, k
        pts = []
        for lead in range(k, -1, -1):
            zeros = (0,) * (k - lead)
            for tail in itertools.product(range(q), repeat=lead):
                pts.append(zeros + (1,) + tail)
        self.coords = pts
        self.index = {p: i for i, p in enumerate(pts)}

    @property
    def points(self) -> list[ProjectivePoint]:
        return [ProjectivePoint(self.field, c) for c in self.coords]

    def __len__(self):
        return len(self.coords)

    def point_of(self, v) -> int:
        return self.index[canonical(self.field, v)]

    def permutation(self, fn) -> Permutation:
        """The permutation induced by a map on coordinate vectors."""
        return Permutation([self.point_of(fn(c)) for c in self.coords])

    def matrix_permutation(self, m: MatrixOverFq) -> Permutation:
        """Action of ``m`` on row vectors: v -> v m."""
        if m.n != self.k + 1:
            raise ValueError("matrix size does not match the space")
        return self.permutation(m.apply_row)


def projective_space(field: FieldTable, k: int) -> ProjectiveSpace:
    return ProjectiveSpace(field, k)


def _as_field(field) -> FieldTable:
    return field_of_order(field) if isinstance(field, int) else field


def _action_space(field, n):
    q = field.q
    if (q**n - 1) // (q - 1) > MAX_ACTION_POINTS:
        raise SpaceTooLarge(f"P^{n - 1}({field}) exceeds {MAX_ACTION_POINTS} points")
    return projective_space(field, n - 1)


def homography(field: FieldTable, a, b, c, d) -> MatrixOverFq:
    """x -> (a x + b)/(c x + d), acting on (x:y) as a column-vector matrix."""
    # (x:y) -> (ax+by : cx+dy) is row vector (x, y) times [[a, c], [b, d]]
    return MatrixOverFq(field, [[a, c], [b, d]])


def pgl2_action(field) -> list[Permutation]:
    """PGL_2(q) by homographies on the q + 1 points of the projective line.

    Generators: x -> g x, x -> x + 1 and x -> 1/x; together these give the
    affine maps and an inversion, which generate all of PGL_2(q).
    """
    F = _as_field(field)
    line = _action_space(F, 2)
    g = F.generator.value
    mats = [homography(F, g, 0, 0, 1), homography(F, 1, 1, 0, 1), homography(F, 0, 1, 1, 0)]
    return [line.matrix_permutation(m) for m in mats]


def sl_generators(n: int, field) -> list[MatrixOverFq]:
    """Generators of SL_n(q): transvections I + g^i E_12 (i < f) and a signed n-cycle.

    The transvections span the root group X_12 over the prime field; the
    cycle conjugates it around to every X_ij, and these generate SL_n(q).
    """
    F = _as_field(field)
    if n < 2:
        raise ValueError("n must be at least 2")
    mats = []
    for i in range(F.f):
        rows = [[int(r == c) for c in range(n)] for r in range(n)]
        rows[0][1] = F.exp(i)
        mats.append(MatrixOverFq(F, rows))
    w = [[0] * n for _ in range(n)]
    for r in range(n):
        w[r][(r + 1) % n] = 1
    if n % 2 == 0:
        # an n-cycle has sign -1 for even n; fix the determinant
        w[n - 1][0] = F.neg(1)
    mats.append(MatrixOverFq(F, w))
    return mats


def psl_action(n: int, field) -> list[Permutation]:
    """Generators of PSL_n(q) acting on the points of P^(n-1)(F_q)."""
    F = _as_field(field)
    space = _action_space(F, n)
    return [space.matrix_permutation(m) for m in sl_generators(n, F)]


def frobenius_permutation(field) -> Permutation:
    F = _as_field(field)
    if F.f == 1:
        raise PrimeFieldNoTwist(f"{F} has no nontrivial Frobenius automorphism")
    line = _action_space(F, 2)
    return line.permutation(lambda v: tuple(F.frob(x) for x in v))


def pgammal2_action(field) -> list[Permutation]:
    """PGL_2(q) generators together with the Frobenius x -> x^p."""
    F = _as_field(field)
    if F.f == 1:
        raise PrimeFieldNoTwist(f"{F} has no nontrivial Frobenius automorphism")
    return pgl2_action(F) + [frobenius_permutation(F)]


def psigmal2_action(field) -> list[Permutation]:
    """PSL_2(q) extended by the field automorphisms only."""
    F = _as_field(field)
    return psl_action(2, F) + [frobenius_permutation(F)]


def twisted_psl2_action(field) -> list[Permutation]:
    """PSL_2(q) extended by x -> g x^p, the diagonal twist composed with Frobenius.

    For q = 9 this is the third index-2 extension of Alt_6, isomorphic to M_10.
    """
    F = _as_field(field)
    line = _action_space(F, 2)
    g = F.generator.value
    twist = line.permutation(lambda v: (F.mul(g, F.frob(v[0])), F.frob(v[1])))
    return psl_action(2, F) + [twist]


def point_count(n: int, q: int) -> int:
    """Number of points of P^(n-1)(F_q)."""
    return (q**n - 1) // (q - 1)


def psl_cases(max_points: int = 100) -> list[tuple[int, int]]:
    """All (n, q) with n >= 2 whose projective space has at most ``max_points`` points."""
    out = []
    n = 2
    while point_count(n, 2) <= max_points:
        q = 2
        while point_count(n, q) <= max_points:
            if prime_power(q):
                out.append((n, q))
            q += 1
        n += 1
    return out


def falling_factorial(n: int, k: int) -> int:
    return prod(range(n - k + 1, n + 1))
