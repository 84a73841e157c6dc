"""Exact rational linear algebra on tuples of Fractions.

Vectors are tuples of Fractions, matrices are tuples of row vectors.
Everything here is exact: no floats, no tolerances.  Rank, span and
lattice membership questions must come out right on the nose because the
geometry modules branch on them.

Subspaces are normalised to reduced row echelon form so that equal
subspaces have equal representations.  Integer lattices are kept in
Hermite normal form; rational lattices are handled by scaling through
the common denominator.
"""

from __future__ import annotations

from fractions import Fraction as Q
from math import gcd, lcm
from typing import Iterable, Sequence

Vec = tuple[Q, ...]
Mat = tuple[Vec, ...]


def vec(xs: Iterable) -> Vec:
    return tuple(Q(x) for x in xs)


def mat(rows: Iterable[Iterable]) -> Mat:
    return tuple(vec(r) for r in rows)


def zero_vec(n: int) -> Vec:
    return (Q(0),) * n


def is_zero(v: Vec) -> bool:
    return all(x == 0 for x in v)


def vadd(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vsub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vneg(a: Vec) -> Vec:
    return tuple(-x for x in a)


def smul(c, a: Vec) -> Vec:
    c = Q(c)
    return tuple(c * x for x in a)


def dot(a: Vec, b: Vec) -> Q:
    return sum((x * y for x, y in zip(a, b, strict=True)), Q(0))


def identity_matrix(n: int) -> Mat:
    return tuple(tuple(Q(1) if i == j else Q(0) for j in range(n)) for i in range(n))


def mat_vec(m: Mat, v: Vec) -> Vec:
    return tuple(dot(row, v) for row in m)


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def transpose(m: Mat) -> Mat:
    return tuple(zip(*m)) if m else ()


def columns(m: Mat) -> Mat:
    return transpose(m)


def rref(rows: Sequence[Vec]) -> tuple[Mat, tuple[int, ...]]:
    """Reduced row echelon form.

    Returns the nonzero rows (each with leading entry 1 and zeros above
    and below its pivot) together with the pivot column indices.  The
    result depends only on the span of the input rows, which is what
    makes it usable as a canonical form.
    """
    work = [list(r) for r in rows if not is_zero(r)]
    if not work:
        return (), ()
    ncols = len(work[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(work)):
            if work[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = work[r][c]
        work[r] = [x / inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    out = tuple(tuple(row) for row in work[:r])
    return out, tuple(pivots)


def rank(rows: Sequence[Vec]) -> int:
    return len(rref(rows)[0])


def reduce_against(basis: Mat, pivots: tuple[int, ...], v: Vec) -> Vec:
    """Residual of v after subtracting the RREF basis combination matching
    its pivot coordinates.  Zero residual means v lies in the span."""
    out = list(v)
    for row, p in zip(basis, pivots):
        c = out[p]
        if c != 0:
            out = [x - c * y for x, y in zip(out, row)]
    return tuple(out)


def in_span(rows: Sequence[Vec], v: Vec) -> bool:
    basis, pivots = rref(rows)
    return is_zero(reduce_against(basis, pivots, v))


def solve_combination(vectors: Sequence[Vec], target: Vec) -> tuple[Q, ...] | None:
    """Coefficients c with sum(c_i * vectors_i) = target, or None.

    Solved by row reducing the transposed augmented system; returns one
    solution (free coefficients set to zero)."""
    if not vectors:
        return () if is_zero(target) else None
    aug = [list(col) + [t] for col, t in zip(zip(*vectors), target)]
    n = len(vectors)
    reduced, pivots = rref(mat(aug))
    coeffs = [Q(0)] * n
    for row, p in zip(reduced, pivots):
        if p == n:
            return None  # pivot in augmented column: inconsistent
        coeffs[p] = row[n]
    return tuple(coeffs)


def solve_affine(m: Mat, b: Vec) -> tuple[Vec, Mat] | None:
    """All solutions of m x = b as (particular, kernel_basis), or None."""
    ncols = len(m[0]) if m else len(b)
    aug = mat([list(row) + [bi] for row, bi in zip(m, b)])
    reduced, pivots = rref(aug)
    if ncols in pivots:
        return None
    particular = [Q(0)] * ncols
    for row, p in zip(reduced, pivots):
        particular[p] = row[ncols]
    kernel_rows = []
    pivot_set = set(pivots)
    for free in range(ncols):
        if free in pivot_set:
            continue
        kv = [Q(0)] * ncols
        kv[free] = Q(1)
        for row, p in zip(reduced, pivots):
            kv[p] = -row[free]
        kernel_rows.append(tuple(kv))
    return tuple(particular), tuple(kernel_rows)


def orthogonalize(rows: Sequence[Vec]) -> Mat:
    """Gram-Schmidt without normalisation (stays rational)."""
    basis: list[Vec] = []
    for v in rows:
        w = v
        for g in basis:
            w = vsub(w, smul(dot(w, g) / dot(g, g), g))
        if not is_zero(w):
            basis.append(w)
    return tuple(basis)


def project_off(v: Vec, rows: Sequence[Vec]) -> Vec:
    """Component of v orthogonal to span(rows)."""
    for g in orthogonalize(rows):
        v = vsub(v, smul(dot(v, g) / dot(g, g), g))
    return v


def line_rep(v: Vec) -> Vec:
    """Canonical representative of the line through v: primitive integer
    coordinates, first nonzero entry positive.  Requires v != 0."""
    den = lcm(*(x.denominator for x in v)) if v else 1
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        raise ValueError("the zero vector spans no line")
    ints = [x // g for x in ints]
    for x in ints:
        if x != 0:
            if x < 0:
                ints = [-y for y in ints]
            break
    return vec(ints)


def _hnf(rows: list[list[int]]) -> list[list[int]]:
    """Row-style Hermite normal form of the lattice spanned by integer rows."""
    rows = [r[:] for r in rows if any(r)]
    if not rows:
        return []
    ncols = len(rows[0])
    basis: list[list[int]] = []
    r = 0
    for c in range(ncols):
        idx = [i for i in range(r, len(rows)) if rows[i][c] != 0]
        if not idx:
            continue
        # reduce all entries in this column to a single gcd pivot row
        while len(idx) > 1:
            idx.sort(key=lambda i: abs(rows[i][c]))
            i0 = idx[0]
            for i in idx[1:]:
                q = rows[i][c] // rows[i0][c]
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[i0])]
            idx = [i for i in idx if rows[i][c] != 0]
        i0 = idx[0]
        rows[r], rows[i0] = rows[i0], rows[r]
        if rows[r][c] < 0:
            rows[r] = [-a for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                q = rows[i][c] // rows[r][c]
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
        r += 1
    del rows[r:]
    return rows


class RationalLattice:
    """Finitely generated subgroup of Q^n, with exact membership tests.

    Internally: scale generators by the common denominator, keep an
    integer Hermite basis, divide back out on the way in and out.
    """

    def __init__(self, generators: Sequence[Vec]):
        gens = [vec(g) for g in generators]
        if not gens:
            raise ValueError("lattice needs at least one generator")
        self.dim = len(gens[0])
        self.scale = lcm(*(x.denominator for g in gens for x in g), 1)
        int_rows = [[int(x * self.scale) for x in g] for g in gens]
        self._rows = _hnf(int_rows)
        self._pivots = [next(j for j, x in enumerate(row) if x != 0) for row in self._rows]

    @property
    def basis(self) -> Mat:
        return mat([[Q(x, self.scale) for x in row] for row in self._rows])

    def contains(self, v: Vec) -> bool:
        return self.coords(v) is not None

    def coords(self, v: Vec) -> tuple[int, ...] | None:
        """Integer coordinates of v in the Hermite basis, or None."""
        scaled = [x * self.scale for x in v]
        if any(x.denominator != 1 for x in scaled):
            return None
        work = [int(x) for x in scaled]
        out = []
        for row, p in zip(self._rows, self._pivots):
            if work[p] % row[p] != 0:
                return None
            q = work[p] // row[p]
            out.append(q)
            work = [a - q * b for a, b in zip(work, row)]
        if any(work):
            return None
        return tuple(out)

    def from_coords(self, coeffs: Sequence[int]) -> Vec:
        out = [Q(0)] * self.dim
        for c, row in zip(coeffs, self._rows, strict=True):
            for j, x in enumerate(row):
                out[j] += Q(c * x, self.scale)
        return tuple(out)
