"""Affine symmetric groups in window notation, and null partitions.

An affine permutation of period n is a bijection w of the integers with
w(i + n) = w(i) + n and sum(w(1..n)) = sum(1..n).  It is recorded by its
window [w(1), ..., w(n)].  Writing each value as w(i) = pi(i) + n*lam_i
with pi(i) in 1..n splits the window into a permutation pi of [n] and a
zero-sum integer vector lam; the pair is the combinatorial shadow of the
semidirect normal form, and embed_window realises it as an isometry of
the zero-sum hyperplane.

Reflection length is computed here without any geometry:

  length = n - 2 nu(lam / pi) + (number of cycles of pi)

where the relative nullity nu(lam / pi) is the largest number of blocks
in a partition refinable into cycles of pi whose block sums vanish.
Nullity itself is computed through the basic / minimal null block
pipeline and a maximal clique search on the disjointness complex.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from itertools import combinations

from .affgroup import AffineElement, compose, translation_element
from .errors import BudgetExceeded, ParseError
from .linalg import Vec, mat_vec, transpose, vec, vsub
from .reflen import (
    DEFAULT_HURWITZ_BUDGET,
    factor_elliptic,
    translation_elliptic_split,
)
from .rootsys import RootSystem, RootSystemSpec, build_root_system

DEFAULT_CLIQUE_VERTEX_CAP = 64
DEFAULT_PROFILE_SIZE_CAP = 22


@dataclass(frozen=True)
class Window:
    """Window notation for an affine permutation.

    >>> Window((4, 2, 0)).normal_form()
    ((1, 0, -1), (1, 2, 3))
    """

    values: tuple[int, ...]

    def __post_init__(self):
        n = len(self.values)
        if n < 2:
            raise ParseError("window needs at least two entries")
        if len({v % n for v in self.values}) != n:
            raise ParseError("window entries are not distinct modulo n")
        if sum(self.values) != n * (n + 1) // 2:
            raise ParseError(
                f"window entries sum to {sum(self.values)}, expected {n * (n + 1) // 2}"
            )

    @property
    def n(self) -> int:
        return len(self.values)

    def normal_form(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(lam, pi) with window value_i = pi(i) + n * lam_i."""
        n = self.n
        pi = tuple((v - 1) % n + 1 for v in self.values)
        lam = tuple((v - p) // n for v, p in zip(self.values, pi))
        return lam, pi

    def value(self, i: int) -> int:
        """The bijection at any integer i, extending the window by periodicity."""
        n = self.n
        i0 = (i - 1) % n + 1
        return self.values[i0 - 1] + (i - i0)


def window_from_normal_form(lam, pi) -> Window:
    n = len(pi)
    return Window(tuple(p + n * l for p, l in zip(pi, lam, strict=True)))


def compose_windows(a: Window, b: Window) -> Window:
    """(a o b)(i) = a(b(i))."""
    if a.n != b.n:
        raise ValueError("windows have different periods")
    return Window(tuple(a.value(b.value(i)) for i in range(1, a.n + 1)))


def window_root_system(n: int) -> RootSystem:
    return build_root_system(RootSystemSpec("A", n - 1))


def perm_matrix(pi) -> tuple[tuple[Q, ...], ...]:
    """Matrix sending e_j to e_{pi(j)}; pi -> matrix is a homomorphism."""
    n = len(pi)
    return tuple(tuple(Q(1) if pi[j] == i + 1 else Q(0) for j in range(n)) for i in range(n))


def embed_window(win: Window) -> AffineElement:
    """The isometry of the zero-sum hyperplane corresponding to the
    window; window composition matches element composition."""
    lam, pi = win.normal_form()
    a = perm_matrix(pi)
    return AffineElement(linear=a, translation=mat_vec(a, vec(lam)))


def window_of_element(w: AffineElement) -> Window:
    n = w.dim
    pi = tuple(next(i + 1 for i in range(n) if w.linear[i][j] == 1) for j in range(n))
    lam = mat_vec(transpose(w.linear), w.translation)
    if any(x.denominator != 1 for x in lam):
        raise ValueError("element is not an affine permutation")
    return window_from_normal_form(tuple(int(x) for x in lam), pi)


@dataclass(frozen=True)
class SetPartition:
    """Partition of {1..n}; blocks sorted by their minimum."""

    n: int
    blocks: tuple[frozenset[int], ...]

    @staticmethod
    def make(n: int, blocks) -> SetPartition:
        bs = tuple(sorted((frozenset(b) for b in blocks), key=min))
        seen: set[int] = set()
        for b in bs:
            if not b or seen & b:
                raise ValueError("blocks must be nonempty and disjoint")
            seen |= b
        if seen != set(range(1, n + 1)):
            raise ValueError("blocks must cover {1..n}")
        return SetPartition(n, bs)

    def __len__(self) -> int:
        return len(self.blocks)


def cycles(pi) -> SetPartition:
    """Cycle partition of a one-line permutation.

    >>> [sorted(b) for b in cycles((4, 5, 1, 3, 2, 6)).blocks]
    [[1, 3, 4], [2, 5], [6]]
    """
    n = len(pi)
    seen: set[int] = set()
    blocks = []
    for start in range(1, n + 1):
        if start in seen:
            continue
        blk = []
        i = start
        while i not in seen:
            seen.add(i)
            blk.append(i)
            i = pi[i - 1]
        blocks.append(frozenset(blk))
    return SetPartition.make(n, blocks)


def l_map(partition: SetPartition, v) -> tuple:
    """Block sums, blocks in canonical (min-sorted) order; the kernel of
    this map on a fixed partition is exactly the block-sum-zero space."""
    return tuple(sum(v[i - 1] for i in b) for b in partition.blocks)


@dataclass(frozen=True)
class Profile:
    """Positive and negative support subsets bucketed by weight."""

    x_set: frozenset[int]
    y_set: frozenset[int]
    z_set: frozenset[int]
    positive_weight: int
    pos: tuple[frozenset[frozenset[int]], ...]  # index w-1 holds weight-w subsets of X
    neg: tuple[frozenset[frozenset[int]], ...]

    def pos_at(self, weight: int) -> frozenset[frozenset[int]]:
        return self.pos[weight - 1] if 1 <= weight <= len(self.pos) else frozenset()

    def neg_at(self, weight: int) -> frozenset[frozenset[int]]:
        return self.neg[weight - 1] if 1 <= weight <= len(self.neg) else frozenset()


def profiles(v) -> Profile:
    if sum(v) != 0:
        raise ValueError("profiles need a zero-sum vector")
    n = len(v)
    xs = [i for i in range(1, n + 1) if v[i - 1] > 0]
    ys = [i for i in range(1, n + 1) if v[i - 1] < 0]
    zs = [i for i in range(1, n + 1) if v[i - 1] == 0]
    if max(len(xs), len(ys)) > DEFAULT_PROFILE_SIZE_CAP:
        raise BudgetExceeded("support too large for profile enumeration")
    vx = sum(v[i - 1] for i in xs)

    def buckets(idx, sign):
        out: list[set[frozenset[int]]] = [set() for _ in range(vx)]
        for k in range(1, len(idx) + 1):
            for c in combinations(idx, k):
                w = sign * sum(v[i - 1] for i in c)
                if 1 <= w <= vx:
                    out[w - 1].add(frozenset(c))
        return tuple(frozenset(s) for s in out)

    return Profile(
        x_set=frozenset(xs),
        y_set=frozenset(ys),
        z_set=frozenset(zs),
        positive_weight=vx,
        pos=buckets(xs, 1),
        neg=buckets(ys, -1),
    )


def basic_null_blocks(v) -> tuple[frozenset[frozenset[int]], ...]:
    """Weight-indexed dot product of the profiles: every zero-sum block
    avoiding the zero entries arises once as a positive part joined with
    a negative part of the same weight."""
    p = profiles(v)
    out = []
    for w in range(1, p.positive_weight + 1):
        out.append(frozenset(a | b for a in p.pos_at(w) for b in p.neg_at(w)))
    return tuple(out)


def proper_basic_null_block_count(v) -> int:
    """Basic null blocks of weight strictly below the full positive
    weight (the top weight always contributes the whole support)."""
    basics = basic_null_blocks(v)
    return sum(len(s) for s in basics[:-1]) if basics else 0


def minimal_null_blocks(v) -> tuple[frozenset[int], ...]:
    """Left-to-right sweep over the weight-indexed basic blocks: blocks
    of the first nonempty weight are minimal, supersets of confirmed
    minimal blocks are deleted from later weights, and every zero entry
    contributes a singleton."""
    confirmed: list[frozenset[int]] = []
    for bucket in basic_null_blocks(v):
        for b in sorted(bucket, key=sorted):
            if not any(c < b for c in confirmed):
                confirmed.append(b)
    singles = [frozenset([i + 1]) for i, x in enumerate(v) if x == 0]
    return tuple(sorted(confirmed + singles, key=sorted))


@dataclass(frozen=True)
class NullComplex:
    """Disjointness complex of the minimal null blocks: vertices, edges
    as index pairs, and the maximal cliques (= maximal null partitions)."""

    vertices: tuple[frozenset[int], ...]
    edges: tuple[tuple[int, int], ...]
    maximal_cliques: tuple[tuple[frozenset[int], ...], ...]


def _bron_kerbosch(adj: list[set[int]], nvert: int):
    """Maximal cliques with pivoting; yields sorted index tuples."""

    def recurse(r: set[int], p: set[int], x: set[int]):
        if not p and not x:
            yield tuple(sorted(r))
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for u in sorted(p - adj[pivot]):
            yield from recurse(r | {u}, p & adj[u], x & adj[u])
            p = p - {u}
            x = x | {u}

    yield from recurse(set(), set(range(nvert)), set())


def null_complex(v, vertex_cap: int = DEFAULT_CLIQUE_VERTEX_CAP) -> NullComplex:
    verts = minimal_null_blocks(v)
    if len(verts) > vertex_cap:
        raise BudgetExceeded(f"{len(verts)} minimal null blocks exceed the vertex cap {vertex_cap}")
    m = len(verts)
    adj: list[set[int]] = [set() for _ in range(m)]
    edges = []
    for i, j in combinations(range(m), 2):
        if not (verts[i] & verts[j]):
            adj[i].add(j)
            adj[j].add(i)
            edges.append((i, j))
    cliques = sorted(
        tuple(verts[i] for i in c) for c in _bron_kerbosch(adj, m)
    )
    return NullComplex(vertices=verts, edges=tuple(edges), maximal_cliques=tuple(cliques))


def nullity(v, vertex_cap: int = DEFAULT_CLIQUE_VERTEX_CAP) -> int:
    """Largest number of blocks in a partition of the index set with
    every block summing to zero."""
    if sum(v) != 0:
        raise ValueError("nullity needs a zero-sum vector")
    if not v:
        return 0
    cx = null_complex(v, vertex_cap=vertex_cap)
    return max(len(c) for c in cx.maximal_cliques)


def relative_nullity(lam, pi) -> int:
    """nu(lam / pi): nullity of the block sums of lam over the cycles of pi."""
    return nullity(l_map(cycles(pi), lam))


def reflection_length(win: Window) -> int:
    """Combinatorial reflection length: n - 2 nu(lam/pi) + #cycles(pi)."""
    lam, pi = win.normal_form()
    return win.n - 2 * relative_nullity(lam, pi) + len(cycles(pi))


def elliptic_dimension_window(win: Window) -> int:
    _, pi = win.normal_form()
    return win.n - len(cycles(pi))


def differential_dimension_window(win: Window) -> int:
    lam, pi = win.normal_form()
    return len(cycles(pi)) - relative_nullity(lam, pi)


def good_origin_split(
    win: Window, budget: int = DEFAULT_HURWITZ_BUDGET
) -> tuple[Vec, tuple[AffineElement, AffineElement]]:
    """Split the window's isometry as translation * elliptic and produce a
    vertex of the alcove geometry fixed by the elliptic part, usable as
    a re-basing origin (relative to it the normal form has parts of
    length 2d and e).

    Vertices of type A are the points of the zero-sum hyperplane all of
    whose coordinate differences are integers.  The elliptic factor is
    factored through a common fixed point; its reflection hyperplanes
    x_a - x_b = m have integer offsets, so assigning integers along each
    constraint tree and recentring to coordinate-sum zero lands on a
    vertex inside the fixed set.
    """
    n = win.n
    rs = window_root_system(n)
    w = embed_window(win)
    t, u = translation_elliptic_split(rs, w, budget)
    if u.is_identity():
        origin: Vec = vec([0] * n)
        return origin, (t, u)
    # constraints x_a - x_b = level form a forest (independent roots),
    # so integer values propagate consistently from any per-tree anchor
    adj: dict[int, list[tuple[int, int]]] = {i: [] for i in range(1, n + 1)}
    for r in factor_elliptic(rs, u).factors:
        a = next(i for i, c in enumerate(r.root) if c == 1) + 1
        b = next(i for i, c in enumerate(r.root) if c == -1) + 1
        adj[a].append((b, -r.level))
        adj[b].append((a, r.level))
    assign: dict[int, int] = {}
    for start in range(1, n + 1):
        if start in assign:
            continue
        assign[start] = 0
        stack = [start]
        while stack:
            i = stack.pop()
            for j, delta in adj[i]:
                if j not in assign:
                    assign[j] = assign[i] + delta
                    stack.append(j)
                elif assign[j] != assign[i] + delta:
                    raise AssertionError("dependent roots in an elliptic factorisation")
    coords = [Q(assign[i]) for i in range(1, n + 1)]
    shift = sum(coords) / n
    origin = tuple(c - shift for c in coords)
    if u.apply(origin) != origin:
        raise AssertionError("constructed origin is not fixed by the elliptic part")
    return origin, (t, u)
