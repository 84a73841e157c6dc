"""Crystallographic root systems for the affine families A-D, G2, F4.

Coordinates follow the usual Bourbaki realisations.  Types B, C, D, F
live in R^n with n = rank.  Type A_n lives in the zero-sum hyperplane of
R^(n+1) so that roots stay integral.  G2 is realised the same way, in
the zero-sum hyperplane of R^3: a rank-2 ambient realisation of G2
cannot have all-rational coordinates (6 is not a sum of two rational
squares), and exactness is non-negotiable here.

B2 and C2 are deliberately distinct objects: their hyperplanes agree but
their coroot lattices, hence their translation subgroups, do not.

Roots are plain tuples of Fractions, kept in sorted order so every scan
over a root system is deterministic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction as Q
from functools import cached_property, lru_cache

from .errors import ParseError, UnsupportedTypeError
from .linalg import Mat, RationalLattice, Vec, dot, line_rep, smul, solve_combination, vec

MAX_RANK = 8

# multisets of exponents of the finite Weyl group, ascending
def _exponents(family: str, rank: int) -> tuple[int, ...]:
    if family == "A":
        return tuple(range(1, rank + 1))
    if family in ("B", "C"):
        return tuple(range(1, 2 * rank, 2))
    if family == "D":
        return tuple(sorted(list(range(1, 2 * rank - 2, 2)) + [rank - 1]))
    if family == "G":
        return (1, 5)
    if family == "F":
        return (1, 5, 7, 11)
    raise UnsupportedTypeError(f"unknown family {family!r}")


@dataclass(frozen=True)
class RootSystemSpec:
    """A type label: family in A-D, G, F plus a rank."""

    family: str
    rank: int

    def __post_init__(self):
        fam = self.family
        if fam not in ("A", "B", "C", "D", "G", "F"):
            raise UnsupportedTypeError(f"unsupported family {fam!r}")
        lo = {"A": 1, "B": 2, "C": 2, "D": 2, "G": 2, "F": 4}[fam]
        hi = {"G": 2, "F": 4}.get(fam, MAX_RANK)
        if not (lo <= self.rank <= hi):
            raise UnsupportedTypeError(f"rank {self.rank} out of range for family {fam}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def parse_type_spec(text: str) -> RootSystemSpec:
    m = re.fullmatch(r"\s*([A-Za-z])\s*(\d+)\s*", text)
    if not m:
        raise ParseError(f"cannot parse type spec {text!r}")
    return RootSystemSpec(m.group(1).upper(), int(m.group(2)))


def _simple_roots(spec: RootSystemSpec) -> list[Vec]:
    n = spec.rank
    fam = spec.family

    def e(i: int, dim: int) -> list[Q]:
        v = [Q(0)] * dim
        v[i] = Q(1)
        return v

    def diff(i: int, j: int, dim: int) -> Vec:
        v = [Q(0)] * dim
        v[i], v[j] = Q(1), Q(-1)
        return tuple(v)

    if fam == "A":
        return [diff(i, i + 1, n + 1) for i in range(n)]
    if fam == "B":
        return [diff(i, i + 1, n) for i in range(n - 1)] + [vec(e(n - 1, n))]
    if fam == "C":
        return [diff(i, i + 1, n) for i in range(n - 1)] + [smul(2, vec(e(n - 1, n)))]
    if fam == "D":
        last = [Q(0)] * n
        last[n - 2] = last[n - 1] = Q(1)
        return [diff(i, i + 1, n) for i in range(n - 1)] + [tuple(last)]
    if fam == "G":
        return [vec([1, -1, 0]), vec([-2, 1, 1])]
    if fam == "F":
        return [
            vec([0, 1, -1, 0]),
            vec([0, 0, 1, -1]),
            vec([0, 0, 0, 1]),
            vec([Q(1, 2), Q(-1, 2), Q(-1, 2), Q(-1, 2)]),
        ]
    raise UnsupportedTypeError(fam)


def coroot(alpha: Vec) -> Vec:
    """alpha-check = 2 alpha / <alpha, alpha>."""
    return smul(Q(2) / dot(alpha, alpha), alpha)


def reflect(alpha: Vec, v: Vec) -> Vec:
    """Linear reflection of v in the hyperplane orthogonal to alpha."""
    c = dot(v, coroot(alpha))
    return tuple(x - c * a for x, a in zip(v, alpha))


@dataclass(frozen=True)
class RootSystem:
    spec: RootSystemSpec
    ambient_dim: int
    roots: Mat                 # all roots, sorted
    simple_roots: Mat
    exponents: tuple[int, ...]
    w0_order: int

    @property
    def rank(self) -> int:
        return self.spec.rank

    @property
    def is_reducible(self) -> bool:
        # components of the Dynkin diagram on the simple roots
        n = len(self.simple_roots)
        seen = {0}
        frontier = [0]
        while frontier:
            i = frontier.pop()
            for j in range(n):
                if j not in seen and dot(self.simple_roots[i], self.simple_roots[j]) != 0:
                    seen.add(j)
                    frontier.append(j)
        return len(seen) < n

    @cached_property
    def positive_roots(self) -> Mat:
        zero = vec([0] * self.ambient_dim)
        return tuple(r for r in self.roots if r > zero)

    @cached_property
    def root_index(self) -> dict[Vec, int]:
        return {r: i for i, r in enumerate(self.roots)}

    def coroot(self, alpha: Vec) -> Vec:
        if alpha not in self.root_index:
            raise ValueError(f"{alpha} is not a root of {self.spec}")
        return coroot(alpha)

    @cached_property
    def coroots(self) -> Mat:
        return tuple(coroot(a) for a in self.roots)

    @cached_property
    def highest_root(self) -> Vec:
        """The root of maximal height (sum of simple-root coordinates).

        Note the lexicographic sign convention and the simple-system
        sign convention disagree for G2, so this scans all roots.
        """
        best, best_ht = None, None
        for r in self.roots:
            cs = solve_combination(self.simple_roots, r)
            assert cs is not None
            ht = sum(cs)
            if best_ht is None or ht > best_ht:
                best, best_ht = r, ht
        assert best is not None
        return best

    @cached_property
    def coroot_lattice(self) -> RationalLattice:
        return RationalLattice([coroot(a) for a in self.roots])

    def in_coroot_lattice(self, v: Vec) -> bool:
        return self.coroot_lattice.contains(v)

    def lattice_coords(self, v: Vec) -> tuple[int, ...] | None:
        """Integer coordinates of v in the simple-coroot basis, or None."""
        cs = solve_combination([coroot(a) for a in self.simple_roots], v)
        if cs is None or any(c.denominator != 1 for c in cs):
            return None
        if v != self.from_lattice_coords([int(c) for c in cs]):
            return None
        return tuple(int(c) for c in cs)

    def from_lattice_coords(self, coeffs) -> Vec:
        out = [Q(0)] * self.ambient_dim
        for c, a in zip(coeffs, self.simple_roots, strict=True):
            av = coroot(a)
            for j in range(self.ambient_dim):
                out[j] += c * av[j]
        return tuple(out)


@dataclass(frozen=True)
class CorootLatticeBasis:
    """Z-basis of the coroot lattice: the simple coroots."""

    basis: Mat


def coroot_lattice_basis(rs: RootSystem) -> CorootLatticeBasis:
    return CorootLatticeBasis(tuple(coroot(a) for a in rs.simple_roots))


@lru_cache(maxsize=None)
def build_root_system(spec: RootSystemSpec) -> RootSystem:
    """Close the simple roots under simple reflections.

    Every root of an irreducible crystallographic system is conjugate to
    a simple root under these reflections, so the closure is all of Phi;
    the counts are pinned in the tests.
    """
    simples = _simple_roots(spec)
    seen: set[Vec] = set(simples) | {tuple(-x for x in s) for s in simples}
    frontier = list(seen)
    while frontier:
        nxt = []
        for r in frontier:
            for s in simples:
                img = reflect(s, r)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    exps = _exponents(spec.family, spec.rank)
    order = 1
    for ex in exps:
        order *= ex + 1
    return RootSystem(
        spec=spec,
        ambient_dim=len(simples[0]),
        roots=tuple(sorted(seen)),
        simple_roots=tuple(simples),
        exponents=exps,
        w0_order=order,
    )


def root_system(text: str) -> RootSystem:
    """Convenience: build from a textual type spec like 'B3'."""
    return build_root_system(parse_type_spec(text))


def canonical_root(rs: RootSystem, alpha: Vec) -> Vec:
    """The lexicographically positive root on the line through alpha."""
    key = line_rep(alpha)
    for r in rs.positive_roots:
        if line_rep(r) == key:
            return r
    raise ValueError(f"{alpha} does not span a root line of {rs.spec}")
