"""Local generating functions for reflection length.

For a lattice point lam, the local generating function collects the
statistics of every element with translation part lam:

    f_lam(s, t) = sum over u in W0 of s^d(t_lam u) * t^e(u)

Specialising s -> t^2 turns each monomial into t^length.  At lam = 0
this is the Poincare-style product over the exponents of W0; at generic
lam every factor (1 + e_i t) deforms to (s + e_i t).

W0 is enumerated once by breadth-first closure of the simple reflection
matrices; the per-element data that does not depend on lam (the rank e
and the projected root lines) is cached so classifying many lattice
points only repeats the small span search.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import BudgetExceeded
from .linalg import Mat, Vec, is_zero, mat_mul, reduce_against, rref
from .reflen import _min_span_subset, _quotient_lines
from .affgroup import AffineReflection, linear_move_space
from .rootsys import RootSystem

DEFAULT_W0_CAP = 10**5


@dataclass(frozen=True)
class BivariatePolynomial:
    """Integer polynomial in s and t; terms (a, b, c) means c * s^a t^b,
    stored sorted by (a, b) so equal polynomials are equal tuples."""

    terms: tuple[tuple[int, int, int], ...]

    @staticmethod
    def from_dict(d: dict[tuple[int, int], int]) -> BivariatePolynomial:
        return BivariatePolynomial(
            tuple((a, b, c) for (a, b), c in sorted(d.items()) if c != 0)
        )

    @staticmethod
    def zero() -> BivariatePolynomial:
        return BivariatePolynomial(())

    @staticmethod
    def monomial(a: int, b: int, c: int = 1) -> BivariatePolynomial:
        return BivariatePolynomial.from_dict({(a, b): c})

    def __add__(self, other: BivariatePolynomial) -> BivariatePolynomial:
        d: dict[tuple[int, int], int] = {}
        for a, b, c in self.terms + other.terms:
            d[(a, b)] = d.get((a, b), 0) + c
        return BivariatePolynomial.from_dict(d)

    def __mul__(self, other: BivariatePolynomial) -> BivariatePolynomial:
        d: dict[tuple[int, int], int] = {}
        for a1, b1, c1 in self.terms:
            for a2, b2, c2 in other.terms:
                key = (a1 + a2, b1 + b2)
                d[key] = d.get(key, 0) + c1 * c2
        return BivariatePolynomial.from_dict(d)

    def coefficient(self, a: int, b: int) -> int:
        for ta, tb, c in self.terms:
            if (ta, tb) == (a, b):
                return c
        return 0

    def uses_s(self) -> bool:
        return any(a > 0 for a, _, _ in self.terms)

    def specialize(self) -> tuple[int, ...]:
        """Substitute s -> t^2; coefficients ascending in t."""
        if not self.terms:
            return (0,)
        deg = max(2 * a + b for a, b, _ in self.terms)
        out = [0] * (deg + 1)
        for a, b, c in self.terms:
            out[2 * a + b] += c
        return tuple(out)

    def format(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for a, b, c in self.terms:
            factors = []
            if c != 1 or (a == 0 and b == 0):
                factors.append(str(c))
            if a == 1:
                factors.append("s")
            elif a > 1:
                factors.append(f"s^{a}")
            if b == 1:
                factors.append("t")
            elif b > 1:
                factors.append(f"t^{b}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def to_json_terms(self) -> list[list[int]]:
        return [[a, b, c] for a, b, c in self.terms]


def poly_s_plus(k: int) -> BivariatePolynomial:
    """s + k t."""
    return BivariatePolynomial.from_dict({(1, 0): 1, (0, 1): k})


def poly_one_plus(k: int) -> BivariatePolynomial:
    """1 + k t."""
    return BivariatePolynomial.from_dict({(0, 0): 1, (0, 1): k})


def poly1_mul(a, b) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def poly1_format(coeffs) -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            head = "" if c == 1 else f"{c}*"
            parts.append(f"{head}t" if i == 1 else f"{head}t^{i}")
    return " + ".join(parts) if parts else "0"


@dataclass(eq=False)
class SphericalGroup:
    """W0 as matrices, in breadth-first order (word length, then matrix
    lexicographically); words holds one reduced word per element, as
    indices into the simple roots."""

    elements: tuple[Mat, ...]
    words: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def word_of(self, m: Mat) -> tuple[int, ...]:
        return self.words[self.elements.index(m)]


@lru_cache(maxsize=None)
def enumerate_w0(rs: RootSystem, cap: int = DEFAULT_W0_CAP) -> SphericalGroup:
    if rs.w0_order > cap:
        raise BudgetExceeded(
            f"W0 of {rs.spec} has order {rs.w0_order}, above the cap {cap}"
        )
    gens = [AffineReflection.make(a, 0).to_element().linear for a in rs.simple_roots]
    from .linalg import identity_matrix

    ident = identity_matrix(rs.ambient_dim)
    words: dict[Mat, tuple[int, ...]] = {ident: ()}
    order: list[Mat] = [ident]
    level = [ident]
    while level:
        found: dict[Mat, tuple[int, ...]] = {}
        for m in level:
            for gi, g in enumerate(gens):
                nm = mat_mul(m, g)
                if nm not in words and nm not in found:
                    found[nm] = words[m] + (gi,)
        level = sorted(found)
        for nm in level:
            words[nm] = found[nm]
            order.append(nm)
        if len(order) > cap:
            raise BudgetExceeded("W0 enumeration exceeded the cap")
    return SphericalGroup(elements=tuple(order), words=tuple(words[m] for m in order))


@lru_cache(maxsize=None)
def _genfun_tables(rs: RootSystem):
    """Per-element lam-independent data: (e, ubasis, upivots, projected
    root lines)."""
    out = []
    for m in enumerate_w0(rs).elements:
        ubasis, upivots = rref(linear_move_space(m))
        lines = _quotient_lines(rs, ubasis, upivots)
        out.append((len(ubasis), ubasis, upivots, lines))
    return tuple(out)


def local_genfun(rs: RootSystem, lam: Vec) -> BivariatePolynomial:
    """f_lam(s, t) = sum of s^d t^e over the elements with translation lam."""
    if not rs.in_coroot_lattice(lam):
        raise ValueError(f"{lam} is not in the coroot lattice of {rs.spec}")
    counts: dict[tuple[int, int], int] = {}
    for e, ubasis, upivots, lines in _genfun_tables(rs):
        res = reduce_against(ubasis, upivots, lam)
        if is_zero(res):
            d = 0
        else:
            d = _min_span_subset(lines, res, rs.rank - e)[0]
        counts[(d, e)] = counts.get((d, e), 0) + 1
    return BivariatePolynomial.from_dict(counts)


def spherical_genfun(rs: RootSystem) -> tuple[int, ...]:
    """Distribution of reflection length over W0 (elliptic elements have
    length equal to e); computed by counting, not from the exponents."""
    counts = [0] * (rs.rank + 1)
    for e, _, _, _ in _genfun_tables(rs):
        counts[e] += 1
    return tuple(counts)


def exponent_product(rs: RootSystem) -> tuple[int, ...]:
    """The closed form prod (1 + e_i t) over the exponents."""
    out = (1,)
    for e in rs.exponents:
        out = poly1_mul(out, (1, e))
    return out


def is_generic(rs: RootSystem, lam: Vec) -> bool:
    """lam lies in no proper root subspace: the identity-element d-search
    needs a full rank's worth of roots."""
    if not rs.in_coroot_lattice(lam):
        raise ValueError(f"{lam} is not in the coroot lattice of {rs.spec}")
    if is_zero(lam):
        return False
    lines = _quotient_lines(rs, (), ())
    return _min_span_subset(lines, lam, rs.rank)[0] == rs.rank


def classify_coroots(
    rs: RootSystem, radius: int
) -> dict[BivariatePolynomial, tuple[Vec, ...]]:
    """Group the lattice points with simple-coroot coefficients in
    [-radius, radius] by their exact local generating function.  Classes
    appear in first-seen order over the lexicographic coefficient scan;
    points within a class are sorted."""
    from itertools import product as iproduct

    classes: dict[BivariatePolynomial, list[Vec]] = {}
    rng = range(-radius, radius + 1)
    for coeffs in iproduct(rng, repeat=rs.rank):
        lam = rs.from_lattice_coords(coeffs)
        f = local_genfun(rs, lam)
        classes.setdefault(f, []).append(lam)
    return {f: tuple(sorted(pts)) for f, pts in classes.items()}
