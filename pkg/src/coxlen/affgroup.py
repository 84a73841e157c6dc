"""Elements of affine Coxeter groups in semidirect normal form.

An element is a pair (linear, translation): the isometry
x -> linear @ x + translation.  The linear part lies in the finite Weyl
group W0 (an orthogonal matrix permuting the roots), the translation
part in the coroot lattice.  This normal form is unique once an origin
is fixed; alternative origins are handled by explicit conjugation
(rebased_normal_form), never by changing the representation.

The affine reflection r_{alpha,j} fixes the hyperplane <x, alpha> = j.
As an element it has linear part (I - alpha-check alpha^T) and
translation part j * alpha-check.  The pairs (alpha, j) and
(-alpha, -j) describe the same reflection; AffineReflection normalises
to the lexicographically positive root, so equality of reflections is
equality of fields.

Move-sets and fixed sets are affine subspaces, canonicalised so that
structural equality is subspace equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q

from .linalg import (
    Mat,
    Vec,
    dot,
    identity_matrix,
    in_span,
    is_zero,
    mat_mul,
    mat_vec,
    project_off,
    reduce_against,
    rref,
    solve_affine,
    transpose,
    vadd,
    vsub,
    zero_vec,
)
from .rootsys import RootSystem, coroot, reflect


@dataclass(frozen=True)
class AffineSubspace:
    """b + span(directions), canonical.

    directions is the RREF basis of the direction space and base is the
    unique point of the subspace orthogonal to it, so equal subspaces
    compare equal field by field.  The empty set is its own flag.
    """

    base: Vec
    directions: Mat
    is_empty: bool = False

    @staticmethod
    def from_point_and_directions(base: Vec, directions) -> AffineSubspace:
        rows, _ = rref(tuple(directions))
        return AffineSubspace(base=project_off(base, rows), directions=rows)

    @staticmethod
    def empty(ambient_dim: int) -> AffineSubspace:
        return AffineSubspace(base=zero_vec(ambient_dim), directions=(), is_empty=True)

    @property
    def dim(self) -> int:
        if self.is_empty:
            raise ValueError("empty subspace has no dimension")
        return len(self.directions)

    def contains_point(self, x: Vec) -> bool:
        if self.is_empty:
            return False
        return is_zero(project_off(vsub(x, self.base), self.directions))

    def contains_subspace(self, other: AffineSubspace) -> bool:
        if other.is_empty:
            return True
        if self.is_empty:
            return False
        return self.contains_point(other.base) and all(
            in_span(self.directions, d) for d in other.directions
        )

    def translate(self, v: Vec) -> AffineSubspace:
        if self.is_empty:
            return self
        return AffineSubspace.from_point_and_directions(vadd(self.base, v), self.directions)


@dataclass(frozen=True)
class AffineElement:
    """x -> linear @ x + translation."""

    linear: Mat
    translation: Vec

    @property
    def dim(self) -> int:
        return len(self.translation)

    def apply(self, x: Vec) -> Vec:
        return vadd(mat_vec(self.linear, x), self.translation)

    def is_identity(self) -> bool:
        return is_zero(self.translation) and self.linear == identity_matrix(self.dim)


def identity_element(ambient_dim: int) -> AffineElement:
    return AffineElement(identity_matrix(ambient_dim), zero_vec(ambient_dim))


def translation_element(v: Vec) -> AffineElement:
    return AffineElement(identity_matrix(len(v)), tuple(v))


def compose(a: AffineElement, b: AffineElement) -> AffineElement:
    """a after b: (compose(a, b))(x) = a(b(x))."""
    return AffineElement(
        linear=mat_mul(a.linear, b.linear),
        translation=vadd(mat_vec(a.linear, b.translation), a.translation),
    )


def inverse(a: AffineElement) -> AffineElement:
    # linear parts are orthogonal, so the inverse matrix is the transpose
    lt = transpose(a.linear)
    return AffineElement(linear=lt, translation=tuple(-x for x in mat_vec(lt, a.translation)))


def product(factors) -> AffineElement:
    """Left-to-right product; factors may be elements or reflections."""
    items = [f.to_element() if isinstance(f, AffineReflection) else f for f in factors]
    if not items:
        raise ValueError("empty product has no ambient dimension; use identity_element")
    out = items[0]
    for f in items[1:]:
        out = compose(out, f)
    return out


@dataclass(frozen=True)
class AffineReflection:
    """The reflection fixing <x, root> = level, root normalised positive."""

    root: Vec
    level: int

    @staticmethod
    def make(root: Vec, level) -> AffineReflection:
        if Q(level).denominator != 1:
            raise ValueError(f"reflection level must be an integer, got {level}")
        level = int(level)
        nonzero = next((x for x in root if x != 0), None)
        if nonzero is None:
            raise ValueError("reflection root must be nonzero")
        if nonzero < 0:
            root, level = tuple(-x for x in root), -level
        return AffineReflection(tuple(Q(x) for x in root), level)

    def to_element(self) -> AffineElement:
        av = coroot(self.root)
        n = len(self.root)
        linear = tuple(
            tuple((Q(1) if i == j else Q(0)) - av[i] * self.root[j] for j in range(n))
            for i in range(n)
        )
        return AffineElement(linear=linear, translation=tuple(self.level * c for c in av))

    def conjugated_by(self, g: AffineElement) -> AffineReflection:
        """g r g^{-1}: the reflection in the image hyperplane g(H).

        With g: x -> Bx + mu, the image of <x, alpha> = j is
        <y, B alpha> = j + <mu, B alpha>, and the new level is an
        integer because the coroot lattice pairs integrally with roots.
        """
        new_root = mat_vec(g.linear, self.root)
        return AffineReflection.make(new_root, self.level + dot(g.translation, new_root))

    def conjugated_by_reflection(self, s: AffineReflection) -> AffineReflection:
        """s r s, without building matrices: the root reflects and the
        level shifts by the Cartan pairing, s_{a,j} r_{b,k} s_{a,j} =
        r_{s_a(b), k - j <a^vee, b>}."""
        new_root = reflect(s.root, self.root)
        pairing = dot(coroot(s.root), self.root)
        return AffineReflection.make(new_root, self.level - s.level * pairing)


def linear_move_space(linear: Mat) -> Mat:
    """RREF basis of Im(linear - I)."""
    n = len(linear)
    ident = identity_matrix(n)
    cols = transpose(tuple(tuple(linear[i][j] - ident[i][j] for j in range(n)) for i in range(n)))
    rows, _ = rref(cols)
    return rows


def elliptic_rank(linear: Mat) -> int:
    return len(linear_move_space(linear))


def elliptic_part(a: AffineElement) -> Mat:
    """Projection to W0: forget the translation."""
    return a.linear


def move_set(a: AffineElement) -> AffineSubspace:
    """Mov(a) = {a(x) - x} = translation + Im(linear - I)."""
    return AffineSubspace.from_point_and_directions(a.translation, linear_move_space(a.linear))


def fixed_set(rs: RootSystem, a: AffineElement) -> AffineSubspace:
    """Solutions of (linear - I)x = -translation, intersected with the
    span of the roots (for type A and G2 the ambient space is one
    dimension larger than the space the group acts on)."""
    n = a.dim
    ident = identity_matrix(n)
    m = tuple(tuple(a.linear[i][j] - ident[i][j] for j in range(n)) for i in range(n))
    sol = solve_affine(m, tuple(-x for x in a.translation))
    if sol is None:
        return AffineSubspace.empty(n)
    base, kernel = sol
    if rs.ambient_dim > rs.rank:
        ones = tuple(Q(1) for _ in range(n))
        s = sum(base) / n
        base = tuple(x - s for x in base)
        kernel = tuple(project_off(k, (ones,)) for k in kernel)
    return AffineSubspace.from_point_and_directions(base, kernel)


def is_elliptic(a: AffineElement) -> bool:
    """True iff the translation part lies in Im(linear - I), equivalently
    iff the fixed set is nonempty."""
    basis, pivots = rref(linear_move_space(a.linear))
    return is_zero(reduce_against(basis, pivots, a.translation))


def is_translation(a: AffineElement) -> bool:
    return a.linear == identity_matrix(a.dim)


def require_group_element(rs, a: AffineElement) -> None:
    """Check membership in the affine Weyl group: the linear part must
    permute the roots and the translation part must lie in the coroot
    lattice.  Root permutation also admits diagram automorphisms; those
    are rare in practice and the factorisation routines fail loudly on
    them, whereas a translation outside the lattice would fail in
    confusing ways deep inside the peeling loop."""
    if a.dim != rs.ambient_dim:
        raise ValueError(
            f"element acts on dimension {a.dim}, root system lives in {rs.ambient_dim}"
        )
    root_set = set(rs.roots)
    for alpha in rs.roots:
        if mat_vec(a.linear, alpha) not in root_set:
            raise ValueError("linear part does not preserve the root system")
    if not rs.in_coroot_lattice(a.translation):
        raise ValueError(
            f"translation part {a.translation} is not in the coroot lattice"
        )


def rebased_normal_form(w: AffineElement, origin: Vec) -> tuple[Vec, AffineElement]:
    """Normal form of w relative to a different origin y: the pair
    (mu, u) with mu = w(y) - y and u = t_{-mu} w, which fixes y when w's
    linear part does."""
    mu = vsub(w.apply(origin), origin)
    u = compose(translation_element(tuple(-x for x in mu)), w)
    return mu, u
