"""Exact reflection length computations in affine Coxeter groups.

The package computes reflection length and its two constituents (the
elliptic dimension e and the differential dimension d), produces
minimum-length reflection factorisations and translation-elliptic
splittings, evaluates the combinatorial null-partition statistics for
the affine symmetric group, builds local generating functions over the
coroot lattice, draws deterministic SVG alcove pictures, and certifies
everything against brute-force oracles.  All arithmetic is exact.
"""

from .errors import BudgetExceeded, ParseError, UnsupportedTypeError
from .rootsys import RootSystem, RootSystemSpec, parse_type_spec, root_system
from .affgroup import (
    AffineElement,
    AffineReflection,
    compose,
    identity_element,
    inverse,
    product,
    translation_element,
)
from .reflen import (
    DimensionReport,
    ReflectionFactorization,
    dimension_report,
    factor_elliptic,
    hurwitz_move,
    min_factorization,
    translation_elliptic_split,
)
from .affsym import (
    Window,
    cycles,
    good_origin_split,
    minimal_null_blocks,
    null_complex,
    nullity,
    reflection_length,
    relative_nullity,
)
from .genfun import (
    BivariatePolynomial,
    classify_coroots,
    local_genfun,
    spherical_genfun,
)
from .oracle import (
    CertifiedLength,
    brute_move_dimension,
    brute_nullity,
    brute_reflection_length,
    brute_reflection_lengths,
)
from .render import render_alcoves, render_classes

__version__ = "0.1.0"

__all__ = [
    "AffineElement",
    "AffineReflection",
    "BivariatePolynomial",
    "BudgetExceeded",
    "CertifiedLength",
    "DimensionReport",
    "ParseError",
    "ReflectionFactorization",
    "RootSystem",
    "RootSystemSpec",
    "UnsupportedTypeError",
    "Window",
    "brute_move_dimension",
    "brute_nullity",
    "brute_reflection_length",
    "brute_reflection_lengths",
    "classify_coroots",
    "compose",
    "cycles",
    "dimension_report",
    "factor_elliptic",
    "good_origin_split",
    "hurwitz_move",
    "identity_element",
    "inverse",
    "local_genfun",
    "min_factorization",
    "minimal_null_blocks",
    "null_complex",
    "nullity",
    "parse_type_spec",
    "product",
    "reflection_length",
    "relative_nullity",
    "render_alcoves",
    "render_classes",
    "root_system",
    "spherical_genfun",
    "translation_element",
    "translation_elliptic_split",
    "__version__",
]
