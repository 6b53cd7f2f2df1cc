"""Exact toolkit for tropical abelian surfaces and tropical Kummer quartics.

Everything is computed in rational arithmetic: the Lagrange-reduced basis
and Voronoi cell of a polarized surface, the four tropical theta functions
of second order, the theta embedding into tropical P^3 with its
parallelepiped image, and tropicalized truncated theta series.
"""

from .errors import (
    EmptySupportError,
    InternalInconsistencyError,
    NonSymmetricError,
    NotAffineOnCellError,
    NotPositiveDefiniteError,
    ProductTypeError,
    RadiusTooSmallError,
)
from .exact import (
    Mat2,
    Vec2,
    Vec3,
    fraction_decimal,
    fraction_str,
    gram_eval,
    is_positive_definite,
    is_unimodular,
    to_fraction,
)
from .kummer import (
    AffinePiece,
    Distinct,
    EquivalentMinus,
    EquivalentPlus,
    FacePlane,
    KummerQuartic,
    VERTEX_LABELS,
    affine_pieces,
    build_quartic,
    contains,
    coplanarity_report,
    g_action,
    injectivity_check,
    psi_eval,
    two_torsion_images,
    vertex_sign_diagnostics,
)
from .lattice import (
    Cell,
    CellComplex,
    CellKind,
    PrincipallyPolarizedSurface,
    ReducedBasis,
    SurfaceClass,
    VoronoiCell,
    classify,
    in_voronoi_cell,
    lagrange_reduce,
    make_surface,
    reduce_point,
    relevant_vectors,
    subdivide,
    voronoi_cell,
)
from .nonarch import (
    FormalThetaSeries,
    TropicalDescentDatum,
    build_series,
    descent_datum,
    general_descent_datum,
    safe_cutoff,
    tropicalize_series,
)
from .theta import (
    CHARACTERISTICS,
    ThetaCharacteristic,
    ThetaValue,
    theta_constants,
    theta_eval,
    theta_eval_bruteforce,
)

__all__ = [
    "AffinePiece",
    "CHARACTERISTICS",
    "Cell",
    "CellComplex",
    "CellKind",
    "Distinct",
    "EmptySupportError",
    "EquivalentMinus",
    "EquivalentPlus",
    "FacePlane",
    "FormalThetaSeries",
    "InternalInconsistencyError",
    "KummerQuartic",
    "Mat2",
    "NonSymmetricError",
    "NotAffineOnCellError",
    "NotPositiveDefiniteError",
    "PrincipallyPolarizedSurface",
    "ProductTypeError",
    "RadiusTooSmallError",
    "ReducedBasis",
    "SurfaceClass",
    "ThetaCharacteristic",
    "ThetaValue",
    "TropicalDescentDatum",
    "VERTEX_LABELS",
    "Vec2",
    "Vec3",
    "VoronoiCell",
    "affine_pieces",
    "build_quartic",
    "build_series",
    "classify",
    "contains",
    "coplanarity_report",
    "descent_datum",
    "fraction_decimal",
    "fraction_str",
    "g_action",
    "general_descent_datum",
    "gram_eval",
    "in_voronoi_cell",
    "injectivity_check",
    "is_positive_definite",
    "is_unimodular",
    "lagrange_reduce",
    "make_surface",
    "psi_eval",
    "reduce_point",
    "relevant_vectors",
    "safe_cutoff",
    "subdivide",
    "theta_constants",
    "theta_eval",
    "theta_eval_bruteforce",
    "to_fraction",
    "tropicalize_series",
    "two_torsion_images",
    "vertex_sign_diagnostics",
    "voronoi_cell",
]
