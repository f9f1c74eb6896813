"""Ideal hyperbolic polygons in the unit disk: inversion, growth, extremals.

The library computes circular inversions of boundary points across geodesic
sides, grows the generational reflection tessellation of an ideal polygon,
evaluates Euclidean/hyperbolic area functionals with their sharp bounds,
and runs seeded verification scans for the monotonicity, extremality, and
majorization properties of the inverted angles.
"""

from .disk_geometry import (
    ALPHA_MIN,
    POINT_TOL,
    CirclePoint,
    GeodesicSide,
    OrthoCircle,
    PlanePoint,
    frac_distance,
    invert_euclidean,
    invert_fractions,
    invert_on_circle,
    inverse_distance,
    side_circle,
    unit_point,
)
from .errors import (
    ConvergenceError,
    DepthLimitError,
    DomainError,
    HypergonError,
    PrecisionError,
    SingularInputError,
    UnknownSuiteError,
)
from .extremal import (
    ScanReport,
    SimplexPoint,
    Violation,
    grid_scan,
    majorization_scan,
    minimax_objective,
    property_suite,
    refine_minimum,
    sample_simplex,
    suite_names,
)
from .measures import (
    AngleSpectrum,
    area_upper_bound,
    decreasing_rearrangement,
    euclidean_area,
    hyperbolic_area_ideal,
    hyperbolic_area_quadrature,
    majorizes,
    schur_concave_sum,
    side_region_area,
)
from .polygon import (
    Body,
    IdealPolygon,
    InvertedAngleMatrix,
    grow_body,
    inverted_angle_matrix,
    is_regular,
    max_inverted_angle,
    reflect_polygon,
    side,
    vertex_fractions,
    vertices,
)

__version__ = "0.1.0"

__all__ = [
    "ALPHA_MIN",
    "POINT_TOL",
    "AngleSpectrum",
    "Body",
    "CirclePoint",
    "ConvergenceError",
    "DepthLimitError",
    "DomainError",
    "GeodesicSide",
    "HypergonError",
    "IdealPolygon",
    "InvertedAngleMatrix",
    "OrthoCircle",
    "PlanePoint",
    "PrecisionError",
    "ScanReport",
    "SimplexPoint",
    "SingularInputError",
    "UnknownSuiteError",
    "Violation",
    "area_upper_bound",
    "decreasing_rearrangement",
    "euclidean_area",
    "frac_distance",
    "grid_scan",
    "grow_body",
    "hyperbolic_area_ideal",
    "hyperbolic_area_quadrature",
    "invert_euclidean",
    "invert_fractions",
    "invert_on_circle",
    "inverse_distance",
    "inverted_angle_matrix",
    "is_regular",
    "majorization_scan",
    "majorizes",
    "max_inverted_angle",
    "minimax_objective",
    "property_suite",
    "refine_minimum",
    "reflect_polygon",
    "sample_simplex",
    "schur_concave_sum",
    "side",
    "side_circle",
    "side_region_area",
    "suite_names",
    "unit_point",
    "vertex_fractions",
    "vertices",
]
