"""Exact experiments on degree and height growth of rational self-maps of P^d."""

__version__ = "0.1.0"

from .analysis import (
    ConjectureReport,
    GrowthEstimate,
    Quantity,
    RecurrenceModel,
    check_birational_duality,
    check_cycle_consistency,
    check_ks_point,
    check_log_concavity,
    check_polarized,
    check_product_formula,
    detect_recurrence,
    dominant_root,
    estimate_growth,
    estimate_height_growth,
)
from .cycles import (
    Cycle,
    Hypersurface,
    ParamCurve,
    curve_orbit_heights,
    hypersurface_height,
    implicitize_param_curve,
    pushforward_by_inverse,
)
from .monomial import (
    MonomialMap,
    dynamical_degrees,
    exterior_power,
    iterate_exact,
    monomial_inverse,
    parse_monomial,
    spectral_radius,
    to_rational_map,
)
from .poly import Polynomial, parse_polynomial, poly_gcd, resultant_univar
from .projective import ProjectivePoint, normalize_point, parse_point, point_orbit_heights, weil_height
from .ratmap import (
    RationalMap,
    compose,
    degree_sequence,
    iterate,
    make_map,
    parse_map_file,
    topological_degree_dim2,
    verify_inverse,
)
from .roots import AlgebraicRadius

__all__ = [name for name in dir() if not name.startswith("_")]
