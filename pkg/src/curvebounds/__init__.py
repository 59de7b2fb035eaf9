"""Exact genus, gonality and degree invariants for character-variety curves."""

from .families import (
    DomainError,
    DtkParams,
    OptbParams,
    dtk_defining_polynomial,
    dtk_diagonal_model,
    dtk_invariants,
    optb_invariants,
)
from .filling import Slope, bezout_bounds, cr_polynomials, height, normalization_map, parse_slope
from .invariants import (
    bidegree_gonality,
    brill_noether,
    castelnuovo_severi_threshold,
    genus_degree_bound,
    hyperelliptic_genus,
    map_degree_bounds,
    plane_gonality_from_singularity,
)
from .laurent import (
    LaurentPoly2,
    MonomialMap,
    equal_up_to_unit,
    format_poly,
    parse_poly,
    substitute_monomial,
    support,
)
from .polygon import (
    LatticePolygon,
    brute_force_lattice_width,
    interior_lattice_points,
    lattice_width,
    newton_polygon,
    norm_curve_test,
)
from .spectral import (
    dtk_spectral,
    hwang_to_bound,
    li_yau_bound,
    optb_display_bounds,
    optb_spectral,
    spectral_bounds,
)
from .tracepoly import closed_form_check, fib, filling_trace_relation, g, h, trace_poly

__version__ = "0.1.0"
