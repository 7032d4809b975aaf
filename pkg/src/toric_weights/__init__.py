"""Weight filtrations of GKZ systems for normal toric data, computed exactly."""

from .cone import (
    FaceDescriptor,
    FacetFunctional,
    GeneratorMatrix,
    build_face_lattice,
    check_saturated,
    enumerate_facets,
    parse_matrix,
)
from .errors import ToricWeightsError
from .gh import (
    BettiVector,
    g_polynomial,
    h_polynomial,
    ih_affine,
    ih_compact,
    ih_dual_Y,
    ih_projective,
    verify_stanley_identity,
)
from .poset import FaceLattice, compositions, dualize, flags_between, interval
from .weights import (
    l_entry_by_compositions,
    l_table,
    mu_alt_recursion,
    mu_closed,
    mu_flags,
    weight_report,
)

__all__ = [
    "BettiVector",
    "FaceDescriptor",
    "FaceLattice",
    "FacetFunctional",
    "GeneratorMatrix",
    "ToricWeightsError",
    "build_face_lattice",
    "check_saturated",
    "compositions",
    "dualize",
    "enumerate_facets",
    "flags_between",
    "g_polynomial",
    "h_polynomial",
    "ih_affine",
    "ih_compact",
    "ih_dual_Y",
    "ih_projective",
    "interval",
    "l_entry_by_compositions",
    "l_table",
    "mu_alt_recursion",
    "mu_closed",
    "mu_flags",
    "parse_matrix",
    "verify_stanley_identity",
    "weight_report",
]
