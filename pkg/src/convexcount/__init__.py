"""Exact counting of convex 4- and 5-point subsets of planar integer point
placements.

The package provides two independent counting engines (naive subset
enumeration and a region-table engine derived from exact double-counting
identities), a fifteen-identity verification suite, exact rational
statistics, a pentagon-density lower-bound report, deterministic placement
generators, and a simulated-annealing pentagon minimizer guarded by proven
minimum values.
"""

from .classification import (
    RegionKind,
    RegionLabel,
    TriangleRef,
    Type4,
    Type5,
    canonical_triangle,
    classify4,
    classify5,
    classify_region,
)
from .counting import (
    AggregateSums,
    InconsistentCountsError,
    RegionCounts,
    TypeCounts4,
    TypeCounts5,
    aggregate_regions,
    count4_from_regions,
    count4_naive,
    count5_from_regions,
    count5_naive,
    delta_count5,
    region_counts,
    region_table,
)
from .geometry import (
    CCW,
    COORD_BOUND,
    CW,
    Collinear,
    CollinearError,
    ConvexCountError,
    Duplicate,
    InvalidPlacementError,
    ParseError,
    Placement,
    Point,
    ValidationError,
    cross,
    dumps_placement,
    load_placement,
    orientation,
    save_placement,
    validate_placement,
)
from .identities import (
    C5_LOWER_CONST,
    MU5_COEFF,
    RHS_CONST_COEFF,
    BoundReport,
    IdentityCheck,
    IdentityReport,
    StatsSummary,
    bound_report,
    stats,
    supersaturation_bound,
    supersaturation_limit,
    verify_identities,
)
from .search import (
    GENERATOR_KINDS,
    KNOWN_MIN_PENTAGONS,
    AnnealConfig,
    ExhaustedRejectionError,
    GenerationError,
    GeneratorSpec,
    SearchResult,
    generate,
    minimize_pentagons,
)

__version__ = "0.1.0"

__all__ = [
    "AggregateSums",
    "AnnealConfig",
    "BoundReport",
    "C5_LOWER_CONST",
    "CCW",
    "COORD_BOUND",
    "CW",
    "Collinear",
    "CollinearError",
    "ConvexCountError",
    "Duplicate",
    "ExhaustedRejectionError",
    "GENERATOR_KINDS",
    "GenerationError",
    "GeneratorSpec",
    "IdentityCheck",
    "IdentityReport",
    "InconsistentCountsError",
    "InvalidPlacementError",
    "KNOWN_MIN_PENTAGONS",
    "MU5_COEFF",
    "ParseError",
    "Placement",
    "Point",
    "RHS_CONST_COEFF",
    "RegionCounts",
    "RegionKind",
    "RegionLabel",
    "SearchResult",
    "StatsSummary",
    "TriangleRef",
    "Type4",
    "Type5",
    "TypeCounts4",
    "TypeCounts5",
    "ValidationError",
    "aggregate_regions",
    "bound_report",
    "canonical_triangle",
    "classify4",
    "classify5",
    "classify_region",
    "count4_from_regions",
    "count4_naive",
    "count5_from_regions",
    "count5_naive",
    "cross",
    "delta_count5",
    "dumps_placement",
    "generate",
    "load_placement",
    "minimize_pentagons",
    "orientation",
    "region_counts",
    "region_table",
    "save_placement",
    "stats",
    "supersaturation_bound",
    "supersaturation_limit",
    "validate_placement",
    "verify_identities",
]
