"""Exact tools for cyclically branched covers of punctured spheres.

The package enumerates d-fold cyclic covers branched over punctured spheres,
computes the cone metrics that induce holomorphic 1-forms on them, locates
Weierstrass points exactly through the Wronskian, analyzes lifts of sphere
maps, carries a catalog of regular triply periodic polyhedral surfaces, and
solves the harmonic-parametrization period systems numerically.
"""

from .conemetrics import (
    ConeMetric,
    Divisor,
    all_admissible,
    count_checks,
    divisor_of,
    involution_pairing,
    is_admissible_oracle,
    metric_from_angles,
    monomial_relations,
)
from .covers import (
    BranchingData,
    CoverSummary,
    InvalidCoverError,
    LiftClosure,
    check,
    degree_bounds,
    enumerate_covers,
    genus,
    genus_oracle,
    lift_closure,
    normalize,
    validate,
)
from .exactmath import (
    Polynomial,
    Rational,
    RationalFunction,
    derivative,
    log_derivative,
    order_at,
    rational_roots,
    squarefree_decomposition,
)
from .lifts import (
    AffineLift,
    IndexMap,
    affine_order,
    compatible_mus,
    enumerate_lifts,
    lift_order,
    preimage_action,
)
from .periods import (
    LatticeMatrix,
    PeriodMatrix,
    jacobian,
    octa4_fixture,
    solve_coefficients,
)
from .polyhedra import (
    CatalogEntry,
    GraphParams,
    catalog,
    catalog_entry,
    quotient_graph_params,
    tiling_genus,
)
from .wronski import (
    WronskiReport,
    default_basis,
    default_punctures,
    hyperelliptic_test,
    total_weight,
    weight_census,
    wronskian,
)

__version__ = "0.1.0"

__all__ = [
    "AffineLift",
    "BranchingData",
    "CatalogEntry",
    "ConeMetric",
    "CoverSummary",
    "Divisor",
    "GraphParams",
    "IndexMap",
    "InvalidCoverError",
    "LatticeMatrix",
    "LiftClosure",
    "PeriodMatrix",
    "Polynomial",
    "Rational",
    "RationalFunction",
    "WronskiReport",
    "affine_order",
    "all_admissible",
    "catalog",
    "catalog_entry",
    "check",
    "compatible_mus",
    "count_checks",
    "default_basis",
    "default_punctures",
    "degree_bounds",
    "derivative",
    "divisor_of",
    "enumerate_covers",
    "enumerate_lifts",
    "genus",
    "genus_oracle",
    "hyperelliptic_test",
    "involution_pairing",
    "is_admissible_oracle",
    "jacobian",
    "lift_closure",
    "lift_order",
    "log_derivative",
    "metric_from_angles",
    "monomial_relations",
    "normalize",
    "octa4_fixture",
    "order_at",
    "preimage_action",
    "quotient_graph_params",
    "rational_roots",
    "solve_coefficients",
    "squarefree_decomposition",
    "tiling_genus",
    "total_weight",
    "validate",
    "weight_census",
    "wronskian",
]
