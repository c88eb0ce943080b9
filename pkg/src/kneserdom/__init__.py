"""Domination-type invariants and 2-packing numbers of Kneser graphs."""

from .certify import (
    InvariantKind,
    VerificationReport,
    verify,
    verify_2_packing,
    verify_k_dominating,
    verify_k_tuple_dominating,
    verify_k_tuple_total_dominating,
)
from .construct import (
    NormalizationError,
    TABLE3_PACKINGS,
    diagonal_lift,
    disjoint_clique,
    doubling_lift,
    gamma_kt_boundary,
    normalize_packing,
    rho3_witness,
    rho4_witness,
    table3_packing,
)
from .core import (
    CapacityError,
    DefinabilityError,
    KneserParams,
    ParameterError,
    Vertex,
    VertexFamily,
    closed_neighbor_count,
    distance_at_most_2,
    is_adjacent,
    occurrence_classes,
    open_neighbor_count,
)
from .familydoc import (
    FamilyDocumentError,
    family_to_csv,
    family_to_document,
    family_to_json,
    load_family_document,
    parse_family_document,
)
from .solve import (
    SolveResult,
    SolveStatus,
    SolverConfig,
    brute_force_domination,
    solve_domination,
    solve_rho2,
    threshold_prediction_by_n,
    threshold_predictions,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "DefinabilityError",
    "FamilyDocumentError",
    "InvariantKind",
    "KneserParams",
    "NormalizationError",
    "ParameterError",
    "SolveResult",
    "SolveStatus",
    "SolverConfig",
    "TABLE3_PACKINGS",
    "VerificationReport",
    "Vertex",
    "VertexFamily",
    "brute_force_domination",
    "closed_neighbor_count",
    "diagonal_lift",
    "disjoint_clique",
    "distance_at_most_2",
    "doubling_lift",
    "family_to_csv",
    "family_to_document",
    "family_to_json",
    "gamma_kt_boundary",
    "is_adjacent",
    "load_family_document",
    "normalize_packing",
    "occurrence_classes",
    "open_neighbor_count",
    "parse_family_document",
    "rho3_witness",
    "rho4_witness",
    "solve_domination",
    "solve_rho2",
    "table3_packing",
    "threshold_prediction_by_n",
    "threshold_predictions",
    "verify",
    "verify_2_packing",
    "verify_k_dominating",
    "verify_k_tuple_dominating",
    "verify_k_tuple_total_dominating",
]
