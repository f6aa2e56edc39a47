"""Edge ideals of snake-family graphs: invariants and formula checks.

Build the graph families (snakes, cycle snakes, stars, bristlings),
take edge ideals, and compute regularity, projective dimension, depth,
and Stanley depth of the quotients from first principles.  Closed-form
predictions and the induction decompositions behind them are catalogued
and machine-verified on parameter grids.
"""

from .betti import (BettiTable, InvariantBundle, StanleyReisnerComplex,
                    betti_table, independence_complex, invariants)
from .catalogue import ClosedForm, closed_form
from .decompositions import (DecompositionReport, DecompositionRule,
                             replay_catalogue, replay_family, rules_for,
                             verify_decomposition)
from .errors import (CapExceededError, EdgeIdealsError, FamilySpecParseError,
                     FusionLoopError, InvalidParameterError, MembershipError,
                     NonPrimeCharacteristicError, OutOfStatedRangeError,
                     RecursionCapError, RuleInapplicableError,
                     TooManyGeneratorsError, TooManyVariablesError)
from .families import (FamilySpec, build_extended, build_family, bristled,
                       bristled_star, cycle, expected_counts, ouroboros,
                       parse_family, path, star, tsnake, tsnake_star,
                       tsnake_starstar)
from .graphs import (LabeledGraph, VertexLabel, bristle,
                     connected_components, corona, disjoint_union, fuse,
                     is_isomorphic, null_graph, read_edge_list,
                     strip_isolated, to_dot)
from .ideals import (MonomialIdeal, add_variable, colon_by, edge_ideal,
                     ideal_components, ideal_from_text, ideal_to_text,
                     mask_of, vars_of)
from .recursion import RegInterval, regularity_by_recursion
from .sdepth import (FacePoset, IntervalPartition, face_poset, sdepth_bounds,
                     stanley_depth, validate_partition)
from .taylor import betti_table_taylor
from .verify import CLAIMS, RunConfig, VerificationReport, run_claims

__version__ = "0.1.0"

__all__ = [
    "BettiTable", "CLAIMS", "CapExceededError", "ClosedForm",
    "DecompositionReport", "DecompositionRule", "EdgeIdealsError",
    "FacePoset", "FamilySpec", "FamilySpecParseError", "FusionLoopError",
    "IntervalPartition", "InvalidParameterError", "InvariantBundle",
    "LabeledGraph", "MembershipError", "MonomialIdeal",
    "NonPrimeCharacteristicError", "OutOfStatedRangeError", "RegInterval",
    "RecursionCapError", "RuleInapplicableError", "RunConfig",
    "StanleyReisnerComplex", "TooManyGeneratorsError",
    "TooManyVariablesError", "VerificationReport", "VertexLabel",
    "add_variable", "betti_table", "betti_table_taylor", "bristle",
    "bristled", "bristled_star", "build_extended", "build_family",
    "closed_form", "colon_by", "connected_components", "corona", "cycle",
    "ideal_components",
    "disjoint_union", "edge_ideal", "expected_counts", "face_poset", "fuse",
    "ideal_from_text", "ideal_to_text", "independence_complex", "invariants",
    "is_isomorphic", "mask_of", "null_graph", "ouroboros", "parse_family",
    "path",
    "read_edge_list", "regularity_by_recursion", "replay_catalogue",
    "replay_family", "rules_for", "run_claims", "sdepth_bounds", "star",
    "stanley_depth", "strip_isolated", "to_dot", "tsnake", "tsnake_star",
    "tsnake_starstar", "validate_partition", "vars_of",
    "verify_decomposition",
]
