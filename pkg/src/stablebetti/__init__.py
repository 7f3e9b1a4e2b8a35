"""Betti tables of strongly stable monomial ideals and their corners.

The package computes graded Betti numbers of stable monomial ideals and
finite direct sums of them, locates the extremal (corner) entries, and
solves the inverse problem: given corner positions and values, decide
feasibility and construct a witness ideal or module. An independent
Koszul-homology computation with exact integer arithmetic serves as an
oracle for everything the generator-based formula produces.
"""

from .betti import (
    BettiTable,
    Corner,
    CornerMatrixView,
    corner_matrix,
    corner_sequence,
    corners_from_generators,
    ek_betti,
    extremal_from_generators,
    extremal_from_table,
    module_corner_report,
    render_diagram,
)
from .errors import (
    BadDegree,
    BadRange,
    BudgetExceeded,
    CapTooLow,
    DegreeMismatch,
    EmptyIdeal,
    InfeasibleSpec,
    InvalidMove,
    MixedDegrees,
    MonomialSyntaxError,
    NotStable,
    RankOutOfRange,
    SpecError,
    StableBettiError,
    UncoveredByCharacterization,
    VerificationFailed,
)
from .ideals import (
    MonomialIdeal,
    MonomialSubmodule,
    borel_closure,
    minimalize,
    parse_module_or_ideal,
)
from .monomials import (
    borel_move,
    borel_moves,
    degree,
    format_monomial,
    lex_compare,
    max_index,
    parse_monomial,
)
from .oracle import (
    GradedComplexSlice,
    SearchResult,
    bruteforce_realizability,
    enumerate_strongly_stable,
    integer_rank,
    koszul_betti,
    lcm_multidegrees,
)
from .realize_ideal import (
    MODE_COUPLED,
    MODE_STRICT,
    MODES,
    BoundReport,
    CornerSpec,
    IdealRealization,
    PositionVerdict,
    ValueVerdict,
    check_values,
    compute_bounds,
    construct_degree2_chain,
    construct_ideal,
    coupled_chain,
    validate_positions,
)
from .realize_module import (
    CornerMatrix,
    ModuleRealization,
    NormalizationResult,
    column_bounds,
    construct_module,
    filler_ideal,
    find_corner_matrix,
    normalize_module,
    realize_module,
    validate_corner_matrix,
    validate_module_spec,
)
from .segments import LexSegment, lex_shadow, set_difference, set_difference_ranked, shadow, stratum, stratum_size

__version__ = "0.1.0"

__all__ = [
    "BadDegree",
    "BadRange",
    "BettiTable",
    "BoundReport",
    "BudgetExceeded",
    "CapTooLow",
    "Corner",
    "CornerMatrix",
    "CornerMatrixView",
    "CornerSpec",
    "DegreeMismatch",
    "EmptyIdeal",
    "GradedComplexSlice",
    "IdealRealization",
    "InfeasibleSpec",
    "InvalidMove",
    "LexSegment",
    "MixedDegrees",
    "MODE_COUPLED",
    "MODE_STRICT",
    "MODES",
    "MonomialIdeal",
    "MonomialSubmodule",
    "MonomialSyntaxError",
    "ModuleRealization",
    "NormalizationResult",
    "NotStable",
    "PositionVerdict",
    "RankOutOfRange",
    "SearchResult",
    "SpecError",
    "StableBettiError",
    "UncoveredByCharacterization",
    "ValueVerdict",
    "VerificationFailed",
    "borel_closure",
    "borel_move",
    "borel_moves",
    "bruteforce_realizability",
    "check_values",
    "column_bounds",
    "compute_bounds",
    "construct_degree2_chain",
    "construct_ideal",
    "construct_module",
    "corner_matrix",
    "corner_sequence",
    "corners_from_generators",
    "coupled_chain",
    "degree",
    "ek_betti",
    "enumerate_strongly_stable",
    "extremal_from_generators",
    "extremal_from_table",
    "filler_ideal",
    "find_corner_matrix",
    "format_monomial",
    "integer_rank",
    "koszul_betti",
    "lcm_multidegrees",
    "lex_compare",
    "lex_shadow",
    "max_index",
    "minimalize",
    "module_corner_report",
    "normalize_module",
    "parse_module_or_ideal",
    "parse_monomial",
    "realize_module",
    "render_diagram",
    "set_difference",
    "set_difference_ranked",
    "shadow",
    "stratum",
    "stratum_size",
    "validate_corner_matrix",
    "validate_module_spec",
    "validate_positions",
]
