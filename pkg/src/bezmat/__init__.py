"""Exact generalized inverses and similarity certificates over Bezout domains."""

from . import errors
from .errors import (
    BezmatError,
    ConditionNotMet,
    DimensionMismatch,
    DivisionByZero,
    FormatError,
    GenerationExhausted,
    HypothesisViolated,
    IndexTooSmall,
    InternalAssertion,
    NoSolution,
    NotDivisible,
    NotDrazinInvertible,
    NotGroupInvertible,
    NotIdempotent,
    NotInvertibleOverRing,
    NotSquare,
    RingMismatch,
)
from .rings import ZZ, QQ, QQX, Poly, get_ring
from .matrix import (
    Mat,
    block_diag,
    det,
    hstack,
    inverse_over_ring,
    solve_in_column_module,
    split_blocks,
    vstack,
)
from .normal_forms import (
    HermiteResult,
    RankFactorization,
    RowHermiteResult,
    SmithResult,
    col_module_contains,
    col_module_equal,
    column_hermite,
    column_module_basis,
    left_kernel_basis,
    rank,
    rank_factorization,
    right_kernel_basis,
    row_hermite,
    row_module_equal,
    smith,
)
from .ginverse import (
    CoreSplit,
    DrazinResult,
    GroupInverseResult,
    core_split,
    drazin,
    group_inverse,
    idempotent_split,
    is_group_invertible,
)
from .similarity import (
    VARIANTS,
    HypothesisReport,
    SimilarityWitness,
    check_hypotheses,
    cline_verify,
    conjugate_witnesses,
    corollary_check,
    power_witness,
    similarity_witness,
    verify_witness,
)
from .field_oracle import OracleReport, RatFunc, fraction_field_oracle
from .generate import (
    GenConfig,
    GeneratedTriple,
    SplitMix64,
    gen_corollary_false,
    gen_corollary_true,
    gen_drazin_triple,
    gen_flanders_triple,
    gen_group_invertible,
    random_matrix,
    random_unimodular,
)
from .io import (
    dumps_doc,
    load_matrix,
    loads_matrix,
    matrix_from_doc,
    matrix_to_doc,
    save_matrix,
    witness_to_doc,
)

__version__ = "0.1.0"

__all__ = [
    "errors",
    "BezmatError",
    "ConditionNotMet",
    "DimensionMismatch",
    "DivisionByZero",
    "FormatError",
    "GenerationExhausted",
    "HypothesisViolated",
    "IndexTooSmall",
    "InternalAssertion",
    "NoSolution",
    "NotDivisible",
    "NotDrazinInvertible",
    "NotGroupInvertible",
    "NotIdempotent",
    "NotInvertibleOverRing",
    "NotSquare",
    "RingMismatch",
    "ZZ",
    "QQ",
    "QQX",
    "Poly",
    "get_ring",
    "Mat",
    "block_diag",
    "det",
    "hstack",
    "inverse_over_ring",
    "solve_in_column_module",
    "split_blocks",
    "vstack",
    "HermiteResult",
    "RowHermiteResult",
    "SmithResult",
    "RankFactorization",
    "col_module_contains",
    "col_module_equal",
    "column_hermite",
    "column_module_basis",
    "left_kernel_basis",
    "rank",
    "rank_factorization",
    "right_kernel_basis",
    "row_hermite",
    "row_module_equal",
    "smith",
    "CoreSplit",
    "DrazinResult",
    "GroupInverseResult",
    "core_split",
    "drazin",
    "group_inverse",
    "idempotent_split",
    "is_group_invertible",
    "VARIANTS",
    "HypothesisReport",
    "SimilarityWitness",
    "check_hypotheses",
    "cline_verify",
    "conjugate_witnesses",
    "corollary_check",
    "power_witness",
    "similarity_witness",
    "verify_witness",
    "OracleReport",
    "RatFunc",
    "fraction_field_oracle",
    "GenConfig",
    "GeneratedTriple",
    "SplitMix64",
    "gen_corollary_false",
    "gen_corollary_true",
    "gen_drazin_triple",
    "gen_flanders_triple",
    "gen_group_invertible",
    "random_matrix",
    "random_unimodular",
    "dumps_doc",
    "load_matrix",
    "loads_matrix",
    "matrix_from_doc",
    "matrix_to_doc",
    "save_matrix",
    "witness_to_doc",
]
