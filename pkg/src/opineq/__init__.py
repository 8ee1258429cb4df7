"""Numerical verification of refined operator mean, Kantorovich, and
Wielandt-type bounds for symmetric positive definite matrices.

The library builds SPD instances that exactly satisfy each bound's
hypothesis regime, evaluates both the classical constant and its
log-squared refinement on every instance, and reports Loewner-order
slack, attained ratios, and sharpness-search results.
"""

from .campaign import (
    DEFAULT_GRIDS,
    CampaignConfig,
    CampaignReport,
    CellStats,
    SkippedCell,
    run_campaign,
)
from .errors import InfeasibleRegime, NotPositiveDefinite
from .inequalities import (
    LIN_CHAIN_LINKS,
    LIN_VARIANTS,
    REGIME_FOR_THEOREM,
    THEOREM_IDS,
    WIELANDT_VARIANTS,
    ConstantRow,
    ConstantsTable,
    IneqRecord,
    check_choi_record,
    check_holder_mccarthy_refined,
    check_isometry_family_bound,
    check_kantorovich_product_refined,
    check_kantorovich_refined,
    check_lemma_refined_amgm,
    check_lin_chain,
    check_lin_refined_squared,
    check_norm_amgm_record,
    check_polya_szego_refined,
    check_square_order_refined,
    check_wielandt_operator,
    check_wielandt_scalar,
    kantorovich_constant,
    refinement_constants,
    refinement_factor,
    scalar_refined_amgm,
)
from .means_maps import (
    MAP_KINDS,
    PositiveMapSpec,
    apply_map,
    arithmetic_mean,
    check_choi,
    check_norm_amgm,
    compression_map,
    congruence_sum_map,
    geometric_mean,
    harmonic_like,
    identity_map,
    pinching_map,
    trace_normalize_map,
)
from .report import (
    CSV_COLUMNS,
    ReportDocument,
    canonical_dumps,
    emit_report,
    render_csv,
    render_json,
)
from .samplers import (
    RELATIVE_BASE_WINDOW,
    BoundParams,
    IsometryPair,
    RegimeId,
    haar_orthogonal,
    regime_feasible,
    regime_window,
    require_feasible,
    sample_congruence_family,
    sample_orthogonal_isometries,
    sample_orthonormal_pair,
    sample_relative_pair,
    sample_sandwich_pair,
    sample_self_inverse,
    sample_shifted_pair,
    sample_spd,
    sample_unit_vector,
)
from .search import CompareTable, SearchResult, compare_bounds, maximize_ratio
from .spd import (
    DEFAULT_TOL,
    MATRIX_FUNCTIONS,
    CheckVerdict,
    SpdMatrix,
    SpectralInterval,
    loewner_leq,
    loewner_ratio,
    make_spd,
    matrix_function,
    operator_norm,
    scalar_leq,
    spectral_bounds,
    spectral_norm,
    symmetrize,
)

__version__ = "0.1.0"

__all__ = [
    "BoundParams",
    "CSV_COLUMNS",
    "CampaignConfig",
    "CampaignReport",
    "CellStats",
    "CheckVerdict",
    "CompareTable",
    "ConstantRow",
    "ConstantsTable",
    "DEFAULT_GRIDS",
    "DEFAULT_TOL",
    "IneqRecord",
    "InfeasibleRegime",
    "IsometryPair",
    "LIN_CHAIN_LINKS",
    "LIN_VARIANTS",
    "MAP_KINDS",
    "MATRIX_FUNCTIONS",
    "NotPositiveDefinite",
    "PositiveMapSpec",
    "RELATIVE_BASE_WINDOW",
    "REGIME_FOR_THEOREM",
    "RegimeId",
    "ReportDocument",
    "SearchResult",
    "SkippedCell",
    "SpdMatrix",
    "SpectralInterval",
    "THEOREM_IDS",
    "WIELANDT_VARIANTS",
    "apply_map",
    "arithmetic_mean",
    "canonical_dumps",
    "check_choi",
    "check_choi_record",
    "check_holder_mccarthy_refined",
    "check_isometry_family_bound",
    "check_kantorovich_product_refined",
    "check_kantorovich_refined",
    "check_lemma_refined_amgm",
    "check_lin_chain",
    "check_lin_refined_squared",
    "check_norm_amgm",
    "check_norm_amgm_record",
    "check_polya_szego_refined",
    "check_square_order_refined",
    "check_wielandt_operator",
    "check_wielandt_scalar",
    "compare_bounds",
    "compression_map",
    "congruence_sum_map",
    "emit_report",
    "geometric_mean",
    "haar_orthogonal",
    "harmonic_like",
    "identity_map",
    "kantorovich_constant",
    "loewner_leq",
    "loewner_ratio",
    "make_spd",
    "matrix_function",
    "maximize_ratio",
    "operator_norm",
    "pinching_map",
    "refinement_constants",
    "refinement_factor",
    "regime_feasible",
    "regime_window",
    "render_csv",
    "render_json",
    "require_feasible",
    "run_campaign",
    "sample_congruence_family",
    "sample_orthogonal_isometries",
    "sample_orthonormal_pair",
    "sample_relative_pair",
    "sample_sandwich_pair",
    "sample_self_inverse",
    "sample_shifted_pair",
    "sample_spd",
    "sample_unit_vector",
    "scalar_leq",
    "scalar_refined_amgm",
    "spectral_bounds",
    "spectral_norm",
    "symmetrize",
    "trace_normalize_map",
]
