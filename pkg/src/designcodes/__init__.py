"""Codes from designs over finite geometries and their majority-logic decoders."""

from .codes import (
    BinaryCode,
    RankReport,
    bch_bound,
    binary_rank_formula,
    build_code,
    distance_bounds,
    hamada_rank,
    incidence_matrix,
    min_distance_bruteforce,
)
from .decoders import (
    CapabilityReport,
    DecodeOutcome,
    OneStepDecoder,
    TwoStepDecoder,
    ell_bounds,
    ell_one_step,
    ell_one_step_3design,
    measure_decoding_radius,
    simulate,
    two_step_capability,
)
from .designs import (
    CombinatorialDesign,
    DesignParams,
    SubspaceDesign,
    affine_version,
    derive_params_comb,
    derive_params_q,
    flats_construction,
    load_comb_design,
    load_subspace_design,
    projective_version,
    save_comb_design,
    save_subspace_design,
    trivial_design,
    verify_comb_design,
    verify_subspace_design,
)
from .field import FieldCtx, PrimeMatrix, matrix_rank
from .pspace import (
    Subspace,
    enumerate_points,
    enumerate_subspaces,
    gaussian_coefficient,
    points_of_subspace,
    subspace_contains,
    superspaces,
)
from .tables import RowReport, TableRowSpec, table_row

__version__ = "0.1.0"

__all__ = [
    "BinaryCode",
    "CapabilityReport",
    "CombinatorialDesign",
    "DecodeOutcome",
    "DesignParams",
    "FieldCtx",
    "OneStepDecoder",
    "PrimeMatrix",
    "RankReport",
    "RowReport",
    "Subspace",
    "SubspaceDesign",
    "TableRowSpec",
    "TwoStepDecoder",
    "affine_version",
    "bch_bound",
    "binary_rank_formula",
    "build_code",
    "derive_params_comb",
    "derive_params_q",
    "distance_bounds",
    "ell_bounds",
    "ell_one_step",
    "ell_one_step_3design",
    "enumerate_points",
    "enumerate_subspaces",
    "flats_construction",
    "gaussian_coefficient",
    "hamada_rank",
    "incidence_matrix",
    "load_comb_design",
    "load_subspace_design",
    "matrix_rank",
    "measure_decoding_radius",
    "min_distance_bruteforce",
    "points_of_subspace",
    "projective_version",
    "save_comb_design",
    "save_subspace_design",
    "simulate",
    "subspace_contains",
    "superspaces",
    "table_row",
    "trivial_design",
    "two_step_capability",
    "verify_comb_design",
    "verify_subspace_design",
    "__version__",
]
