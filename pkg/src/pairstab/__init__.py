"""Exact-arithmetic stability calculator for framed pairs and coherent systems."""

from .polynomial import (
    EventualOrdering,
    RatPoly,
    bracket_plus_pow,
    cmp_eventual,
    mu_hat,
    rank_of,
)
from .pair_model import (
    PairModel,
    QuotientRecord,
    SubobjectRecord,
    pair_model_from_json,
    pair_model_to_json,
    quotient_of,
    validate,
)
from .stability import (
    GradedObject,
    LatticeError,
    Status,
    Verdict,
    Witness,
    check_semistable,
    check_semistable_quotient_form,
    jordan_holder,
    jordan_holder_multisets,
    large_delta_check,
    purity_violations,
    s_equivalent,
)
from .bounds import (
    AmbientConstants,
    SectionCriteria,
    bound_C,
    check_section_criteria,
    mu_from_muhat,
    simpson_h0_bound,
)
from .git import (
    GitPointModel,
    SubspaceRecord,
    WeightVector,
    decompose_weight_vector,
    eqconstr3_check,
    git_check_subspace,
    git_pairing,
    git_verdict,
    hm_weight_framing,
    hm_weight_quot,
    linearization_ratio,
    special_gamma,
    subspace_weight_vector,
    verify_ratio_substitution,
)
from .walls import (
    ChamberConsistencyError,
    ChamberReport,
    DeltaRay,
    Wall,
    WallKind,
    chamber_report,
    delta_max_on_ray,
    sampling_check,
    wall_ts,
)
from .systems import (
    SystemModel,
    SystemRecord,
    check_system_semistable,
    git_system_check,
    product_weight,
    schmitt_special_vectors,
    special_vector_pairing,
    system_to_pair,
    system_walls,
)

__version__ = "0.1.0"

__all__ = [
    "AmbientConstants",
    "ChamberConsistencyError",
    "ChamberReport",
    "DeltaRay",
    "EventualOrdering",
    "GitPointModel",
    "GradedObject",
    "LatticeError",
    "PairModel",
    "QuotientRecord",
    "RatPoly",
    "SectionCriteria",
    "Status",
    "SubobjectRecord",
    "SubspaceRecord",
    "SystemModel",
    "SystemRecord",
    "Verdict",
    "Wall",
    "WallKind",
    "WeightVector",
    "Witness",
    "bound_C",
    "bracket_plus_pow",
    "chamber_report",
    "check_section_criteria",
    "check_semistable",
    "check_semistable_quotient_form",
    "check_system_semistable",
    "cmp_eventual",
    "decompose_weight_vector",
    "delta_max_on_ray",
    "eqconstr3_check",
    "git_check_subspace",
    "git_pairing",
    "git_system_check",
    "git_verdict",
    "hm_weight_framing",
    "hm_weight_quot",
    "jordan_holder",
    "jordan_holder_multisets",
    "large_delta_check",
    "linearization_ratio",
    "mu_from_muhat",
    "mu_hat",
    "pair_model_from_json",
    "pair_model_to_json",
    "product_weight",
    "purity_violations",
    "quotient_of",
    "rank_of",
    "s_equivalent",
    "sampling_check",
    "schmitt_special_vectors",
    "simpson_h0_bound",
    "special_gamma",
    "special_vector_pairing",
    "subspace_weight_vector",
    "system_to_pair",
    "system_walls",
    "validate",
    "verify_ratio_substitution",
    "wall_ts",
]
