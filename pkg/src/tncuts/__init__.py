"""Cut-based rank invariants of tree tensor-network models.

Minimal monochromatic cuts, generic flattening-rank predictions,
train-track versus balanced-tree bond growth, model-inclusion bounds, and
an exact prime-field rank oracle that cross-checks every prediction.
"""

from .cuts import (
    CutResult,
    ProductCut,
    brute_force_min_mono,
    max_colour_cut,
    min_mono_cut,
    min_product_cut,
    verify_colour_cut,
    verify_mono_cut,
)
from .fieldmath import active_backend, compiled_available, rank_mod
from .hackbusch import (
    ExponentResult,
    LandmarkMismatchError,
    PermScanResult,
    Verdict,
    a_seq,
    hackbusch_verdict,
    landmark_index,
    min_exponent_over_permutations,
    tt_exponent,
)
from .models import (
    ComparisonReport,
    EdgeCheck,
    RankPrediction,
    TnsModel,
    compare_models,
    construct_hard_subset,
    load_model,
    model_from_json_dict,
    optimalize,
    predict_rank,
)
from .oracle import (
    DEFAULT_PRIME,
    SIZE_CAP,
    DenseTensor,
    SizeCapError,
    check_membership,
    estimate_generic_rank,
    flattening_rank,
    kron,
    sample_tns_tensor,
)
from .rng import CounterRng, derive_seed
from .trees import (
    EdgeId,
    Tree,
    TreeParseError,
    all_binary_trees,
    build_almost_perfect_binary,
    build_train_track,
    complement,
    parse_tree,
    random_binary_tree,
    relabel,
    tree_shapes,
)

__version__ = "0.1.0"

__all__ = [
    "CounterRng",
    "ComparisonReport",
    "CutResult",
    "DenseTensor",
    "DEFAULT_PRIME",
    "EdgeCheck",
    "EdgeId",
    "ExponentResult",
    "LandmarkMismatchError",
    "PermScanResult",
    "ProductCut",
    "RankPrediction",
    "SIZE_CAP",
    "SizeCapError",
    "TnsModel",
    "Tree",
    "TreeParseError",
    "Verdict",
    "a_seq",
    "active_backend",
    "all_binary_trees",
    "brute_force_min_mono",
    "build_almost_perfect_binary",
    "build_train_track",
    "check_membership",
    "compare_models",
    "compiled_available",
    "complement",
    "construct_hard_subset",
    "derive_seed",
    "estimate_generic_rank",
    "flattening_rank",
    "hackbusch_verdict",
    "kron",
    "landmark_index",
    "load_model",
    "max_colour_cut",
    "min_exponent_over_permutations",
    "min_mono_cut",
    "min_product_cut",
    "model_from_json_dict",
    "optimalize",
    "parse_tree",
    "predict_rank",
    "random_binary_tree",
    "rank_mod",
    "relabel",
    "sample_tns_tensor",
    "tree_shapes",
    "tt_exponent",
    "verify_colour_cut",
    "verify_mono_cut",
]
