"""Chebyshev centers, Hausdorff and bottleneck metrics for point clouds,
and seeded certification campaigns for the center map's stability bounds.

The hot distance and matching kernels run in a compiled extension when it
is available and fall back to numpy otherwise; `backend_name()` reports
which one is active.
"""

from . import _kernels
from .chebyshev import (
    ChebResultBall,
    ChebResultBox,
    cheb_l2,
    cheb_linf,
    cheb_numeric_oracle,
    cheb_radius_linf,
    enclosing_balls_disjoint,
)
from .geometry import (
    NORMS,
    AxisBox,
    BallSpec,
    PointCloud,
    as_vector,
    box_dist_linf,
    diameter,
    dist,
    farthest_dist,
    midpoint,
    pairwise_dist,
    point_to_set_dist,
)
from .metrics import (
    Correspondence,
    box_directed_hausdorff_linf,
    box_hausdorff_linf,
    directed_hausdorff,
    hausdorff,
    hausdorff_via_correspondence,
    nnet_dist,
    nnet_dist_bruteforce,
)
from .policy import CERT_TOL, DEFAULT_SEED, EXACT_TOL
from .verify import (
    CHECKS,
    CampaignConfig,
    CheckReport,
    check_alpha_le_alphahat,
    check_corollary,
    check_lemma0,
    check_lemma1_stability,
    check_lemma2,
    check_radius_lipschitz,
    check_theorem2,
    gen_cloud,
    gen_perturbation,
    run_check,
    tightness_search,
)

__version__ = "0.1.0"


def backend_name() -> str:
    """Which kernel backend is active: "native" (compiled) or "pure"."""
    return _kernels.BACKEND


__all__ = [
    "AxisBox",
    "BallSpec",
    "CampaignConfig",
    "CheckReport",
    "ChebResultBall",
    "ChebResultBox",
    "CHECKS",
    "Correspondence",
    "CERT_TOL",
    "DEFAULT_SEED",
    "EXACT_TOL",
    "NORMS",
    "PointCloud",
    "as_vector",
    "backend_name",
    "box_directed_hausdorff_linf",
    "box_dist_linf",
    "box_hausdorff_linf",
    "cheb_l2",
    "cheb_linf",
    "cheb_numeric_oracle",
    "cheb_radius_linf",
    "check_alpha_le_alphahat",
    "check_corollary",
    "check_lemma0",
    "check_lemma1_stability",
    "check_lemma2",
    "check_radius_lipschitz",
    "check_theorem2",
    "diameter",
    "directed_hausdorff",
    "dist",
    "enclosing_balls_disjoint",
    "farthest_dist",
    "gen_cloud",
    "gen_perturbation",
    "hausdorff",
    "hausdorff_via_correspondence",
    "midpoint",
    "nnet_dist",
    "nnet_dist_bruteforce",
    "pairwise_dist",
    "point_to_set_dist",
    "run_check",
    "tightness_search",
]
