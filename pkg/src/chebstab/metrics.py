"""Set metrics on point clouds and axis boxes.

Three metrics live here: the Hausdorff distance between clouds, its closed
form between axis boxes under the max norm, and the bottleneck distance
between equal-size clouds (the best-bijection minimax matching).  A
correspondence-based reformulation of the Hausdorff distance rounds out the
module; it must agree with the sup-inf definition on every finite pair.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .geometry import AxisBox, PointCloud, _check_dim, norm_code, pairwise_dist

BRUTE_FORCE_LIMIT = 8


def directed_hausdorff(m: PointCloud, w: PointCloud, norm: str = "linf") -> float:
    """One-sided Hausdorff: sup over m of the distance to the nearest point of w."""
    _check_dim(w.dim, m.dim)
    return _kernels.impl.directed_hausdorff(m.points, w.points, norm_code(norm))


def hausdorff(m: PointCloud, w: PointCloud, norm: str = "linf") -> float:
    """Hausdorff distance: max of the two directed suprema."""
    _check_dim(w.dim, m.dim)
    return _kernels.impl.hausdorff(m.points, w.points, norm_code(norm))


def box_hausdorff_linf(a: AxisBox, b: AxisBox) -> float:
    """Hausdorff distance between two axis boxes under the max norm.

    Reduces per coordinate: for closed intervals the Hausdorff distance is
    max(|lo difference|, |hi difference|), and the boxes' value is the worst
    coordinate.  Agrees with dense-grid sampling of the sup-inf definition.
    """
    _check_dim(b.dim, a.dim)
    lo_gap = np.abs(a.lo - b.lo)
    hi_gap = np.abs(a.hi - b.hi)
    return float(np.maximum(lo_gap, hi_gap).max())


def box_directed_hausdorff_linf(a: AxisBox, b: AxisBox) -> float:
    """One-sided box Hausdorff: sup over points of `a` of the distance to `b`.

    Per coordinate the supremum over an interval of the clamp distance to
    another interval is attained at an endpoint.
    """
    _check_dim(b.dim, a.dim)
    lo_excess = np.maximum(np.maximum(b.lo - a.lo, a.lo - b.hi), 0.0)
    hi_excess = np.maximum(np.maximum(b.lo - a.hi, a.hi - b.hi), 0.0)
    return float(np.maximum(lo_excess, hi_excess).max())


def _check_equal_sizes(m: PointCloud, w: PointCloud):
    if len(m) != len(w):
        raise ValueError(f"bottleneck distance needs equal sizes, got {len(m)} and {len(w)}")


def nnet_dist(m: PointCloud, w: PointCloud, norm: str = "linf") -> float:
    """Bottleneck distance between equal-size clouds.

    Minimum over all bijections of the largest matched pairwise distance,
    computed exactly by binary search over the sorted pairwise distances with
    a perfect-matching feasibility test at each threshold.  The result is
    always one of the pairwise distances; ties resolve to the smallest
    feasible candidate.
    """
    _check_dim(w.dim, m.dim)
    _check_equal_sizes(m, w)
    return _kernels.impl.bottleneck(m.points, w.points, norm_code(norm))


def nnet_dist_bruteforce(m: PointCloud, w: PointCloud, norm: str = "linf") -> float:
    """Bottleneck distance by enumerating all bijections; the oracle route.

    Refuses clouds larger than BRUTE_FORCE_LIMIT points (factorial blowup).
    """
    _check_dim(w.dim, m.dim)
    _check_equal_sizes(m, w)
    n = len(m)
    if n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute-force oracle limited to {BRUTE_FORCE_LIMIT} points, got {n}")
    dmat = pairwise_dist(m, w, norm)
    rows = range(n)
    return min(max(dmat[i, sigma[i]] for i in rows) for sigma in itertools.permutations(rows))


@dataclass(frozen=True)
class Correspondence:
    """Relation between index sets that covers both sides completely."""

    pairs: tuple[tuple[int, int], ...]
    n_left: int
    n_right: int

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple((int(i), int(j)) for i, j in self.pairs))
        left = {i for i, _ in self.pairs}
        right = {j for _, j in self.pairs}
        if not all(0 <= i < self.n_left for i in left) or not all(
            0 <= j < self.n_right for j in right
        ):
            raise ValueError("correspondence pair index out of range")
        if left != set(range(self.n_left)) or right != set(range(self.n_right)):
            raise ValueError("correspondence must project fully onto both index sets")

    def max_pair_dist(self, m: PointCloud, w: PointCloud, norm: str = "linf") -> float:
        dmat = pairwise_dist(m, w, norm)
        return max(float(dmat[i, j]) for i, j in self.pairs)


def nearest_neighbor_correspondence(
    m: PointCloud, w: PointCloud, norm: str = "linf"
) -> Correspondence:
    """Pair every point with its nearest counterpart, in both directions."""
    dmat = pairwise_dist(m, w, norm)
    pairs = {(i, int(j)) for i, j in enumerate(dmat.argmin(axis=1))}
    pairs.update((int(i), j) for j, i in enumerate(dmat.argmin(axis=0)))
    return Correspondence(tuple(sorted(pairs)), len(m), len(w))


def hausdorff_via_correspondence(m: PointCloud, w: PointCloud, norm: str = "linf") -> float:
    """Hausdorff distance as the cheapest full correspondence.

    Minimum over all full-projection correspondences of the largest paired
    distance.  The nearest-neighbor correspondence attains the minimum, so it
    is built explicitly and evaluated; equality with `hausdorff` holds on
    every finite pair.
    """
    _check_dim(w.dim, m.dim)
    corr = nearest_neighbor_correspondence(m, w, norm)
    return corr.max_pair_dist(m, w, norm)
