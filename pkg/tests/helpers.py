"""Independent reference implementations used as test oracles.

Everything here is deliberately naive (plain loops, enumeration, grids) and
shares no code with the package paths it checks.
"""

import itertools
import math

import numpy as np

from chebstab import AxisBox, PointCloud


def odist(x, y, norm):
    if norm == "linf":
        return max(abs(a - b) for a, b in zip(x, y))
    return math.sqrt(sum((a - b) ** 2 for a, b in zip(x, y)))


def opoint_to_set(x, cloud, norm):
    return min(odist(x, p, norm) for p in cloud)


def ofarthest(cloud, x, norm):
    return max(odist(p, x, norm) for p in cloud)


def odiameter(cloud, norm):
    if len(cloud) == 1:
        return 0.0
    return max(odist(p, q, norm) for p, q in itertools.combinations(cloud, 2))


def odirected_hausdorff(m, w, norm):
    return max(opoint_to_set(x, w, norm) for x in m)


def ohausdorff(m, w, norm):
    return max(odirected_hausdorff(m, w, norm), odirected_hausdorff(w, m, norm))


def obottleneck(m, w, norm):
    n = len(m)
    return min(
        max(odist(m[i], w[sigma[i]], norm) for i in range(n))
        for sigma in itertools.permutations(range(n))
    )


def all_correspondences(n_left, n_right):
    """Every relation between index sets with full projections both ways."""
    cells = list(itertools.product(range(n_left), range(n_right)))
    for size in range(max(n_left, n_right), len(cells) + 1):
        for combo in itertools.combinations(cells, size):
            if {i for i, _ in combo} == set(range(n_left)) and {j for _, j in combo} == set(
                range(n_right)
            ):
                yield combo


def ocorrespondence_hausdorff(m, w, norm):
    """Min over all full correspondences of the max paired distance."""
    best = math.inf
    for combo in all_correspondences(len(m), len(w)):
        value = max(odist(m[i], w[j], norm) for i, j in combo)
        best = min(best, value)
    return best


def box_grid(box: AxisBox, steps: int) -> np.ndarray:
    axes = [np.linspace(lo, hi, steps) for lo, hi in zip(box.lo, box.hi)]
    return np.array(list(itertools.product(*axes)))


def box_grid_pitch(box: AxisBox, steps: int) -> float:
    return float((box.hi - box.lo).max()) / (steps - 1)


def ogrid_box_hausdorff(a: AxisBox, b: AxisBox, steps: int = 21) -> float:
    """Hausdorff distance between boxes by sampling both on dense grids.

    Point-to-box distances are exact (coordinate clamping), so the sampled
    value is within one grid pitch of the true distance.
    """

    def clamp_dist(points, box):
        excess = np.maximum(np.maximum(box.lo - points, points - box.hi), 0.0)
        return excess.max(axis=1)

    ga, gb = box_grid(a, steps), box_grid(b, steps)
    return float(max(clamp_dist(ga, b).max(), clamp_dist(gb, a).max()))


def ogrid_cheb_radius_linf(cloud: PointCloud, steps: int = 41, refinements: int = 6):
    """Chebyshev radius under the max norm by iterated grid refinement."""
    pts = cloud.points
    lo = pts.min(axis=0).copy()
    hi = pts.max(axis=0).copy()
    best_val, best_at = math.inf, (lo + hi) / 2.0
    for _ in range(refinements):
        grid = box_grid(AxisBox(lo, hi), steps)
        vals = np.abs(pts[None, :, :] - grid[:, None, :]).max(axis=2).max(axis=1)
        k = int(np.argmin(vals))
        if vals[k] < best_val:
            best_val, best_at = float(vals[k]), grid[k]
        half = (hi - lo) / (steps - 1) * 2.0
        lo = best_at - half
        hi = best_at + half
    return best_val, best_at


def box_vertices(box: AxisBox):
    return [np.array(v) for v in itertools.product(*zip(box.lo, box.hi))]


def random_cloud(rng, dim, n, scale=10.0) -> PointCloud:
    return PointCloud(rng.uniform(-scale, scale, size=(n, dim)))
