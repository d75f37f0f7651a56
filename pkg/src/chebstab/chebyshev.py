"""Chebyshev radius and Chebyshev-center computation.

Under the max norm the set of Chebyshev centers of a finite cloud is an
axis-aligned box with a closed form: the radius is half the widest
coordinate span and the box interval at coordinate j is
[max_j - R, min_j + R].  Under the Euclidean norm the center is unique, the
center of the minimum enclosing ball, computed exactly by randomized
incremental support construction.  A norm-agnostic numerical minimizer of
the farthest-point objective serves as the independent oracle for both.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import AxisBox, PointCloud, dist, farthest_dist, norm_code
from .policy import DEFAULT_SEED, ORACLE_STOP

MAX_ORACLE_ROUNDS = 400
_GOLDEN = (np.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class ChebResultBox:
    """Chebyshev radius and the full center set (a box) under the max norm."""

    radius: float
    center_set: AxisBox


@dataclass(frozen=True)
class ChebResultBall:
    """Euclidean Chebyshev radius and its unique center."""

    radius: float
    center: np.ndarray


def cheb_linf(cloud: PointCloud) -> ChebResultBox:
    """Exact Chebyshev radius and center box under the max norm."""
    pts = cloud.points
    lo = pts.min(axis=0)
    hi = pts.max(axis=0)
    radius = float(((hi - lo) / 2.0).max())
    a = hi - radius
    b = lo + radius
    # a <= b in exact arithmetic; floating point may flip a binding
    # coordinate by one ulp, so order the endpoints defensively.
    box = AxisBox(np.minimum(a, b), np.maximum(a, b))
    return ChebResultBox(radius=radius, center_set=box)


def cheb_radius_linf(cloud: PointCloud) -> float:
    """Half the widest coordinate span."""
    return cheb_linf(cloud).radius


# --- minimum enclosing ball (Euclidean) ----------------------------------


def _ball_of_boundary(pts: np.ndarray, idx: tuple[int, ...]):
    """Smallest sphere through the given points, center in their affine hull.

    Returns (center, squared radius); the empty boundary yields a sentinel
    ball containing nothing.  Near-degenerate boundaries (affinely dependent
    points) fall back to a least-squares center.
    """
    d = pts.shape[1]
    if not idx:
        return np.zeros(d), -1.0
    base = pts[idx[0]]
    if len(idx) == 1:
        return base.copy(), 0.0
    u = pts[list(idx[1:])] - base
    gram = 2.0 * (u @ u.T)
    rhs = (u * u).sum(axis=1)
    try:
        t = np.linalg.solve(gram, rhs)
    except np.linalg.LinAlgError:
        t = np.linalg.lstsq(gram, rhs, rcond=None)[0]
    offset = t @ u
    return base + offset, float(offset @ offset)


def _contains(center: np.ndarray, r2: float, p: np.ndarray) -> bool:
    if r2 < 0.0:
        return False
    gap = p - center
    return float(gap @ gap) <= r2 * (1.0 + 1e-13) + 1e-30


def cheb_l2(cloud: PointCloud, seed: int = DEFAULT_SEED) -> ChebResultBall:
    """Minimum enclosing ball by randomized incremental support construction.

    Move-to-front variant: the point order is shuffled once with the given
    seed, violators are promoted to the front, and the recursion rebuilds
    the ball of a prefix with the violator forced onto the boundary.  The
    computation is deterministic per seed; the ball itself does not depend
    on the seed beyond roundoff.  The radius is re-measured from the final
    center so the containment invariant holds exactly as reported.
    """
    pts = cloud.points
    n, d = pts.shape
    order = np.random.default_rng(seed).permutation(n)

    def worst_violator(center, r2, start, end):
        # Pivot rule: recurse on the farthest violator, which homes in on
        # the true support set far faster than first-violator order.
        gap = pts[order[start:end]] - center
        d2 = (gap * gap).sum(axis=1)
        j = int(np.argmax(d2))
        if d2[j] <= r2 * (1.0 + 1e-13) + 1e-30:
            return -1
        return start + j

    def solve(end, boundary):
        center, r2 = _ball_of_boundary(pts, boundary)
        if len(boundary) == d + 1:
            return center, r2
        i = 0
        while i < end:
            j = worst_violator(center, r2, i, end) if r2 >= 0.0 else i
            if j < 0:
                break
            p = int(order[j])
            # Swap the pivot into the scan position: the recursion prefix
            # must contain only points already certified inside, or forcing
            # the pivot onto the boundary is unsound.
            order[j] = order[i]
            order[i] = p
            center, r2 = solve(i, boundary + (p,))
            order[1 : i + 1] = order[:i]  # move-to-front
            order[0] = p
            i += 1
        return center, r2

    center, _ = solve(n, ())
    radius = farthest_dist(cloud, center, "l2")
    return ChebResultBall(radius=radius, center=center)


def balls_disjoint(bm: ChebResultBall, bw: ChebResultBall) -> bool:
    """Whether two open balls are disjoint.

    Open balls make tangency count as disjoint; equality is accepted within
    1e-12 to keep the predicate stable under roundoff.
    """
    gap = dist(bm.center, bw.center, "l2") - (bm.radius + bw.radius)
    return gap > -1e-12


def enclosing_balls_disjoint(m: PointCloud, w: PointCloud) -> bool:
    """Whether the clouds' open minimum enclosing balls are disjoint."""
    return balls_disjoint(cheb_l2(m), cheb_l2(w))


# --- numeric oracle -------------------------------------------------------


def _golden_min(fun, lo: float, hi: float, tol: float) -> float:
    """Argmin of a convex function on [lo, hi] by golden-section search."""
    a, b = lo, hi
    x1 = b - _GOLDEN * (b - a)
    x2 = a + _GOLDEN * (b - a)
    f1, f2 = fun(x1), fun(x2)
    while b - a > tol:
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _GOLDEN * (b - a)
            f1 = fun(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _GOLDEN * (b - a)
            f2 = fun(x2)
    return (a + b) / 2.0


def _affine_min_norm(us: np.ndarray) -> np.ndarray:
    """Weights (summing to 1, free sign) minimizing ||weights @ us||."""
    k = us.shape[0]
    kkt = np.zeros((k + 1, k + 1))
    kkt[:k, :k] = 2.0 * (us @ us.T)
    kkt[:k, k] = 1.0
    kkt[k, :k] = 1.0
    rhs = np.zeros(k + 1)
    rhs[k] = 1.0
    try:
        sol = np.linalg.solve(kkt, rhs)
    except np.linalg.LinAlgError:
        sol = np.linalg.lstsq(kkt, rhs, rcond=None)[0]
    weights = sol[:k]
    total = weights.sum()
    if total > 0.0 and abs(total - 1.0) > 1e-12:
        weights = weights / total
    return weights


def _min_norm_point(u: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Min-norm point of the convex hull of the rows of u (Wolfe's method).

    Alternates adding the most improving vertex to a support set with
    affine-minimization minor cycles that drop vertices whose weight would
    go negative.  Returns (point, weights over all rows).
    """
    m = u.shape[0]
    norms2 = (u * u).sum(axis=1)
    support = [int(np.argmin(norms2))]
    w = np.array([1.0])
    g = u[support[0]].copy()
    for _ in range(8 * m + 32):
        gg = float(g @ g)
        dots = u @ g
        j_new = int(np.argmin(dots))
        if dots[j_new] > gg - 1e-13 * max(1.0, gg) - 1e-30 or j_new in support:
            break
        support.append(j_new)
        w = np.append(w, 0.0)
        for _minor in range(len(support) + 4):
            aff = _affine_min_norm(u[support])
            if (aff >= -1e-14).all():
                w = np.maximum(aff, 0.0)
                break
            moving = w - aff
            blocking = (aff < 0.0) & (moving > 0.0)
            theta = float((w[blocking] / moving[blocking]).min())
            w = (1.0 - theta) * w + theta * aff
            w[w < 1e-14] = 0.0
            keep = w > 0.0
            if keep.all():
                keep[int(np.argmin(aff))] = False
            support = [s for s, k in zip(support, keep) if k]
            w = w[keep]
            w = w / w.sum()
        g = w @ u[support]
    weights = np.zeros(m)
    weights[support] = w
    return g, weights


def _exact_line_min(intercepts: np.ndarray, slopes: np.ndarray, t_hi: float) -> float:
    """Argmin over [0, t_hi] of t^2 + max_i(intercepts_i + slopes_i t).

    The max of lines is assembled as an upper envelope (sort by slope, stack
    pass); the minimizer is a kink, a per-segment parabola vertex, or an
    endpoint, so evaluating the true objective at those candidates is exact.
    """
    order = np.lexsort((intercepts, slopes))
    s_sorted = slopes[order]
    b_sorted = intercepts[order]
    keep = np.ones(len(order), dtype=bool)
    keep[:-1] = s_sorted[1:] != s_sorted[:-1]
    s_sorted = s_sorted[keep]
    b_sorted = b_sorted[keep]
    hull_s: list[float] = []
    hull_b: list[float] = []
    hull_t: list[float] = []  # where each hull line starts to dominate
    for s, b in zip(s_sorted, b_sorted):
        start = -np.inf
        while hull_s:
            start = (hull_b[-1] - b) / (s - hull_s[-1])
            if start <= hull_t[-1]:
                hull_s.pop(), hull_b.pop(), hull_t.pop()
            else:
                break
        hull_t.append(start if hull_s else -np.inf)
        hull_s.append(s)
        hull_b.append(b)
    candidates = [0.0, t_hi]
    for i in range(len(hull_s)):
        seg_lo = max(hull_t[i], 0.0)
        seg_hi = hull_t[i + 1] if i + 1 < len(hull_s) else t_hi
        seg_hi = min(seg_hi, t_hi)
        if seg_lo > t_hi or seg_hi < seg_lo:
            continue
        candidates.append(seg_lo)
        candidates.append(min(max(-hull_s[i] / 2.0, seg_lo), seg_hi))
    ts = np.asarray(candidates)
    values = ts * ts + (intercepts[None, :] + np.outer(ts, slopes)).max(axis=1)
    return float(ts[int(np.argmin(values))])


def _oracle_linf(pts: np.ndarray) -> tuple[float, np.ndarray]:
    lo = pts.min(axis=0)
    hi = pts.max(axis=0)
    c = (lo + hi) / 2.0
    span = float((hi - lo).max())
    tol = max(1e-12, 1e-12 * span)

    def objective() -> float:
        return float(np.abs(pts - c).max(axis=1).max())

    best = objective()
    for _ in range(MAX_ORACLE_ROUNDS):
        prev = best
        for j in range(pts.shape[1]):

            def along(t: float, j=j) -> float:
                old = c[j]
                c[j] = t
                try:
                    return objective()
                finally:
                    c[j] = old

            c[j] = _golden_min(along, float(lo[j]), float(hi[j]), tol)
        best = objective()
        if prev - best < ORACLE_STOP:
            break
    return best, c


def _oracle_l2(pts: np.ndarray) -> tuple[float, np.ndarray]:
    """Steepest descent on the farthest-point objective.

    The descent direction is the negated min-norm point of the convex hull
    of the unit gradients of the near-active pieces (the active band scales
    with the current optimality gap); the step is an exact line minimization.
    The weights of the min-norm solve double as a dual certificate: for any
    simplex weights w over the points, sqrt(sum w |x|^2 - |sum w x|^2) is a
    lower bound on the radius, so the loop can stop certified.
    """
    lo = pts.min(axis=0)
    hi = pts.max(axis=0)
    c = (lo + hi) / 2.0

    def objective(point: np.ndarray) -> float:
        gap = pts - point[None, :]
        return float(np.sqrt((gap * gap).sum(axis=1)).max())

    f = objective(c)
    if f <= 0.0:
        return f, c
    point_norms2 = (pts * pts).sum(axis=1)
    best_lower = 0.0
    stall_rounds = 0
    for _ in range(MAX_ORACLE_ROUNDS):
        gap = c[None, :] - pts
        dists = np.sqrt((gap * gap).sum(axis=1))
        f = float(dists.max())
        if f <= 0.0 or f - best_lower <= 1e-9 * max(1.0, f):
            break
        band = max(1e-12 * f, min(0.1 * f, 0.5 * (f - best_lower)))
        band = min(band * 8.0**stall_rounds, f)
        # A vanishing hull point over a wide band only certifies optimality
        # at that band's resolution; shrink until a usable direction appears.
        while True:
            active = np.nonzero(dists >= f - band)[0]
            grads = gap[active] / dists[active, None]
            g, weights = _min_norm_point(grads)
            centroid = weights @ pts[active]
            lower2 = float(weights @ point_norms2[active]) - float(centroid @ centroid)
            best_lower = max(best_lower, float(np.sqrt(max(lower2, 0.0))))
            gn = float(np.sqrt(g @ g))
            if gn > 1e-7 or band <= 1e-12 * f or f - best_lower <= 1e-9 * max(1.0, f):
                break
            band /= 8.0
        if f - best_lower <= 1e-9 * max(1.0, f) or gn <= 1e-12:
            break
        direction = -g / gn
        slopes = 2.0 * (gap @ direction)
        t_best = _exact_line_min(dists * dists, slopes, 2.0 * f)
        f_new = objective(c + t_best * direction)
        if f - f_new < ORACLE_STOP:
            # Likely zigzag from an overly narrow active band; widen and retry.
            stall_rounds += 1
            if stall_rounds >= 4:
                break
            continue
        stall_rounds = 0
        c = c + t_best * direction
    return objective(c), c


def cheb_numeric_oracle(cloud: PointCloud, norm: str = "linf") -> tuple[float, np.ndarray]:
    """Numerically minimize the farthest-point objective; the oracle route.

    Starts from the midpoint of the coordinate bounding box and iterates
    (coordinate descent under the max norm, steepest descent over the active
    gradients under the Euclidean norm) until the objective change drops
    below 1e-10.  Returns (objective value, minimizing point); the value
    must agree with the exact radius routines to 1e-6.
    """
    norm_code(norm)
    pts = cloud.points.copy()
    if norm == "linf":
        return _oracle_linf(pts)
    return _oracle_l2(pts)
