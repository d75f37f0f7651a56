"""Ambient-space primitives: vectors, norms, point clouds and axis boxes.

Two ambient spaces are supported, selected by a norm tag: ``"linf"`` (R^n
with the max norm) and ``"l2"`` (Euclidean R^n).  Point clouds are finite
nonempty multisets of points; duplicates are kept, never collapsed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels

NORMS = ("linf", "l2")

_NORM_CODES = {"linf": _kernels.LINF, "l2": _kernels.L2}


def norm_code(norm: str) -> int:
    try:
        return _NORM_CODES[norm]
    except KeyError:
        raise ValueError(f"unknown norm {norm!r}; expected one of {NORMS}") from None


def as_vector(x) -> np.ndarray:
    """Coerce to a finite 1-D float64 array of dimension >= 1."""
    v = np.ascontiguousarray(x, dtype=np.float64)
    if v.ndim != 1 or v.shape[0] < 1:
        raise ValueError(f"expected a 1-D point, got shape {v.shape}")
    if not np.isfinite(v).all():
        raise ValueError("point has non-finite coordinates")
    return v


@dataclass(frozen=True, eq=False)
class PointCloud:
    """Finite nonempty multiset of points of a common dimension."""

    points: np.ndarray

    def __post_init__(self):
        pts = np.ascontiguousarray(self.points, dtype=np.float64)
        if pts.ndim != 2:
            raise ValueError(f"expected an (n, dim) array of points, got shape {pts.shape}")
        if pts.shape[0] < 1 or pts.shape[1] < 1:
            raise ValueError("point cloud needs at least one point of dimension >= 1")
        if not np.isfinite(pts).all():
            raise ValueError("point cloud has non-finite coordinates")
        object.__setattr__(self, "points", pts)

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    def __len__(self) -> int:
        return self.points.shape[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PointCloud):
            return NotImplemented
        return self.points.shape == other.points.shape and bool(
            (self.points == other.points).all()
        )

    def translated(self, offset) -> "PointCloud":
        return PointCloud(self.points + as_vector(offset)[None, :])


@dataclass(frozen=True, eq=False)
class AxisBox:
    """Closed axis-aligned box, possibly degenerate in some coordinates."""

    lo: np.ndarray
    hi: np.ndarray

    def __post_init__(self):
        lo = as_vector(self.lo)
        hi = as_vector(self.hi)
        if lo.shape != hi.shape:
            raise ValueError("box endpoint arrays differ in dimension")
        if (lo > hi).any():
            raise ValueError("box has lo > hi in some coordinate")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def dim(self) -> int:
        return self.lo.shape[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, AxisBox):
            return NotImplemented
        return (
            self.dim == other.dim
            and bool((self.lo == other.lo).all())
            and bool((self.hi == other.hi).all())
        )

    def contains(self, x, tol: float = 0.0) -> bool:
        v = as_vector(x)
        _check_dim(v.shape[0], self.dim)
        return bool(((v >= self.lo - tol) & (v <= self.hi + tol)).all())


@dataclass(frozen=True)
class BallSpec:
    """Closed ball: center, radius and the norm it lives under."""

    center: np.ndarray
    radius: float
    norm: str = "l2"

    def __post_init__(self):
        object.__setattr__(self, "center", as_vector(self.center))
        norm_code(self.norm)
        if not (self.radius >= 0.0 and np.isfinite(self.radius)):
            raise ValueError("ball radius must be finite and nonnegative")


def _check_dim(got: int, want: int):
    if got != want:
        raise ValueError(f"dimension mismatch: {got} != {want}")


def dist(x, y, norm: str = "linf") -> float:
    """Distance between two points under the given norm."""
    xv, yv = as_vector(x), as_vector(y)
    _check_dim(yv.shape[0], xv.shape[0])
    return _kernels.impl.dist(xv, yv, norm_code(norm))


def point_to_set_dist(x, cloud: PointCloud, norm: str = "linf") -> float:
    """Distance from a point to the nearest point of a cloud."""
    xv = as_vector(x)
    _check_dim(cloud.dim, xv.shape[0])
    return _kernels.impl.point_to_set(xv, cloud.points, norm_code(norm))


def farthest_dist(cloud: PointCloud, x, norm: str = "linf") -> float:
    """Distance from a point to the farthest point of a cloud.

    This is the minimax objective: its infimum over probe points is the
    Chebyshev radius of the cloud.
    """
    xv = as_vector(x)
    _check_dim(cloud.dim, xv.shape[0])
    return _kernels.impl.farthest(cloud.points, xv, norm_code(norm))


def diameter(cloud: PointCloud, norm: str = "linf") -> float:
    """Largest pairwise distance; 0 for singletons."""
    return _kernels.impl.diameter(cloud.points, norm_code(norm))


def midpoint(x, y) -> np.ndarray:
    """Euclidean midpoint (x + y) / 2.

    Only meaningful as *the* middle point in the Euclidean space; under the
    max norm the set of middle points is generally not a singleton.
    """
    xv, yv = as_vector(x), as_vector(y)
    _check_dim(yv.shape[0], xv.shape[0])
    return (xv + yv) / 2.0


def box_dist_linf(x, box: AxisBox) -> float:
    """Max-norm distance from a point to a closed axis box (0 inside)."""
    xv = as_vector(x)
    _check_dim(xv.shape[0], box.dim)
    excess = np.maximum(box.lo - xv, xv - box.hi)
    return float(np.maximum(excess, 0.0).max())


def pairwise_dist(a: PointCloud, b: PointCloud, norm: str = "linf") -> np.ndarray:
    """Full |a| x |b| distance matrix."""
    _check_dim(b.dim, a.dim)
    return np.asarray(_kernels.impl.pairwise(a.points, b.points, norm_code(norm)))
