import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from chebstab import (
    AxisBox,
    PointCloud,
    box_dist_linf,
    diameter,
    dist,
    farthest_dist,
    midpoint,
    point_to_set_dist,
)

from helpers import odiameter, odist, ofarthest, random_cloud

# Coordinates are 0 or of sane magnitude: squaring subnormal differences
# underflows, which breaks "distance zero iff equal" far below any scale
# this library certifies at.
coord = st.one_of(
    st.just(0.0),
    st.floats(min_value=1e-6, max_value=10.0),
    st.floats(min_value=-10.0, max_value=-1e-6),
)


def vectors(dim):
    return st.lists(coord, min_size=dim, max_size=dim).map(np.array)


dims = st.integers(min_value=1, max_value=6)


@st.composite
def vector_pairs(draw):
    d = draw(dims)
    return draw(vectors(d)), draw(vectors(d))


@st.composite
def vector_triples(draw):
    d = draw(dims)
    return draw(vectors(d)), draw(vectors(d)), draw(vectors(d))


class TestDist:
    def test_identity_case(self):
        assert dist((0, 0), (0, 0), "linf") == 0.0

    def test_345_triangle(self):
        assert dist((0, 0), (3, 4), "l2") == 5.0

    def test_hand_evaluated_max(self):
        assert dist((1, -2), (4, 0), "linf") == 3.0

    def test_unknown_norm(self):
        with pytest.raises(ValueError):
            dist((0,), (1,), "l1")

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            dist((0, 0), (1, 2, 3), "linf")

    @given(vector_triples())
    def test_metric_axioms(self, xyz):
        x, y, z = xyz
        for norm in ("linf", "l2"):
            dxy = dist(x, y, norm)
            assert dxy >= 0.0
            assert dxy == dist(y, x, norm)
            assert dist(x, x, norm) == 0.0
            if dxy == 0.0:
                assert np.array_equal(x, y)
            assert dxy <= dist(x, z, norm) + dist(z, y, norm) + 1e-12

    @given(vector_pairs())
    def test_matches_naive_formula(self, xy):
        x, y = xy
        assert dist(x, y, "linf") == odist(x, y, "linf")
        assert dist(x, y, "l2") == pytest.approx(odist(x, y, "l2"), abs=1e-12)


class TestPointToSet:
    def test_membership(self):
        assert point_to_set_dist((0, 0), PointCloud([[0, 0], [5, 5]]), "linf") == 0.0

    def test_min_over_two(self):
        assert point_to_set_dist((0, 0), PointCloud([[1, 1], [3, 0]]), "linf") == 1.0

    def test_singleton_reduces_to_dist(self):
        assert point_to_set_dist((0, 0), PointCloud([[3, 4]]), "l2") == 5.0

    def test_never_exceeds_farthest(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            cloud = random_cloud(rng, int(rng.integers(1, 5)), int(rng.integers(1, 12)))
            x = rng.uniform(-12, 12, cloud.dim)
            for norm in ("linf", "l2"):
                assert point_to_set_dist(x, cloud, norm) <= farthest_dist(cloud, x, norm)


class TestFarthest:
    def test_singleton(self):
        assert farthest_dist(PointCloud([[0, 0]]), (0, 0), "linf") == 0.0

    def test_between_two(self):
        assert farthest_dist(PointCloud([[0, 0], [0, 2]]), (0, 1), "linf") == 1.0

    def test_euclidean(self):
        assert farthest_dist(PointCloud([[0, 0], [4, 0]]), (0, 0), "l2") == 4.0

    def test_against_oracle(self):
        rng = np.random.default_rng(4)
        for _ in range(50):
            cloud = random_cloud(rng, 3, 7)
            x = rng.uniform(-12, 12, 3)
            assert farthest_dist(cloud, x, "linf") == ofarthest(cloud.points, x, "linf")
            assert farthest_dist(cloud, x, "l2") == pytest.approx(
                ofarthest(cloud.points, x, "l2"), abs=1e-12
            )


class TestDiameter:
    def test_singleton(self):
        assert diameter(PointCloud([[7, 7]]), "linf") == 0.0

    def test_single_pair(self):
        assert diameter(PointCloud([[0, 0], [0, 2]]), "linf") == 2.0

    def test_triangle(self):
        assert diameter(PointCloud([[0, 0], [2, 0], [1, 1]]), "l2") == 2.0

    def test_at_most_twice_radius_probes(self):
        rng = np.random.default_rng(5)
        for _ in range(40):
            cloud = random_cloud(rng, int(rng.integers(1, 5)), int(rng.integers(1, 10)))
            for norm in ("linf", "l2"):
                best_probe = min(farthest_dist(cloud, p, norm) for p in cloud.points)
                assert diameter(cloud, norm) <= 2.0 * best_probe + 1e-12

    def test_against_oracle(self):
        rng = np.random.default_rng(6)
        for _ in range(30):
            cloud = random_cloud(rng, 2, 8)
            assert diameter(cloud, "linf") == odiameter(cloud.points, "linf")


class TestMidpoint:
    def test_coincident(self):
        assert np.array_equal(midpoint((0, 0), (0, 0)), [0, 0])

    def test_arithmetic_mean(self):
        assert np.array_equal(midpoint((0, 0), (2, 4)), [1, 2])
        assert np.array_equal(midpoint((-1, 3), (3, -1)), [1, 1])

    @given(vector_pairs())
    def test_equidistance(self, xy):
        x, y = xy
        m = midpoint(x, y)
        half = dist(x, y, "l2") / 2.0
        assert dist(x, m, "l2") == pytest.approx(half, abs=1e-12)
        assert dist(y, m, "l2") == pytest.approx(half, abs=1e-12)

    @given(vector_triples())
    def test_midpoint_map_halves_distances(self, pxy):
        # Euclidean instantiation of the midpoint-contraction hypothesis,
        # where it holds with equality for every triple.
        p, x, y = pxy
        lhs = 2.0 * dist(midpoint(p, x), midpoint(p, y), "l2")
        assert lhs == pytest.approx(dist(x, y, "l2"), abs=1e-12)


class TestBoxDist:
    def test_interior_point(self):
        box = AxisBox([0, 0], [1, 1])
        assert box_dist_linf((0.5, 0.5), box) == 0.0

    def test_one_coordinate_excess(self):
        assert box_dist_linf((2, 0.5), AxisBox([0, 0], [1, 1])) == 1.0

    def test_two_coordinate_excess(self):
        assert box_dist_linf((2, 3), AxisBox([0, 0], [1, 1])) == 2.0

    def test_zero_iff_contained(self):
        rng = np.random.default_rng(8)
        for _ in range(60):
            lo = rng.uniform(-5, 0, 3)
            hi = lo + rng.uniform(0, 4, 3)
            box = AxisBox(lo, hi)
            x = rng.uniform(-8, 8, 3)
            assert (box_dist_linf(x, box) == 0.0) == box.contains(x)


class TestValidation:
    def test_vector_coercion(self):
        from chebstab import as_vector

        v = as_vector((1, 2, 3))
        assert v.dtype == np.float64 and v.shape == (3,)
        with pytest.raises(ValueError):
            as_vector([[1, 2]])
        with pytest.raises(ValueError):
            as_vector([np.nan])
        with pytest.raises(ValueError):
            as_vector([])

    def test_ball_spec_validation(self):
        from chebstab import BallSpec

        ball = BallSpec(center=[0, 0], radius=1.0, norm="linf")
        assert ball.radius == 1.0
        with pytest.raises(ValueError):
            BallSpec(center=[0, 0], radius=-1.0)
        with pytest.raises(ValueError):
            BallSpec(center=[0, 0], radius=1.0, norm="l7")

    def test_empty_cloud_rejected(self):
        with pytest.raises(ValueError):
            PointCloud(np.empty((0, 2)))

    def test_nan_rejected(self):
        with pytest.raises(ValueError):
            PointCloud([[0.0, np.nan]])

    def test_infinity_rejected(self):
        with pytest.raises(ValueError):
            PointCloud([[np.inf, 0.0]])

    def test_ragged_rejected(self):
        with pytest.raises(ValueError):
            PointCloud([[0.0], [0.0, 1.0]])

    def test_box_order_enforced(self):
        with pytest.raises(ValueError):
            AxisBox([1.0], [0.0])

    def test_zero_width_box_allowed(self):
        box = AxisBox([1.0, 2.0], [1.0, 2.0])
        assert box.contains((1.0, 2.0))

    def test_duplicates_kept(self):
        cloud = PointCloud([[1, 1], [1, 1], [2, 2]])
        assert len(cloud) == 3
