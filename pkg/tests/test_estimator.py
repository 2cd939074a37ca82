import numpy as np
import pytest

from fractaldim import (
    AffineMap,
    GridSpec,
    NumericError,
    PointCloud,
    ScaleSeries,
    DimensionFit,
    ValidationError,
    box_dimension,
    cantor_midpoints,
    count_series,
    cover_sum,
    crossover_dimension,
    default_deltas,
    fit_dimension,
    grid_count,
    measure_profile,
)

from oracle_helpers import DSTAR_CANTOR


class TestGridSpec:
    def test_defaults(self):
        grid = GridSpec()
        assert grid.base == 2.0
        assert grid.levels == (1, 8)
        assert np.array_equal(grid.origin_for(2), [0.0, 0.0])

    def test_scales_strictly_decreasing(self):
        s = GridSpec(base=3.0, levels=(1, 5)).scales()
        assert np.all(np.diff(s) < 0)
        assert s[0] == pytest.approx(1 / 3, abs=1e-15)

    def test_rejects_bad_base(self):
        for bad in (1.0, 0.5, -2.0, np.inf):
            with pytest.raises(ValidationError):
                GridSpec(base=bad)

    def test_rejects_reversed_levels(self):
        with pytest.raises(ValidationError):
            GridSpec(levels=(5, 2))

    def test_origin_shape_check(self):
        with pytest.raises(ValidationError):
            GridSpec(origin=(0.0, 0.0)).origin_for(1)


class TestGridCount:
    def test_single_point(self):
        cloud = PointCloud([[0.3, 0.7]])
        for scale in (1.0, 0.1, 0.003):
            assert grid_count(cloud, scale)[0] == 1

    def test_cantor_midpoint_counts_are_powers_of_two(self, triadic_grid):
        cloud = cantor_midpoints(8)
        for k in range(1, 9):
            assert grid_count(cloud, 3.0**-k, triadic_grid)[0] == 2**k

    def test_1001_equally_spaced_points_at_tenths(self):
        cloud = PointCloud(np.linspace(0.0, 1.0, 1001))
        count, cells = grid_count(cloud, 0.1, GridSpec(base=10.0))
        # the endpoint x=1 lands in its own half-open cell, index 10
        assert count == 11
        assert cells.max() == 10

    def test_origin_shift_repartitions_cells(self):
        cloud = PointCloud([[0.04], [0.06]])
        # one cell straddled by default, split once the boundary moves between them
        assert grid_count(cloud, 0.1, GridSpec(origin=0.0))[0] == 1
        assert grid_count(cloud, 0.1, GridSpec(origin=0.05))[0] == 2

    def test_negative_coordinates(self):
        cloud = PointCloud([[-0.05], [0.05]])
        count, cells = grid_count(cloud, 0.1)
        assert count == 2
        assert cells[:, 0].tolist() == [-1, 0]

    def test_rejects_bad_scale(self):
        cloud = PointCloud([[0.0]])
        for bad in (0.0, -1.0, np.nan):
            with pytest.raises(ValidationError):
                grid_count(cloud, bad)


class TestCoverSum:
    def test_cantor_at_its_dimension_is_one(self, cantor_mid10, triadic_grid):
        for k in range(1, 9):
            value = cover_sum(cantor_mid10, 3.0**-k, DSTAR_CANTOR, triadic_grid)
            assert abs(value - 1.0) <= 1e-12

    def test_small_delta_approaches_count(self):
        rng = np.random.default_rng(21)
        cloud = PointCloud(rng.uniform(size=(50, 2)))
        n = grid_count(cloud, 0.25)[0]
        assert cover_sum(cloud, 0.25, 1e-9) == pytest.approx(n, rel=1e-7)

    def test_four_cell_square(self):
        # one point per quadrant of the unit square; cell diameter sqrt(2)/2
        pts = [[0.25, 0.25], [0.75, 0.25], [0.25, 0.75], [0.75, 0.75]]
        value = cover_sum(PointCloud(pts), 0.5, 2.0)
        assert value == pytest.approx(4 * 0.5, rel=1e-12)

    def test_rejects_nonpositive_delta(self):
        with pytest.raises(ValidationError):
            cover_sum(PointCloud([[0.0]]), 0.5, 0.0)


class TestBoxDimension:
    def test_cantor_exact_slope(self, cantor_mid10, triadic_grid):
        series, fit = box_dimension(cantor_mid10, triadic_grid)
        assert series.counts.tolist() == [2**k for k in range(1, 9)]
        assert fit.slope == pytest.approx(DSTAR_CANTOR, abs=1e-9)
        assert fit.r_squared == 1.0
        assert fit.stderr < 1e-12

    def test_single_point_slope_zero(self):
        series, fit = box_dimension(PointCloud([[0.4, 0.6]]))
        assert np.all(series.counts == 1)
        assert fit.slope == 0.0
        assert fit.r_squared == 1.0

    def test_saturated_tail_is_dropped_from_fit(self):
        rng = np.random.default_rng(22)
        cloud = PointCloud(rng.uniform(size=(16, 1)))
        grid = GridSpec(base=2.0, levels=(1, 20))
        series, fit = box_dimension(cloud, grid)
        assert len(series) == 20  # the series itself reports every level
        sat = series.counts == 16
        first = int(np.argmax(sat[:-1] & sat[1:]))
        trimmed = fit_dimension(ScaleSeries(series.scales[:first], series.counts[:first]))
        assert fit.slope == trimmed.slope
        naive = fit_dimension(series)
        assert fit.slope > naive.slope  # the flat tail biases the slope down

    def test_degenerate_single_level(self):
        cloud = PointCloud([[0.1], [0.9]])
        with pytest.raises(NumericError, match="degenerate"):
            box_dimension(cloud, GridSpec(levels=(3, 3)))

    def test_filled_square_slope_near_two(self, filled_square):
        cloud = PointCloud(filled_square)
        _, fit = box_dimension(cloud, GridSpec(base=2.0, levels=(1, 6)))
        assert fit.slope == pytest.approx(2.0, abs=1e-9)


class TestFitInvariants:
    def test_r_squared_bounds_enforced(self):
        with pytest.raises(ValidationError):
            DimensionFit(slope=1.0, intercept=0.0, r_squared=1.5, stderr=0.0)

    def test_series_validation(self):
        with pytest.raises(ValidationError):
            ScaleSeries(np.array([0.5, 0.5]), np.array([1, 2]))
        with pytest.raises(ValidationError):
            ScaleSeries(np.array([0.5, 0.25]), np.array([1, 0]))


class TestMeasureProfile:
    def test_matches_pointwise_cover_sum(self, cantor_mid10, triadic_grid):
        deltas = np.array([0.3, DSTAR_CANTOR, 1.0])
        prof = measure_profile(cantor_mid10, 3.0**-5, deltas, triadic_grid)
        for d, v in zip(prof.deltas, prof.values):
            assert v == cover_sum(cantor_mid10, 3.0**-5, d, triadic_grid)

    def test_cantor_closed_form_values(self, cantor_mid10, triadic_grid):
        # counts are exactly 2^8, so values are 2^8 * 3^(-8 delta)
        deltas = np.array([0.4, DSTAR_CANTOR, 0.9])
        prof = measure_profile(cantor_mid10, 3.0**-8, deltas, triadic_grid)
        expected = 2.0**8 * 3.0 ** (-8 * deltas)
        assert prof.values == pytest.approx(expected, rel=1e-12)
        assert prof.values[1] == pytest.approx(1.0, abs=1e-12)

    def test_values_nonincreasing_for_small_cells(self):
        rng = np.random.default_rng(23)
        for _ in range(50):
            cloud = PointCloud(rng.uniform(size=(rng.integers(2, 40), 2)))
            prof = measure_profile(cloud, 0.125, default_deltas(2))
            assert np.all(np.diff(prof.values) <= 1e-12)

    def test_unit_segment_near_one_at_delta_one(self):
        cloud = PointCloud(np.linspace(0.0, 1.0, 1001))
        prof = measure_profile(cloud, 1e-2, np.array([1.0]))
        assert prof.values[0] == pytest.approx(1.0, rel=0.02)

    def test_rejects_unsorted_deltas(self):
        cloud = PointCloud([[0.5]])
        with pytest.raises(ValidationError):
            measure_profile(cloud, 0.1, np.array([0.5, 0.4]))
        with pytest.raises(ValidationError):
            measure_profile(cloud, 0.1, np.array([-0.1, 0.5]))


class TestCrossoverDimension:
    def test_cantor_profile_exact(self, cantor_mid10, triadic_grid):
        prof = measure_profile(cantor_mid10, 3.0**-8, default_deltas(1), triadic_grid)
        assert crossover_dimension(prof) == pytest.approx(DSTAR_CANTOR, abs=1e-12)

    def test_filled_square_closed_form(self, filled_square):
        # 4^8 cells of diameter sqrt(2)*2^-8: crossing solves
        # 16 log 2 + delta (log 2 / 2 - 8 log 2) = 0, i.e. delta = 32/15
        cloud = PointCloud(filled_square)
        prof = measure_profile(cloud, 2.0**-8, default_deltas(2))
        assert crossover_dimension(prof) == pytest.approx(32 / 15, abs=1e-12)

    def test_no_bracket_raises(self, cantor_mid10, triadic_grid):
        prof = measure_profile(cantor_mid10, 3.0**-8, np.array([0.9, 1.2]), triadic_grid)
        with pytest.raises(NumericError, match="does not cross 1"):
            crossover_dimension(prof)

    def test_exact_hit_returned_directly(self):
        from fractaldim import MeasureProfile

        prof = MeasureProfile(epsilon=0.1, deltas=np.array([0.25, 0.5, 0.75]),
                              values=np.array([4.0, 1.0, 0.25]))
        assert crossover_dimension(prof) == 0.5


class TestCountProperties:
    def test_exact_scaling_for_dyadic_factors(self):
        rng = np.random.default_rng(24)
        grid = GridSpec(base=2.0)
        for _ in range(200):
            dim = int(rng.integers(1, 3))
            pts = rng.uniform(-1.0, 1.0, size=(rng.integers(1, 40), dim))
            lam = float(2 ** rng.integers(0, 4))
            eps = float(rng.uniform(0.01, 0.5))
            delta = float(rng.uniform(0.1, dim + 0.5))
            n1, c1 = grid_count(PointCloud(pts), eps, grid)
            n2, c2 = grid_count(PointCloud(lam * pts), lam * eps, grid)
            assert n1 == n2
            assert np.array_equal(c1, c2)
            v1 = cover_sum(PointCloud(pts), eps, delta, grid)
            v2 = cover_sum(PointCloud(lam * pts), lam * eps, delta, grid)
            assert v2 == pytest.approx(lam**delta * v1, rel=1e-12)

    def test_subset_count_monotonicity(self):
        rng = np.random.default_rng(25)
        for _ in range(200):
            pts = rng.uniform(size=(rng.integers(2, 50), 2))
            k = int(rng.integers(1, len(pts)))
            sub = pts[rng.choice(len(pts), size=k, replace=False)]
            eps = float(rng.uniform(0.01, 0.7))
            assert grid_count(PointCloud(sub), eps)[0] <= grid_count(PointCloud(pts), eps)[0]

    def test_union_count_bounds(self):
        rng = np.random.default_rng(26)
        for _ in range(200):
            a = rng.uniform(size=(rng.integers(1, 30), 2))
            b = rng.uniform(size=(rng.integers(1, 30), 2))
            eps = float(rng.uniform(0.01, 0.7))
            na = grid_count(PointCloud(a), eps)[0]
            nb = grid_count(PointCloud(b), eps)[0]
            nu = grid_count(PointCloud(np.vstack([a, b])), eps)[0]
            assert max(na, nb) <= nu <= na + nb

    def test_counts_nondecreasing_under_refinement(self):
        rng = np.random.default_rng(27)
        for _ in range(50):
            cloud = PointCloud(rng.uniform(size=(30, 2)))
            series = count_series(cloud, GridSpec(base=2.0, levels=(0, 8)))
            assert np.all(np.diff(series.counts) >= 0)

    def test_lipschitz_image_count_bound(self):
        # a map with ratio lam sends eps-cells into sets of diameter
        # lam*eps*sqrt(k), each covered by at most 2^k cells of that side
        rng = np.random.default_rng(28)
        for _ in range(100):
            dim = int(rng.integers(1, 3))
            pts = rng.uniform(size=(rng.integers(2, 40), dim))
            lin = rng.normal(size=(dim, dim))
            lin *= rng.uniform(0.2, 0.9) / np.linalg.norm(lin, 2)
            m = AffineMap(lin, rng.normal(size=dim))
            eps = float(rng.uniform(0.02, 0.4))
            n_src = grid_count(PointCloud(pts), eps)[0]
            image_scale = m.ratio * eps * np.sqrt(dim)
            n_img = grid_count(PointCloud(m.apply(pts)), image_scale)[0]
            assert n_img <= (2**dim) * n_src

    def test_cantor_cover_sums_monotone_in_level(self, cantor_mid10, triadic_grid):
        for delta, direction in ((0.4, 1), (0.9, -1)):
            values = [
                cover_sum(cantor_mid10, 3.0**-k, delta, triadic_grid) for k in range(1, 9)
            ]
            diffs = np.diff(values) * direction
            assert np.all(diffs > 0)
        const = [
            cover_sum(cantor_mid10, 3.0**-k, DSTAR_CANTOR, triadic_grid) for k in range(1, 9)
        ]
        assert np.allclose(const, 1.0, atol=1e-12)
