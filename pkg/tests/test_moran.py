import math

import numpy as np
import pytest

from fractaldim import ValidationError, moran_dimension, moran_value

from oracle_helpers import DSTAR_CANTOR, D_KOCH, D_SIERPINSKI, bisect_moran


class TestMoranValue:
    def test_cantor_ratios_at_their_dimension(self):
        assert moran_value([1 / 3, 1 / 3], DSTAR_CANTOR) == pytest.approx(1.0, abs=1e-15)

    def test_zero_exponent_counts_terms(self):
        assert moran_value([0.3, 0.5, 0.7], 0.0) == 3.0

    def test_plain_arithmetic(self):
        assert moran_value([1 / 2, 1 / 4], 1.0) == 0.75

    def test_rejects_negative_exponent(self):
        with pytest.raises(ValidationError):
            moran_value([0.5], -0.1)

    def test_rejects_bad_ratios(self):
        for bad in ([], [0.0], [1.0], [1.5], [-0.5], [0.5, np.nan]):
            with pytest.raises(ValidationError):
                moran_value(bad, 1.0)


class TestMoranDimension:
    def test_two_thirds_scalings(self):
        assert moran_dimension([1 / 3, 1 / 3]) == pytest.approx(DSTAR_CANTOR, abs=1e-12)

    def test_four_thirds_scalings(self):
        assert moran_dimension([1 / 3] * 4) == pytest.approx(D_KOCH, abs=1e-12)

    def test_three_halves_scalings(self):
        assert moran_dimension([1 / 2] * 3) == pytest.approx(D_SIERPINSKI, abs=1e-12)

    def test_two_halves_is_a_segment(self):
        assert moran_dimension([1 / 2, 1 / 2]) == pytest.approx(1.0, abs=1e-12)

    def test_mixed_ratios_closed_form(self):
        # x + x^2 = 1 with x = 2^-d, so x is the reciprocal golden ratio
        expected = -math.log2((math.sqrt(5) - 1) / 2)
        d = moran_dimension([1 / 2, 1 / 4])
        assert d == pytest.approx(expected, abs=1e-12)
        assert d == pytest.approx(bisect_moran([0.5, 0.25]), abs=1e-12)

    def test_single_ratio_is_zero(self):
        assert moran_dimension([0.37]) == 0.0

    def test_agrees_with_bisection_oracle(self):
        rng = np.random.default_rng(10)
        for _ in range(100):
            ratios = rng.uniform(0.05, 0.95, size=rng.integers(2, 6))
            assert moran_dimension(ratios) == pytest.approx(bisect_moran(ratios), abs=1e-10)

    def test_residual_on_random_lists(self):
        rng = np.random.default_rng(11)
        for _ in range(10_000):
            ratios = rng.uniform(0.02, 0.98, size=rng.integers(1, 7))
            d = moran_dimension(ratios)
            assert abs(moran_value(ratios, d) - 1.0) <= 1e-12

    def test_equal_ratio_closed_form(self):
        rng = np.random.default_rng(12)
        for _ in range(1000):
            n = int(rng.integers(2, 9))
            r = float(rng.uniform(0.05, 0.95))
            expected = math.log(n) / math.log(1.0 / r)
            assert moran_dimension([r] * n) == pytest.approx(expected, abs=1e-12)

    def test_value_monotone_in_exponent(self):
        rng = np.random.default_rng(13)
        for _ in range(1000):
            ratios = rng.uniform(0.05, 0.95, size=rng.integers(1, 6))
            d1, d2 = np.sort(rng.uniform(0.0, 3.0, size=2))
            if d1 == d2:
                continue
            assert moran_value(ratios, d1) > moran_value(ratios, d2)

    def test_permutation_invariance_is_exact(self):
        rng = np.random.default_rng(14)
        for _ in range(1000):
            ratios = rng.uniform(0.05, 0.95, size=rng.integers(2, 7))
            shuffled = rng.permutation(ratios)
            assert moran_dimension(ratios) == moran_dimension(shuffled)

    def test_root_within_stated_bracket(self):
        rng = np.random.default_rng(15)
        for _ in range(500):
            ratios = rng.uniform(0.05, 0.95, size=rng.integers(2, 6))
            d = moran_dimension(ratios)
            hi = math.log(ratios.size) / math.log(1.0 / ratios.max())
            assert 0.0 <= d <= hi + 1e-9
