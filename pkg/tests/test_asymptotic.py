import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from islkit.asymptotic import (
    auto_energy_limit,
    cross_energy_limit,
    isl_limit,
    isl_limit_batch,
    mod1,
    re_dilog_on_circle,
)

fractions = st.floats(0.0, 1.0)


class TestMod1:
    def test_examples(self):
        assert mod1(1.25) == 0.25
        assert mod1(-0.25) == 0.75
        assert mod1(0) == 0

    @given(st.floats(-1e6, 1e6))
    def test_range(self, x):
        assert 0.0 <= mod1(x) < 1.0


class TestReDilog:
    def test_anchors(self):
        assert re_dilog_on_circle(0.0) == pytest.approx(np.pi**2 / 6)
        assert re_dilog_on_circle(np.pi) == pytest.approx(-(np.pi**2) / 12)

    def test_even_and_periodic(self):
        for theta in (0.3, 1.1, 2.9):
            assert re_dilog_on_circle(-theta) == pytest.approx(re_dilog_on_circle(theta))
            assert re_dilog_on_circle(theta + 2 * np.pi) == pytest.approx(
                re_dilog_on_circle(theta)
            )

    def test_series_oracle(self):
        # truncated cosine series; the full-length run lives in the
        # acceptance suite
        k = np.arange(1, 100_001)
        inv_k2 = 1.0 / (k * k)
        for theta in np.linspace(-2 * np.pi, 2 * np.pi, 37 + 2)[1:-1]:
            series = float(np.cos(k * theta) @ inv_k2)
            assert re_dilog_on_circle(theta) == pytest.approx(series, abs=2e-4)

    def test_fraction_parameterization(self):
        # at theta = 2*pi*f the closed form collapses to
        # pi^2 (1/6 - {f}(1 - {f})), the shape the limit formulas rest on
        for f in (-0.7, 0.0, 0.2, 0.5, 1.0, 1.25, 3.8):
            g = mod1(f)
            want = np.pi**2 * (1 / 6 - g * (1 - g))
            assert re_dilog_on_circle(2 * np.pi * f) == pytest.approx(want, abs=1e-12)


class TestAutoEnergyLimit:
    def test_examples(self):
        assert auto_energy_limit(0.5) == pytest.approx(2 / 3)
        assert auto_energy_limit(0.25) == pytest.approx(1 / 6)
        assert auto_energy_limit(0.0) == pytest.approx(2 / 3)

    def test_minimum_at_quarter_rotations(self):
        grid = np.linspace(0, 1, 4001)
        vals = np.array([auto_energy_limit(f) for f in grid])
        assert vals.min() == pytest.approx(1 / 6)
        mins = grid[vals <= vals.min() + 1e-12]
        assert set(np.round(mins, 6)) == {0.25, 0.75}

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            auto_energy_limit(1.5)
        with pytest.raises(ValueError):
            auto_energy_limit(-0.01)


class TestCrossEnergyLimit:
    def test_examples(self):
        assert cross_energy_limit(0.0, 0.5) == pytest.approx(2 / 3)
        assert cross_energy_limit(0.0, 0.0) == pytest.approx(5 / 3)
        assert cross_energy_limit(0.5, 0.5) == pytest.approx(5 / 3)

    @given(fractions, fractions)
    def test_symmetric(self, fa, fb):
        assert cross_energy_limit(fa, fb) == cross_energy_limit(fb, fa)

    @given(fractions, fractions)
    def test_lower_bound(self, fa, fb):
        assert cross_energy_limit(fa, fb) >= 2 / 3 - 1e-12

    def test_minimum_value(self):
        grid = np.linspace(0, 1, 201)
        best = min(cross_energy_limit(a, b) for a in grid for b in grid)
        assert best == pytest.approx(2 / 3)


class TestIslLimit:
    def test_single(self):
        lim = isl_limit([0.25])
        assert lim.total == pytest.approx(1 / 6)
        assert lim.cross_part == 0.0

    def test_pair_example(self):
        lim = isl_limit([0.0, 0.5])
        assert lim.auto_part == pytest.approx(4 / 3)
        assert lim.cross_part == pytest.approx(4 / 3)
        assert lim.total == pytest.approx(8 / 3)

    @given(st.lists(fractions, min_size=2, max_size=5))
    @settings(max_examples=100)
    def test_permutation_invariance(self, fr):
        rng = np.random.default_rng(len(fr))
        shuffled = list(fr)
        rng.shuffle(shuffled)
        assert isl_limit(shuffled).total == pytest.approx(isl_limit(fr).total)

    @given(st.lists(fractions, min_size=1, max_size=4), st.integers(0, 3))
    @settings(max_examples=100)
    def test_reflection_invariance(self, fr, which):
        i = which % len(fr)
        reflected = [1.0 - f if j == i else f for j, f in enumerate(fr)]
        assert isl_limit(reflected).total == pytest.approx(isl_limit(fr).total)

    @given(st.lists(fractions, min_size=1, max_size=5))
    @settings(max_examples=100)
    def test_part_lower_bounds(self, fr):
        m = len(fr)
        lim = isl_limit(fr)
        assert lim.auto_part >= m / 6 - 1e-9
        assert lim.cross_part >= m * (m - 1) * 2 / 3 - 1e-9
        assert lim.total == pytest.approx(lim.auto_part + lim.cross_part)

    def test_batch_matches_scalar(self):
        rng = np.random.default_rng(14)
        block = rng.uniform(0, 1, size=(40, 3))
        batch = isl_limit_batch(block)
        for row, total in zip(block, batch):
            assert total == pytest.approx(isl_limit(row).total)

    def test_errors(self):
        with pytest.raises(ValueError):
            isl_limit([])
        with pytest.raises(ValueError):
            isl_limit([0.2, 1.3])
