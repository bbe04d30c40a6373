import itertools

import numpy as np
import pytest

from islkit.asymptotic import isl_limit
from islkit.optimize import (
    default_resolution,
    exact_validate,
    grid_search,
    optimize_rotations,
    refine_local,
)


class TestGridSearch:
    def test_single_rotation(self):
        res = grid_search(1, 256)
        assert res.fractions == (0.25,)  # lexicographic winner of {1/4, 3/4}
        assert res.asym_value == pytest.approx(1 / 6)

    def test_beats_every_lattice_point_independent_rescan(self):
        r = 32
        res = grid_search(2, r)
        rescan = min(
            isl_limit([i / r, j / r]).total
            for i, j in itertools.product(range(r), repeat=2)
        )
        assert res.asym_value == pytest.approx(rescan)

    def test_resolution_monotonicity(self):
        values = [grid_search(2, r).asym_value for r in (64, 128, 256)]
        assert values[1] <= values[0] + 1e-15
        assert values[2] <= values[1] + 1e-15

    def test_budget_guard(self):
        with pytest.raises(ValueError):
            grid_search(6, 64)
        with pytest.raises(ValueError):
            grid_search(1, 7)
        with pytest.raises(ValueError):
            grid_search(0, 64)

    def test_default_resolution_respects_budget(self):
        for m in (1, 2, 3, 4, 5):
            r = default_resolution(m)
            assert r**m <= 10**8
            assert r >= 8

    def test_optimize_defaults_stay_within_budget(self):
        # the default grid must shrink with m instead of tripping the guard
        res = optimize_rotations(4)
        assert res.grid_resolution == default_resolution(4)
        assert res.asym_value == pytest.approx(73 / 6)


class TestRefineLocal:
    def test_stays_at_minimum(self):
        out = refine_local([0.25], 1e-6)
        assert out[0] == pytest.approx(0.25, abs=1e-6)

    def test_converges_from_offset_start(self):
        out = refine_local([0.3], 1e-6)
        assert out[0] == pytest.approx(0.25, abs=1e-6)
        assert isl_limit(out).total == pytest.approx(1 / 6, abs=1e-6)

    def test_never_increases_objective(self):
        rng = np.random.default_rng(21)
        for _ in range(1000):
            m = int(rng.integers(1, 4))
            start = rng.uniform(0, 1, m)
            before = isl_limit(start).total
            after = isl_limit(refine_local(start, 1e-4)).total
            assert after <= before + 1e-12


class TestOptimizeRotations:
    def test_single_rotation(self):
        res = optimize_rotations(1, 256, 1e-6)
        assert res.fractions[0] == pytest.approx(0.25, abs=1e-6)
        assert res.asym_value == pytest.approx(1 / 6, abs=1e-6)

    def test_stored_value_reproducible(self):
        res = optimize_rotations(2, 128, 1e-6)
        assert isl_limit(res.fractions).total == pytest.approx(res.asym_value, abs=1e-12)

    def test_canonical_sorted(self):
        res = optimize_rotations(3, 64, 1e-5)
        assert list(res.fractions) == sorted(res.fractions)

    def test_pair_beats_coincident_rotations(self):
        res = optimize_rotations(2, 256, 1e-6)
        assert res.asym_value < isl_limit([0.25, 0.25]).total

    def test_fixed_point_of_refinement(self):
        res = optimize_rotations(2, 128, 1e-6)
        again = refine_local(res.fractions, 1e-6, initial_step=1.0 / 128)
        assert isl_limit(again).total == pytest.approx(res.asym_value, abs=1e-10)

    def test_deterministic(self):
        a = optimize_rotations(2, 64, 1e-6)
        b = optimize_rotations(2, 64, 1e-6)
        assert a == b

    def test_objective_invariances_at_optimum(self):
        res = optimize_rotations(2, 256, 1e-6)
        f = list(res.fractions)
        assert isl_limit(f[::-1]).total == pytest.approx(res.asym_value, abs=1e-10)
        assert isl_limit([1 - x for x in f]).total == pytest.approx(
            res.asym_value, abs=1e-10
        )


class TestExactValidate:
    def test_single_rotation_near_limit(self):
        res = optimize_rotations(1, 256, 1e-6)
        checked = exact_validate(res, 101)
        chk = checked.exact_check
        assert chk.n == 101
        assert chk.offsets == (25,)
        assert chk.realized_fractions == (25 / 101,)
        # moderate n: within 15% of the asymptotic value
        assert abs(chk.normalized - res.asym_value) <= 0.15 * res.asym_value

    def test_error_shrinks_with_n(self):
        res = optimize_rotations(2, 128, 1e-6)
        small = exact_validate(res, 101).exact_check
        large = exact_validate(res, 997).exact_check
        err_small = abs(small.normalized - res.asym_value)
        err_large = abs(large.normalized - res.asym_value)
        assert err_large < err_small

    def test_rejects_nonprime(self):
        res = optimize_rotations(1, 64, 1e-4)
        with pytest.raises(ValueError):
            exact_validate(res, 100)
