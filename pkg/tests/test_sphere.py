import numpy as np
import pytest

from balltrace.errors import DimensionMismatchError, DomainError
from balltrace.multiindex import MultiIndex
from balltrace.sphere import (
    CHUNK_DRAWS,
    SpherePoint,
    SphereSampler,
    herm_inner,
    mean_and_stderr,
    monomial_eval,
    norm,
)


class TestInnerAndNorm:
    def test_inner_examples(self):
        assert herm_inner([1, 0], [1, 0]) == 1
        assert herm_inner([1, 0], [0, 1]) == 0
        assert herm_inner([0.5, 0], [0.5, 0]) == pytest.approx(0.25)

    def test_inner_conjugates_second_argument(self):
        assert herm_inner([1j, 0], [1j, 0]) == pytest.approx(1)
        assert herm_inner([1j, 0], [1, 0]) == pytest.approx(1j)

    def test_norm_examples(self):
        assert norm([1, 0]) == 1
        assert norm([0, 0]) == 0
        assert norm([0.6j, 0.8]) == pytest.approx(1.0)  # pythagorean

    def test_norm_is_sqrt_of_self_inner(self):
        z = np.array([0.3 + 0.1j, -0.2 + 0.7j])
        assert norm(z) ** 2 == pytest.approx(herm_inner(z, z).real)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            herm_inner([1, 0], [1, 0, 0])


class TestSpherePoint:
    def test_accepts_unit_vector(self):
        p = SpherePoint([3 / 5 * 1j, 4 / 5])
        assert abs(norm(p.coords) - 1) <= 1e-12

    def test_renormalizes_small_drift(self):
        p = SpherePoint([1 + 3e-9, 0])
        assert abs(norm(p.coords) - 1) <= 1e-12

    def test_rejects_large_drift(self):
        with pytest.raises(DomainError):
            SpherePoint([1.001, 0])

    def test_immutable(self):
        p = SpherePoint([1, 0])
        with pytest.raises((AttributeError, ValueError)):
            p.coords[0] = 0


class TestSampler:
    def test_same_seed_same_stream(self):
        a = SphereSampler(2, 7).sample_batch(500)
        b = SphereSampler(2, 7).sample_batch(500)
        assert np.array_equal(a, b)

    def test_stream_independent_of_batching(self):
        a = SphereSampler(3, 11).sample_batch(CHUNK_DRAWS + 1000)
        s = SphereSampler(3, 11)
        b = np.concatenate([s.sample_batch(999), s.sample_batch(CHUNK_DRAWS), s.sample_batch(1)])
        assert np.array_equal(a, b)

    def test_different_seeds_differ(self):
        a = SphereSampler(2, 1).sample_batch(10)
        b = SphereSampler(2, 2).sample_batch(10)
        assert not np.allclose(a, b)

    def test_counter_tracks_draws(self):
        s = SphereSampler(2, 0)
        s.sample_batch(123)
        s.sample()
        assert s.counter == 124

    def test_unit_norm_within_tolerance(self):
        batch = SphereSampler(4, 3).sample_batch(2000)
        assert np.max(np.abs(np.linalg.norm(batch, axis=1) - 1)) <= 1e-12

    def test_single_sample_is_sphere_point(self):
        p = SphereSampler(2, 5).sample()
        assert isinstance(p, SpherePoint)
        assert p.dim == 2

    def test_first_coordinate_moment(self):
        # symmetry forces E|zeta_1|^2 = 1/n
        batch = SphereSampler(2, 40).sample_batch(200_000)
        mean, se = mean_and_stderr(np.abs(batch[:, 0]) ** 2, expect_real=True)
        assert abs(mean - 0.5) <= 4 * se

    def test_mean_coordinate_vanishes(self):
        batch = SphereSampler(2, 41).sample_batch(200_000)
        mean, se = mean_and_stderr(batch[:, 0])
        assert abs(mean) <= 4 * se


class TestMonomialEval:
    def test_examples(self):
        assert monomial_eval(SpherePoint([1, 0]), MultiIndex((2, 0)), MultiIndex((0, 0))) == 1
        assert monomial_eval(SpherePoint([0, 1]), MultiIndex((1, 0)), MultiIndex((0, 0))) == 0

    def test_equal_indices_give_unit_interval_value(self):
        batch = SphereSampler(2, 9).sample_batch(200)
        alpha = MultiIndex((2, 1))
        vals = monomial_eval(batch, alpha, alpha)
        assert np.max(np.abs(vals.imag)) <= 1e-14
        assert np.all(vals.real >= 0) and np.all(vals.real <= 1 + 1e-12)

    def test_modulus_bounded_by_one(self):
        batch = SphereSampler(3, 10).sample_batch(500)
        vals = monomial_eval(batch, MultiIndex((2, 0, 1)), MultiIndex((0, 3, 1)))
        assert np.max(np.abs(vals)) <= 1 + 1e-12

    def test_batch_matches_pointwise(self):
        batch = SphereSampler(2, 12).sample_batch(5)
        a, b = MultiIndex((1, 2)), MultiIndex((0, 1))
        vals = monomial_eval(batch, a, b)
        for i in range(5):
            assert vals[i] == pytest.approx(monomial_eval(batch[i], a, b))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            monomial_eval(SpherePoint([1, 0]), MultiIndex((1,)), MultiIndex((1,)))


class TestMeanAndStderr:
    def test_constant_batch_has_zero_stderr(self):
        mean, se = mean_and_stderr(np.ones(100))
        assert mean == 1 and se == 0

    def test_complex_stderr_combines_parts(self):
        v = np.array([1 + 0j, -1 + 0j, 0 + 1j, 0 - 1j] * 25)
        _, se = mean_and_stderr(v)
        assert se > 0
