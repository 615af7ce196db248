import numpy as np
import pytest

from golaysc.decoding.fht import (
    affine_coordinates,
    affine_word,
    correlation,
    correlation_to_weight,
    fht,
    hadamard_matrix,
)
from golaysc.errors import DimensionError
from golaysc.types.data_types import OpCounter


def test_small_transforms():
    assert list(fht([1.0, 0.0, 0.0, 0.0])) == [1.0, 1.0, 1.0, 1.0]
    assert list(fht([1.0, 1.0])) == [2.0, 0.0]
    assert list(fht([5.0])) == [5.0]


@pytest.mark.parametrize("n", [2, 4, 8, 16, 32])
def test_matches_direct_correlation(n, rng):
    z = rng.normal(size=n)
    assert np.allclose(fht(z), hadamard_matrix(n) @ z)


def test_cost_is_n_log_n():
    counter = OpCounter()
    fht(np.ones(8), counter)
    assert counter.summations == 24
    fht(np.ones(4), counter)
    assert counter.summations == 32
    assert counter.comparisons == 0


@pytest.mark.parametrize("n", [0, 3, 12])
def test_rejects_other_lengths(n):
    with pytest.raises(DimensionError):
        fht(np.ones(n))


def test_correlation_and_weight():
    z = [1.0, -2.0]
    assert correlation([0, 1], z) == 3.0
    assert correlation_to_weight(3.0, z) == 0.0
    assert correlation([0, 0], z) == -1.0
    assert correlation_to_weight(-1.0, z) == 2.0


def test_affine_coordinates_round_trip():
    for c in (0, 1):
        for a in range(8):
            assert affine_coordinates(affine_word(c, a, 8)) == (c, a)


def test_transform_entries_are_affine_correlations(rng):
    z = rng.normal(size=8)
    f = fht(z)
    for c in (0, 1):
        for a in range(8):
            expected = -f[a] if c else f[a]
            assert correlation(affine_word(c, a, 8), z) == pytest.approx(expected)
