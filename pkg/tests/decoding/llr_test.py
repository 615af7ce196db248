import numpy as np
import pytest

from golaysc.decoding.llr import (
    abs_sum,
    as_llr_vector,
    boxplus,
    boxplus_vec,
    g_step,
    g_step_vec,
    hard_decision,
    hard_decisions,
    sgn,
    tau,
)
from golaysc.errors import DimensionError
from golaysc.types.data_types import OpCounter


def test_sign_of_zero_is_positive():
    assert sgn(0.0) == 1
    assert sgn(-0.5) == -1
    assert hard_decision(0.0) == 0
    assert hard_decision(-1e-12) == 1


def test_boxplus():
    assert boxplus(3.0, -1.0) == -1.0
    assert boxplus(-2.0, -5.0) == 2.0
    assert boxplus(0.0, -3.0) == 0.0


def test_g_step():
    assert g_step(3.0, -1.0, 0) == 2.0
    assert g_step(3.0, -1.0, 1) == -4.0


def test_tau():
    assert tau(-2.5, 1) == 0.0
    assert tau(-2.5, 0) == -2.5
    assert tau(4.0, 1) == -4.0
    assert tau(0.0, 0) == 0.0


def test_scalar_kernels_charge_the_counter():
    counter = OpCounter()
    boxplus(1.0, 2.0, counter)
    tau(1.0, 0, counter)
    g_step(1.0, 2.0, 1, counter)
    assert counter.comparisons == 2
    assert counter.summations == 1
    assert counter.total == 3


def test_vector_kernels_match_scalar(rng):
    a = rng.normal(size=8)
    b = rng.normal(size=8)
    u = rng.integers(0, 2, size=8)
    counter = OpCounter()
    assert np.allclose(boxplus_vec(a, b, counter), [boxplus(x, y) for x, y in zip(a, b)])
    assert np.allclose(g_step_vec(a, b, u, counter), [g_step(x, y, int(v)) for x, y, v in zip(a, b, u)])
    assert list(hard_decisions(a, counter)) == [hard_decision(x) for x in a]
    assert counter.comparisons == 16
    assert counter.summations == 8


def test_abs_sum():
    counter = OpCounter()
    assert abs_sum(np.array([1.0, -2.0, 3.0]), counter) == 6.0
    assert counter.summations == 2


def test_as_llr_vector():
    assert as_llr_vector([1, 2], 2).dtype == float
    with pytest.raises(DimensionError):
        as_llr_vector([1.0] * 23, 24)
    with pytest.raises(ValueError):
        as_llr_vector([1.0, np.nan], 2)
