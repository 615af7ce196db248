"""
Min-sum LLR kernels.

Scalar versions follow the textbook formulas; the `*_vec` versions operate on numpy
arrays and charge the optional OpCounter one operation per element.
"""

from typing import Optional

import numpy as np

from golaysc.errors import DimensionError
from golaysc.types.data_types import OpCounter


def sgn(a: float) -> int:
    """Sign with sgn(0) = +1."""
    return -1 if a < 0 else 1


def boxplus(a: float, b: float, counter: Optional[OpCounter] = None) -> float:
    if counter is not None:
        counter.compare()
    return sgn(a) * sgn(b) * min(abs(a), abs(b))


def g_step(a: float, b: float, u: int, counter: Optional[OpCounter] = None) -> float:
    if counter is not None:
        counter.add()
    return (-a if u else a) + b


def tau(s: float, u: int, counter: Optional[OpCounter] = None) -> float:
    """Score penalty of deciding u against LLR s: 0 if the sign agrees, else -|s|."""
    if counter is not None:
        counter.compare()
    if (s < 0) == bool(u):
        return 0.0
    return -abs(s)


def hard_decision(s: float) -> int:
    return 1 if s < 0 else 0


def signs(values: np.ndarray) -> np.ndarray:
    return np.where(values < 0, -1.0, 1.0)


def boxplus_vec(
    a: np.ndarray, b: np.ndarray, counter: Optional[OpCounter] = None
) -> np.ndarray:
    if counter is not None:
        counter.compare(a.size)
    return signs(a) * signs(b) * np.minimum(np.abs(a), np.abs(b))


def g_step_vec(
    a: np.ndarray, b: np.ndarray, u: np.ndarray, counter: Optional[OpCounter] = None
) -> np.ndarray:
    if counter is not None:
        counter.add(a.size)
    return np.where(np.asarray(u) == 1, -a, a) + b


def hard_decisions(values: np.ndarray, counter: Optional[OpCounter] = None) -> np.ndarray:
    if counter is not None:
        counter.compare(values.size)
    return (values < 0).astype(np.uint8)


def abs_sum(values: np.ndarray, counter: Optional[OpCounter] = None) -> float:
    """Sum of |values|; n values cost n - 1 summations."""
    if counter is not None:
        counter.add(max(values.size - 1, 0))
    return float(np.sum(np.abs(values)))


def as_llr_vector(y, length: int) -> np.ndarray:
    values = np.asarray(y, dtype=float).reshape(-1)
    if values.size != length:
        raise DimensionError(f"expected {length} LLRs, got {values.size}")
    if not np.all(np.isfinite(values)):
        raise ValueError("LLR values must be finite")
    return values
