from functools import lru_cache
from typing import List, Sequence

import numpy as np

from golaysc.errors import DimensionError
from golaysc.gf2.bit_matrix import BitMatrix, as_bit_vector


def bit_reversal_perm(m: int) -> List[int]:
    """Index j maps to the integer whose m-bit binary expansion is the reverse of j's."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return [int(format(j, f"0{m}b")[::-1], 2) if m else 0 for j in range(1 << m)]


@lru_cache(maxsize=None)
def polarizing_transform(m: int) -> BitMatrix:
    """
    A_m = B_m (1 0; 1 1)^{(x)m}, the 2^m x 2^m polarizing matrix.

    Entry (r, c) of the Kronecker power is 1 iff the bits of c are a subset of the bits of r;
    B_m reorders rows by bit reversal. A_m is an involution over GF(2).
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    n = 1 << m
    index = np.arange(n)
    kernel_power = ((index[None, :] & ~index[:, None]) == 0).astype(np.uint8)
    return BitMatrix(kernel_power[bit_reversal_perm(m), :])


def mixed_transform(segment_sizes: Sequence[int]) -> BitMatrix:
    """A = diag(A_{m_0}, ..., A_{m_{s-1}})."""
    n = segment_length(segment_sizes)
    block = np.zeros((n, n), dtype=np.uint8)
    offset = 0
    for m in segment_sizes:
        size = 1 << m
        block[offset : offset + size, offset : offset + size] = polarizing_transform(
            m
        ).array
        offset += size
    return BitMatrix(block)


def segment_length(segment_sizes: Sequence[int]) -> int:
    return sum(1 << m for m in segment_sizes)


def apply_mixed_transform(u: Sequence[int], segment_sizes: Sequence[int]) -> np.ndarray:
    """Multiplies each segment of u by its A_{m_i} and concatenates the results."""
    n = segment_length(segment_sizes)
    bits = as_bit_vector(u)
    if bits.size != n:
        raise DimensionError(
            f"input of length {bits.size} does not match segments {tuple(segment_sizes)}"
        )
    out = np.empty(n, dtype=np.uint8)
    offset = 0
    for m in segment_sizes:
        size = 1 << m
        transform = _transform_array(m)
        out[offset : offset + size] = (
            bits[offset : offset + size].astype(np.int64) @ transform
        ) & 1
        offset += size
    out.setflags(write=False)
    return out


@lru_cache(maxsize=None)
def _transform_array(m: int) -> np.ndarray:
    return polarizing_transform(m).array.astype(np.int64)
