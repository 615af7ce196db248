from typing import Optional, Sequence, Tuple

import numpy as np

from golaysc.errors import DimensionError
from golaysc.types.data_types import OpCounter


def fht(z: Sequence[float], counter: Optional[OpCounter] = None) -> np.ndarray:
    """
    Fast Hadamard transform in natural ordering.

    out[i] = sum_j (-1)^{<i,j>} z[j]. An order-N transform charges N log2 N summations.

    Raises:
        DimensionError: if len(z) is not a power of two.
    """
    values = np.array(z, dtype=float).reshape(-1)
    n = values.size
    if n == 0 or n & (n - 1):
        raise DimensionError(f"transform length must be a power of two, got {n}")

    half = 1
    while half < n:
        blocks = values.reshape(-1, 2, half)
        top = blocks[:, 0, :] + blocks[:, 1, :]
        bottom = blocks[:, 0, :] - blocks[:, 1, :]
        values = np.stack([top, bottom], axis=1).reshape(-1)
        half *= 2

    if counter is not None:
        counter.add(n * (n.bit_length() - 1))
    return values


def hadamard_matrix(n: int) -> np.ndarray:
    """Entry (i, j) is (-1)^{<i,j>}."""
    index = np.arange(n)
    parity = np.array([bin(v).count("1") % 2 for v in range(n)])
    return np.where(parity[index[:, None] & index[None, :]] == 1, -1.0, 1.0)


def correlation(codeword: Sequence[int], z: Sequence[float]) -> float:
    """C(c, z) = sum_j (-1)^{c_j} z_j."""
    bits = np.asarray(codeword).reshape(-1)
    return float(np.sum(np.where(bits == 1, -1.0, 1.0) * np.asarray(z, dtype=float)))


def correlation_to_weight(c: float, z: Sequence[float]) -> float:
    """Ellipsoidal weight (correlation discrepancy) E = (sum|z_j| - C) / 2."""
    return 0.5 * (float(np.sum(np.abs(np.asarray(z, dtype=float)))) - c)


def affine_coordinates(word: Sequence[int]) -> Tuple[int, int]:
    """
    (c, a) with word_j = c + <a, j> for an affine Boolean function given by its truth table.

    Its correlation with z is then (-1)^c fht(z)[a].
    """
    bits = [int(b) for b in word]
    c = bits[0]
    a, k = 0, 0
    while (1 << k) < len(bits):
        a |= (bits[1 << k] ^ c) << k
        k += 1
    return c, a


def affine_word(c: int, a: int, n: int) -> np.ndarray:
    """Truth table of c + <a, j>, j = 0..n-1."""
    return np.array([c ^ (bin(a & j).count("1") % 2) for j in range(n)], dtype=np.uint8)
