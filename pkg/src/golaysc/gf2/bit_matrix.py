from __future__ import annotations
from typing import Iterable, List, Optional, Sequence, Union

import numpy as np

from golaysc.errors import DimensionError

BitRows = Union[Sequence[Sequence[int]], np.ndarray]


def as_bit_vector(bits: Iterable[int], length: Optional[int] = None) -> np.ndarray:
    """
    Validates and freezes a GF(2) vector.

    Returns a read-only uint8 array whose entries are all 0 or 1.
    Raises DimensionError when `length` is given and does not match.
    """
    vector = np.array(list(bits) if not isinstance(bits, np.ndarray) else bits)
    vector = vector.astype(np.uint8, copy=True).reshape(-1)
    if np.any(vector > 1):
        raise ValueError("bit vectors may only contain 0 and 1")
    if length is not None and vector.size != length:
        raise DimensionError(f"expected {length} bits, got {vector.size}")
    vector.setflags(write=False)
    return vector


class BitMatrix:
    """Immutable matrix over GF(2), stored one byte per entry."""

    def __init__(self, entries: BitRows):
        array = np.array(entries, dtype=np.int64)
        if array.ndim == 1 and array.size == 0:
            array = array.reshape(0, 0)
        if array.ndim != 2:
            raise DimensionError("a bit matrix must be rectangular")
        if np.any((array != 0) & (array != 1)):
            raise ValueError("bit matrix entries must be 0 or 1")
        self._array = array.astype(np.uint8)
        self._array.setflags(write=False)

    @staticmethod
    def identity(n: int) -> BitMatrix:
        return BitMatrix(np.eye(n, dtype=np.uint8))

    @staticmethod
    def zeros(rows: int, cols: int) -> BitMatrix:
        return BitMatrix(np.zeros((rows, cols), dtype=np.uint8))

    @staticmethod
    def from_text(text: str) -> BitMatrix:
        """Reads the fixture format: one row per line, characters '0'/'1', no separators."""
        rows = [line.strip() for line in text.splitlines() if line.strip()]
        if not rows:
            return BitMatrix.zeros(0, 0)
        width = len(rows[0])
        parsed = []
        for number, row in enumerate(rows, start=1):
            if len(row) != width or set(row) - {"0", "1"}:
                raise ValueError(f"malformed matrix row {number}: {row!r}")
            parsed.append([int(ch) for ch in row])
        return BitMatrix(parsed)

    def to_text(self) -> str:
        return "\n".join("".join(str(int(b)) for b in row) for row in self._array)

    @property
    def array(self) -> np.ndarray:
        return self._array

    @property
    def rows(self) -> int:
        return self._array.shape[0]

    @property
    def cols(self) -> int:
        return self._array.shape[1]

    def row(self, index: int) -> np.ndarray:
        return self._array[index]

    def transpose(self) -> BitMatrix:
        return BitMatrix(self._array.T)

    @property
    def T(self) -> BitMatrix:
        return self.transpose()

    def select_columns(self, columns: Sequence[int]) -> BitMatrix:
        return BitMatrix(self._array[:, list(columns)])

    def select_rows(self, rows: Sequence[int]) -> BitMatrix:
        return BitMatrix(self._array[list(rows), :])

    def rank(self) -> int:
        return _rank(self._array)

    def row_space_equals(self, other: BitMatrix) -> bool:
        if self.cols != other.cols:
            return False
        r = self.rank()
        return r == other.rank() and r == _rank(np.vstack([self._array, other.array]))

    def contains(self, vector: Sequence[int]) -> bool:
        """Row-space membership of `vector`."""
        v = as_bit_vector(vector, self.cols)
        return _rank(np.vstack([self._array, v[None, :]])) == self.rank()

    def span(self) -> np.ndarray:
        """All 2^rows combinations of the rows, in binary counting order of the row mask."""
        if self.rows > 20:
            raise DimensionError(f"refusing to enumerate the span of {self.rows} rows")
        masks = np.arange(1 << self.rows, dtype=np.int64)
        selectors = (masks[:, None] >> np.arange(self.rows)) & 1
        return ((selectors @ self._array.astype(np.int64)) & 1).astype(np.uint8)

    def __matmul__(self, other: BitMatrix) -> BitMatrix:
        return gf2_matmul(self, other)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BitMatrix) and np.array_equal(
            self._array, other.array
        )

    def __hash__(self) -> int:
        return hash((self._array.shape, self._array.tobytes()))

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols})"


def gf2_matmul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    if a.cols != b.rows:
        raise DimensionError(
            f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols} over GF(2)"
        )
    product = (a.array.astype(np.int64) @ b.array.astype(np.int64)) & 1
    return BitMatrix(product)


def gf2_vecmat(u: Sequence[int], m: BitMatrix) -> np.ndarray:
    """Row vector times matrix over GF(2)."""
    v = np.asarray(u, dtype=np.int64).reshape(-1)
    if v.size != m.rows:
        raise DimensionError(f"vector of length {v.size} against {m.rows} matrix rows")
    return ((v @ m.array.astype(np.int64)) & 1).astype(np.uint8)


def _rank(array: np.ndarray) -> int:
    work = np.array(array, dtype=np.uint8, copy=True)
    rows, cols = work.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        pivots = np.nonzero(work[rank:, col])[0]
        if pivots.size == 0:
            continue
        pivot = rank + pivots[0]
        if pivot != rank:
            work[[rank, pivot]] = work[[pivot, rank]]
        others = np.nonzero(work[:, col])[0]
        for r in others:
            if r != rank:
                work[r] ^= work[rank]
        rank += 1
    return rank


def format_bits(bits: Iterable[int]) -> str:
    return "".join(str(int(b)) for b in bits)


def parse_bits(text: str) -> List[int]:
    return [int(ch) for ch in text.strip()]
