from typing import Sequence, Tuple

import numpy as np

from golaysc.errors import ConstructionError, DimensionError, RankError
from golaysc.gf2.bit_matrix import BitMatrix
from golaysc.gf2.polar import mixed_transform, segment_length
from golaysc.types.data_types import ConstraintSet


def normalize_constraints(
    h: BitMatrix, segment_sizes: Sequence[int]
) -> Tuple[BitMatrix, ConstraintSet]:
    """
    Brings H A^T into a constraint matrix V whose rows end in distinct columns.

    Elimination pivots on the last non-zero position (right to left) and clears each pivot
    column from every other row, so each frozen symbol is expressed over information
    symbols only. Rows of V are ordered by their last non-zero column.

    Raises:
        DimensionError: if H does not have sum 2^{m_i} columns.
        RankError: if H is not of full row rank.
    """
    n = segment_length(segment_sizes)
    if h.cols != n:
        raise DimensionError(
            f"check matrix has {h.cols} columns, segments {tuple(segment_sizes)} need {n}"
        )

    work = (h @ mixed_transform(segment_sizes).T).array.copy()
    remaining = list(range(work.shape[0]))
    pivot_of = {}

    for col in range(n - 1, -1, -1):
        candidates = [row for row in remaining if work[row, col]]
        if not candidates:
            continue
        pivot = candidates[0]
        remaining.remove(pivot)
        pivot_of[pivot] = col
        for row in np.nonzero(work[:, col])[0]:
            if row != pivot:
                work[row] ^= work[pivot]

    if remaining:
        raise RankError(
            f"check matrix has rank {len(pivot_of)}, expected {work.shape[0]}"
        )

    order = sorted(pivot_of, key=lambda row: pivot_of[row])
    v = BitMatrix(work[order])
    return v, constraint_set_from_v(v)


def constraint_set_from_v(v: BitMatrix) -> ConstraintSet:
    """Reads frozen set and dynamic constraints off a constraint matrix."""
    constraints, rows = {}, {}
    for index in range(v.rows):
        support = np.nonzero(v.row(index))[0]
        if support.size == 0:
            raise RankError(f"constraint row {index} is zero")
        last = int(support[-1])
        if last in rows:
            raise ConstructionError(
                f"rows {rows[last]} and {index} both end in column {last}"
            )
        rows[last] = index
        constraints[last] = tuple(int(j) for j in support[:-1])
    return ConstraintSet(
        n=v.cols,
        frozen_set=tuple(sorted(rows)),
        constraints=constraints,
        rows=rows,
    )


def satisfies_constraints(u: Sequence[int], v: BitMatrix) -> bool:
    """u V^T = 0."""
    bits = np.asarray(u, dtype=np.int64)
    return not np.any((v.array.astype(np.int64) @ bits) & 1)
