from .bit_matrix import BitMatrix, as_bit_vector, gf2_matmul, gf2_vecmat
from .polar import (
    apply_mixed_transform,
    bit_reversal_perm,
    mixed_transform,
    polarizing_transform,
)
