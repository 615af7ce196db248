from typing import List, Optional, Sequence

import numpy as np

from golaysc.decoding.llr import boxplus_vec, g_step_vec
from golaysc.errors import DecoderError, DimensionError
from golaysc.types.data_types import OpCounter


class SegmentTree:
    """
    Layered LLR and partial-sum workspace of one polar segment of length 2^m.

    Layer 0 holds the channel LLRs (block b is channel position b), layer m the single
    LLR of the phase being decided. Block b of layer l combines blocks 2b and 2b+1 of
    layer l-1. Phases must be decided in successive order: llr(phase) then commit(phase, bit).
    """

    def __init__(self, m: int, channel_llr: Sequence[float], counter: Optional[OpCounter] = None):
        llr = np.asarray(channel_llr, dtype=float).reshape(-1)
        if llr.size != 1 << m:
            raise DimensionError(f"segment of order {m} needs {1 << m} LLRs, got {llr.size}")
        self.m = m
        self.counter = counter
        self._p: List[np.ndarray] = [llr.copy()] + [
            np.zeros(1 << (m - layer)) for layer in range(1, m + 1)
        ]
        self._c: List[np.ndarray] = [
            np.zeros((1 << (m - layer), 2), dtype=np.uint8) for layer in range(m + 1)
        ]
        self._phase = 0
        self._last_computed = -1

    @property
    def size(self) -> int:
        return 1 << self.m

    @property
    def next_phase(self) -> int:
        return self._phase

    @property
    def complete(self) -> bool:
        return self._phase == self.size

    def clone(self) -> "SegmentTree":
        other = SegmentTree.__new__(SegmentTree)
        other.m = self.m
        other.counter = self.counter
        other._p = [p.copy() for p in self._p]
        other._c = [c.copy() for c in self._c]
        other._phase = self._phase
        other._last_computed = self._last_computed
        return other

    def _check_phase(self, phase: int):
        if phase != self._phase:
            raise DecoderError(
                f"phase {phase} requested, but the segment is at phase {self._phase}"
            )

    def llr(self, phase: int) -> float:
        """S_m^(phase) given the committed bits of all earlier phases."""
        self._check_phase(phase)
        if self._last_computed != phase:
            if phase > 0 and self._last_computed != phase - 1:
                lowest = 1
            else:
                lowest = self._lowest_stale_layer(phase)
            for layer in range(lowest, self.m + 1):
                self._compute_layer(layer, phase >> (self.m - layer))
            self._last_computed = phase
        return float(self._p[self.m][0])

    def _lowest_stale_layer(self, phase: int) -> int:
        # walking down, layers keep recomputing while their local phase is even
        layer = self.m
        while layer > 1 and (phase >> (self.m - layer)) % 2 == 0:
            layer -= 1
        return layer

    def _compute_layer(self, layer: int, local_phase: int):
        below = self._p[layer - 1]
        left, right = below[0::2], below[1::2]
        if local_phase % 2 == 0:
            self._p[layer] = boxplus_vec(left, right, self.counter)
        else:
            self._p[layer] = g_step_vec(left, right, self._c[layer][:, 0], self.counter)

    def commit(self, phase: int, bit: int):
        self._check_phase(phase)
        if bit not in (0, 1):
            raise DecoderError(f"bit must be 0 or 1, got {bit}")
        self._c[self.m][0, phase % 2] = bit
        layer, local_phase = self.m, phase
        while layer > 0 and local_phase % 2 == 1:
            half = local_phase >> 1
            upper = self._c[layer]
            lower = self._c[layer - 1]
            lower[0::2, half % 2] = upper[:, 0] ^ upper[:, 1]
            lower[1::2, half % 2] = upper[:, 1]
            layer, local_phase = layer - 1, half
        self._phase += 1

    def first_branch_bits(self) -> np.ndarray:
        """
        x = u_0^{n/2-1} A_{m-1}, the bits that steer the g-steps of the second half.

        Available once the first half of the segment has been committed.
        """
        if self.m == 0 or self._phase < self.size // 2:
            raise DecoderError("first half of the segment is not committed yet")
        return self._c[1][:, 0].copy()

    def codeword(self) -> np.ndarray:
        if not self.complete:
            raise DecoderError(f"segment decoded up to phase {self._phase} of {self.size}")
        return self._c[0][:, 0].copy()
