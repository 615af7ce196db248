"""
Two-stage maximum likelihood decoder of the (24,12,8) Golay code in its chained polar form.

Stage 1 scores every admissible (u_0^7, u_16^19) prefix with one order-8 and one order-4
Hadamard transform of the first-layer LLRs z_i = y_{2i} [+] y_{2i+1}. Stage 2 extends the
prefixes in descending order, first over the coset of the (4,3,2) code selected by u_20,
then over the coset of RM(1,3) selected by (u_9, u_10, u_12). Scores only decrease as
symbols are added, so a prefix is dropped as soon as it cannot beat the best completion.
"""

from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple, TypeVar

import numpy as np

from golaysc.code.golay import GOLAY_SEGMENTS, golay_spec
from golaysc.decoding.fht import affine_coordinates, affine_word, fht
from golaysc.decoding.llr import (
    abs_sum,
    as_llr_vector,
    boxplus_vec,
    g_step_vec,
    hard_decisions,
)
from golaysc.decoding.segment_tree import SegmentTree
from golaysc.errors import DecoderError
from golaysc.gf2.bit_matrix import gf2_vecmat
from golaysc.gf2.polar import apply_mixed_transform, polarizing_transform
from golaysc.types.data_types import BlockCandidate, DecodeResult, OpCounter, Stage1Path

T = TypeVar("T")

N = 24
FIRST_SEGMENT = slice(0, 16)
SECOND_SEGMENT = slice(16, 24)


def _insertion_sort_desc(
    items: Sequence[T], key: Callable[[T], float], counter: OpCounter
) -> List[T]:
    """
    Stable descending sort by binary insertion. Each item is first compared with the current
    last key, so presorted input costs len(items) - 1 comparisons.
    """
    ranked: List[T] = []
    keys: List[float] = []
    for item in items:
        k = key(item)
        if not keys or not counter.less(keys[-1], k):
            position = len(keys)
        else:
            # keys[-1] < k, so the insertion point is at most len - 1
            lo, hi = 0, len(keys) - 1
            while lo < hi:
                mid = (lo + hi) // 2
                if counter.less(keys[mid], k):
                    hi = mid
                else:
                    lo = mid + 1
            position = lo
        ranked.insert(position, item)
        keys.insert(position, k)
    return ranked


def _argmax_magnitude(values: np.ndarray, counter: OpCounter) -> int:
    best = 0
    for index in range(1, values.size):
        if counter.greater(abs(values[index]), abs(values[best])):
            best = index
    return best


@lru_cache(maxsize=None)
def _representatives() -> Tuple[Tuple[Tuple[int, ...], Tuple[int, ...], int, int, int, int], ...]:
    """
    The 16 stage-1 prefixes with u_7 = 0, enumerated by (u_19, u_6, u_3, u_5) as bits 0..3,
    together with the affine coordinates of u_0^7 A_3 and u_16^19 A_2.
    """
    a3 = polarizing_transform(3)
    a2 = polarizing_transform(2)
    result = []
    for e in range(16):
        u19, u6, u3, u5 = e & 1, (e >> 1) & 1, (e >> 2) & 1, (e >> 3) & 1
        head = (0, 0, 0, u3, 0, u5, u6, 0)
        tail = (0, u3, u5, u19)
        c8, a8 = affine_coordinates(gf2_vecmat(head, a3))
        c4, a4 = affine_coordinates(gf2_vecmat(tail, a2))
        result.append((head, tail, c8, a8, c4, a4))
    return tuple(result)


def _complement(head: Tuple[int, ...], tail: Tuple[int, ...]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    # u_7 and u_19 select the all-one rows, flipping both negates r
    return head[:7] + (head[7] ^ 1,), tail[:3] + (tail[3] ^ 1,)


def pair_llrs(y: Sequence[float], counter: Optional[OpCounter] = None) -> np.ndarray:
    """z_i = y_{2i} [+] y_{2i+1}, i = 0..11."""
    llr = as_llr_vector(y, N)
    return boxplus_vec(llr[0::2], llr[1::2], counter)


def rank_stage1(z: np.ndarray, counter: OpCounter) -> List[Stage1Path]:
    f8 = fht(z[:8], counter)
    f4 = fht(z[8:], counter)

    reps = _representatives()
    values = []
    for _, _, c8, a8, c4, a4 in reps:
        counter.add()
        values.append((-f8[a8] if c8 else f8[a8]) + (-f4[a4] if c4 else f4[a4]))

    order = _insertion_sort_desc(range(len(reps)), lambda e: abs(values[e]), counter)
    positives, negatives = [], []
    for e in order:
        head, tail = reps[e][0], reps[e][1]
        flipped = _complement(head, tail)
        magnitude = float(abs(values[e]))
        upper, lower = ((head, tail), flipped) if values[e] >= 0 else (flipped, (head, tail))
        positives.append(Stage1Path(head=upper[0], tail=upper[1], r=magnitude))
        negatives.append(Stage1Path(head=lower[0], tail=lower[1], r=-magnitude))
    return positives + negatives[::-1]


def stage1_enumerate(y: Sequence[float], counter: Optional[OpCounter] = None) -> List[Stage1Path]:
    """
    All 32 admissible (u_0^7, u_16^19) prefixes, best first.

    r = C(u_0^7 A_3, z_0^7) + C(u_16^19 A_2, z_8^11); twice the path score of the prefix is
    r - sum|z_j|.
    """
    counter = OpCounter() if counter is None else counter
    return rank_stage1(pair_llrs(y, counter), counter)


def _second_half_llrs(
    segment_llr: np.ndarray, first_half: Sequence[int], m: int, counter: Optional[OpCounter]
) -> np.ndarray:
    tree = SegmentTree(m, segment_llr)
    for phase, bit in enumerate(first_half):
        tree.commit(phase, int(bit))
    return g_step_vec(segment_llr[0::2], segment_llr[1::2], tree.first_branch_bits(), counter)


class PrefixCache:
    """
    Per-frame memo of the stage-2 inputs. z~ of a segment depends only on the prefix bits of
    that segment, so prefixes sharing u_16^19 (or u_0^7) reuse the LLRs and their transforms.
    """

    def __init__(self, llr: np.ndarray, counter: OpCounter):
        self.llr = llr
        self.counter = counter
        self._llrs: Dict[Tuple[int, ...], np.ndarray] = {}
        self._abs_sums: Dict[Tuple[int, ...], float] = {}
        self._tail_transforms: Dict[Tuple[Tuple[int, ...], int], np.ndarray] = {}

    def llrs(self, prefix: Tuple[int, ...]) -> np.ndarray:
        """z~ of the segment selected by the prefix length: 4 bits for u_16^19, 8 for u_0^7."""
        if prefix not in self._llrs:
            if len(prefix) == 4:
                segment, m = SECOND_SEGMENT, 3
            else:
                segment, m = FIRST_SEGMENT, 4
            self._llrs[prefix] = _second_half_llrs(self.llr[segment], prefix, m, self.counter)
        return self._llrs[prefix]

    def abs_sum(self, prefix: Tuple[int, ...]) -> float:
        if prefix not in self._abs_sums:
            self._abs_sums[prefix] = abs_sum(self.llrs(prefix), self.counter)
        return self._abs_sums[prefix]

    def tail_transform(self, tail: Tuple[int, ...], u9: int) -> np.ndarray:
        key = (tail, u9)
        if key not in self._tail_transforms:
            second = self.llrs(tail)
            leader = u9 * polarizing_transform(2).row(0)
            self._tail_transforms[key] = fht(np.where(leader == 1, -second, second), self.counter)
        return self._tail_transforms[key]


def _prefix_bits(p: Stage1Path) -> Tuple[np.ndarray, int, int]:
    u = np.zeros(N, dtype=np.uint8)
    u[0:8] = p.head
    u[16:20] = p.tail
    u3 = int(u[3])
    u9 = u3 ^ int(u[5]) ^ int(u[6]) ^ int(u[19])
    u[9] = u9
    u[20] = u9
    return u, u3, u9


def _first_segment_leader(u9: int, u10: int, u12: int) -> np.ndarray:
    a3 = polarizing_transform(3)
    return (u9 * a3.row(1)) ^ (u10 * a3.row(2)) ^ (u12 * a3.row(4))


def _fix_first_segment_coset(u: np.ndarray, u3: int) -> Tuple[int, int]:
    u10 = u3 ^ int(u[5]) ^ int(u[21])
    u12 = int(u[22]) ^ u3
    u[8] = 0
    u[10] = u10
    u[12] = u12
    return u10, u12


def stage2_extend(
    p: Stage1Path,
    y: Sequence[float],
    r_max: float,
    counter: Optional[OpCounter] = None,
    prune: bool = True,
    cache: Optional[PrefixCache] = None,
) -> Optional[BlockCandidate]:
    """
    Best completion of prefix `p` whose metric beats `r_max`, or None.

    Candidates u_20^23 are visited by descending coset correlation; the visit stops at the
    first candidate whose partial metric falls below `r_max`. With prune=False both
    orientations of every candidate are scored and nothing is skipped. A `cache` shared
    across the prefixes of one frame must have been built with the same `counter`.
    """
    counter = OpCounter() if counter is None else counter
    if cache is None:
        cache = PrefixCache(as_llr_vector(y, N), counter)
    a2, a3 = polarizing_transform(2), polarizing_transform(3)
    u, u3, u9 = _prefix_bits(p)

    tail_leader = u9 * a2.row(0)
    f1 = cache.tail_transform(p.tail, u9)
    base = p.r - cache.abs_sum(p.tail)
    counter.add()

    if prune:
        # u_23 is free, so only the better orientation of each affine class survives
        candidates = [(abs(f1[a]), 0 if f1[a] >= 0 else 1, a) for a in range(4)]
    else:
        candidates = [((-f1[a] if c else f1[a]), c, a) for a in range(4) for c in (0, 1)]
    ranked = _insertion_sort_desc(candidates, lambda candidate: candidate[0], counter)

    best = None
    for value, c, a in ranked:
        counter.add()
        rho = base + value
        if prune and counter.less(rho, r_max):
            break

        u[20:24] = gf2_vecmat(affine_word(c, a, 4) ^ tail_leader, a2)
        u10, u12 = _fix_first_segment_coset(u, u3)

        first_llrs, first_abs = cache.llrs(p.head), cache.abs_sum(p.head)
        head_leader = _first_segment_leader(u9, u10, u12)
        f0 = fht(np.where(head_leader == 1, -first_llrs, first_llrs), counter)
        a0 = _argmax_magnitude(f0, counter)
        counter.add(2)
        final = rho - first_abs + abs(f0[a0])

        if counter.greater(final, r_max):
            c0 = 0 if f0[a0] >= 0 else 1
            u[8:16] = gf2_vecmat(affine_word(c0, a0, 8) ^ head_leader, a3)
            r_max = final
            best = BlockCandidate(u=u.copy(), metric=float(final))

    return best


def _try_shortcut(p: Stage1Path, cache: PrefixCache) -> Optional[BlockCandidate]:
    """
    Hard decisions on both second-half LLR vectors; accepted when they satisfy the frozen
    constraints, in which case no correlation is lost and the metric equals r.
    """
    a2, a3 = polarizing_transform(2), polarizing_transform(3)
    u, u3, u9 = _prefix_bits(p)

    tail = gf2_vecmat(hard_decisions(cache.llrs(p.tail), cache.counter), a2)
    if tail[0] != u9:
        return None
    u[20:24] = tail
    u10, u12 = _fix_first_segment_coset(u, u3)

    head = gf2_vecmat(hard_decisions(cache.llrs(p.head), cache.counter), a3)
    if (head[0], head[1], head[2], head[4]) != (0, u9, u10, u12):
        return None
    u[8:16] = head
    return BlockCandidate(u=u, metric=p.r)


def block_decode(
    y: Sequence[float],
    shortcut: bool = False,
    prune: bool = True,
    counter: Optional[OpCounter] = None,
) -> DecodeResult:
    """
    Maximum likelihood decoding with two Hadamard-transform stages.

    With `shortcut`, each prefix is first completed by hard decisions and kept without any
    transform when those decisions satisfy the constraints. The decision is the
    maximum-correlation codeword either way.
    """
    counter = OpCounter() if counter is None else counter
    llr = as_llr_vector(y, N)
    z = pair_llrs(llr, counter)
    paths = rank_stage1(z, counter)
    cache = PrefixCache(llr, counter)

    r_max = -np.inf
    best: Optional[BlockCandidate] = None
    expansions = 0
    for p in paths:
        if prune and counter.less(p.r, r_max):
            break
        expansions += 1

        if shortcut:
            candidate = _try_shortcut(p, cache)
            if candidate is not None:
                if counter.greater(candidate.metric, r_max):
                    r_max, best = candidate.metric, candidate
                continue

        candidate = stage2_extend(p, llr, r_max, counter, prune=prune, cache=cache)
        if candidate is not None:
            r_max, best = candidate.metric, candidate

    if best is None:
        raise DecoderError("no completion found")

    spec = golay_spec()
    return DecodeResult(
        codeword=apply_mixed_transform(best.u, GOLAY_SEGMENTS),
        info=best.u[list(spec.info_positions)].copy(),
        score=0.5 * (best.metric - float(np.sum(np.abs(z)))),
        ops=counter,
        expansions=expansions,
    )
