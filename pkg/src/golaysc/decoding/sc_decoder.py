from functools import cmp_to_key
import heapq
import itertools
from typing import List, Optional, Sequence, Tuple

import numpy as np

from golaysc.code.golay import golay_spec
from golaysc.decoding.llr import as_llr_vector, hard_decision, tau
from golaysc.decoding.segment_tree import SegmentTree
from golaysc.errors import DecoderError
from golaysc.gf2.bit_matrix import as_bit_vector
from golaysc.gf2.polar import apply_mixed_transform
from golaysc.types.data_types import CodeSpec, DecodeResult, OpCounter


class DecoderPath:
    """
    One hypothesis u_0^{step-1} (in schedule order) with a SegmentTree per segment.

    score is the min-sum path score R: the sum of tau penalties of every processed symbol,
    frozen ones included. It never increases.
    """

    def __init__(self, spec: CodeSpec, llr: np.ndarray, counter: OpCounter):
        self.spec = spec
        self.counter = counter
        self.trees = [
            SegmentTree(m, llr[offset : offset + (1 << m)], counter)
            for offset, m in zip(spec.segment_offsets, spec.segment_sizes)
        ]
        self.u = np.zeros(spec.n, dtype=np.uint8)
        self.step = 0
        self.score = 0.0
        self.last_bit = 0

    def clone(self) -> "DecoderPath":
        other = DecoderPath.__new__(DecoderPath)
        other.spec = self.spec
        other.counter = self.counter
        other.trees = [tree.clone() for tree in self.trees]
        other.u = self.u.copy()
        other.step = self.step
        other.score = self.score
        other.last_bit = self.last_bit
        return other

    @property
    def complete(self) -> bool:
        return self.step == self.spec.n

    @property
    def next_symbol(self) -> int:
        return self.spec.schedule[self.step]

    def llr(self) -> float:
        segment, phase = self.spec.locate(self.next_symbol)
        return segment_llr(self, segment, phase)

    def forced_bit(self) -> int:
        return self.spec.cs.value(self.next_symbol, self.u)

    def extend(self, bit: int, s: float):
        """Appends the next scheduled symbol with value `bit`, whose LLR is `s`."""
        index = self.next_symbol
        segment, phase = self.spec.locate(index)
        penalty = tau(s, bit, self.counter)
        if penalty:
            self.counter.add()
            self.score += penalty
        self.u[index] = bit
        self.trees[segment].commit(phase, bit)
        self.last_bit = bit
        self.step += 1

    def codeword(self) -> np.ndarray:
        return np.concatenate([tree.codeword() for tree in self.trees])

    def result(self, expansions: int = 0, capped: bool = False) -> DecodeResult:
        return DecodeResult(
            codeword=self.codeword(),
            info=self.u[list(self.spec.info_positions)].copy(),
            score=self.score,
            ops=self.counter,
            expansions=expansions,
            capped=capped,
        )


def segment_llr(path: DecoderPath, segment: int, phase: int) -> float:
    """
    S_{m_i}^(phase) of segment `segment` on the given path.

    Raises:
        DecoderError: if `phase` is not the next undecided phase of the segment.
    """
    return path.trees[segment].llr(phase)


def _rank(paths: List[DecoderPath], counter: OpCounter) -> List[DecoderPath]:
    """Stable sort by descending score, a path ending in 0 wins a tie."""

    def compare(a: DecoderPath, b: DecoderPath) -> int:
        counter.compare()
        if a.score != b.score:
            return -1 if a.score > b.score else 1
        return a.last_bit - b.last_bit

    return sorted(paths, key=cmp_to_key(compare))


def _prepare(y, spec: Optional[CodeSpec], list_size: int) -> Tuple[CodeSpec, np.ndarray]:
    spec = golay_spec() if spec is None else spec
    if list_size < 1:
        raise DecoderError(f"list size must be at least 1, got {list_size}")
    return spec, as_llr_vector(y, spec.n)


def list_decode(
    y: Sequence[float],
    spec: Optional[CodeSpec] = None,
    list_size: int = 16,
    counter: Optional[OpCounter] = None,
) -> List[DecodeResult]:
    """
    Chained SC list decoding over the schedule of `spec`.

    Returns the surviving completed paths, best score first.
    """
    spec, llr = _prepare(y, spec, list_size)
    counter = OpCounter() if counter is None else counter
    paths = [DecoderPath(spec, llr, counter)]
    expansions = 0

    for index in spec.schedule:
        if spec.cs.is_frozen(index):
            for path in paths:
                path.extend(path.forced_bit(), path.llr())
            expansions += len(paths)
            continue

        candidates = []
        for path in paths:
            s = path.llr()
            zero, one = path.clone(), path
            zero.extend(0, s)
            one.extend(1, s)
            candidates.extend((zero, one))
        expansions += len(candidates)
        paths = _rank(candidates, counter)[:list_size]

    return [path.result(expansions=expansions) for path in paths]


def sc_decode(
    y: Sequence[float], spec: Optional[CodeSpec] = None, counter: Optional[OpCounter] = None
) -> DecodeResult:
    """Plain chained SC decoding, list size 1."""
    return list_decode(y, spec, list_size=1, counter=counter)[0]


class _QueueEntry:
    """Priority queue item; every ordering test is charged to the counter."""

    __slots__ = ("path", "order", "counter")

    def __init__(self, path: DecoderPath, order: int, counter: OpCounter):
        self.path = path
        self.order = order
        self.counter = counter

    def __lt__(self, other: "_QueueEntry") -> bool:
        self.counter.compare()
        if self.path.score != other.path.score:
            return self.path.score > other.path.score
        if self.path.last_bit != other.path.last_bit:
            return self.path.last_bit < other.path.last_bit
        return self.order < other.order


def _finish_greedily(path: DecoderPath) -> DecoderPath:
    while not path.complete:
        s = path.llr()
        bit = path.forced_bit() if path.spec.cs.is_frozen(path.next_symbol) else hard_decision(s)
        path.extend(bit, s)
    return path


def sequential_decode(
    y: Sequence[float],
    spec: Optional[CodeSpec] = None,
    list_size: int = 16,
    max_paths: int = 4096,
    counter: Optional[OpCounter] = None,
) -> DecodeResult:
    """
    Best-first (stack) search over the path tree.

    The best path in the queue is extended by its next scheduled symbol; at most `list_size`
    paths are extended at any schedule position. The first completed path to reach the top
    of the queue is returned. If the queue grows past `max_paths`, the deepest queued path
    is finished by hard decisions and the result is flagged as capped.
    """
    spec, llr = _prepare(y, spec, list_size)
    counter = OpCounter() if counter is None else counter
    order = itertools.count()
    queue = [_QueueEntry(DecoderPath(spec, llr, counter), next(order), counter)]
    extended_at = [0] * (spec.n + 1)
    expansions = 0

    while queue:
        path = heapq.heappop(queue).path
        if path.complete:
            return path.result(expansions=expansions)
        if extended_at[path.step] >= list_size:
            continue
        extended_at[path.step] += 1
        expansions += 1

        s = path.llr()
        if spec.cs.is_frozen(path.next_symbol):
            path.extend(path.forced_bit(), s)
            children = [path]
        else:
            zero, one = path.clone(), path
            zero.extend(0, s)
            one.extend(1, s)
            children = [zero, one]
        for child in children:
            heapq.heappush(queue, _QueueEntry(child, next(order), counter))

        if len(queue) > max_paths:
            deepest = max(queue, key=lambda entry: (entry.path.step, entry.path.score)).path
            return _finish_greedily(deepest).result(expansions=expansions, capped=True)

    raise DecoderError("search queue ran empty before a path completed")


def path_score_identity_check(
    u: Sequence[int], y: Sequence[float], spec: Optional[CodeSpec] = None
) -> Tuple[float, float]:
    """
    Runs the score recursion over the full input vector u and returns (r, e).

    r is the path score, e the correlation discrepancy of c = uA against y. The two satisfy
    r = -e.
    Raises DimensionError when u does not hold spec.n bits.
    """
    spec = golay_spec() if spec is None else spec
    llr = as_llr_vector(y, spec.n)
    bits = as_bit_vector(u, spec.n)
    path = DecoderPath(spec, llr, OpCounter())
    for index in spec.schedule:
        path.extend(int(bits[index]), path.llr())
    codeword = apply_mixed_transform(bits, spec.segment_sizes)
    e = -sum(tau(s, int(c)) for s, c in zip(llr, codeword))
    return path.score, e
