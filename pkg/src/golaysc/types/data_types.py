from __future__ import annotations
from dataclasses import dataclass, field
from enum import Enum
import math
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from golaysc.errors import ConstructionError, DecoderError
from golaysc.gf2.bit_matrix import BitMatrix


class DecoderKind(Enum):
    SC = "sc"
    LIST = "list"
    SEQUENTIAL = "seq"
    BLOCK = "block"
    BLOCK_SHORTCUT = "block+shortcut"
    ML = "ml"

    @staticmethod
    def parse(name: str) -> DecoderKind:
        mapping = {
            "sc": DecoderKind.SC,
            "list": DecoderKind.LIST,
            "seq": DecoderKind.SEQUENTIAL,
            "sequential": DecoderKind.SEQUENTIAL,
            "block": DecoderKind.BLOCK,
            "block+shortcut": DecoderKind.BLOCK_SHORTCUT,
            "ml": DecoderKind.ML,
        }
        kind = mapping.get(name.strip().lower())
        if kind is None:
            raise DecoderError(
                f"unknown decoder {name!r}, expected one of {sorted(mapping)}"
            )
        return kind


@dataclass
class OpCounter:
    """
    Real-valued operation counts of one decode.

    Convention: every real addition or subtraction is one summation (an order-N FHT
    costs N*log2(N)), every two-operand min/max, sign-agreement test and sort
    comparison is one comparison. Absolute values, negations and bit operations are free.
    """

    summations: int = 0
    comparisons: int = 0

    def add(self, count: int = 1):
        self.summations += count

    def compare(self, count: int = 1):
        self.comparisons += count

    def less(self, a: float, b: float) -> bool:
        self.comparisons += 1
        return a < b

    def greater(self, a: float, b: float) -> bool:
        self.comparisons += 1
        return a > b

    @property
    def total(self) -> int:
        return self.summations + self.comparisons


@dataclass(frozen=True)
class ConstraintSet:
    """
    Dynamic freezing constraints u_i = sum_{j in constraints[i]} u_j for every frozen i.

    rows[i] is the index of the constraint matrix row whose last non-zero entry sits in column i.
    """

    n: int
    frozen_set: Tuple[int, ...]
    constraints: Dict[int, Tuple[int, ...]]
    rows: Dict[int, int]

    def __post_init__(self):
        if tuple(sorted(self.frozen_set)) != tuple(self.frozen_set):
            raise ConstructionError("frozen set must be sorted")
        if set(self.constraints) != set(self.frozen_set):
            raise ConstructionError("every frozen index needs exactly one constraint")
        for i, deps in self.constraints.items():
            if any(j >= i for j in deps):
                raise ConstructionError(
                    f"constraint for u_{i} refers to a later symbol: {deps}"
                )
        if len(set(self.rows.values())) != len(self.rows):
            raise ConstructionError("distinct frozen symbols must map to distinct rows")

    @property
    def info_positions(self) -> Tuple[int, ...]:
        frozen = set(self.frozen_set)
        return tuple(i for i in range(self.n) if i not in frozen)

    def is_frozen(self, index: int) -> bool:
        return index in self.constraints

    def value(self, index: int, u: Sequence[int]) -> int:
        """Value forced on frozen symbol `index` by the already fixed symbols of u."""
        bit = 0
        for j in self.constraints[index]:
            bit ^= int(u[j])
        return bit

    def resolved(self) -> Dict[int, FrozenSet[int]]:
        """Each frozen symbol written as a sum of information symbols only."""
        result: Dict[int, FrozenSet[int]] = {}
        for i in self.frozen_set:
            acc: FrozenSet[int] = frozenset()
            for j in self.constraints[i]:
                acc = acc ^ (result[j] if j in result else frozenset((j,)))
            result[i] = acc
        return result

    def describe(self) -> List[str]:
        lines = []
        for i in self.frozen_set:
            deps = self.constraints[i]
            rhs = "+".join(f"u{j}" for j in deps) if deps else "0"
            lines.append(f"u{i}={rhs}")
        return lines


@dataclass(frozen=True)
class ComponentCode:
    """An (8,4,4) extended Hamming code, columns in field-power order 0, a^0, ..., a^6."""

    generator: BitMatrix
    check: BitMatrix

    # positions of 0, 1, a, a^3, a^2, a^6, a^4, a^5 in the field-power order
    STANDARD_BIT_ORDER = (0, 1, 2, 4, 3, 7, 5, 6)

    def standard_order(self) -> ComponentCode:
        order = list(self.STANDARD_BIT_ORDER)
        return ComponentCode(
            generator=self.generator.select_columns(order),
            check=self.check.select_columns(order),
        )


@dataclass(frozen=True, eq=False)
class CodeSpec:
    n: int
    k: int
    segment_sizes: Tuple[int, ...]
    v: BitMatrix
    cs: ConstraintSet
    schedule: Tuple[int, ...]
    info_positions: Tuple[int, ...]

    @property
    def segment_offsets(self) -> Tuple[int, ...]:
        offsets, start = [], 0
        for m in self.segment_sizes:
            offsets.append(start)
            start += 1 << m
        return tuple(offsets)

    def locate(self, index: int) -> Tuple[int, int]:
        """(segment, local phase) of global input symbol `index`."""
        for segment, (offset, m) in enumerate(
            zip(self.segment_offsets, self.segment_sizes)
        ):
            if offset <= index < offset + (1 << m):
                return segment, index - offset
        raise IndexError(f"symbol {index} outside of a length {self.n} code")


@dataclass(eq=False)
class DecodeResult:
    codeword: np.ndarray
    info: np.ndarray
    score: float
    ops: OpCounter
    expansions: int = 0
    capped: bool = False


@dataclass(frozen=True)
class Stage1Path:
    """
    A (u_0^7, u_16^19) prefix of the block decoder.

    r is twice the path score with the constant -sum|z_j| dropped.
    """

    head: Tuple[int, ...]
    tail: Tuple[int, ...]
    r: float


@dataclass
class BlockCandidate:
    """Full input vector found by the second stage, with its metric on the same scale as r."""

    u: np.ndarray
    metric: float


@dataclass(frozen=True)
class ChannelConfig:
    eb_n0_db: float
    code_rate: float = 0.5
    seed: int = 0

    @property
    def noise_variance(self) -> float:
        return 1.0 / (2.0 * self.code_rate * 10 ** (self.eb_n0_db / 10.0))

    @property
    def sigma(self) -> float:
        return math.sqrt(self.noise_variance)


@dataclass(frozen=True)
class StopRule:
    min_frames: int = 100000
    min_errors: int = 200
    max_frames: Optional[int] = None

    def done(self, frames: int, errors: int) -> bool:
        if self.max_frames is not None and frames >= self.max_frames:
            return True
        return frames >= self.min_frames and errors >= self.min_errors


CSV_HEADER = "eb_n0_db,frames,frame_errors,fer,avg_sums,avg_cmps,max_ops,ml_agreement"


@dataclass
class SimRecord:
    eb_n0_db: float
    frames_run: int
    frame_errors: int
    avg_summations: float
    avg_comparisons: float
    max_total_ops: int
    ml_agreement_rate: float

    @property
    def fer(self) -> float:
        return self.frame_errors / self.frames_run if self.frames_run else 0.0

    def to_csv_row(self) -> str:
        return (
            f"{self.eb_n0_db:.2f},{self.frames_run},{self.frame_errors},"
            f"{self.fer:.8f},{self.avg_summations:.3f},{self.avg_comparisons:.3f},"
            f"{self.max_total_ops},{self.ml_agreement_rate:.6f}"
        )


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class LogMessagePoint:
    message: str
    stacktrace: str
    level: str
    timestamp: int = 0


@dataclass
class FrameOutcome:
    """Per-frame measurements aggregated by the simulation harness."""

    frame_error: bool
    summations: int
    comparisons: int
    ml_agreement: bool = field(default=True)
