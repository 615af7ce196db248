from functools import lru_cache
from typing import List, Sequence, Tuple

import numpy as np

from golaysc.code.fixtures import published_constraints, published_generator
from golaysc.errors import ConstructionError, DimensionError
from golaysc.gf2.bit_matrix import BitMatrix, as_bit_vector
from golaysc.gf2.constraints import constraint_set_from_v, normalize_constraints
from golaysc.gf2.polar import apply_mixed_transform, segment_length
from golaysc.types.data_types import CodeSpec, ComponentCode, ConstraintSet

GOLAY_SEGMENTS = (4, 3)

# g'(x) = x^3 + x + 1 and g''(x) = x^3 + x^2 + 1, lowest degree first
G_PRIME_POLY = (1, 1, 0, 1)
G_DOUBLE_PRIME_POLY = (1, 0, 1, 1)


def _extended_cyclic_generator(poly: Sequence[int], length: int = 7) -> BitMatrix:
    """
    Generator of the extended cyclic code with generator polynomial `poly`.

    Column 0 is the overall parity (the field element 0), columns 1..length hold the
    coefficients of x^i g(x) at positions a^0 .. a^{length-1}.
    """
    k = length - (len(poly) - 1)
    rows = []
    for shift in range(k):
        cyclic = [0] * length
        for degree, coefficient in enumerate(poly):
            cyclic[shift + degree] = coefficient
        rows.append([sum(cyclic) % 2] + cyclic)
    return BitMatrix(rows)


def build_component_codes() -> Tuple[ComponentCode, ComponentCode]:
    """
    The two (8,4,4) extended Hamming codes C' and C'' of the Turyn construction.

    Both are self-dual, so generator and check matrix coincide. Columns are in field-power
    order; use ComponentCode.standard_order() for the standard bit order.
    """
    codes = []
    for poly in (G_PRIME_POLY, G_DOUBLE_PRIME_POLY):
        generator = _extended_cyclic_generator(poly)
        if np.any((generator @ generator.T).array):
            raise ConstructionError(f"component code of {poly} is not self-dual")
        codes.append(ComponentCode(generator=generator, check=generator))
    return codes[0], codes[1]


def turyn_construct(c_prime: ComponentCode, c_double_prime: ComponentCode) -> BitMatrix:
    """
    Generator of {(u+v, u+w, u+v+w) : v, w in C', u in C''}, with both component codes
    taken in standard bit order.

    Raises:
        ConstructionError: if C' and C'' share more than the all-zero and all-one words.
    """
    g1 = c_prime.standard_order().generator
    g2 = c_double_prime.standard_order().generator

    common = {tuple(w) for w in g1.span()} & {tuple(w) for w in g2.span()}
    expected = {tuple([0] * g1.cols), tuple([1] * g1.cols)}
    if common != expected:
        raise ConstructionError(
            f"component codes intersect in {len(common)} words, the Turyn construction needs exactly 2"
        )

    zero = np.zeros_like(g1.array)
    blocks = np.block(
        [
            [g1.array, zero, g1.array],
            [zero, g1.array, g1.array],
            [g2.array, g2.array, g2.array],
        ]
    )
    return BitMatrix(blocks)


def greedy_schedule(cs: ConstraintSet, segment_sizes: Sequence[int]) -> Tuple[int, ...]:
    """
    Orders the input symbols of all segments so that frozen symbols are processed as early
    as their constraints allow.

    Inside a segment symbols are taken in successive order, so at each step the candidates are
    the next symbols of every segment. An eligible frozen candidate (all constraint symbols
    already scheduled) is preferred, dynamic before static, then the smallest index; otherwise
    the smallest-index information candidate is taken.
    """
    sizes = [1 << m for m in segment_sizes]
    offsets = np.concatenate([[0], np.cumsum(sizes)[:-1]]).astype(int)
    n = sum(sizes)
    cursor = [0] * len(sizes)
    scheduled = set()
    order: List[int] = []

    while len(order) < n:
        candidates = [
            int(offsets[s] + cursor[s]) for s in range(len(sizes)) if cursor[s] < sizes[s]
        ]
        eligible = [
            i
            for i in candidates
            if cs.is_frozen(i) and all(j in scheduled for j in cs.constraints[i])
        ]
        if eligible:
            chosen = min(eligible, key=lambda i: (len(cs.constraints[i]) == 0, i))
        else:
            information = [i for i in candidates if not cs.is_frozen(i)]
            if not information:
                raise ConstructionError(
                    f"no symbol can be scheduled after {order}, constraints are circular"
                )
            chosen = min(information)

        order.append(chosen)
        scheduled.add(chosen)
        segment = int(np.searchsorted(offsets, chosen, side="right")) - 1
        cursor[segment] += 1

    return tuple(order)


def schedule_is_valid(
    cs: ConstraintSet, segment_sizes: Sequence[int], schedule: Sequence[int]
) -> bool:
    """Replays a schedule: permutation, successive order inside segments, constraints first."""
    n = segment_length(segment_sizes)
    if sorted(schedule) != list(range(n)):
        return False
    position = {symbol: step for step, symbol in enumerate(schedule)}
    start = 0
    for m in segment_sizes:
        steps = [position[i] for i in range(start, start + (1 << m))]
        if steps != sorted(steps):
            return False
        start += 1 << m
    for i in cs.frozen_set:
        if any(position[j] > position[i] for j in cs.constraints[i]):
            return False
    return True


@lru_cache(maxsize=None)
def golay_spec() -> CodeSpec:
    """
    The (24,12,8) extended Golay code as a chained polar subcode with A = diag(A_4, A_3).

    G is built by the Turyn construction and checked against the published matrix; the
    published constraint matrix V is used once its frozen set and row space agree with the
    normalized H A^T.
    """
    g = golay_generator()
    if not g.row_space_equals(published_generator()):
        raise ConstructionError("Turyn construction disagrees with the published generator")

    # the code is self-dual, H = G
    derived_v, derived_cs = normalize_constraints(g, GOLAY_SEGMENTS)
    v = published_constraints()
    cs = constraint_set_from_v(v)
    if cs.frozen_set != derived_cs.frozen_set or not v.row_space_equals(derived_v):
        raise ConstructionError("published constraint matrix does not match H A^T")

    schedule = greedy_schedule(cs, GOLAY_SEGMENTS)
    return CodeSpec(
        n=g.cols,
        k=g.rows,
        segment_sizes=GOLAY_SEGMENTS,
        v=v,
        cs=cs,
        schedule=schedule,
        info_positions=cs.info_positions,
    )


def golay_generator() -> BitMatrix:
    c_prime, c_double_prime = build_component_codes()
    return turyn_construct(c_prime, c_double_prime)


def encode(info: Sequence[int], spec: CodeSpec) -> np.ndarray:
    """
    Places info bits at the information positions (increasing u-index), fills frozen
    symbols from their constraints in schedule order and applies the mixed transform.
    """
    bits = as_bit_vector(info)
    if bits.size != spec.k:
        raise DimensionError(f"expected {spec.k} information bits, got {bits.size}")
    u = np.zeros(spec.n, dtype=np.uint8)
    u[list(spec.info_positions)] = bits
    for i in spec.schedule:
        if spec.cs.is_frozen(i):
            u[i] = spec.cs.value(i, u)
    return apply_mixed_transform(u, spec.segment_sizes)


def input_vector(codeword: Sequence[int], spec: CodeSpec) -> np.ndarray:
    """u = c A, using that every A_m is an involution."""
    return apply_mixed_transform(codeword, spec.segment_sizes)


def info_bits(codeword: Sequence[int], spec: CodeSpec) -> np.ndarray:
    return as_bit_vector(input_vector(codeword, spec)[list(spec.info_positions)])


@lru_cache(maxsize=8)
def codebook(spec: CodeSpec) -> np.ndarray:
    """All 2^k codewords; row index bit t is information bit t."""
    rows = []
    for t in range(spec.k):
        unit = np.zeros(spec.k, dtype=np.uint8)
        unit[t] = 1
        rows.append(encode(unit, spec))
    words = BitMatrix(np.array(rows)).span()
    words.setflags(write=False)
    return words
