"""Exhaustive references for the fast decoders."""

import itertools
from collections import Counter
from typing import Dict, Optional, Sequence

import numpy as np

from golaysc.code.golay import codebook, golay_spec, info_bits
from golaysc.decoding.llr import as_llr_vector, tau
from golaysc.errors import DimensionError
from golaysc.gf2.bit_matrix import BitMatrix, gf2_vecmat
from golaysc.gf2.polar import polarizing_transform
from golaysc.types.data_types import CodeSpec, DecodeResult, OpCounter

MAX_ORACLE_ORDER = 3


def correlations(y: Sequence[float], spec: Optional[CodeSpec] = None) -> np.ndarray:
    """C(c, y) for every codeword c, in codebook order."""
    spec = golay_spec() if spec is None else spec
    llr = as_llr_vector(y, spec.n)
    return (1.0 - 2.0 * codebook(spec)) @ llr


def ml_decode(y: Sequence[float], spec: Optional[CodeSpec] = None) -> DecodeResult:
    """
    The maximum-correlation codeword. Ties go to the first codeword in codebook order.

    score is -E, the correlation discrepancy, so it is comparable with the SC path scores.
    """
    spec = golay_spec() if spec is None else spec
    llr = as_llr_vector(y, spec.n)
    scores = correlations(llr, spec)
    best = int(np.argmax(scores))
    word = codebook(spec)[best].copy()
    return DecodeResult(
        codeword=word,
        info=info_bits(word, spec).copy(),
        score=-0.5 * (float(np.sum(np.abs(llr))) - float(scores[best])),
        ops=OpCounter(),
    )


def max_correlation(y: Sequence[float], spec: Optional[CodeSpec] = None) -> float:
    return float(np.max(correlations(y, spec)))


def weight_distribution(g: BitMatrix) -> Dict[int, int]:
    """
    Weight enumerator of the row space of g by enumerating all 2^rows combinations.

    Raises:
        DimensionError: if g has more than 20 rows.
    """
    if g.rows > 20:
        raise DimensionError(f"weight enumeration of {g.rows} rows is not supported")
    if g.rows == 0:
        return {0: 1}
    words = np.unique(g.span(), axis=0)
    return dict(sorted(Counter(int(w) for w in words.sum(axis=1)).items()))


def brute_force_path_llr(m: int, y: Sequence[float], prefix: Sequence[int]) -> float:
    """
    Min-sum LLR of symbol u_i (i = len(prefix)) of a single length 2^m polar segment.

    The difference between the best score over continuations with u_i = 0 and with
    u_i = 1, where the score of a full u is -E(u A_m, y).

    Raises:
        DimensionError: if m exceeds 3 or the prefix is too long.
    """
    if m > MAX_ORACLE_ORDER:
        raise DimensionError(f"order {m} is too large for exhaustive search")
    n = 1 << m
    llr = as_llr_vector(y, n)
    i = len(prefix)
    if i >= n:
        raise DimensionError(f"prefix of length {i} leaves no symbol in a length {n} segment")

    transform = polarizing_transform(m)
    best = {0: -np.inf, 1: -np.inf}
    for bit in (0, 1):
        for rest in itertools.product((0, 1), repeat=n - i - 1):
            u = list(prefix) + [bit] + list(rest)
            c = gf2_vecmat(u, transform)
            score = sum(tau(s, int(b)) for s, b in zip(llr, c))
            best[bit] = max(best[bit], score)
    return best[0] - best[1]
