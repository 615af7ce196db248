from pathlib import Path

import numpy as np
import pytest

from golaysc.code.fixtures import read_regression_pairs
from golaysc.code.golay import codebook, encode, golay_spec, input_vector
from golaysc.decoding.fht import correlation
from golaysc.decoding.llr import tau
from golaysc.decoding.sc_decoder import (
    DecoderPath,
    list_decode,
    path_score_identity_check,
    sc_decode,
    segment_llr,
    sequential_decode,
)
from golaysc.errors import DecoderError, DimensionError
from golaysc.oracle.brute_force import max_correlation, ml_decode
from golaysc.types.data_types import OpCounter

REGRESSION_FILE = Path(__file__).parent.parent / "fixtures" / "ml_regression.txt"


@pytest.fixture(scope="module")
def spec():
    return golay_spec()


@pytest.fixture(scope="module")
def regression_pairs():
    return read_regression_pairs(REGRESSION_FILE)


def noisy_frame(rng, spec, sigma=0.7):
    info = rng.integers(0, 2, size=spec.k)
    word = encode(info, spec)
    y = 1.0 - 2.0 * word + rng.normal(0.0, sigma, size=spec.n)
    return word, 2.0 * y / sigma**2


def is_ml(codeword, y, spec):
    best = max_correlation(y, spec)
    return correlation(codeword, y) >= best - 1e-9 * max(1.0, abs(best))


def test_sc_noiseless(spec):
    result = sc_decode(np.full(24, 4.0), spec)
    assert not result.codeword.any()
    assert not result.info.any()
    assert result.score == 0.0
    assert not result.capped


def test_prefix_scores(spec):
    y = np.array([3.0, -1.0, 2.0, 5.0] * 4 + [-2.5, 4.0, 1.5, 3.0] * 2)
    path = DecoderPath(spec, y, OpCounter())
    # symbol 0 sees the boxplus of the whole first segment, symbol 16 of the whole second
    llrs = []
    for _ in range(4):
        s = path.llr()
        llrs.append(s)
        path.extend(path.forced_bit(), s)
    assert path.u[[0, 1, 2, 16]].tolist() == [0, 0, 0, 0]
    assert llrs[0] == pytest.approx(1.0)
    assert llrs[3] == pytest.approx(1.5)
    assert path.next_symbol == 3
    assert path.score == pytest.approx(sum(tau(s, 0) for s in llrs))
    assert path.score <= 0.0


def test_segment_llr_out_of_order(spec):
    path = DecoderPath(spec, np.ones(24), OpCounter())
    with pytest.raises(DecoderError):
        segment_llr(path, 0, 1)
    with pytest.raises(DecoderError):
        segment_llr(path, 1, 2)


def test_bad_inputs(spec):
    with pytest.raises(DecoderError):
        list_decode(np.ones(24), spec, list_size=0)
    with pytest.raises(DimensionError):
        sc_decode(np.ones(23), spec)


def test_list_results_are_sorted_codewords(spec, rng):
    _, y = noisy_frame(rng, spec)
    results = list_decode(y, spec, list_size=8)
    assert len(results) == 8
    scores = [r.score for r in results]
    assert scores == sorted(scores, reverse=True)
    words = {r.codeword.tobytes() for r in results}
    assert len(words) == 8
    book = {w.tobytes() for w in codebook(spec)}
    assert words <= book


def test_score_identity(spec, rng):
    for _ in range(30):
        u = rng.integers(0, 2, size=24)
        y = rng.normal(size=24) * 3.0
        r, e = path_score_identity_check(u, y, spec)
        assert r == pytest.approx(-e, abs=1e-9)
        assert e >= 0.0


def test_score_identity_single_error(spec):
    y = np.full(24, 4.0)
    y[5] = -1.0
    r, e = path_score_identity_check(np.zeros(24, dtype=np.uint8), y, spec)
    assert (r, e) == (pytest.approx(-1.0), pytest.approx(1.0))


def test_score_identity_rejects_short_input(spec):
    with pytest.raises(DimensionError):
        path_score_identity_check(np.zeros(23, dtype=np.uint8), np.full(24, 4.0), spec)


def test_list_scores_are_correlation_discrepancies(spec, rng):
    _, y = noisy_frame(rng, spec)
    for result in list_decode(y, spec, list_size=4):
        r, e = path_score_identity_check(input_vector(result.codeword, spec), y, spec)
        assert result.score == pytest.approx(r)
        assert result.score == pytest.approx(-e)


def test_scaling_does_not_change_decisions(spec, rng):
    _, y = noisy_frame(rng, spec, sigma=0.9)
    plain = list_decode(y, spec, list_size=4)
    scaled = list_decode(2.0 * y, spec, list_size=4)
    for a, b in zip(plain, scaled):
        assert np.array_equal(a.codeword, b.codeword)
        assert b.score == pytest.approx(2.0 * a.score)


def test_exhaustive_list_is_ml(spec, rng):
    _, y = noisy_frame(rng, spec, sigma=1.0)
    best = list_decode(y, spec, list_size=4096)[0]
    assert np.array_equal(best.codeword, ml_decode(y, spec).codeword)


def test_list_agrees_with_ml_on_regression_pairs(spec, regression_pairs):
    for y, word in regression_pairs:
        assert np.array_equal(list_decode(y, spec, list_size=16)[0].codeword, word)


def test_list_of_16_agrees_with_ml(spec, rng):
    for _ in range(60):
        _, y = noisy_frame(rng, spec)
        assert is_ml(list_decode(y, spec, list_size=16)[0].codeword, y, spec)


def test_sequential_matches_top_of_list(spec, rng):
    for _ in range(60):
        _, y = noisy_frame(rng, spec, sigma=0.9)
        top = list_decode(y, spec, list_size=16)[0]
        result = sequential_decode(y, spec, list_size=16)
        assert np.array_equal(result.codeword, top.codeword)
        assert result.score == pytest.approx(top.score)


def test_sequential_noiseless(spec):
    y = np.full(24, 4.0)
    result = sequential_decode(y, spec)
    assert not result.codeword.any()
    assert result.score == 0.0
    assert result.expansions == 24
    assert result.expansions < list_decode(y, spec, list_size=16)[0].expansions


def test_sequential_matches_ml_on_regression_pairs(spec, regression_pairs):
    for y, word in regression_pairs:
        result = sequential_decode(y, spec, list_size=16)
        assert np.array_equal(result.codeword, word)
        assert not result.capped


def test_sequential_cap_returns_a_codeword(spec, rng):
    _, y = noisy_frame(rng, spec, sigma=1.0)
    result = sequential_decode(y, spec, list_size=16, max_paths=1)
    assert result.capped
    book = {w.tobytes() for w in codebook(spec)}
    assert result.codeword.tobytes() in book


def test_sequential_counts_operations(spec, rng):
    _, y = noisy_frame(rng, spec)
    counter = OpCounter()
    result = sequential_decode(y, spec, counter=counter)
    assert result.ops is counter
    assert counter.summations > 0 and counter.comparisons > 0
