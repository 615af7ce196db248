"""Structural self-checks of the Golay polar construction, run by `golaysc verify`."""

from typing import Callable, List, Optional, Sequence

import numpy as np

from golaysc.code.fixtures import published_constraints, published_generator
from golaysc.code.golay import (
    GOLAY_SEGMENTS,
    golay_generator,
    golay_spec,
    input_vector,
    schedule_is_valid,
)
from golaysc.decoding.block_decoder import block_decode
from golaysc.decoding.fht import correlation, fht, hadamard_matrix
from golaysc.decoding.sc_decoder import path_score_identity_check
from golaysc.gf2.bit_matrix import BitMatrix
from golaysc.gf2.constraints import (
    constraint_set_from_v,
    normalize_constraints,
    satisfies_constraints,
)
from golaysc.oracle.brute_force import max_correlation, weight_distribution
from golaysc.types.data_types import CheckResult
from golaysc.utils.logging import log_exception

GOLAY_WEIGHTS = {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}


def _check(name: str, test: Callable[[], Optional[str]]) -> CheckResult:
    """`test` returns None on success or a failure description."""
    try:
        problem = test()
    except Exception as e:
        log_exception(e, f"check {name} raised", stdout=False)
        problem = f"raised {type(e).__name__}: {e}"
    return CheckResult(name=name, passed=problem is None, detail=problem or "")


def run_verification(
    generator: Optional[BitMatrix] = None,
    constraints: Optional[BitMatrix] = None,
    schedule: Optional[Sequence[int]] = None,
    seed: int = 0,
    trials: int = 20,
) -> List[CheckResult]:
    """
    Runs every structural check. The stored fixtures and the built schedule are used unless
    replacements are passed in.
    """
    fixture_g = published_generator() if generator is None else generator
    fixture_v = published_constraints() if constraints is None else constraints
    spec = golay_spec()
    schedule = spec.schedule if schedule is None else tuple(schedule)
    g = golay_generator()
    rng = np.random.default_rng(seed)

    def generator_matches():
        if not g.row_space_equals(fixture_g):
            return "Turyn generator and stored G span different codes"

    def self_dual():
        if np.any((fixture_g @ fixture_g.T).array):
            return "G G^T is not zero"

    def weights():
        found = weight_distribution(fixture_g)
        if found != GOLAY_WEIGHTS:
            return f"weight distribution {found}"

    def constraints_match():
        derived_v, derived_cs = normalize_constraints(fixture_g, GOLAY_SEGMENTS)
        cs = constraint_set_from_v(fixture_v)
        if cs.frozen_set != derived_cs.frozen_set:
            return f"frozen set {cs.frozen_set}, expected {derived_cs.frozen_set}"
        if not fixture_v.row_space_equals(derived_v):
            return "V does not span the rows of H A^T"

    def constraints_hold():
        for index in range(fixture_g.rows):
            u = input_vector(fixture_g.row(index), spec)
            if not satisfies_constraints(u, fixture_v):
                return f"row {index} of G violates the constraints"

    def schedule_valid():
        if not schedule_is_valid(spec.cs, spec.segment_sizes, schedule):
            return f"schedule {','.join(map(str, schedule))} breaks segment order or a dependency"

    def fht_matches_naive():
        for n in (2, 4, 8, 16):
            z = rng.normal(size=n)
            if not np.allclose(fht(z), hadamard_matrix(n) @ z, rtol=1e-9, atol=1e-12):
                return f"order {n} transform differs from direct correlation"

    def score_identity():
        for _ in range(trials):
            u = rng.integers(0, 2, size=spec.n)
            y = rng.normal(size=spec.n) * 3.0
            r, e = path_score_identity_check(u, y, spec)
            if abs(r + e) > 1e-9 * max(1.0, abs(e)):
                return f"path score {r} against correlation discrepancy {e}"

    def block_is_ml():
        for _ in range(trials):
            y = 2.0 + rng.normal(size=spec.n) * 1.5
            decided = correlation(block_decode(y).codeword, y)
            best = max_correlation(y, spec)
            if decided < best - 1e-9 * max(1.0, abs(best)):
                return f"block decoder correlation {decided} below maximum {best}"

    return [
        _check("generator_row_space", generator_matches),
        _check("self_dual", self_dual),
        _check("weight_distribution", weights),
        _check("constraint_matrix", constraints_match),
        _check("constraints_hold_on_codewords", constraints_hold),
        _check("schedule_dependencies", schedule_valid),
        _check("fht_matches_naive", fht_matches_naive),
        _check("score_identity", score_identity),
        _check("block_decoder_is_ml", block_is_ml),
    ]
