import numpy as np

from golaysc.code.fixtures import published_constraints, published_generator
from golaysc.code.golay import golay_spec
from golaysc.gf2.bit_matrix import BitMatrix
from golaysc.verify import run_verification


def by_name(results):
    return {check.name: check for check in results}


def test_stock_construction_passes():
    results = run_verification(trials=5)
    assert len(results) == 9
    failed = [check.name for check in results if not check.passed]
    assert failed == []


def test_corrupted_generator():
    g = published_generator().array.copy()
    g[0, 0] ^= 1
    results = by_name(run_verification(generator=BitMatrix(g), trials=2))
    assert not results["generator_row_space"].passed
    assert not results["weight_distribution"].passed
    assert results["fht_matches_naive"].passed


def test_corrupted_constraints():
    v = published_constraints().array.copy()
    # u17 = u3 becomes u17 = u5
    v[6, 3] ^= 1
    v[6, 5] ^= 1
    results = by_name(run_verification(constraints=BitMatrix(v), trials=2))
    assert not results["constraint_matrix"].passed
    assert not results["constraints_hold_on_codewords"].passed
    assert results["generator_row_space"].passed


def test_corrupted_schedule():
    schedule = list(golay_spec().schedule)
    schedule[4], schedule[5] = schedule[5], schedule[4]
    results = by_name(run_verification(schedule=schedule, trials=2))
    check = results["schedule_dependencies"]
    assert not check.passed
    assert "0,1,2,16,17,3" in check.detail
    assert all(c.passed for name, c in results.items() if name != "schedule_dependencies")


def test_detail_is_empty_on_success():
    results = by_name(run_verification(trials=1))
    assert results["self_dual"].detail == ""
    assert np.all([c.passed for c in results.values()])
