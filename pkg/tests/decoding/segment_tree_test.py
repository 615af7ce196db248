import numpy as np
import pytest

from golaysc.decoding.llr import boxplus
from golaysc.decoding.segment_tree import SegmentTree
from golaysc.errors import DecoderError, DimensionError
from golaysc.gf2.bit_matrix import gf2_vecmat
from golaysc.gf2.polar import polarizing_transform
from golaysc.oracle.brute_force import brute_force_path_llr


def test_first_phase_is_boxplus_of_everything():
    y = np.array([4.0, -3.0, 2.5, 6.0, -1.5, 5.0, 7.0, 2.0])
    tree = SegmentTree(3, y)
    assert tree.llr(0) == pytest.approx(1.5), "two negative signs, smallest magnitude 1.5"


def test_order_one():
    tree = SegmentTree(1, [3.0, -1.0])
    assert tree.llr(0) == boxplus(3.0, -1.0)
    tree.commit(0, 1)
    assert tree.llr(1) == -4.0
    tree.commit(1, 1)
    assert tree.complete
    assert list(tree.codeword()) == [0, 1]


@pytest.mark.parametrize("m", [1, 2, 3])
def test_llrs_match_exhaustive_search(m, rng):
    n = 1 << m
    for _ in range(10):
        y = rng.normal(size=n) * 2.0
        u = rng.integers(0, 2, size=n)
        tree = SegmentTree(m, y)
        for phase in range(n):
            assert tree.llr(phase) == pytest.approx(
                brute_force_path_llr(m, y, u[:phase]), rel=1e-12, abs=1e-12
            )
            tree.commit(phase, int(u[phase]))
        assert np.array_equal(tree.codeword(), gf2_vecmat(u, polarizing_transform(m)))


def test_skipped_llrs_are_recomputed(rng):
    y = rng.normal(size=8)
    u = [1, 0, 1, 1]
    tree = SegmentTree(3, y)
    for phase, bit in enumerate(u):
        tree.commit(phase, bit)
    assert tree.llr(4) == pytest.approx(brute_force_path_llr(3, y, u), rel=1e-12, abs=1e-12)


def test_clone_is_independent(rng):
    tree = SegmentTree(2, rng.normal(size=4))
    tree.llr(0)
    tree.commit(0, 0)
    other = tree.clone()
    other.llr(1)
    other.commit(1, 1)
    assert tree.next_phase == 1
    assert other.next_phase == 2


def test_first_branch_bits():
    tree = SegmentTree(3, np.ones(8))
    with pytest.raises(DecoderError):
        tree.first_branch_bits()
    head = [0, 1, 1, 0]
    for phase, bit in enumerate(head):
        tree.commit(phase, bit)
    assert np.array_equal(tree.first_branch_bits(), gf2_vecmat(head, polarizing_transform(2)))


def test_out_of_order_phase():
    tree = SegmentTree(3, np.ones(8))
    with pytest.raises(DecoderError):
        tree.llr(1)
    with pytest.raises(DecoderError):
        tree.commit(2, 0)
    with pytest.raises(DecoderError):
        tree.commit(0, 2)
    with pytest.raises(DecoderError):
        tree.codeword()


def test_wrong_llr_count():
    with pytest.raises(DimensionError):
        SegmentTree(3, np.ones(7))
