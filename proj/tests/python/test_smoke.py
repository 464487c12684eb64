from fractions import Fraction

import pytest

import radiusseq

EXAMPLE = [0, 1, 2, 3, 4, 5, 6, 7, 0, 1, 2, 4, 5, 6, 3, 7]


def test_verify_example():
    report = radiusseq.verify_radius(EXAMPLE, 8, 3)
    assert report.valid
    assert report.covered_count == 28
    assert len(radiusseq.enumerate_covered_subsets(EXAMPLE, 3)) == 28


def test_uncovered_pairs():
    report = radiusseq.verify_radius([0, 1, 2, 3], 4, 1)
    assert not report
    assert report.uncovered == [[0, 2], [0, 3], [1, 3]]


def test_bounds():
    assert radiusseq.lower_bound_pairs(8, 3) == 10
    assert radiusseq.lower_bound_subsets(8, 3, 2) == 12
    assert radiusseq.ghosh_f1(5) == 11
    assert radiusseq.asymptotic_target(8, 3) == Fraction(28, 3)
    assert radiusseq.bounds(8, 3)["lower_bound"] == 12


def test_construct_round_trip():
    res = radiusseq.construct(20, 2, method="greedy", seed=3)
    assert res.verified
    assert radiusseq.verify_radius(res.sequence, 20, 2).valid
    again = radiusseq.construct(20, 2, method="greedy", seed=3)
    assert again.sequence == res.sequence
    assert radiusseq.construct(4, 1, method="exact").length == 8


def test_errors():
    with pytest.raises(ValueError):
        radiusseq.verify_radius([0, 9], 4, 1)
    with pytest.raises(RuntimeError):
        radiusseq.construct(12, 3, method="exact")


def test_hypergraph_and_cache():
    assert radiusseq.uniformity_r(5, 3) == 9
    assert radiusseq.vertex_degree(5, 3, 1) == 12
    assert radiusseq.hypergraph_summary(12, 4, 2)["r"] == 5
    trace = radiusseq.simulate_pinned_batch(200, 4)
    assert trace.complete and trace.loads == 5100
    assert trace.max_new_pairs_per_load() <= 4
    assert radiusseq.simulate_fifo(EXAMPLE, 3).complete


def test_packing():
    seq = radiusseq.construct_packing_greedy(8, 1, 2, seed=1)
    assert radiusseq.verify_packing(seq, 1, 2).valid
    assert len(seq) <= 29
