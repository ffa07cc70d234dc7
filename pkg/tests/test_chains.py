from __future__ import annotations

import pytest

from flagdist.chains import RootChain, ascend_chain, isodegree_chain, validate_chain
from flagdist.grading import all_markings, grade
from flagdist.rootsys import PAPER, RootSystemError, all_types, build_root_system, parse_root


def test_trivial_chains():
    rs = build_root_system("B3")
    a = rs.positive_roots[3]
    assert len(ascend_chain(rs, a, a)) == 0
    gs = grade(rs, (1,))
    b = gs.buckets[(1,)][0]
    assert len(isodegree_chain(gs, b, b)) == 0


def test_a2_forced_step():
    rs = build_root_system("A2")
    ch = ascend_chain(rs, (1, 0), (1, 1))
    assert ch.steps == ((2, 1),)
    assert ch.to_list() == ["+α2"]


def test_full_marking_only_empty_chains():
    rs = build_root_system("C3")
    gs = grade(rs, (1, 2, 3))
    for lam, bucket in gs.buckets.items():
        assert len(bucket) == 1
        assert isodegree_chain(gs, bucket[0], bucket[0]).steps == ()


def test_f4_case_one_bucket_chain():
    gs = grade(build_root_system("F4", PAPER), (1, 4))
    ch = isodegree_chain(gs, parse_root("1110"), parse_root("1210"))
    assert ch.to_list() == ["+α2"]
    assert validate_chain(gs.root_system, ch, gs)
    back = isodegree_chain(gs, parse_root("1210"), parse_root("1000"))
    assert back.to_list() == ["−α2", "−α3", "−α2"]
    assert validate_chain(gs.root_system, back, gs)


def test_ascend_is_lexicographic_and_tight():
    rs = build_root_system("F4", PAPER)
    ch = ascend_chain(rs, (0, 0, 0, 1), rs.highest_root)
    assert len(ch) == sum(rs.highest_root) - 1
    assert ch.to_list()[0] == "+α3"
    assert validate_chain(rs, ch)


def test_input_errors():
    rs = build_root_system("A3")
    with pytest.raises(RootSystemError):
        ascend_chain(rs, (1, 1, 0), (1, 0, 0))
    with pytest.raises(RootSystemError):
        ascend_chain(rs, (1, 1, 0), (1, 0, 1))
    gs = grade(rs, (2,))
    with pytest.raises(RootSystemError):
        isodegree_chain(gs, (0, 1, 0), (1, 0, 0))
    with pytest.raises(RootSystemError):
        isodegree_chain(gs, (1, 0, 0), (0, 0, 1))


def test_validation_catches_bad_chains():
    rs = build_root_system("A3")
    bad = RootChain((1, 0, 0), (1, 0, 1), ((3, 1),))
    assert not validate_chain(rs, bad)
    wrong_end = RootChain((1, 0, 0), (1, 1, 1), ((2, 1),))
    assert not validate_chain(rs, wrong_end)
    gs = grade(rs, (2,))
    leaves = RootChain((0, 1, 0), (0, 1, 1), ((3, 1),))
    assert validate_chain(rs, leaves) and validate_chain(rs, leaves, gs)
    crosses = RootChain((1, 0, 0), (1, 1, 0), ((2, 1),))
    assert validate_chain(rs, crosses) and not validate_chain(rs, crosses, gs)


@pytest.mark.parametrize("t", all_types(4), ids=str)
def test_every_bucket_connects(t):
    rs = build_root_system(t)
    for marking in all_markings(t.rank):
        gs = grade(rs, marking)
        for bucket in gs.buckets.values():
            for a in bucket:
                for b in bucket:
                    ch = isodegree_chain(gs, a, b)
                    assert validate_chain(rs, ch, gs)
                    assert all(j not in marking for j, _ in ch.steps)
