from __future__ import annotations

from fractions import Fraction

import pytest

from flagdist.grading import (all_markings, classify_space, curve_degree, fundamental_pairing,
                              grade, highest_weight_root, parse_marking)
from flagdist.oracles import weyl_orbit_roots
from flagdist.rootsys import PAPER, RootSystemError, all_types, build_root_system, parse_root


def test_a1_single_bucket():
    gs = grade(build_root_system("A1"), [1])
    assert gs.buckets == {(1,): ((1,),)}
    assert gs.depths == (1,) and gs.total_depth == 1


def test_empty_marking_rejected():
    with pytest.raises(RootSystemError):
        grade(build_root_system("A3"), [])
    with pytest.raises(RootSystemError):
        grade(build_root_system("A3"), [4])


def test_parse_marking():
    assert parse_marking("1, 4") == (1, 4)
    with pytest.raises(RootSystemError):
        parse_marking("1;4")


def test_all_markings_count():
    assert len(all_markings(8)) == 255
    assert all_markings(2) == [(1,), (2,), (1, 2)]


@pytest.mark.parametrize("marking,columns", [((1, 4), (2, 1)), ((2, 4), (2, 1)),
                                             ((1, 2, 4), (1, 2, 1))])
def test_f4_column_depths(marking, columns):
    gs = grade(build_root_system("F4", PAPER), marking)
    assert gs.column_depths == columns


def test_f4_case_one_depths_of_highest_root():
    # the highest root 2432 has marked coefficients (2, 2)
    gs = grade(build_root_system("F4", PAPER), (1, 4))
    assert gs.depths == (2, 2) and gs.total_depth == 4


@pytest.mark.parametrize("t", all_types(5), ids=str)
def test_buckets_partition_orbit_roots(t):
    rs = build_root_system(t)
    positive = {r for r in weyl_orbit_roots(rs.cartan_matrix) if all(x >= 0 for x in r)}
    for marking in all_markings(t.rank):
        gs = grade(rs, marking)
        graded = [r for b in gs.buckets.values() for r in b]
        assert len(graded) == len(set(graded))
        levi = {r for r in positive if all(r[m - 1] == 0 for m in marking)}
        assert set(graded) == positive - levi
        assert set(gs.levi_positive_roots()) == levi
        for lam, bucket in gs.buckets.items():
            assert all(gs.degree_of(r) == lam for r in bucket)


def test_projective_space_is_hermitian():
    for k in range(1, 7):
        c = classify_space(grade(build_root_system(f"A{k}"), [1]))
        assert c.hermitian_symmetric and c.total_depth == 1


def test_picard_two_never_hermitian():
    for t in all_types(6):
        rs = build_root_system(t)
        for marking in all_markings(t.rank):
            if len(marking) >= 2:
                assert not classify_space(grade(rs, marking)).hermitian_symmetric


def test_g2_long_node_is_contact_candidate():
    rs = build_root_system("G2")
    gs = grade(rs, [2])
    # count roots with a2-coefficient 2 straight from the orbit
    orbit = weyl_orbit_roots(rs.cartan_matrix)
    assert sum(1 for r in orbit if r[1] == 2) == 1
    c = classify_space(gs)
    assert c.contact_candidate and c.dim_g2 == 1
    assert not classify_space(grade(rs, [1])).contact_candidate


def test_curve_degree_on_marked_simple_roots():
    gs = grade(build_root_system("F4", PAPER), (1, 2, 4))
    for i in range(3):
        for j, r in enumerate(gs.marking):
            assert curve_degree(gs, gs.root_system.simple_roots[r - 1], i) == int(i == j)


def test_curve_degree_vanishes_on_levi():
    gs = grade(build_root_system("E6"), (1, 6))
    for alpha in gs.levi_positive_roots():
        assert all(curve_degree(gs, alpha, i) == 0 for i in range(2))


def test_f4_case_one_curve_degree():
    gs = grade(build_root_system("F4", PAPER), (1, 4))
    alpha = parse_root("2210")
    # short marked node, long alpha: 2 * (2 / 4)
    assert curve_degree(gs, alpha, 0) == 2 * Fraction(2, 4) == 1
    assert fundamental_pairing(gs, alpha, 0) == 1


def test_highest_weight_roots_f4():
    rs = build_root_system("F4", PAPER)
    assert highest_weight_root(grade(rs, (1, 4)), (1, 0)) == parse_root("1210")
    assert highest_weight_root(grade(rs, (2, 4)), (2, 0)) == parse_root("2210")


def test_full_marking_buckets_are_singletons():
    rs = build_root_system("B4")
    gs = grade(rs, (1, 2, 3, 4))
    for lam, bucket in gs.buckets.items():
        assert len(bucket) == 1
        assert highest_weight_root(gs, lam) == bucket[0]


def test_highest_weight_root_empty_bucket():
    gs = grade(build_root_system("A2"), (1,))
    with pytest.raises(RootSystemError):
        highest_weight_root(gs, (2,))
