from __future__ import annotations

import json
import time
from itertools import combinations
from fractions import Fraction
from math import prod
from pathlib import Path

import pytest

from flagdist.caselab import count_distributions, parse_distribution_spec, render_text, run_case
from flagdist.caselab.registry import (F4_TABLES, REGISTRY, c_ladder_checks, render_replay,
                                       replay_paper_cases, resolve_paper_numbering)
from flagdist.caselab.report import CaseReport
from flagdist.caselab.sweep import CHECKS, bounded_distributions, sweep
from flagdist.dist import enumerate_distributions
from flagdist.grading import all_markings, grade
from flagdist.rootsys import PAPER_PERMUTATIONS, RootSystemError, all_types, build_root_system

GOLDEN = Path(__file__).parent / "golden"

# degrees of the basic invariants; the root-poset ideal count is prod (h + d) / d
INVARIANT_DEGREES = {
    "E6": (2, 5, 6, 8, 9, 12),
    "E7": (2, 6, 8, 10, 12, 14, 18),
    "E8": (2, 8, 12, 14, 18, 20, 24, 30),
    "F4": (2, 6, 8, 12),
    "G2": (2, 6),
}


def invariant_degrees(t):
    n = t.rank
    if t.family == "A":
        return tuple(range(2, n + 2))
    if t.family in "BC":
        return tuple(range(2, 2 * n + 1, 2))
    if t.family == "D":
        return tuple(range(2, 2 * n - 1, 2)) + (n,)
    return INVARIANT_DEGREES[str(t)]


@pytest.mark.parametrize("t", all_types(8), ids=str)
def test_full_marking_count_is_catalan(t):
    degs = invariant_degrees(t)
    h = max(degs)
    catalan = prod(Fraction(h + d, d) for d in degs)
    gs = grade(build_root_system(t), range(1, t.rank + 1))
    assert count_distributions(gs) == catalan - 1


def test_count_matches_enumeration():
    for t in all_types(4):
        rs = build_root_system(t)
        for marking in all_markings(t.rank):
            gs = grade(rs, marking)
            assert count_distributions(gs) == len(enumerate_distributions(gs))


def test_a1_trivial_report():
    rep = run_case("A1", [1], "tangent")
    assert rep.total_depth == 1
    assert rep.classification["hermitian_symmetric"]
    assert rep.distribution_count == 1
    assert rep.distribution["root_set"] == ["1"]


@pytest.mark.parametrize("marking,ranks", [((1, 4), (3, 5)), ((2, 4), (1, 2))])
def test_f4_reports(marking, ranks):
    rep = run_case("F4", marking, "2,0;0,1")
    by_degree = {tuple(p["degree"]): p for p in rep.profiles}
    assert (by_degree[(1, 0)]["ranks"][0], by_degree[(2, 0)]["ranks"][0]) == ranks
    assert rep.inequalities[0]["holds"]
    assert rep.verdicts["inequality_star"] == "pass"
    assert rep.verdicts["properness"] == "pass"


def test_report_round_trip_and_stability():
    a = run_case("F4", "1,2,4", "0,2,0;1,0,0;0,0,1")
    b = run_case("F4", "1,2,4", "0,2,0;1,0,0;0,0,1")
    assert a.to_json() == b.to_json()
    back = CaseReport.from_json(a.to_json())
    assert back == a and back.to_json() == a.to_json()
    with pytest.raises(ValueError):
        CaseReport.from_dict({**a.to_dict(), "schema": "other/0"})


def test_report_root_strings_are_roots():
    rep = run_case("E7", "2,7", "columns")
    rs = build_root_system("E7", "paper")
    for s in rep.distribution["root_set"]:
        assert rs.is_positive_root(tuple(int(c) for c in s))


def test_golden_f4_case_one():
    rep = run_case("F4", "1,4", "2,0;0,1")
    golden = json.loads((GOLDEN / "f4_case1.json").read_text(encoding="utf-8"))
    assert json.loads(rep.to_json()) == golden


def test_golden_b2_identity_failure():
    rep = run_case("B2", "2", "D1", numbering="bourbaki")
    golden = json.loads((GOLDEN / "b2_d1.json").read_text(encoding="utf-8"))
    assert json.loads(rep.to_json()) == golden
    assert rep.verdicts["chern_identity"] == "fail"


def test_text_render():
    text = render_text(run_case("F4", "1,4", "2,0;0,1"))
    assert "1210" in text and "rank eta1 = 3 < rank eta2 = 5" in text


def test_errors_carry_context():
    with pytest.raises(RootSystemError, match="F4"):
        run_case("F4", "1,5")
    with pytest.raises(RootSystemError, match="2,0;0,7"):
        run_case("F4", "1,4", "2,0;0,7")


@pytest.mark.parametrize("spec,antichain", [
    ("tangent", [(2, 2)]), ("columns", [(0, 1), (2, 0)]), ("column:2", [(0, 1)]),
    ("D1", [(0, 1), (1, 0)]), ("Dm-1", [(2, 1)]), ("antichain:2,0", [(2, 0)]),
])
def test_distribution_specs(spec, antichain):
    gs = grade(build_root_system("F4", "paper"), (1, 4))
    assert list(parse_distribution_spec(gs, spec).antichain) == antichain


@pytest.mark.parametrize("spec", ["column:3", "x,y", "D9;", "0,0"])
def test_bad_distribution_specs(spec):
    gs = grade(build_root_system("F4", "paper"), (1, 4))
    with pytest.raises(RootSystemError):
        parse_distribution_spec(gs, spec)


def test_dm1_needs_depth_two():
    gs = grade(build_root_system("A3"), (2,))
    with pytest.raises(RootSystemError):
        parse_distribution_spec(gs, "Dm-1")


def test_registry_replays_clean():
    summary = replay_paper_cases()
    assert summary.ok, render_replay(summary)
    assert {r.case_id for r in summary.results} == set(REGISTRY)


def test_wrong_numbering_breaks_f4_tables():
    summary = replay_paper_cases(numbering="bourbaki")
    failed = {r.case_id for r in summary.results if not r.ok}
    assert {"F4-caseI", "F4-caseII", "F4-caseIII", "F4-short-a1a2"} <= failed
    text = render_replay(summary)
    assert "F4 table" in text and "FAIL" in text


def test_only_case_three():
    summary = replay_paper_cases(only=["F4-caseIII"])
    [res] = summary.results
    ranks = [c for c in res.checks if c.label.startswith("ranks")]
    assert ranks[0].actual == (2, 3) and res.ok


def test_unknown_case_id():
    with pytest.raises(KeyError):
        replay_paper_cases(only=["nope"])


def test_numbering_resolution_is_unique():
    assert resolve_paper_numbering("F") == [PAPER_PERMUTATIONS["F"]]
    assert resolve_paper_numbering("G") == [(1, 2)]
    with pytest.raises(ValueError):
        resolve_paper_numbering("A")


def test_every_printed_list_in_one_entry():
    lists = [tab[key] for tab in F4_TABLES.values() for key in ("roots", "diff1", "diff2")]
    assert len(lists) == len(set(lists)) == 9


def test_bounded_distributions_shape():
    gs = grade(build_root_system("E6"), (1, 6))
    ds = bounded_distributions(gs)
    assert len({d.ideal for d in ds}) == len(ds)
    small = grade(build_root_system("B3"), (1, 3))
    assert len(bounded_distributions(small)) == count_distributions(small)


def test_sweep_rank_two_outside_chern():
    start = time.perf_counter()
    summary = sweep(2, [c for c in CHECKS if c != "chern-identity"])
    assert summary.ok and time.perf_counter() - start < 1.0


def test_sweep_ideal_oracle_rank_four():
    summary = sweep(4, ["ideal-oracle"])
    assert summary.ok and summary.tallies["ideal-oracle"].checked == 109


def test_sweep_chern_failures_are_the_defect():
    summary = sweep(3, ["chern-identity"])
    assert summary.failures
    for row in summary.failures:
        assert row["direct"] - row["via_ranks"] == row["defect"] > 0
        assert row["type"][0] in "BCG"


def test_sweep_rejects_bad_arguments():
    with pytest.raises(ValueError):
        sweep(9)
    with pytest.raises(ValueError):
        sweep(2, ["nonsense"])


def test_c_ladder_general_pattern():
    # beyond the pinned C4/C5 cases: every marking inside 1..k-1, any size
    for k in range(4, 9):
        for l in range(2, k):
            for marking in combinations(range(1, k), l):
                bad = [c.label for c in c_ladder_checks(k, marking) if not c.ok]
                assert not bad, bad
