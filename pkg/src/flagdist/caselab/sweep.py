"""Exhaustive family sweeps over all simple types and markings up to a rank."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List

from ..chains import ascend_chain, isodegree_chain, validate_chain
from ..dist import (Distribution, column, column_sum, enumerate_distributions,
                    generated_integrable, is_proper, level, tangent)
from ..frobenius import HighestWeightVector, chern_defect, chern_direct, chern_via_ranks
from ..grading import (GradedSystem, all_markings, curve_degree, degree_to_str,
                       fundamental_pairing, grade)
from ..oracles import bfs_connected, brute_force_ideals
from ..rootsys import (BOURBAKI, RootSystem, all_types, build_root_system, cartan_pairing,
                       root_string, root_to_str)
from .report import count_distributions

MAX_SWEEP_RANK = 8
FULL_ENUMERATION_RANK = 4


@dataclass
class CheckTally:
    checked: int = 0
    failed: int = 0
    seconds: float = 0.0


@dataclass
class SweepSummary:
    max_rank: int
    checks: List[str]
    tallies: Dict[str, CheckTally] = field(default_factory=dict)
    failures: List[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "max_rank": self.max_rank,
            "ok": self.ok,
            "checks": {name: {"checked": t.checked, "failed": t.failed}
                       for name, t in self.tallies.items()},
            "failures": self.failures,
        }


class _Recorder:
    def __init__(self, summary: SweepSummary, name: str):
        self.summary = summary
        self.name = name
        self.tally = summary.tallies.setdefault(name, CheckTally())

    def __call__(self, ok: bool, rs: RootSystem, marking=None, **detail):
        self.tally.checked += 1
        if not ok:
            self.tally.failed += 1
            row = {"check": self.name, "type": str(rs.lie_type)}
            if marking is not None:
                row["marking"] = list(marking)
            row.update(detail)
            self.summary.failures.append(row)


def bounded_distributions(gs: GradedSystem) -> List[Distribution]:
    """Every distribution for small rank, otherwise columns, their sum, D^1 and D^{m-1}."""
    if gs.root_system.rank <= FULL_ENUMERATION_RANK:
        return enumerate_distributions(gs)
    cands = [column(gs, i) for i in range(gs.picard_number)]
    cands += [column_sum(gs), level(gs, 1)]
    if gs.total_depth >= 2:
        cands.append(level(gs, gs.total_depth - 1))
    seen, out = set(), []
    for d in cands:
        if d.ideal not in seen:
            seen.add(d.ideal)
            out.append(d)
    return out


def _antichain(d: Distribution) -> List[List[int]]:
    return [list(a) for a in d.antichain]


def check_chern_identity(rs: RootSystem, rec: _Recorder):
    for marking in all_markings(rs.rank):
        gs = grade(rs, marking)
        hw = {lam: HighestWeightVector.of(gs, lam) for lam in gs.realized}
        for d in bounded_distributions(gs):
            for lam in d.sorted_ideal:
                eta = hw[lam]
                direct, ranks = chern_direct(d, eta), chern_via_ranks(d, eta)
                if direct == ranks:
                    rec(True, rs)
                else:
                    rec(False, rs, marking, distribution=_antichain(d), degree=list(lam),
                        root=root_to_str(eta.root), direct=direct, via_ranks=ranks,
                        defect=chern_defect(d, eta))


def check_ideal_oracle(rs: RootSystem, rec: _Recorder):
    if rs.rank > FULL_ENUMERATION_RANK:
        return
    for marking in all_markings(rs.rank):
        gs = grade(rs, marking)
        found = [d.ideal for d in enumerate_distributions(gs)]
        oracle = brute_force_ideals(gs.realized)
        ok = len(found) == len(set(found)) and set(found) == oracle \
            and count_distributions(gs) == len(oracle)
        rec(ok, rs, marking, enumerated=len(found), oracle=len(oracle))


def check_properness(rs: RootSystem, rec: _Recorder):
    for marking in all_markings(rs.rank):
        gs = grade(rs, marking)
        dists = bounded_distributions(gs)
        flags = []
        for d in dists:
            try:
                flags.append(is_proper(d))
                rec(True, rs)
            except AssertionError as exc:
                flags.append(None)
                rec(False, rs, marking, distribution=_antichain(d), error=str(exc))
        proper = [d for d, f in zip(dists, flags) if f]
        for a in range(len(proper)):
            for b in range(a, len(proper)):
                s = proper[a] | proper[b]
                ok = is_proper(s) and max(sum(x) for x in s.ideal) <= gs.total_depth - 1
                rec(ok, rs, marking, sum_of=[_antichain(proper[a]), _antichain(proper[b])])


def check_connectivity(rs: RootSystem, rec: _Recorder):
    for marking in all_markings(rs.rank):
        gs = grade(rs, marking)
        steps = [tuple(int(k == j - 1) for k in range(rs.rank)) for j in gs.unmarked]
        for lam in gs.realized:
            bucket = gs.buckets[lam]
            try:
                HighestWeightVector.of(gs, lam)
                unique = True
            except AssertionError:
                unique = False
            rec(unique and bfs_connected(bucket, steps), rs, marking, degree=list(lam),
                size=len(bucket), unique_top=unique)


def check_degrees(rs: RootSystem, rec: _Recorder):
    for marking in all_markings(rs.rank):
        gs = grade(rs, marking)
        for lam in gs.realized:
            alpha = HighestWeightVector.of(gs, lam).root
            for i in range(gs.picard_number):
                cd = curve_degree(gs, alpha, i)
                fp = fundamental_pairing(gs, alpha, i)
                ok = cd == fp and cd.denominator == 1 and cd >= 0
                rec(ok, rs, marking, root=root_to_str(alpha), node=marking[i],
                    curve_degree=str(cd), pairing=str(fp))
        for i in range(gs.picard_number):
            for j, r in enumerate(marking):
                cd = curve_degree(gs, rs.simple_roots[r - 1], i)
                rec(cd == int(i == j), rs, marking, simple=r, node=marking[i],
                    curve_degree=str(cd))


def check_strings(rs: RootSystem, rec: _Recorder):
    top = 3 if rs.lie_type.family == "G" else 2
    for alpha in rs.positive_roots:
        neg = tuple(-a for a in alpha)
        for beta in rs.all_roots:
            if beta == alpha or beta == neg:
                continue
            p, q = root_string(rs, beta, alpha)
            n = cartan_pairing(rs, beta, alpha)
            up = tuple(b + a for b, a in zip(beta, alpha))
            ok = p - q == n and p + q <= top and (q > 0) == rs.is_root(up) \
                and (n >= 0 or rs.is_root(up))
            rec(ok, rs, beta=root_to_str(beta), alpha=root_to_str(alpha), p=p, q=q, pairing=n)
    if top == 3:
        longest = max(sum(root_string(rs, b, a)) for a in rs.positive_roots
                      for b in rs.all_roots if b != a and b != tuple(-x for x in a))
        rec(longest == 3, rs, longest_string=longest)


def check_classification(rs: RootSystem, rec: _Recorder):
    for marking in all_markings(rs.rank):
        gs = grade(rs, marking)
        rec(gs.total_depth > 1 or gs.picard_number == 1, rs, marking,
            total_depth=gs.total_depth)
        closure = generated_integrable(level(gs, 1))
        rec(closure.ideal == tangent(gs).ideal, rs, marking,
            closure=[degree_to_str(a) for a in closure.antichain])


def check_chains(rs: RootSystem, rec: _Recorder):
    pos = rs.positive_roots
    for a in pos:
        for b in pos:
            if a != b and all(x <= y for x, y in zip(a, b)):
                ch = ascend_chain(rs, a, b)
                ok = validate_chain(rs, ch) and len(ch) == sum(b) - sum(a) \
                    and all(s == 1 for _, s in ch.steps)
                rec(ok, rs, start=root_to_str(a), end=root_to_str(b), chain=ch.to_list())
    for marking in all_markings(rs.rank):
        gs = grade(rs, marking)
        for lam in gs.realized:
            bucket = gs.buckets[lam]
            for b in bucket[1:]:
                ch = isodegree_chain(gs, bucket[0], b)
                rec(validate_chain(rs, ch, gs), rs, marking, start=root_to_str(bucket[0]),
                    end=root_to_str(b), chain=ch.to_list())


CHECKS: Dict[str, Callable[[RootSystem, _Recorder], None]] = {
    "chern-identity": check_chern_identity,
    "ideal-oracle": check_ideal_oracle,
    "properness": check_properness,
    "connectivity": check_connectivity,
    "degrees": check_degrees,
    "strings": check_strings,
    "classification": check_classification,
    "chains": check_chains,
}


def sweep(max_rank: int, checks: Iterable[str] | None = None,
          numbering: str = BOURBAKI) -> SweepSummary:
    """Run the named checks on every simple type of rank <= ``max_rank``."""
    if not 1 <= max_rank <= MAX_SWEEP_RANK:
        raise ValueError(f"max_rank must be in 1..{MAX_SWEEP_RANK}")
    names = list(CHECKS) if checks is None else list(dict.fromkeys(checks))
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise ValueError(f"unknown check(s): {', '.join(unknown)}")
    summary = SweepSummary(max_rank, names)
    systems = [build_root_system(t, numbering) for t in all_types(max_rank)]
    for name in names:
        rec = _Recorder(summary, name)
        start = time.perf_counter()
        for rs in systems:
            CHECKS[name](rs, rec)
        rec.tally.seconds = time.perf_counter() - start
    return summary


def render_sweep(summary: SweepSummary, max_shown: int = 10) -> str:
    lines = [f"sweep up to rank {summary.max_rank}"]
    for name, t in summary.tallies.items():
        status = "PASS" if t.failed == 0 else "FAIL"
        lines.append(f"{status}  {name:<15} {t.checked:>9} checked  {t.failed:>6} failed"
                     f"  {t.seconds:7.2f}s")
    for row in summary.failures[:max_shown]:
        lines.append("  " + ", ".join(f"{k}={v}" for k, v in row.items()))
    if len(summary.failures) > max_shown:
        lines.append(f"  ... {len(summary.failures) - max_shown} more failures")
    return "\n".join(lines) + "\n"
