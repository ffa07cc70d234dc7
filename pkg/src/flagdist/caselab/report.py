"""Full reports for a single (type, marking, distribution) case."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Dict, List, Optional, Sequence

from .. import __version__
from ..dist import (Distribution, cauchy_characteristic, column, column_sum, complementary,
                    generated_integrable, is_integrable, level, make_distribution,
                    tangent)
from ..frobenius import chern_defect, rank_profile
from ..grading import GradedSystem, classify_space, degree_to_str, grade, parse_marking
from ..rootsys import PAPER, LieType, RootSystemError, build_root_system

SCHEMA = "flagdist.case-report/1"


def count_distributions(gs: GradedSystem) -> int:
    """Number of nonempty order ideals of the realized degrees, without listing them.

    Splits on an element x: ideals avoiding x live in P minus the up-set of x,
    ideals holding x are the down-set of x plus an ideal of P minus that down-set.
    """
    order = list(gs.realized)
    n = len(order)
    up = [0] * n
    down = [0] * n
    for i, a in enumerate(order):
        for j, b in enumerate(order):
            if all(x <= y for x, y in zip(a, b)):
                up[i] |= 1 << j
                down[j] |= 1 << i
    memo: Dict[int, int] = {0: 1}

    def count(mask: int) -> int:
        if mask in memo:
            return memo[mask]
        members = [i for i in range(n) if mask >> i & 1]
        x = members[len(members) // 2]
        total = count(mask & ~up[x]) + count(mask & ~down[x])
        memo[mask] = total
        return total

    return count((1 << n) - 1) - 1


def parse_distribution_spec(gs: GradedSystem, spec: str) -> Distribution:
    """Build a distribution from a short text spec.

    Accepted: ``tangent``, ``columns``, ``column:I`` (1-based marked position),
    ``D1``/``D<k>``, ``Dm-1``, or an antichain such as ``2,0;0,1``
    (optionally prefixed with ``antichain:``).
    """
    s = spec.strip()
    low = s.lower()
    if low in ("tangent", "t", "ts"):
        return tangent(gs)
    if low == "columns":
        return column_sum(gs)
    if low.startswith("column:"):
        i = int(low.split(":", 1)[1])
        if not 1 <= i <= gs.picard_number:
            raise RootSystemError(f"column position {i} outside 1..{gs.picard_number}")
        return column(gs, i - 1)
    if low == "dm-1":
        if gs.total_depth < 2:
            raise RootSystemError("D^{m-1} is zero when m = 1")
        return level(gs, gs.total_depth - 1)
    if low.startswith("d") and low[1:].isdigit():
        return level(gs, int(low[1:]))
    if low.startswith("antichain:"):
        s = s.split(":", 1)[1]
    try:
        gens = [tuple(int(x) for x in part.split(",")) for part in s.split(";") if part.strip()]
    except ValueError:
        raise RootSystemError(f"cannot parse distribution spec {spec!r}") from None
    return make_distribution(gs, gens)


@dataclass
class CaseReport:
    lie_type: str
    marking: List[int]
    numbering: str
    depths: List[int]
    column_depths: List[int]
    total_depth: int
    classification: Dict[str, object]
    distribution_count: int
    distribution: Dict[str, object]
    profiles: List[Dict[str, object]]
    inequalities: List[Dict[str, object]]
    verdicts: Dict[str, str]
    schema: str = SCHEMA
    version: str = __version__

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "CaseReport":
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported schema {data.get('schema')!r}")
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> "CaseReport":
        return cls.from_dict(json.loads(text))


def _antichain(d: Optional[Distribution]):
    return None if d is None else [list(lam) for lam in d.antichain]


def run_case(lie_type: str | LieType, marking: Sequence[int] | str,
             distribution: str = "columns", numbering: str = PAPER) -> CaseReport:
    """Grade, build the distribution, and profile every bucket inside it."""
    try:
        t = LieType.parse(lie_type) if isinstance(lie_type, str) else lie_type
        if isinstance(marking, str):
            marking = parse_marking(marking)
        rs = build_root_system(t, numbering)
        gs = grade(rs, marking)
        d = parse_distribution_spec(gs, distribution)
    except RootSystemError as exc:
        raise RootSystemError(f"{lie_type} marking={marking} {distribution!r}: {exc}") from exc

    cls = classify_space(gs)
    proper = len(d.ideal) < len(gs.realized)
    inside = max(sum(lam) for lam in d.ideal) <= gs.total_depth - 1
    comp = None
    if proper and any(gs.unit(i) not in d.ideal for i in range(gs.picard_number)):
        comp = complementary(d)

    profiles = []
    by_degree = {}
    for lam in d.sorted_ideal:
        p = rank_profile(d, lam, strict=False)
        by_degree[lam] = p
        row = p.to_dict()
        row["identity_holds"] = p.identity_holds
        row["defect"] = chern_defect(d, lam)
        profiles.append(row)

    inequalities = []
    for i in range(gs.picard_number):
        one, two = gs.unit(i), tuple(2 * k for k in gs.unit(i))
        if one in by_degree and two in by_degree:
            r1, r2 = by_degree[one].rank, by_degree[two].rank
            inequalities.append({"node": gs.marking[i], "eta1": r1, "eta2": r2,
                                 "holds": r1 < r2})

    verdicts = {
        "inequality_star": ("n/a" if not inequalities
                            else "pass" if all(x["holds"] for x in inequalities) else "fail"),
        "properness": "pass" if proper == inside else "fail",
        "chern_identity": "pass" if all(p["identity_holds"] for p in profiles) else "fail",
    }
    return CaseReport(
        lie_type=str(t),
        marking=list(gs.marking),
        numbering=numbering,
        depths=list(gs.depths),
        column_depths=list(gs.column_depths),
        total_depth=gs.total_depth,
        classification=asdict(cls),
        distribution_count=count_distributions(gs),
        distribution={
            "spec": distribution,
            "antichain": _antichain(d),
            "root_set": d.sorted_roots(),
            "rank": d.rank,
            "integrable": is_integrable(d),
            "proper": proper,
            "generated_integrable": _antichain(generated_integrable(d)),
            "complementary": _antichain(comp),
            "cauchy_characteristic": _antichain(cauchy_characteristic(d)),
        },
        profiles=profiles,
        inequalities=inequalities,
        verdicts=verdicts,
    )


def render_text(rep: CaseReport) -> str:
    lines = [
        f"{rep.lie_type}  marking {{{', '.join(str(r) for r in rep.marking)}}}  "
        f"numbering {rep.numbering}",
        f"depths (max degree)   {degree_to_str(rep.depths)}",
        f"depths (columns)      {degree_to_str(rep.column_depths)}",
        f"total depth m         {rep.total_depth}",
        "classification        " + ", ".join(f"{k}={v}" for k, v in rep.classification.items()),
        f"distributions         {rep.distribution_count}",
        "",
        f"distribution {rep.distribution['spec']}: antichain "
        + " ".join(degree_to_str(a) for a in rep.distribution["antichain"]),
        f"  roots ({rep.distribution['rank']}): " + " ".join(rep.distribution["root_set"]),
    ]
    for key in ("integrable", "proper"):
        lines.append(f"  {key}: {rep.distribution[key]}")
    for key in ("generated_integrable", "complementary", "cauchy_characteristic"):
        val = rep.distribution[key]
        shown = "-" if val is None else " ".join(degree_to_str(a) for a in val)
        lines.append(f"  {key}: {shown}")
    lines.append("")
    lines.append("degree      root        ranks      chern  via-ranks  defect")
    for p in rep.profiles:
        lines.append(
            f"{degree_to_str(p['degree']):<11} {p['root']:<11} "
            f"{' '.join(str(r) for r in p['ranks']):<10} {p['chern']:>5}  "
            f"{p['chern_via_ranks']:>9}  {p['defect']:>6}")
    for q in rep.inequalities:
        lines.append(f"(*) node {q['node']}: rank eta1 = {q['eta1']} < rank eta2 = {q['eta2']}"
                     f"  {'ok' if q['holds'] else 'FAILS'}")
    lines.append("")
    lines.append("verdicts: " + ", ".join(f"{k}={v}" for k, v in sorted(rep.verdicts.items())))
    return "\n".join(lines) + "\n"
