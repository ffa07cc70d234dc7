"""Equivariant distributions as order ideals of realized multi-degrees.

A distribution is determined by a downward-closed set of realized positive
degrees; its root set is the union of the corresponding buckets.  Brackets of
root spaces are decided by root addition alone.
"""

from __future__ import annotations

from functools import cached_property
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .grading import GradedSystem, MultiDegree, degree_to_str
from .rootsys import Root, RootSystemError, root_to_str


def _leq(mu: Sequence[int], lam: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(mu, lam))


def _down_closure(gs: GradedSystem, gens: Iterable[MultiDegree]) -> FrozenSet[MultiDegree]:
    gens = list(gens)
    return frozenset(mu for mu in gs.realized if any(_leq(mu, g) for g in gens))


class Distribution:
    """An equivariant distribution on G/Q, stored as its ideal of degrees."""

    def __init__(self, graded: GradedSystem, ideal: Iterable[MultiDegree]):
        ideal = frozenset(tuple(lam) for lam in ideal)
        if not ideal:
            raise RootSystemError("the zero distribution is not allowed")
        unknown = [lam for lam in ideal if lam not in graded.buckets]
        if unknown:
            raise RootSystemError(f"unrealized degrees {sorted(unknown)}")
        if _down_closure(graded, ideal) != ideal:
            raise RootSystemError("degree set is not downward closed")
        self.graded = graded
        self.ideal = ideal

    @cached_property
    def antichain(self) -> Tuple[MultiDegree, ...]:
        tops = [lam for lam in self.ideal
                if not any(mu != lam and _leq(lam, mu) for mu in self.ideal)]
        return tuple(sorted(tops))

    @cached_property
    def sorted_ideal(self) -> Tuple[MultiDegree, ...]:
        return tuple(lam for lam in self.graded.realized if lam in self.ideal)

    @cached_property
    def root_set(self) -> FrozenSet[Root]:
        return frozenset(r for lam in self.ideal for r in self.graded.buckets[lam])

    @cached_property
    def member_indices(self) -> FrozenSet[int]:
        """Indices into ``positive_roots`` of the roots of this distribution."""
        degs = self.graded.degrees_by_index
        return frozenset(k for k, lam in enumerate(degs) if lam in self.ideal)

    @property
    def rank(self) -> int:
        return len(self.root_set)

    def sorted_roots(self) -> List[str]:
        return sorted(root_to_str(r) for r in self.root_set)

    def __eq__(self, other):
        if not isinstance(other, Distribution):
            return NotImplemented
        return self.graded is other.graded and self.ideal == other.ideal

    def __hash__(self):
        return hash((id(self.graded), self.ideal))

    def __le__(self, other: "Distribution") -> bool:
        return self.ideal <= other.ideal

    def __lt__(self, other: "Distribution") -> bool:
        return self.ideal < other.ideal

    def __or__(self, other: "Distribution") -> "Distribution":
        """Sum of two distributions."""
        if self.graded is not other.graded:
            raise RootSystemError("distributions live on different spaces")
        return Distribution(self.graded, self.ideal | other.ideal)

    def to_dict(self) -> dict:
        return {"antichain": [list(lam) for lam in self.antichain]}

    def __repr__(self):
        gens = ", ".join(degree_to_str(lam) for lam in self.antichain)
        return f"Distribution({{{gens}}})"


def make_distribution(gs: GradedSystem, generators: Iterable[Sequence[int]]) -> Distribution:
    """The distribution D = sum of D^lam over the given generator degrees."""
    gens = [tuple(g) for g in generators]
    if not gens:
        raise RootSystemError("at least one generator degree is required")
    l = gs.picard_number
    for g in gens:
        if len(g) != l:
            raise RootSystemError(f"generator {g} must have {l} entries")
        if any(k < 0 for k in g) or not any(g):
            raise RootSystemError(f"generator {degree_to_str(g)} must be > 0")
        if not any(_leq(g, lam) for lam in gs.realized):
            raise RootSystemError(f"generator {degree_to_str(g)} exceeds every realized degree")
    ideal = _down_closure(gs, gens)
    if not ideal:
        raise RootSystemError("generators span no realized degree")
    return Distribution(gs, ideal)


def tangent(gs: GradedSystem) -> Distribution:
    return Distribution(gs, gs.realized)


def level(gs: GradedSystem, k: int) -> Distribution:
    """D^k: every realized degree of total degree <= k."""
    return Distribution(gs, [lam for lam in gs.realized if sum(lam) <= k])


def column(gs: GradedSystem, i: int) -> Distribution:
    """The minimal integrable distribution D^{0,..,m_i,..,0} at marked position i."""
    return Distribution(gs, [lam for lam in gs.realized
                             if all(k == 0 for j, k in enumerate(lam) if j != i)])


def column_sum(gs: GradedSystem) -> Distribution:
    """Sum of all minimal integrable distributions."""
    out = column(gs, 0)
    for i in range(1, gs.picard_number):
        out = out | column(gs, i)
    return out


def enumerate_distributions(gs: GradedSystem) -> List[Distribution]:
    """All nonempty order ideals of the realized degrees, each exactly once.

    Degrees are decided in a linear extension of the order; a degree may join
    only once all of its realized lower covers have.
    """
    order = list(gs.realized)
    below = [[j for j in range(i) if _leq(order[j], order[i])] for i in range(len(order))]
    found: List[FrozenSet[MultiDegree]] = []

    def walk(i: int, chosen: List[bool]):
        if i == len(order):
            if any(chosen):
                found.append(frozenset(order[k] for k, c in enumerate(chosen) if c))
            return
        chosen.append(False)
        walk(i + 1, chosen)
        chosen.pop()
        if all(chosen[j] for j in below[i]):
            chosen.append(True)
            walk(i + 1, chosen)
            chosen.pop()

    walk(0, [])
    pos = {lam: k for k, lam in enumerate(order)}
    found.sort(key=lambda s: (len(s), sorted(pos[lam] for lam in s)))
    return [Distribution(gs, s) for s in found]


def _bracket_degrees(d: Distribution, e: Distribution) -> FrozenSet[MultiDegree]:
    """Degrees of alpha + beta over alpha in d, beta in e with alpha + beta a root."""
    rs = d.graded.root_system
    degs = d.graded.degrees_by_index
    other = e.member_indices
    out = set()
    for i in d.member_indices:
        for j, k in rs.sums_with(i):
            if j in other:
                out.add(degs[k])
    return frozenset(out)


def is_integrable(d: Distribution) -> bool:
    return _bracket_degrees(d, d) <= d.ideal


def is_proper(d: Distribution) -> bool:
    """True unless d is the whole tangent bundle.

    Also checks that a proper d sits inside D^{m-1}.
    """
    proper = len(d.ideal) < len(d.graded.realized)
    inside = max(sum(lam) for lam in d.ideal) <= d.graded.total_depth - 1
    if proper != inside:
        raise AssertionError(f"properness criterion fails for {d}")
    return proper


def bracket_step(d: Distribution, e: Distribution) -> Distribution:
    """[d, e]: e together with every bracket of d against e."""
    if d.graded is not e.graded:
        raise RootSystemError("distributions live on different spaces")
    new = _bracket_degrees(d, e) | e.ideal
    return Distribution(e.graded, _down_closure(e.graded, new))


def generated_integrable(d: Distribution) -> Distribution:
    """The smallest integrable distribution containing d."""
    cur = d
    while True:
        nxt = bracket_step(cur, cur)
        if nxt.ideal == cur.ideal:
            return cur
        cur = nxt


def derived_ladder(d: Distribution) -> List[Distribution]:
    """E^1 = d, E^j = [d, E^{j-1}] until the sequence stabilizes."""
    ladder = [d]
    while True:
        nxt = bracket_step(d, ladder[-1])
        if nxt.ideal == ladder[-1].ideal:
            return ladder
        ladder.append(nxt)


def complementary(d: Distribution) -> Distribution:
    """Integrable distribution generated by the marked simple roots outside d."""
    gs = d.graded
    if not is_proper(d):
        raise RootSystemError("complementary distribution needs a proper distribution")
    units = [gs.unit(i) for i in range(gs.picard_number) if gs.unit(i) not in d.ideal]
    if not units:
        raise RootSystemError("every marked simple root lies in d; no complement")
    return generated_integrable(Distribution(gs, units))


def cauchy_characteristic(d: Distribution) -> Optional[Distribution]:
    """Ch(d): the roots of d whose bracket with d stays inside d, or None if empty."""
    gs = d.graded
    rs = gs.root_system
    degs = gs.degrees_by_index
    members = d.member_indices
    kept = set()
    for i in members:
        if all(degs[k] in d.ideal for j, k in rs.sums_with(i) if j in members):
            kept.add(i)
    if not kept:
        return None
    kept_degrees = {degs[i] for i in kept}
    full = {k for k, lam in enumerate(degs) if lam in kept_degrees}
    if full != kept:
        raise AssertionError(f"Ch({d}) is not a union of full buckets")
    if _down_closure(gs, kept_degrees) != kept_degrees:
        raise AssertionError(f"Ch({d}) is not an order ideal")
    ch = Distribution(gs, kept_degrees)
    if not is_integrable(ch):
        raise AssertionError(f"Ch({d}) is not integrable")
    return ch

