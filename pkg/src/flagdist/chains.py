"""Explicit root chains: simple-root ascents and same-degree walks.

Chains are found by breadth-first search, then the lexicographically first
shortest path (by step index, then sign) is read off a distance map built
from the end point.  Existence is what the root-chain lemmas guarantee;
``validate_chain`` rechecks every emitted chain by membership alone.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence, Tuple

from .grading import GradedSystem
from .rootsys import Root, RootSystem, RootSystemError, root_to_str

Step = Tuple[int, int]


@dataclass(frozen=True)
class RootChain:
    start: Root
    end: Root
    steps: Tuple[Step, ...]

    def partial_sums(self) -> List[Root]:
        cur = list(self.start)
        out = []
        for node, sign in self.steps:
            cur[node - 1] += sign
            out.append(tuple(cur))
        return out

    def to_list(self) -> List[str]:
        return [("+" if s > 0 else "−") + f"α{j}" for j, s in self.steps]

    def __len__(self):
        return len(self.steps)


def _shortest_chain(start: Root, end: Root, allowed: Callable[[Root], bool],
                    moves: Sequence[Step]) -> Tuple[Step, ...]:
    def move(v: Root, step: Step) -> Root:
        j, s = step
        w = list(v)
        w[j - 1] += s
        return tuple(w)

    # distances to `end` over the allowed roots; moves are reversible
    dist: Dict[Root, int] = {end: 0}
    queue = deque([end])
    while queue and start not in dist:
        v = queue.popleft()
        for j, s in moves:
            w = move(v, (j, -s))
            if w not in dist and allowed(w):
                dist[w] = dist[v] + 1
                queue.append(w)
    if start not in dist:
        raise AssertionError(f"no chain from {root_to_str(start)} to {root_to_str(end)}")
    steps = []
    cur = start
    while cur != end:
        for step in sorted(moves):
            w = move(cur, step)
            if dist.get(w) == dist[cur] - 1:
                steps.append(step)
                cur = w
                break
    return tuple(steps)


def ascend_chain(rs: RootSystem, alpha: Sequence[int], beta: Sequence[int]) -> RootChain:
    """Add simple roots one at a time to climb from alpha to beta through roots."""
    alpha, beta = tuple(alpha), tuple(beta)
    for r in (alpha, beta):
        if not rs.is_positive_root(r):
            raise RootSystemError(f"{r} is not a positive root")
    if any(a > b for a, b in zip(alpha, beta)):
        raise RootSystemError(f"{root_to_str(alpha)} is not below {root_to_str(beta)}")

    def allowed(v: Root) -> bool:
        return rs.is_positive_root(v) and all(a <= x <= b for a, x, b in zip(alpha, v, beta))

    moves = [(j, 1) for j in range(1, rs.rank + 1)]
    return RootChain(alpha, beta, _shortest_chain(alpha, beta, allowed, moves))


def isodegree_chain(gs: GradedSystem, alpha: Sequence[int], beta: Sequence[int]) -> RootChain:
    """Walk from alpha to beta by +-unmarked simple roots without leaving the bucket."""
    alpha, beta = tuple(alpha), tuple(beta)
    rs = gs.root_system
    for r in (alpha, beta):
        if not rs.is_positive_root(r):
            raise RootSystemError(f"{r} is not a positive root")
    lam = gs.degree_of(alpha)
    if gs.degree_of(beta) != lam:
        raise RootSystemError("alpha and beta have different degrees")
    if not any(lam):
        raise RootSystemError("degree must be positive")
    members = set(gs.buckets[lam])
    moves = [(j, s) for j in gs.unmarked for s in (-1, 1)]
    return RootChain(alpha, beta, _shortest_chain(alpha, beta, members.__contains__, moves))


def validate_chain(rs: RootSystem, chain: RootChain, gs: GradedSystem | None = None) -> bool:
    """Every partial sum is a root (in the start's bucket when ``gs`` is given)."""
    sums = chain.partial_sums()
    end = sums[-1] if sums else chain.start
    if end != chain.end:
        return False
    for v in sums:
        if not rs.is_root(v):
            return False
        if gs is not None:
            if gs.degree_of(v) != gs.degree_of(chain.start):
                return False
            if any(j in gs.marking for j, _ in chain.steps):
                return False
    return True
