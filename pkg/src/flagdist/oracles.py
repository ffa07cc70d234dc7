"""Brute-force reference computations, kept independent of the main code paths."""

from __future__ import annotations

from typing import FrozenSet, List, Sequence, Set, Tuple

import numpy as np

MAX_BRUTE_FORCE = 26


def brute_force_ideals(points: Sequence[Tuple[int, ...]]) -> Set[FrozenSet[Tuple[int, ...]]]:
    """Nonempty downward-closed subsets of ``points`` under the componentwise order.

    Every one of the 2^n subsets is tested as a bit mask: for each covering
    pair mu < lam, the subset is rejected if it holds lam but not mu.
    """
    pts = list(points)
    n = len(pts)
    if n > MAX_BRUTE_FORCE:
        raise ValueError(f"{n} points is beyond brute force")

    def leq(a, b):
        return all(x <= y for x, y in zip(a, b))

    below = [[a for a in range(n) if a != b and leq(pts[a], pts[b])] for b in range(n)]
    covers = []
    for b in range(n):
        for a in below[b]:
            if not any(a in below[c] for c in below[b]):
                covers.append((a, b))

    masks = np.arange(1 << n, dtype=np.uint32)
    ok = masks != 0
    for a, b in covers:
        has_b = (masks >> np.uint32(b)) & np.uint32(1)
        has_a = (masks >> np.uint32(a)) & np.uint32(1)
        ok &= has_a >= has_b
    found = np.nonzero(ok)[0]
    return {frozenset(pts[i] for i in range(n) if int(m) >> i & 1) for m in found}


def bfs_connected(nodes: Sequence[Tuple[int, ...]], steps: List[Tuple[int, ...]]) -> bool:
    """Whether ``nodes`` form one component when joined by +-``steps``."""
    nodes = set(nodes)
    if not nodes:
        return True
    start = next(iter(nodes))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for s in steps:
            for sign in (1, -1):
                w = tuple(x + sign * y for x, y in zip(v, s))
                if w in nodes and w not in seen:
                    seen.add(w)
                    stack.append(w)
    return seen == nodes


def weyl_orbit_roots(cartan: Sequence[Sequence[int]]) -> FrozenSet[Tuple[int, ...]]:
    """All roots as the orbit of the simple roots under simple reflections.

    ``cartan[i][j]`` is a_j(H_{a_i}); s_i(v) = v - v(H_{a_i}) a_i.  Uses the
    Cartan matrix alone, with no string or length bookkeeping.
    """
    c = np.asarray(cartan, dtype=np.int64)
    n = len(c)
    start = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(start)
    stack = list(start)
    while stack:
        v = np.array(stack.pop(), dtype=np.int64)
        coroot = c @ v
        for i in range(n):
            w = v.copy()
            w[i] -= coroot[i]
            t = tuple(int(x) for x in w)
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return frozenset(seen)
