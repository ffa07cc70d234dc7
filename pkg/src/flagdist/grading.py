"""Multi-grading of a root system by a set of marked simple roots."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from .rootsys import Root, RootSystem, RootSystemError, coroot_expansion, root_to_str

MultiDegree = Tuple[int, ...]


def normalize_marking(rs: RootSystem, marking: Iterable[int]) -> Tuple[int, ...]:
    """Sorted tuple of 1-based marked nodes, validated against the rank."""
    nodes = sorted(set(int(r) for r in marking))
    if not nodes:
        raise RootSystemError("marking must contain at least one node")
    bad = [r for r in nodes if not 1 <= r <= rs.rank]
    if bad:
        raise RootSystemError(f"marked nodes {bad} outside 1..{rs.rank}")
    return tuple(nodes)


def parse_marking(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise RootSystemError(f"cannot parse marking {text!r}") from None


def degree_to_str(lam: Sequence[int]) -> str:
    return "(" + ",".join(str(k) for k in lam) + ")"


def all_markings(rank: int) -> List[Tuple[int, ...]]:
    """Every nonempty subset of 1..rank, ordered by size then lexicographically."""
    out = []
    for mask in range(1, 1 << rank):
        out.append(tuple(i + 1 for i in range(rank) if mask >> i & 1))
    return sorted(out, key=lambda m: (len(m), m))


@dataclass(frozen=True, eq=False)
class GradedSystem:
    """The degree buckets of a root system under a marking.

    ``depths[i]`` is the largest i-th marked coefficient of any root (the
    degree of the highest root); ``column_depths[i]`` is the largest k such
    that the pure degree ``k * e_i`` is realized.  The minimal integrable
    distributions are the columns ``D^{0,..,column_depths[i],..,0}``.
    """

    root_system: RootSystem
    marking: Tuple[int, ...]
    buckets: Dict[MultiDegree, Tuple[Root, ...]]
    depths: Tuple[int, ...]
    column_depths: Tuple[int, ...]
    total_depth: int
    degrees_by_index: Tuple[MultiDegree, ...] = field(repr=False)

    @property
    def picard_number(self) -> int:
        return len(self.marking)

    @property
    def realized(self) -> Tuple[MultiDegree, ...]:
        """Realized positive degrees, sorted by total degree then lexicographically."""
        return tuple(self.buckets)

    @property
    def unmarked(self) -> Tuple[int, ...]:
        return tuple(j for j in range(1, self.root_system.rank + 1) if j not in self.marking)

    def degree_of(self, root: Sequence[int]) -> MultiDegree:
        return tuple(root[r - 1] for r in self.marking)

    def unit(self, i: int) -> MultiDegree:
        """The degree of the i-th marked simple root (0-based position)."""
        return tuple(int(j == i) for j in range(self.picard_number))

    def levi_positive_roots(self) -> Tuple[Root, ...]:
        return tuple(r for r in self.root_system.positive_roots if not any(self.degree_of(r)))

    def __repr__(self):
        return f"GradedSystem({self.root_system.lie_type}, marking={self.marking})"


def grade(rs: RootSystem, marking: Iterable[int]) -> GradedSystem:
    marking = normalize_marking(rs, marking)
    l = len(marking)
    degs = tuple(tuple(r[m - 1] for m in marking) for r in rs.positive_roots)
    raw: Dict[MultiDegree, List[Root]] = {}
    for root, lam in zip(rs.positive_roots, degs):
        if any(lam):
            raw.setdefault(lam, []).append(root)
    order = sorted(raw, key=lambda lam: (sum(lam), lam))
    buckets = {lam: tuple(raw[lam]) for lam in order}
    depths = tuple(max(lam[i] for lam in order) for i in range(l))
    columns = []
    for i in range(l):
        pure = [lam[i] for lam in order if all(lam[j] == 0 for j in range(l) if j != i)]
        columns.append(max(pure))
    return GradedSystem(
        root_system=rs,
        marking=marking,
        buckets=buckets,
        depths=depths,
        column_depths=tuple(columns),
        total_depth=max(sum(lam) for lam in order),
        degrees_by_index=degs,
    )


@dataclass(frozen=True)
class Classification:
    picard_number: int
    total_depth: int
    dim_g2: int
    hermitian_symmetric: bool
    contact_candidate: bool


def classify_space(gs: GradedSystem) -> Classification:
    """Hermitian-symmetric (m = 1) and contact-candidate (m = 2, dim g_2 = 1) flags.

    Bracket nondegeneracy on g_1 is not decided; only the dimension test is.
    """
    m = gs.total_depth
    dim2 = sum(len(b) for lam, b in gs.buckets.items() if sum(lam) == 2)
    return Classification(
        picard_number=gs.picard_number,
        total_depth=m,
        dim_g2=dim2,
        hermitian_symmetric=m == 1,
        contact_candidate=m == 2 and dim2 == 1,
    )


def curve_degree(gs: GradedSystem, alpha: Sequence[int], i: int) -> Fraction:
    """Degree of the rational curve C_alpha against the i-th marked line bundle.

    ``i`` is a 0-based position in the marking.  Computed from the marked
    coefficient and the length ratio <a_r, a_r> / <alpha, alpha>.
    """
    rs = gs.root_system
    alpha = tuple(alpha)
    if not rs.is_positive_root(alpha):
        raise RootSystemError(f"{alpha} is not a positive root")
    r = gs.marking[i] - 1
    return Fraction(alpha[r] * rs.gram[r][r], rs.norm2(alpha))


def fundamental_pairing(gs: GradedSystem, alpha: Sequence[int], i: int) -> Fraction:
    """omega_{r_i}(H_alpha) read off the coroot expansion."""
    return coroot_expansion(gs.root_system, alpha)[gs.marking[i] - 1]


def highest_weight_root(gs: GradedSystem, lam: Sequence[int]) -> Root:
    """The unique root of the bucket that no unmarked simple root can raise."""
    lam = tuple(lam)
    bucket = gs.buckets.get(lam)
    if not bucket:
        raise RootSystemError(f"no roots of degree {degree_to_str(lam)}")
    rs = gs.root_system
    tops = []
    for beta in bucket:
        raised = False
        for j in gs.unmarked:
            up = list(beta)
            up[j - 1] += 1
            if rs.is_root(up):
                raised = True
                break
        if not raised:
            tops.append(beta)
    if len(tops) != 1:
        raise AssertionError(
            f"bucket {degree_to_str(lam)} has {len(tops)} maximal roots: "
            + ", ".join(root_to_str(t) for t in tops)
        )
    return tops[0]
