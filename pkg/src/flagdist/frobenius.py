"""Frobenius-bracket ranks and Chern numbers on highest-weight curves.

Every rank here is a root count: for a root vector eta of weight alpha,
distinct roots beta give distinct image roots alpha + beta, so the bracket
map is injective on the counted set and no matrices are needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Sequence, Tuple, Union

from .dist import Distribution, _leq
from .grading import GradedSystem, MultiDegree, degree_to_str, highest_weight_root
from .rootsys import Root, RootSystemError, cartan_pairing, root_to_str

MAX_STRING_STEP = 3


class ChernIdentityError(AssertionError):
    """The direct Chern number and the iterated-rank sum disagree."""


@dataclass(frozen=True)
class HighestWeightVector:
    root: Root
    degree: MultiDegree

    @classmethod
    def of(cls, gs: GradedSystem, lam: Sequence[int]) -> "HighestWeightVector":
        lam = tuple(lam)
        return cls(highest_weight_root(gs, lam), lam)


HWVLike = Union[HighestWeightVector, Sequence[int]]


def _hwv(d: Distribution, hwv: HWVLike) -> HighestWeightVector:
    if not isinstance(hwv, HighestWeightVector):
        hwv = HighestWeightVector.of(d.graded, hwv)
    if hwv.degree not in d.ideal:
        raise RootSystemError(
            f"highest weight vector of degree {degree_to_str(hwv.degree)} is not in {d}")
    return hwv


def _shift_count(d: Distribution, alpha: Root, k: int) -> int:
    rs = d.graded.root_system
    roots = d.root_set
    n = 0
    for gamma in roots:
        target = tuple(g + k * a for g, a in zip(gamma, alpha))
        if rs.is_positive_root(target) and target not in roots:
            n += 1
    return n


def frobenius_rank(d: Distribution, hwv: HWVLike) -> int:
    """rank of F^D_eta: roots beta of d with alpha + beta a root outside d."""
    hwv = _hwv(d, hwv)
    return _shift_count(d, hwv.root, 1)


def iterated_rank(d: Distribution, hwv: HWVLike, k: int) -> int:
    """rank of F^(k)_eta, i.e. roots gamma of d with gamma + k*alpha a root outside d."""
    if not 1 <= k <= MAX_STRING_STEP:
        raise RootSystemError(f"k must be in 1..{MAX_STRING_STEP}, got {k}")
    hwv = _hwv(d, hwv)
    return _shift_count(d, hwv.root, k)


def shifted_closure(d: Distribution, hwv: HWVLike, k: int) -> FrozenSet[MultiDegree]:
    """Realized degrees lam with 0 < lam <= xi + k*deg(alpha) for some maximal xi of d."""
    if k < 0:
        raise RootSystemError("k must be nonnegative")
    hwv = _hwv(d, hwv)
    tops = [tuple(x + k * a for x, a in zip(xi, hwv.degree)) for xi in d.antichain]
    return frozenset(lam for lam in d.graded.realized if any(_leq(lam, t) for t in tops))


def closure_roots(gs: GradedSystem, degrees) -> FrozenSet[Root]:
    return frozenset(r for lam in degrees for r in gs.buckets[lam])


def chern_direct(d: Distribution, hwv: HWVLike) -> int:
    """Sum of beta(H_alpha) over the positive-degree roots beta outside d."""
    hwv = _hwv(d, hwv)
    rs = d.graded.root_system
    degs = d.graded.degrees_by_index
    total = 0
    for beta, lam in zip(rs.positive_roots, degs):
        if any(lam) and lam not in d.ideal:
            total += cartan_pairing(rs, beta, hwv.root)
    return total


def chern_via_ranks(d: Distribution, hwv: HWVLike) -> int:
    hwv = _hwv(d, hwv)
    return sum(_shift_count(d, hwv.root, k) for k in range(1, MAX_STRING_STEP + 1))


def chern_number(d: Distribution, hwv: HWVLike) -> int:
    """c_1(T(S)/D) . C_alpha, computed twice; raises ChernIdentityError on mismatch."""
    hwv = _hwv(d, hwv)
    direct = chern_direct(d, hwv)
    ranks = chern_via_ranks(d, hwv)
    if direct != ranks:
        raise ChernIdentityError(
            f"{d.graded!r} {d}: eta={root_to_str(hwv.root)} "
            f"direct={direct} iterated ranks={ranks}")
    return direct


@dataclass(frozen=True)
class RankProfile:
    hwv: HighestWeightVector
    distribution: Distribution
    ranks: Tuple[int, int, int]
    chern_direct: int
    chern_via_ranks: int

    @property
    def rank(self) -> int:
        return self.ranks[0]

    @property
    def identity_holds(self) -> bool:
        return self.chern_direct == self.chern_via_ranks

    def to_dict(self) -> dict:
        return {
            "degree": list(self.hwv.degree),
            "root": root_to_str(self.hwv.root),
            "ranks": list(self.ranks),
            "chern": self.chern_direct,
            "chern_via_ranks": self.chern_via_ranks,
        }


def rank_profile(d: Distribution, lam: Sequence[int], strict: bool = True) -> RankProfile:
    """Iterated ranks and both Chern computations for the bucket at ``lam``.

    With ``strict`` a disagreement between the two Chern computations raises.
    """
    hwv = _hwv(d, tuple(lam))
    ranks = tuple(_shift_count(d, hwv.root, k) for k in range(1, MAX_STRING_STEP + 1))
    prof = RankProfile(hwv, d, ranks, chern_direct(d, hwv), sum(ranks))
    if strict and not prof.identity_holds:
        raise ChernIdentityError(
            f"{d.graded!r} {d}: eta={root_to_str(hwv.root)} "
            f"direct={prof.chern_direct} iterated ranks={prof.chern_via_ranks}")
    return prof


def chern_defect(d: Distribution, hwv: HWVLike) -> int:
    """Pairs (beta, k) with beta a root outside d and beta - k*alpha a root of degree <= 0.

    These string members lie in the parabolic, so the iterated ranks cannot
    see them; ``chern_direct - chern_via_ranks`` equals this count.
    """
    hwv = _hwv(d, hwv)
    gs = d.graded
    rs = gs.root_system
    n = 0
    for beta, lam in zip(rs.positive_roots, gs.degrees_by_index):
        if not any(lam) or lam in d.ideal:
            continue
        for k in range(1, MAX_STRING_STEP + 1):
            low = tuple(b - k * a for b, a in zip(beta, hwv.root))
            if rs.is_root(low) and not any(x > 0 for x in gs.degree_of(low)):
                n += 1
    return n
