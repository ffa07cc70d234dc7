"""Finite root systems of simple types A-G in the simple-root basis.

Roots are plain tuples of integers (coefficients of the simple roots), so they
hash, sort and compare for free.  Inner products are exact integers, normalized
so that the short roots of every system have squared length 2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

Root = Tuple[int, ...]

BOURBAKI = "bourbaki"
PAPER = "paper"
NUMBERINGS = (BOURBAKI, PAPER)

# Active node i (1-based) -> Bourbaki node.  Only F4 differs: the printed
# tables number its short end first.  Frozen by caselab.resolve_paper_numbering.
PAPER_PERMUTATIONS: Dict[str, Tuple[int, ...]] = {"F": (4, 3, 2, 1)}

_CLASSICAL_COUNTS = {"E": {6: 36, 7: 63, 8: 120}, "F": {4: 24}, "G": {2: 6}}


class RootSystemError(ValueError):
    """Invalid type, rank, marking or root passed to the toolkit."""


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        fam, n = self.family, self.rank
        if fam not in "ABCDEFG" or len(fam) != 1:
            raise RootSystemError(f"unknown family {fam!r}")
        if not isinstance(n, int) or n < 1:
            raise RootSystemError(f"rank must be a positive integer, got {n!r}")
        if fam in "BC" and n < 2:
            raise RootSystemError(f"{fam}{n}: rank must be >= 2")
        if fam == "D" and n < 4:
            hint = " (D3 is A3: use A3)" if n == 3 else ""
            raise RootSystemError(f"D{n}: rank must be >= 4{hint}")
        if fam == "E" and n not in (6, 7, 8):
            raise RootSystemError(f"E{n}: rank must be 6, 7 or 8")
        if fam == "F" and n != 4:
            raise RootSystemError(f"F{n}: rank must be 4")
        if fam == "G" and n != 2:
            raise RootSystemError(f"G{n}: rank must be 2")

    @classmethod
    def parse(cls, text: str) -> "LieType":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*_?\s*(\d+)\s*", text)
        if not m:
            raise RootSystemError(f"cannot parse Lie type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"

    @property
    def simply_laced(self) -> bool:
        return self.family in "ADE"

    def positive_root_count(self) -> int:
        n = self.rank
        if self.family == "A":
            return n * (n + 1) // 2
        if self.family in "BC":
            return n * n
        if self.family == "D":
            return n * (n - 1)
        return _CLASSICAL_COUNTS[self.family][n]


def all_types(max_rank: int) -> List[LieType]:
    """Every simple type of rank <= max_rank, in a fixed order."""
    out = []
    for n in range(1, max_rank + 1):
        for fam in "ABCDEFG":
            try:
                out.append(LieType(fam, n))
            except RootSystemError:
                pass
    return out


def _bourbaki_data(t: LieType) -> Tuple[List[int], List[Tuple[int, int]]]:
    """Squared lengths of the simple roots and the Dynkin edges (0-based)."""
    fam, n = t.family, t.rank
    if fam == "A":
        lengths = [2] * n
    elif fam == "B":
        lengths = [4] * (n - 1) + [2]
    elif fam == "C":
        lengths = [2] * (n - 1) + [4]
    elif fam in "DE":
        lengths = [2] * n
    elif fam == "F":
        lengths = [4, 4, 2, 2]
    else:
        lengths = [2, 6]

    if fam == "D":
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    elif fam == "E":
        edges = [(0, 2), (1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n - 1)]
    else:
        edges = [(i, i + 1) for i in range(n - 1)]
    return lengths, edges


def bourbaki_gram(t: LieType) -> List[List[int]]:
    """Gram matrix of the simple roots in Bourbaki numbering."""
    lengths, edges = _bourbaki_data(t)
    n = t.rank
    gram = [[0] * n for _ in range(n)]
    for i in range(n):
        gram[i][i] = lengths[i]
    for i, j in edges:
        # adjacent simple roots: <a_i, a_j> = -max(|a_i|^2, |a_j|^2) / 2
        gram[i][j] = gram[j][i] = -max(lengths[i], lengths[j]) // 2
    return gram


def node_permutation(t: LieType, numbering: str) -> Tuple[int, ...]:
    """Active node (1-based) -> Bourbaki node, for the given numbering tag."""
    if numbering not in NUMBERINGS:
        raise RootSystemError(f"unknown numbering {numbering!r}")
    ident = tuple(range(1, t.rank + 1))
    if numbering == BOURBAKI:
        return ident
    return PAPER_PERMUTATIONS.get(t.family, ident)


def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Positive roots and exact metric data of a simple root system.

    All coordinates are in the active ``numbering``; ``permutation[i-1]`` is
    the Bourbaki label of active node ``i``.
    """

    lie_type: LieType
    numbering: str
    permutation: Tuple[int, ...]
    gram: Tuple[Tuple[int, ...], ...]
    positive_roots: Tuple[Root, ...]
    _index: Dict[Root, int] = field(repr=False)
    _roots: frozenset = field(repr=False)
    _gram_rows: Dict[Root, Tuple[int, ...]] = field(repr=False)
    _sums: Tuple[Tuple[Tuple[int, int], ...], ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    @property
    def cartan_matrix(self) -> Tuple[Tuple[int, ...], ...]:
        """C[i][j] = a_j(H_{a_i}) = 2<a_i, a_j> / <a_i, a_i>."""
        g = self.gram
        return tuple(tuple(2 * g[i][j] // g[i][i] for j in range(self.rank))
                     for i in range(self.rank))

    @property
    def symmetrizer(self) -> Tuple[Fraction, ...]:
        """d_i with d_i * C[i][j] symmetric (equal to the Gram matrix)."""
        return tuple(Fraction(self.gram[i][i], 2) for i in range(self.rank))

    @property
    def simple_roots(self) -> Tuple[Root, ...]:
        n = self.rank
        return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))

    @property
    def highest_root(self) -> Root:
        return self.positive_roots[-1]

    @property
    def all_roots(self) -> frozenset:
        return self._roots

    def index(self, root: Root) -> int:
        """Position of a positive root in ``positive_roots``."""
        try:
            return self._index[tuple(root)]
        except KeyError:
            raise RootSystemError(f"{root} is not a positive root of {self.lie_type}") from None

    def is_root(self, v: Sequence[int]) -> bool:
        return tuple(v) in self._roots

    def is_positive_root(self, v: Sequence[int]) -> bool:
        return tuple(v) in self._index

    def inner(self, u: Sequence[int], v: Sequence[int]) -> int:
        row = self._gram_rows.get(tuple(v))
        if row is None:
            row = tuple(_dot(g, v) for g in self.gram)
        return _dot(u, row)

    def norm2(self, v: Sequence[int]) -> int:
        return self.inner(v, v)

    def is_long(self, root: Sequence[int]) -> bool:
        return self.norm2(root) == max(self.gram[i][i] for i in range(self.rank))

    def sums_with(self, i: int) -> Tuple[Tuple[int, int], ...]:
        """Pairs (j, k) with positive_roots[i] + positive_roots[j] == positive_roots[k]."""
        return self._sums[i]

    def __repr__(self):
        return f"RootSystem({self.lie_type}, numbering={self.numbering!r})"


def _generate_positive_roots(gram: List[List[int]]) -> List[Root]:
    """Close the simple roots under simple-root strings, height by height."""
    n = len(gram)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = set()
        for beta in layer:
            for i in range(n):
                # p: how far beta can descend along a_i; beta(H_{a_i}) = p - q
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                pairing = 2 * _dot(beta, gram[i]) // gram[i][i]
                q = p - pairing
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    nxt.add(tuple(up))
        nxt -= roots
        roots |= nxt
        layer = sorted(nxt)
    return sorted(roots, key=lambda r: (sum(r), r))


def build_root_system(lie_type: LieType | str, numbering: str = BOURBAKI,
                      permutation: Sequence[int] | None = None) -> RootSystem:
    """Construct the positive roots of a simple type in the requested numbering.

    An explicit ``permutation`` (active node -> Bourbaki node, 1-based)
    overrides the numbering tag, which is then reported as ``"custom"``.
    """
    t = LieType.parse(lie_type) if isinstance(lie_type, str) else lie_type
    if permutation is None:
        perm = node_permutation(t, numbering)
    else:
        perm = tuple(int(p) for p in permutation)
        if sorted(perm) != list(range(1, t.rank + 1)):
            raise RootSystemError(f"{perm} is not a permutation of 1..{t.rank}")
        numbering = "custom"
    base = bourbaki_gram(t)
    gram = [[base[perm[i] - 1][perm[j] - 1] for j in range(t.rank)] for i in range(t.rank)]
    pos = _generate_positive_roots(gram)
    if len(pos) != t.positive_root_count():
        raise AssertionError(f"{t}: generated {len(pos)} positive roots")
    index = {r: k for k, r in enumerate(pos)}
    neg = [tuple(-a for a in r) for r in pos]
    rows = {r: tuple(_dot(g, r) for g in gram) for r in list(pos) + neg}
    sums = []
    for r in pos:
        row = []
        for j, s in enumerate(pos):
            k = index.get(tuple(a + b for a, b in zip(r, s)))
            if k is not None:
                row.append((j, k))
        sums.append(tuple(row))
    return RootSystem(
        lie_type=t,
        numbering=numbering,
        permutation=perm,
        gram=tuple(tuple(row) for row in gram),
        positive_roots=tuple(pos),
        _index=index,
        _roots=frozenset(pos) | frozenset(neg),
        _gram_rows=rows,
        _sums=tuple(sums),
    )


def _check_root(rs: RootSystem, v: Sequence[int], what: str) -> Root:
    v = tuple(v)
    if len(v) != rs.rank:
        raise RootSystemError(f"{what} {v} has length {len(v)}, expected {rs.rank}")
    if v not in rs.all_roots:
        raise RootSystemError(f"{what} {v} is not a root of {rs.lie_type}")
    return v


def cartan_pairing(rs: RootSystem, beta: Sequence[int], alpha: Sequence[int]) -> int:
    """beta(H_alpha) = 2<beta, alpha> / <alpha, alpha>."""
    alpha = tuple(alpha)
    if not any(alpha):
        raise RootSystemError("alpha must be a nonzero root")
    _check_root(rs, alpha, "alpha")
    beta = tuple(beta)
    if any(beta):
        _check_root(rs, beta, "beta")
    num, den = 2 * rs.inner(beta, alpha), rs.norm2(alpha)
    if num % den:
        raise AssertionError(f"non-integral pairing {num}/{den}")
    return num // den


def root_string(rs: RootSystem, beta: Sequence[int], alpha: Sequence[int]) -> Tuple[int, int]:
    """(p, q) with beta - p*alpha, ..., beta + q*alpha the maximal alpha-string."""
    beta = _check_root(rs, beta, "beta")
    alpha = _check_root(rs, alpha, "alpha")
    if beta == alpha or beta == tuple(-a for a in alpha):
        raise RootSystemError("the alpha-string through +-alpha is degenerate")
    counts = []
    for sign in (-1, 1):
        k = 0
        while rs.is_root([b + sign * (k + 1) * a for b, a in zip(beta, alpha)]):
            k += 1
        counts.append(k)
    return counts[0], counts[1]


def coroot_expansion(rs: RootSystem, alpha: Sequence[int]) -> Tuple[Fraction, ...]:
    """Coefficients of H_alpha in the basis of simple coroots H_{a_j}.

    Entry j is also omega_j(H_alpha), the pairing with the j-th fundamental
    weight.
    """
    alpha = _check_root(rs, alpha, "alpha")
    a2 = rs.norm2(alpha)
    return tuple(Fraction(s * rs.gram[j][j], a2) for j, s in enumerate(alpha))


def root_to_str(root: Iterable[int]) -> str:
    """Digit string such as '1210' when every coefficient is in 0..9."""
    root = tuple(root)
    if all(0 <= a <= 9 for a in root):
        return "".join(str(a) for a in root)
    return ",".join(str(a) for a in root)


def parse_root(text: str, rank: int | None = None) -> Root:
    text = text.strip()
    if "," in text:
        root = tuple(int(x) for x in text.split(","))
    elif text.isdigit():
        root = tuple(int(c) for c in text)
    else:
        raise RootSystemError(f"cannot parse root {text!r}")
    if rank is not None and len(root) != rank:
        raise RootSystemError(f"root {text!r} has {len(root)} entries, expected {rank}")
    return root
