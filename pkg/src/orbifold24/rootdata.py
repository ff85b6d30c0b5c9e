"""Finite root systems, weights of irreducible modules, and fixed-subalgebra
classification of finite-order automorphisms by affine-node labels.

Conventions.  The invariant form is normalized so long roots have norm 2.
Weights are stored in fundamental-weight coordinates; roots additionally
carry simple-root coordinates.  Simple-root gram matrices for G2, A-series,
D4 and E6 follow the module tables they feed: G2 has (a1|a1) = 2/3 with the
first node short, D4 has the branch node second, E6 has the branch node
second attached to the fourth node of the chain.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q
from functools import lru_cache
from math import lcm
from typing import Dict, List, Optional, Sequence, Tuple

Coords = Tuple[Q, ...]

_FAMILIES = "ABCDEFG"


def _invert(m: List[List[Q]]) -> List[List[Q]]:
    n = len(m)
    aug = [[Q(x) for x in row] + [Q(1 if i == j else 0) for j in range(n)]
           for i, row in enumerate(m)]
    for c in range(n):
        p = next(i for i in range(c, n) if aug[i][c])
        aug[c], aug[p] = aug[p], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        r = self.rank
        ok = {
            "A": r >= 1,
            "B": r >= 2,
            "C": r >= 2,
            "D": r >= 3,
            "E": r in (6, 7, 8),
            "F": r == 4,
            "G": r == 2,
        }[self.family]
        if not ok:
            raise ValueError(f"invalid simple type {self.family}{self.rank}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @staticmethod
    def parse(s: str) -> "SimpleType":
        return SimpleType(s[0], int(s[1:]))

    def dim(self) -> int:
        """Dimension of the simple Lie algebra of this type."""
        r = self.rank
        if self.family == "A":
            return r * (r + 2)
        if self.family in ("B", "C"):
            return r * (2 * r + 1)
        if self.family == "D":
            return r * (2 * r - 1)
        if self.family == "E":
            return {6: 78, 7: 133, 8: 248}[r]
        return 52 if self.family == "F" else 14

    def dual_coxeter_number(self) -> int:
        """Closed-form dual Coxeter number (cross-checked against root data)."""
        r = self.rank
        if self.family in ("A", "C"):
            return r + 1
        if self.family == "B":
            return 2 * r - 1
        if self.family == "D":
            return 2 * r - 2
        if self.family == "E":
            return {6: 12, 7: 18, 8: 30}[r]
        return 9 if self.family == "F" else 4

    def root_count(self) -> int:
        return self.dim() - self.rank


def _simply_laced_gram(rank: int, edges: Sequence[Tuple[int, int]]) -> List[List[Q]]:
    g = [[Q(0)] * rank for _ in range(rank)]
    for i in range(rank):
        g[i][i] = Q(2)
    for i, j in edges:
        g[i][j] = g[j][i] = Q(-1)
    return g


def _gram_matrix(t: SimpleType) -> List[List[Q]]:
    r = t.rank
    if t.family == "A":
        return _simply_laced_gram(r, [(i, i + 1) for i in range(r - 1)])
    if t.family == "D":
        # chain a1..a_{r-1} with a_r attached to a_{r-2}; for D4 the branch
        # node is a2, matching the module tables.
        edges = [(i, i + 1) for i in range(r - 2)] + [(r - 3, r - 1)]
        return _simply_laced_gram(r, edges)
    if t.family == "E":
        # a2 attached to a4; chain a1-a3-a4-a5-a6(-a7-a8)
        chain = [0, 2, 3, 4, 5, 6, 7][: r - 1]
        edges = [(chain[k], chain[k + 1]) for k in range(len(chain) - 1)] + [(1, 3)]
        return _simply_laced_gram(r, edges)
    if t.family == "B":
        # long chain, short last root of norm 1
        g = _simply_laced_gram(r, [(i, i + 1) for i in range(r - 1)])
        g[r - 1][r - 1] = Q(1)
        return g
    if t.family == "C":
        # short chain of norm 1, long last root
        g = [[Q(0)] * r for _ in range(r)]
        for i in range(r - 1):
            g[i][i] = Q(1)
        g[r - 1][r - 1] = Q(2)
        for i in range(r - 2):
            g[i][i + 1] = g[i + 1][i] = Q(-1, 2)
        g[r - 2][r - 1] = g[r - 1][r - 2] = Q(-1)
        return g
    if t.family == "F":
        return [
            [Q(2), Q(-1), Q(0), Q(0)],
            [Q(-1), Q(2), Q(-1), Q(0)],
            [Q(0), Q(-1), Q(1), Q(-1, 2)],
            [Q(0), Q(0), Q(-1, 2), Q(1)],
        ]
    if t.family == "G":
        return [[Q(2, 3), Q(-1)], [Q(-1), Q(2)]]
    raise AssertionError


class RootSystem:
    """Root system with exact inner products in the long-root-norm-2 form."""

    def __init__(self, t: SimpleType):
        self.type = t
        self.rank = t.rank
        self.gram = _gram_matrix(t)
        self.norms = [self.gram[i][i] for i in range(self.rank)]
        # cartan[i][j] = 2(ai|aj)/(aj|aj); row i = fw coords of a_i
        self.cartan = [
            [2 * self.gram[i][j] / self.gram[j][j] for j in range(self.rank)]
            for i in range(self.rank)
        ]
        self.simple_roots: List[Coords] = [tuple(row) for row in self.cartan]
        self.fw_gram = self._fundamental_weight_gram()
        self.roots, self.root_alpha_coords = self._generate_roots()
        if len(self.roots) != t.root_count():
            raise AssertionError(
                f"{t}: generated {len(self.roots)} roots, expected {t.root_count()}"
            )
        self.positive_roots = [
            rt
            for rt, ac in zip(self.roots, self.root_alpha_coords)
            if sum(ac) > 0
        ]
        self.positive_alpha_coords = [
            ac for ac in self.root_alpha_coords if sum(ac) > 0
        ]
        self.rho: Coords = tuple([Q(1)] * self.rank)
        self.theta = self._highest_root()

    def _fundamental_weight_gram(self) -> List[List[Q]]:
        # (L_i|L_j) = (C^-1)_ji * d_i with d_i = (a_i|a_i)/2
        n = self.rank
        inv = _invert(self.cartan)
        d = [self.gram[i][i] / 2 for i in range(n)]
        return [[inv[j][i] * d[i] for j in range(n)] for i in range(n)]

    def _generate_roots(self) -> Tuple[List[Coords], List[Tuple[int, ...]]]:
        # Weyl-orbit closure of the simple roots under simple reflections.
        start: Dict[Coords, Tuple[int, ...]] = {}
        for i in range(self.rank):
            ac = tuple(1 if j == i else 0 for j in range(self.rank))
            start[self.simple_roots[i]] = ac
        frontier = dict(start)
        found = dict(start)
        while frontier:
            new: Dict[Coords, Tuple[int, ...]] = {}
            for fw, ac in frontier.items():
                for j in range(self.rank):
                    img_fw, img_ac = self._reflect(fw, ac, j)
                    if img_fw not in found:
                        new[img_fw] = img_ac
            found.update(new)
            frontier = new
        roots = sorted(found)
        return roots, [found[rt] for rt in roots]

    def _reflect(
        self, fw: Coords, ac: Tuple[int, ...], j: int
    ) -> Tuple[Coords, Tuple[int, ...]]:
        m = fw[j]
        new_fw = tuple(fw[k] - m * self.simple_roots[j][k] for k in range(self.rank))
        new_ac = tuple(ac[k] - (m if k == j else 0) for k in range(self.rank))
        return new_fw, tuple(int(x) for x in new_ac)

    def _highest_root(self) -> Coords:
        best = max(
            zip(self.roots, self.root_alpha_coords), key=lambda p: sum(p[1])
        )
        return best[0]

    def ip(self, x: Coords, y: Coords) -> Q:
        """Exact inner product of two fw-coordinate vectors."""
        total = Q(0)
        for i, xi in enumerate(x):
            if xi:
                row = self.fw_gram[i]
                total += xi * sum(row[j] * y[j] for j in range(self.rank) if y[j])
        return total

    def ip_with_root(self, x: Coords, alpha_coords: Sequence[int]) -> Q:
        """(x|a) for a root given in simple-root coordinates; O(rank)."""
        return sum(
            Q(c) * self.norms[j] / 2 * x[j]
            for j, c in enumerate(alpha_coords)
            if c and x[j]
        )

    def norm_of(self, x: Coords) -> Q:
        return self.ip(x, x)

    def fundamental_weight(self, i: int) -> "Weight":
        return Weight(
            tuple(Q(1) if j == i else Q(0) for j in range(self.rank)), self
        )

    def weight(self, coords: Sequence[Q | int]) -> "Weight":
        return Weight(tuple(Q(c) for c in coords), self)

    def zero(self) -> "Weight":
        return Weight(tuple([Q(0)] * self.rank), self)

    def __repr__(self) -> str:
        return f"RootSystem({self.type})"


@lru_cache(maxsize=None)
def build_root_system(t: SimpleType) -> RootSystem:
    """Root system of a simple type; roots generated and counted."""
    return RootSystem(t)


@dataclass(frozen=True)
class Weight:
    coords: Coords
    system: RootSystem = field(compare=False)

    def __post_init__(self) -> None:
        if len(self.coords) != self.system.rank:
            raise ValueError("coordinate length does not match rank")

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(
            tuple(a + b for a, b in zip(self.coords, other.coords)), self.system
        )

    def scale(self, c: Q | int) -> "Weight":
        return Weight(tuple(Q(c) * x for x in self.coords), self.system)

    def __repr__(self) -> str:
        return f"Weight{self.coords}"


def inner_product(x: Weight, y: Weight) -> Q:
    """Exact (x|y) through the system's quadratic form."""
    if x.system is not y.system:
        raise ValueError("weights live in different root systems")
    return x.system.ip(x.coords, y.coords)


def dual_coxeter(t: SimpleType) -> int:
    """Dual Coxeter number 1 + (rho|theta-dual) from root data."""
    rs = build_root_system(t)
    theta = rs.theta
    val = 1 + 2 * rs.ip(rs.rho, theta) / rs.norm_of(theta)
    assert val.denominator == 1
    return int(val)


@dataclass(frozen=True)
class WeightSystem:
    """Weights of an irreducible module with Freudenthal multiplicities."""

    highest: Weight
    entries: Tuple[Tuple[Coords, int], ...]

    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.entries)

    def weights(self) -> List[Coords]:
        return [w for w, _ in self.entries]


_WS_CACHE: Dict[Tuple[SimpleType, Tuple[int, ...]], WeightSystem] = {}


def weight_system(lam: Weight) -> WeightSystem:
    """All weights of the irreducible module with highest weight lam."""
    if not (lam.is_dominant() and lam.is_integral()):
        raise ValueError("highest weight must be dominant integral")
    rs = lam.system
    top = tuple(int(c) for c in lam.coords)
    key = (rs.type, top)
    cached = _WS_CACHE.get(key)
    if cached is not None:
        return cached
    n = rs.rank
    # simple roots in fw coordinates are Cartan-matrix rows: integers
    simple = [tuple(int(c) for c in row) for row in rs.simple_roots]

    # BFS down from the highest weight, level = height of lam - mu.
    levels: Dict[int, List[Tuple[int, ...]]] = {0: [top]}
    seen: Dict[Tuple[int, ...], int] = {top: 0}
    level = 0
    while level in levels:
        for mu in levels[level]:
            for j in range(n):
                # length of the a_j-string above mu inside the found set
                p = 0
                up = mu
                while True:
                    up = tuple(up[k] + simple[j][k] for k in range(n))
                    if up not in seen:
                        break
                    p += 1
                if p + mu[j] >= 1:
                    down = tuple(mu[k] - simple[j][k] for k in range(n))
                    if down not in seen:
                        seen[down] = level + 1
                        levels.setdefault(level + 1, []).append(down)
        level += 1

    # Freudenthal multiplicities in scaled integer arithmetic.
    s_root = lcm(*[(rs.norms[j] / 2).denominator for j in range(n)])
    root_w = [
        [int(Q(c) * rs.norms[j] / 2 * s_root) for j, c in enumerate(ac)]
        for ac in rs.positive_alpha_coords
    ]
    s_gram = lcm(*[x.denominator for row in rs.fw_gram for x in row])
    gram_i = [[int(x * s_gram) for x in row] for row in rs.fw_gram]

    def norm_scaled(x: Tuple[int, ...]) -> int:
        return sum(
            x[i] * sum(gram_i[i][j] * x[j] for j in range(n) if x[j])
            for i in range(n)
            if x[i]
        )

    lam_rho = tuple(c + 1 for c in top)
    n_lam = norm_scaled(lam_rho)
    mult: Dict[Tuple[int, ...], int] = {top: 1}
    order = sorted(seen.items(), key=lambda kv: kv[1])
    pos_steps = [tuple(int(c) for c in fw) for fw in rs.positive_roots]
    for mu, lev in order:
        if lev == 0:
            continue
        acc = 0
        for step, w in zip(pos_steps, root_w):
            shifted = tuple(a + b for a, b in zip(mu, step))
            while True:
                m = mult.get(shifted)
                if m is None:
                    break
                acc += m * sum(
                    w[j] * shifted[j] for j in range(n) if shifted[j]
                )
                shifted = tuple(a + b for a, b in zip(shifted, step))
        mu_rho = tuple(c + 1 for c in mu)
        denom = n_lam - norm_scaled(mu_rho)
        val = Q(2 * acc * s_gram, s_root * denom)
        assert val.denominator == 1 and val > 0
        mult[mu] = int(val)
    entries = tuple(
        sorted((tuple(Q(c) for c in mu), m) for mu, m in mult.items())
    )
    ws = WeightSystem(lam, entries)
    _WS_CACHE[key] = ws
    return ws


def weyl_dim(lam: Weight) -> int:
    """Weyl dimension formula."""
    if not (lam.is_dominant() and lam.is_integral()):
        raise ValueError("highest weight must be dominant integral")
    rs = lam.system
    rho = rs.rho
    lam_rho = tuple(a + b for a, b in zip(lam.coords, rho))
    num = Q(1)
    den = Q(1)
    for ac in rs.positive_alpha_coords:
        num *= rs.ip_with_root(lam_rho, ac)
        den *= rs.ip_with_root(rho, ac)
    val = num / den
    assert val.denominator == 1
    return int(val)


def lowest_weight(lam: Weight) -> Weight:
    """Unique minimum of the weight system under the root order (= w0.lam)."""
    if not (lam.is_dominant() and lam.is_integral()):
        raise ValueError("highest weight must be dominant integral")
    rs = lam.system
    cur = list(lam.coords)
    while True:
        j = next((k for k in range(rs.rank) if cur[k] > 0), None)
        if j is None:
            return Weight(tuple(cur), rs)
        m = cur[j]
        for k in range(rs.rank):
            cur[k] -= m * rs.simple_roots[j][k]


def min_pairing_over_weights(x: Weight, lam: Weight) -> Q:
    """Exact min of (x|mu) over the weight system of lam, by brute force."""
    if x.system is not lam.system:
        raise ValueError("weights live in different root systems")
    rs = lam.system
    ws = weight_system(lam)
    fw_x = [
        sum(rs.fw_gram[i][j] * x.coords[j] for j in range(rs.rank))
        for i in range(rs.rank)
    ]
    return min(
        sum((fw_x[i] * mu[i] for i in range(rs.rank) if mu[i]), Q(0))
        for mu in ws.weights()
    )


def lin_min_over_weights(big: Weight, lam: Weight) -> Q:
    """min of (big|mu) over the weight system of lam, for dominant-cone big.

    Brute force is authoritative; for A-type systems the w0 shortcut
    (big|w0.lam) is asserted to agree.
    """
    if not all(c >= 0 for c in big.coords):
        raise ValueError("first argument must be a dominant-cone vector")
    best = min_pairing_over_weights(big, lam)
    if lam.system.type.family == "A":
        shortcut = lam.system.ip(big.coords, lowest_weight(lam).coords)
        assert best == shortcut, "A-type lowest-weight shortcut disagrees"
    return best


@dataclass(frozen=True)
class SemisimpleTypeWithLevels:
    """Multiset of (simple type, level) ideals plus an abelian rank.

    Level None marks a type-only answer (level not determined).
    """

    ideals: Tuple[Tuple[SimpleType, Optional[Q]], ...]
    abelian_rank: int = 0

    @staticmethod
    def of(
        ideals: Sequence[Tuple[SimpleType, Optional[Q | int]]], abelian_rank: int = 0
    ) -> "SemisimpleTypeWithLevels":
        norm = tuple(
            sorted(
                (t, None if k is None else Q(k)) for t, k in ideals
            )
        )
        for _, k in norm:
            if k is not None and k <= 0:
                raise ValueError("levels must be positive")
        return SemisimpleTypeWithLevels(norm, abelian_rank)

    def semisimple_rank(self) -> int:
        return sum(t.rank for t, _ in self.ideals)

    def total_rank(self) -> int:
        return self.semisimple_rank() + self.abelian_rank

    def dim(self) -> int:
        return sum(t.dim() for t, _ in self.ideals) + self.abelian_rank

    def types_only(self) -> "SemisimpleTypeWithLevels":
        return SemisimpleTypeWithLevels.of(
            [(t, None) for t, _ in self.ideals], self.abelian_rank
        )

    def __str__(self) -> str:
        parts = []
        for t, k in self.ideals:
            if k is None:
                parts.append(str(t))
            else:
                lev = str(k.numerator) if k.denominator == 1 else f"{k}"
                parts.append(f"{t},{lev}")
        if self.abelian_rank == 1:
            parts.append("U(1)")
        elif self.abelian_rank > 1:
            parts.append(f"U(1)^{self.abelian_rank}")
        return " ".join(parts) if parts else "0"

    @staticmethod
    def parse(s: str) -> "SemisimpleTypeWithLevels":
        ideals: List[Tuple[SimpleType, Optional[Q]]] = []
        abelian = 0
        for tok in s.split():
            if tok.startswith("U(1)"):
                abelian += int(tok[5:]) if "^" in tok else 1
                continue
            if "," in tok:
                ty, lev = tok.split(",")
                ideals.append((SimpleType.parse(ty), Q(lev)))
            else:
                ideals.append((SimpleType.parse(tok), None))
        return SemisimpleTypeWithLevels.of(ideals, abelian)


def classify_simple_system(gram: List[List[Q]]) -> SimpleType:
    """Dynkin type of an irreducible simple system given its exact gram matrix."""
    n = len(gram)
    if n == 1:
        return SimpleType("A", 1)
    cart = [
        [2 * gram[i][j] / gram[j][j] for j in range(n)] for i in range(n)
    ]
    bonds = {}
    adj: List[List[int]] = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            b = cart[i][j] * cart[j][i]
            if b:
                assert b.denominator == 1 and 1 <= b <= 3
                bonds[(i, j)] = int(b)
                adj[i].append(j)
                adj[j].append(i)
    multi = [b for b in bonds.values() if b > 1]
    if 3 in multi:
        if n != 2:
            raise ValueError("triple bond outside rank 2")
        return SimpleType("G", 2)
    if 2 in multi:
        if len(multi) != 1:
            raise ValueError("more than one double bond")
        if n == 2:
            return SimpleType("C", 2)
        (i, j) = next(k for k, b in bonds.items() if b == 2)
        ends = {i, j}
        interior = {k for k in range(n) if len(adj[k]) > 1}
        if ends <= interior:
            if n != 4:
                raise ValueError("interior double bond outside F4")
            return SimpleType("F", 4)
        maxnorm = max(gram[k][k] for k in range(n))
        n_short = sum(1 for k in range(n) if gram[k][k] < maxnorm)
        return SimpleType("B" if n_short == 1 else "C", n)
    degrees = [len(a) for a in adj]
    if max(degrees) <= 2:
        if degrees.count(1) != 2 or min(degrees) == 0:
            raise ValueError("disconnected or cyclic simple system")
        return SimpleType("A", n)
    if max(degrees) > 3 or degrees.count(3) != 1:
        raise ValueError("not a Dynkin diagram")
    hub = degrees.index(3)
    legs = []
    for start in adj[hub]:
        length = 1
        prev, cur = hub, start
        while True:
            nxt = [k for k in adj[cur] if k != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        legs.append(length)
    legs.sort()
    if legs[0] == 1 and legs[1] == 1:
        return SimpleType("D", legs[2] + 3)
    if legs[:2] == [1, 2] and legs[2] in (2, 3, 4):
        return SimpleType("E", legs[2] + 4)
    raise ValueError(f"unrecognized branched diagram with legs {legs}")


def _affine_node_data(t: SimpleType) -> Tuple[List[Coords], List[int]]:
    """Untwisted affine node vectors (fw coords) and marks; node 0 = -theta."""
    rs = build_root_system(t)
    theta_ac = rs.root_alpha_coords[rs.roots.index(rs.theta)]
    neg_theta = tuple(-c for c in rs.theta)
    nodes = [neg_theta] + list(rs.simple_roots)
    marks = [1] + [int(c) for c in theta_ac]
    return nodes, marks


# Twisted triple-cover diagram used for the branch-rotation case: three nodes
# with marks (1, 2, 1); retained-node subsets classify as below.
_TWISTED_D4_MARKS = [1, 2, 1]
_TWISTED_D4_SUBTYPES: Dict[frozenset, List[SimpleType]] = {
    frozenset({0}): [SimpleType("A", 1)],
    frozenset({1}): [SimpleType("A", 1)],
    frozenset({2}): [SimpleType("A", 1)],
    frozenset({0, 1}): [SimpleType("A", 2)],
    frozenset({1, 2}): [SimpleType("G", 2)],
    frozenset({0, 2}): [SimpleType("A", 1), SimpleType("A", 1)],
    frozenset(): [],
}


def kac_fixed_subalgebra(
    t: SimpleType, s: Sequence[int], twist_order: int = 1
) -> SemisimpleTypeWithLevels:
    """Fixed-subalgebra type of the finite-order automorphism labelled by s.

    s lists non-negative integers on the (twisted) affine diagram nodes; the
    automorphism order is twist_order * sum(marks * s).  The semisimple part
    is the sub-diagram on nodes with s_i = 0; the abelian rank is one less
    than the number of nonzero labels.  Levels are not determined here.
    """
    if all(x == 0 for x in s):
        raise ValueError("labels must not all vanish")
    if any(x < 0 for x in s):
        raise ValueError("labels must be non-negative")
    if twist_order == 3:
        if t != SimpleType("D", 4):
            raise ValueError("triple twist supported for D4 only")
        if len(s) != 3:
            raise ValueError("twisted diagram has 3 nodes")
        kept = frozenset(i for i in range(3) if s[i] == 0)
        types = _TWISTED_D4_SUBTYPES[kept]
        abelian = sum(1 for x in s if x) - 1
        return SemisimpleTypeWithLevels.of([(ty, None) for ty in types], abelian)
    if twist_order != 1:
        raise ValueError("twist order must be 1 or 3")
    nodes, marks = _affine_node_data(t)
    if len(s) != len(nodes):
        raise ValueError(f"expected {len(nodes)} labels for affine {t}")
    rs = build_root_system(t)
    kept = [i for i in range(len(nodes)) if s[i] == 0]
    types = _split_and_classify([nodes[i] for i in kept], rs)
    abelian = sum(1 for x in s if x) - 1
    return SemisimpleTypeWithLevels.of([(ty, None) for ty in types], abelian)


def _split_and_classify(vectors: List[Coords], rs: RootSystem) -> List[SimpleType]:
    """Split a simple system into connected components and classify each."""
    n = len(vectors)
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        queue = [start]
        while queue:
            i = queue.pop()
            for j in range(n):
                if not seen[j] and rs.ip(vectors[i], vectors[j]) != 0:
                    seen[j] = True
                    comp.append(j)
                    queue.append(j)
        gram = [
            [rs.ip(vectors[i], vectors[j]) for j in comp] for i in comp
        ]
        out.append(classify_simple_system(gram))
    return out


def automorphism_order(t: SimpleType, s: Sequence[int], twist_order: int = 1) -> int:
    """Order twist * sum(marks * s) of the automorphism labelled by s."""
    if twist_order == 3:
        marks = _TWISTED_D4_MARKS
    else:
        _, marks = _affine_node_data(t)
    return twist_order * sum(m * x for m, x in zip(marks, s))
