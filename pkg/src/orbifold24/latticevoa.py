"""Rank-24 even unimodular lattices from glue codes, their order-3 isometries,
and the weight-one Lie algebra of the associated lattice vertex algebra.

Lattice vectors are rows of rational coordinates over the concatenated
simple-root bases of the components.  The two lattices used by the order-3
uniqueness chains are assembled from their glue codes: four E6 components
glued by a ternary code, and six D4 components glued by a binary code whose
digits label the three nontrivial cosets of each D4 discriminant group.

The weight-one algebra has basis {Cartan directions} + {e^a : a a root},
with structure constants through the sign bicharacter fixed on an ordered
lattice basis.  Standard lifts of order-3 isometries are solved exactly over
F2 (phase 1 on the fixed sublattice, composite of order 3), fixed-point
subalgebras are extracted orbit by orbit, and their types and levels are
identified by a float root-space discovery pass whose every rounded integer
is re-verified by exact rank computations.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction as Q
from math import factorial, gcd, lcm
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

import numpy as np

from .exactmath import ExactMatrix, ResidualExceeded, float_eigen
from .rootdata import (
    SemisimpleTypeWithLevels,
    SimpleType,
    build_root_system,
    classify_simple_system,
)

Vec = Tuple[Q, ...]
IntVec = Tuple[int, ...]


# ---------------------------------------------------------------------------
# exact matrix helpers (row-vector convention throughout)


def mat_mul(a: List[List[Q]], b: List[List[Q]]) -> List[List[Q]]:
    n, k, m = len(a), len(b), len(b[0])
    out = [[Q(0)] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        row = out[i]
        for t in range(k):
            v = ai[t]
            if v:
                bt = b[t]
                for j in range(m):
                    if bt[j]:
                        row[j] += v * bt[j]
    return out


def mat_inv(a: List[List[Q]]) -> List[List[Q]]:
    n = len(a)
    aug = [[Q(x) for x in row] + [Q(1 if i == j else 0) for j in range(n)]
           for i, row in enumerate(a)]
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


def mat_det(a: List[List[Q]]) -> Q:
    n = len(a)
    m = [[Q(x) for x in row] for row in a]
    det = Q(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c]), None)
        if p is None:
            return Q(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return det


def rational_kernel(m: List[List[Q]]) -> List[List[Q]]:
    """Basis of {x : x m = 0} for a matrix acting on row vectors."""
    rows, cols = len(m), len(m[0]) if m else 0
    # transpose so the left kernel becomes a standard column-space kernel
    mt = [[m[i][j] for i in range(rows)] for j in range(cols)]
    red = [list(r) for r in mt]
    pivots: List[int] = []
    r = 0
    for c in range(rows):
        p = next((i for i in range(r, cols) if red[i][c]), None)
        if p is None:
            continue
        red[r], red[p] = red[p], red[r]
        inv = 1 / red[r][c]
        red[r] = [x * inv for x in red[r]]
        for i in range(cols):
            if i != r and red[i][c]:
                f = red[i][c]
                red[i] = [x - f * y for x, y in zip(red[i], red[r])]
        pivots.append(c)
        r += 1
    basis = []
    free = [c for c in range(rows) if c not in pivots]
    for f_col in free:
        v = [Q(0)] * rows
        v[f_col] = Q(1)
        for idx, c in enumerate(pivots):
            v[c] = -red[idx][f_col]
        basis.append(v)
    return basis


def hnf_with_transform(m: List[List[int]]) -> Tuple[List[List[int]], List[List[int]]]:
    """Row Hermite normal form H = U m with U unimodular."""
    rows = len(m)
    cols = len(m[0]) if m else 0
    h = [list(r) for r in m]
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    r = 0
    for c in range(cols):
        while True:
            nz = [i for i in range(r, rows) if h[i][c]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(h[i][c]))
            h[r], h[piv] = h[piv], h[r]
            u[r], u[piv] = u[piv], u[r]
            reduced = True
            for i in range(r + 1, rows):
                if h[i][c]:
                    q = h[i][c] // h[r][c]
                    h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                    if h[i][c]:
                        reduced = False
            if reduced:
                break
        if r < rows and h[r][c]:
            if h[r][c] < 0:
                h[r] = [-x for x in h[r]]
                u[r] = [-x for x in u[r]]
            for i in range(r):
                q = h[i][c] // h[r][c]
                if q:
                    h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
            r += 1
            if r == rows:
                break
    return h, u


def integer_row_kernel(m: List[List[int]]) -> List[List[int]]:
    """Basis of {x integral : x m = 0}; saturated by construction."""
    h, u = hnf_with_transform(m)
    return [u[i] for i in range(len(m)) if not any(h[i])]


# ---------------------------------------------------------------------------
# glue codes


def _digit_reps(t: SimpleType) -> Dict[int, Vec]:
    """Coset representatives of the discriminant group, in simple-root coords."""
    rs = build_root_system(t)
    inv = mat_inv([[Q(x) for x in row] for row in rs.cartan])
    weights = [tuple(inv[i]) for i in range(rs.rank)]  # row i = fund weight i
    if t == SimpleType("E", 6):
        # Z3 cosets: [1] and [2] are the two minuscule classes
        reps = {0: tuple([Q(0)] * 6), 1: weights[0], 2: weights[5]}
        diff = tuple(2 * a - b for a, b in zip(reps[1], reps[2]))
        assert all(x.denominator == 1 for x in diff), "[2] must be 2*[1]"
        return reps
    if t == SimpleType("D", 4):
        # Klein cosets: the three minuscule weights on the outer nodes
        return {0: tuple([Q(0)] * 4), 1: weights[3], 2: weights[0], 3: weights[2]}
    raise ValueError(f"no glue digits defined for {t}")


_D4_KLEIN_ADD = {
    (0, 0): 0, (0, 1): 1, (0, 2): 2, (0, 3): 3,
    (1, 0): 1, (1, 1): 0, (1, 2): 3, (1, 3): 2,
    (2, 0): 2, (2, 1): 3, (2, 2): 0, (2, 3): 1,
    (3, 0): 3, (3, 1): 2, (3, 2): 1, (3, 3): 0,
}


def digit_add(t: SimpleType, a: int, b: int) -> int:
    if t == SimpleType("E", 6):
        return (a + b) % 3
    if t == SimpleType("D", 4):
        return _D4_KLEIN_ADD[(a, b)]
    raise ValueError(f"no glue digits defined for {t}")


@dataclass(frozen=True)
class GlueCode:
    """Component root-lattice types with generator digit words."""

    components: Tuple[SimpleType, ...]
    generators: Tuple[IntVec, ...]

    def words(self) -> FrozenSet[IntVec]:
        zero = tuple([0] * len(self.components))
        seen: Set[IntVec] = {zero}
        frontier = [zero]
        while frontier:
            nxt = []
            for w in frontier:
                for g in self.generators:
                    s = tuple(
                        digit_add(t, a, b)
                        for t, a, b in zip(self.components, w, g)
                    )
                    if s not in seen:
                        seen.add(s)
                        nxt.append(s)
            frontier = nxt
        return frozenset(seen)

    def word_vector(self, w: IntVec) -> Vec:
        parts: List[Q] = []
        for t, d in zip(self.components, w):
            parts.extend(_digit_reps(t)[d])
        return tuple(parts)


NI_E6_4 = GlueCode(
    (SimpleType("E", 6),) * 4,
    ((1, 0, 1, 2), (1, 1, 2, 0), (1, 2, 0, 1)),
)

NI_D4_6 = GlueCode(
    (SimpleType("D", 4),) * 6,
    (
        (1, 1, 1, 1, 1, 1),
        (2, 2, 2, 2, 2, 2),
        (0, 0, 2, 3, 3, 2),
        (0, 2, 3, 3, 2, 0),
        (0, 3, 2, 0, 2, 3),
        (0, 2, 0, 2, 3, 3),
    ),
)


# ---------------------------------------------------------------------------
# lattice assembly


@dataclass(frozen=True)
class EvenLattice:
    """Even positive-definite lattice with an explicit rational basis."""

    code: GlueCode
    basis: Tuple[Vec, ...]                      # rows, ambient coordinates
    ambient_gram: Tuple[Vec, ...] = field(repr=False)
    basis_inv: Tuple[Vec, ...] = field(repr=False)
    gram: Tuple[IntVec, ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def ip_ambient(self, x: Vec, y: Vec) -> Q:
        total = Q(0)
        for i, xi in enumerate(x):
            if xi:
                row = self.ambient_gram[i]
                total += xi * sum(row[j] * y[j] for j in range(len(y)) if y[j])
        return total

    def coords_of(self, x: Vec) -> Optional[IntVec]:
        """Lattice-basis coordinates of an ambient vector, or None."""
        out = []
        for j in range(self.rank):
            v = sum(x[i] * self.basis_inv[i][j] for i in range(self.rank) if x[i])
            if v.denominator != 1:
                return None
            out.append(int(v))
        return tuple(out)

    def contains(self, x: Vec) -> bool:
        return self.coords_of(x) is not None

    def from_coords(self, c: Sequence[int]) -> Vec:
        return tuple(
            sum(Q(c[i]) * self.basis[i][j] for i in range(self.rank) if c[i])
            for j in range(self.rank)
        )

    def component_slices(self) -> List[Tuple[int, int]]:
        out = []
        pos = 0
        for t in self.code.components:
            out.append((pos, pos + t.rank))
            pos += t.rank
        return out

    def glue_index(self) -> int:
        return len(self.code.words())


def assemble_niemeier(code: GlueCode) -> EvenLattice:
    """Lattice from component roots plus glue; verified even and unimodular."""
    rank = sum(t.rank for t in code.components)
    blocks: List[List[Q]] = [[Q(0)] * rank for _ in range(rank)]
    pos = 0
    for t in code.components:
        rs = build_root_system(t)
        for i in range(t.rank):
            for j in range(t.rank):
                blocks[pos + i][pos + j] = rs.gram[i][j]
        pos += t.rank
    gens: List[Vec] = [
        tuple(Q(1) if j == i else Q(0) for j in range(rank)) for i in range(rank)
    ]
    gens.extend(code.word_vector(g) for g in code.generators)
    den = lcm(*[x.denominator for row in gens for x in row])
    int_rows = [[int(x * den) for x in row] for row in gens]
    h, _ = hnf_with_transform(int_rows)
    basis_rows = [r for r in h if any(r)]
    if len(basis_rows) != rank:
        raise ValueError("generators do not span a full-rank lattice")
    basis = tuple(tuple(Q(x, den) for x in row) for row in basis_rows)
    bt = [[basis[i][j] for i in range(rank)] for j in range(rank)]
    gram_q = mat_mul(mat_mul([list(b) for b in basis], blocks), bt)
    for i in range(rank):
        for j in range(rank):
            if gram_q[i][j].denominator != 1:
                raise ValueError("assembled lattice is not integral")
        if gram_q[i][i] % 2:
            raise ValueError("assembled lattice is not even")
    det = mat_det(gram_q)
    if det != 1:
        raise ValueError(f"assembled lattice has determinant {det}, not 1")
    inv = mat_inv([list(b) for b in basis])
    return EvenLattice(
        code,
        basis,
        tuple(tuple(r) for r in blocks),
        tuple(tuple(r) for r in inv),
        tuple(tuple(int(x) for x in row) for row in gram_q),
    )


def root_lattice(t: SimpleType) -> EvenLattice:
    """The plain root lattice of a simple type (no glue, any determinant)."""
    rs = build_root_system(t)
    if any(x.denominator != 1 for row in rs.gram for x in row):
        raise ValueError("root lattice is not integral in this normalization")
    n = t.rank
    basis = tuple(
        tuple(Q(1) if j == i else Q(0) for j in range(n)) for i in range(n)
    )
    gram = tuple(tuple(int(x) for x in row) for row in rs.gram)
    return EvenLattice(
        GlueCode((t,), ()),
        basis,
        tuple(tuple(Q(x) for x in row) for row in rs.gram),
        basis,
        gram,
    )


def coset_norm_lower_bound(code: GlueCode, word: IntVec) -> Q:
    """Smallest norm possibly occurring in the glue coset of a word.

    Coset norms are fixed mod 2Z, so the bound sums, over nonzero digits,
    the least positive value congruent to the digit representative's norm.
    """
    total = Q(0)
    for t, d in zip(code.components, word):
        if d == 0:
            continue
        rs = build_root_system(t)
        rep = _digit_reps(t)[d]
        n = sum(
            rep[i] * sum(rs.gram[i][j] * rep[j] for j in range(t.rank))
            for i in range(t.rank)
        )
        frac = n % 2
        total += frac if frac else Q(2)
    return total


def lattice_roots(lat: EvenLattice) -> List[Vec]:
    """All norm-2 vectors; nonzero glue cosets are excluded by norm bounds."""
    for w in lat.code.words():
        if any(w) and coset_norm_lower_bound(lat.code, w) <= 2:
            raise AssertionError("a glue coset might contain norm-2 vectors")
    roots: List[Vec] = []
    offset = 0
    dim = lat.rank
    for t in lat.code.components:
        rs = build_root_system(t)
        for ac in rs.root_alpha_coords:
            vec = [Q(0)] * dim
            for i, c in enumerate(ac):
                vec[offset + i] = Q(c)
            roots.append(tuple(vec))
        offset += t.rank
    return sorted(roots)


# ---------------------------------------------------------------------------
# component isometries and the three named lattice isometries


@dataclass(frozen=True)
class LatticeIsometry:
    """Integer matrix in lattice-basis coordinates (row-vector action)."""

    lattice: EvenLattice
    matrix: Tuple[IntVec, ...]
    name: str

    def apply_coords(self, c: Sequence[int]) -> IntVec:
        n = len(c)
        return tuple(
            sum(c[i] * self.matrix[i][j] for i in range(n) if c[i])
            for j in range(n)
        )

    def ambient_matrix(self) -> List[List[Q]]:
        lat = self.lattice
        a = [[Q(x) for x in row] for row in self.matrix]
        return mat_mul(
            mat_mul([list(r) for r in lat.basis_inv], a),
            [list(b) for b in lat.basis],
        )

    def apply_ambient(self, x: Vec) -> Vec:
        m = self.ambient_matrix()
        n = len(x)
        return tuple(
            sum(x[i] * m[i][j] for i in range(n) if x[i]) for j in range(n)
        )

    def power(self, k: int) -> Tuple[IntVec, ...]:
        n = self.lattice.rank
        out = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        for _ in range(k):
            out = tuple(
                tuple(
                    sum(out[i][t] * self.matrix[t][j] for t in range(n) if out[i][t])
                    for j in range(n)
                )
                for i in range(n)
            )
        return out

    def order(self) -> int:
        n = self.lattice.rank
        ident = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        for k in range(1, 13):
            if self.power(k) == ident:
                return k
        raise ValueError("order exceeds 12")

    def fixed_coords_basis(self) -> List[IntVec]:
        n = self.lattice.rank
        m = [
            [self.matrix[i][j] - (1 if i == j else 0) for j in range(n)]
            for i in range(n)
        ]
        return [tuple(r) for r in integer_row_kernel(m)]

    def preserves_gram(self) -> bool:
        n = self.lattice.rank
        g = self.lattice.gram
        a = self.matrix
        ag = [[sum(a[i][s] * g[s][t] for s in range(n) if a[i][s]) for t in range(n)]
              for i in range(n)]
        for i in range(n):
            for j in range(i, n):
                if sum(ag[i][t] * a[j][t] for t in range(n) if a[j][t]) != g[i][j]:
                    return False
        return True


def _slot_maps_to_isometry(
    lat: EvenLattice,
    slot_maps: Sequence[Tuple[int, List[List[Q]]]],
    name: str,
) -> LatticeIsometry:
    """Isometry from per-component maps: component c lands in slot_maps[c][0]."""
    slices = lat.component_slices()
    dim = lat.rank
    amb = [[Q(0)] * dim for _ in range(dim)]
    for c, (tgt, local) in enumerate(slot_maps):
        (a0, a1), (b0, b1) = slices[c], slices[tgt]
        for i in range(a1 - a0):
            for j in range(b1 - b0):
                amb[a0 + i][b0 + j] = Q(local[i][j])
    m = mat_mul(
        mat_mul([list(b) for b in lat.basis], amb),
        [list(r) for r in lat.basis_inv],
    )
    out = []
    for row in m:
        if any(x.denominator != 1 for x in row):
            raise ValueError("candidate isometry does not preserve the lattice")
        out.append(tuple(int(x) for x in row))
    return LatticeIsometry(lat, tuple(out), name)


def _identity_local(rank: int) -> List[List[Q]]:
    return [[Q(1) if j == i else Q(0) for j in range(rank)] for i in range(rank)]


def _assert_order3(m: List[List[Q]], fixed_free: bool) -> None:
    n = len(m)
    ident = _identity_local(n)
    m2 = mat_mul(m, m)
    assert mat_mul(m2, m) == ident, "matrix does not have order 3"
    if fixed_free:
        s = [[m2[i][j] + m[i][j] + ident[i][j] for j in range(n)] for i in range(n)]
        assert all(x == 0 for row in s for x in row), "not fixed-point-free"


def fpf_e6_matrix() -> List[List[Q]]:
    """Fixed-point-free order-3 isometry of the E6 root lattice.

    Simultaneous rotation of the orthogonal pair decomposition
    (a1,a3), (a5,a6), (a2,-theta); integrality certifies it preserves E6 and
    m^2 + m + 1 = 0 certifies the fixed-point-free order-3 action.
    """
    rs = build_root_system(SimpleType("E", 6))
    theta_ac = rs.root_alpha_coords[rs.roots.index(rs.theta)]
    e = _identity_local(6)
    pairs = [
        (e[0], e[2]),
        (e[4], e[5]),
        (e[1], [-Q(c) for c in theta_ac]),
    ]
    t_rows: List[List[Q]] = []
    for a, b in pairs:
        t_rows.append(list(a))
        t_rows.append(list(b))
    rot = [[Q(0)] * 6 for _ in range(6)]
    for k in range(3):
        rot[2 * k][2 * k + 1] = Q(1)      # a -> b
        rot[2 * k + 1][2 * k] = Q(-1)     # b -> -a-b
        rot[2 * k + 1][2 * k + 1] = Q(-1)
    phi = mat_mul(mat_mul(mat_inv(t_rows), rot), t_rows)
    assert all(x.denominator == 1 for row in phi for x in row)
    _assert_order3(phi, fixed_free=True)
    return phi


# Hurwitz-unit model of D4: basis (1, i, j, w) with w = (-1+i+j+k)/2 and
# form 2 Re(x conj(y)); left multiplication by w is an order-3 isometry.
_QUAT_LEFT_W = [
    [0, 0, 0, 1],
    [-1, 0, 1, -1],
    [0, -1, -1, 1],
    [-1, 0, 0, -1],
]
_QUAT_GRAM = [
    [2, 0, 0, -1],
    [0, 2, 0, 1],
    [0, 0, 2, 1],
    [-1, 1, 1, 2],
]


def fpf_d4_matrix() -> List[List[Q]]:
    """Fixed-point-free order-3 isometry of D4, outside the Weyl group."""

    def qip(x: Sequence[int], y: Sequence[int]) -> int:
        return sum(
            x[i] * sum(_QUAT_GRAM[i][j] * y[j] for j in range(4))
            for i in range(4)
        )

    qroots = [
        c
        for c in itertools.product(range(-2, 3), repeat=4)
        if qip(c, c) == 2
    ]
    assert len(qroots) == 24
    found = None
    for r2 in qroots:
        others = [r for r in qroots if qip(r, r2) == -1]
        for trio in itertools.combinations(others, 3):
            if all(qip(a, b) == 0 for a, b in itertools.combinations(trio, 2)):
                found = [trio[0], r2, trio[1], trio[2]]
                break
        if found:
            break
    assert found is not None
    s_rows = [[Q(x) for x in r] for r in found]
    w_mat = [[Q(x) for x in row] for row in _QUAT_LEFT_W]
    phi = mat_mul(mat_mul(s_rows, w_mat), mat_inv(s_rows))
    assert all(x.denominator == 1 for row in phi for x in row)
    _assert_order3(phi, fixed_free=True)
    return phi


def weyl_d4_matrix() -> List[List[Q]]:
    """Order-3 isometry of D4 inside the Weyl group (a coordinate 3-cycle)."""
    m = [
        [Q(0), Q(1), Q(0), Q(0)],
        [Q(-1), Q(-1), Q(0), Q(0)],
        [Q(1), Q(1), Q(1), Q(0)],
        [Q(1), Q(1), Q(0), Q(1)],
    ]
    _assert_order3(m, fixed_free=False)
    assert disc_digit_action(SimpleType("D", 4), m) == {0: 0, 1: 1, 2: 2, 3: 3}, (
        "Weyl candidate acts nontrivially on the discriminant group"
    )
    return m


def disc_digit_action(t: SimpleType, local: List[List[Q]]) -> Dict[int, int]:
    """Induced permutation of the glue digits (trivial exactly on Weyl part)."""
    reps = _digit_reps(t)
    out = {0: 0}
    for d, rep in reps.items():
        if d == 0:
            continue
        img = tuple(
            sum(rep[i] * local[i][j] for i in range(t.rank))
            for j in range(t.rank)
        )
        matches = [
            d2
            for d2, rep2 in reps.items()
            if all((a - b).denominator == 1 for a, b in zip(img, rep2))
        ]
        assert len(matches) == 1
        out[d] = matches[0]
    return out


def build_isometry(lat: EvenLattice, name: str) -> LatticeIsometry:
    """The three named order-3 isometries, certified on construction.

    sigma6 rotates one E6 component fixed-point-freely and 3-cycles the rest;
    sigma2 rotates every D4 component fixed-point-freely; sigma4 combines a
    Weyl rotation, two fixed-point-free rotations, and a 3-cycle of intact
    components.  All preserve the glue (checked by integrality), the gram,
    and have order 3.
    """
    comps = lat.code.components
    if name == "sigma6":
        if comps != (SimpleType("E", 6),) * 4:
            raise ValueError("sigma6 lives on the four-E6 lattice")
        phi = fpf_e6_matrix()
        ident = _identity_local(6)
        # (g1,g2,g3,g4) -> (phi g1, g4, g2, g3): component 2 lands in slot 3,
        # 3 in slot 4, 4 in slot 2.
        iso = _slot_maps_to_isometry(
            lat, [(0, phi), (2, ident), (3, ident), (1, ident)], name
        )
    elif name == "sigma2":
        if comps != (SimpleType("D", 4),) * 6:
            raise ValueError("sigma2 lives on the six-D4 lattice")
        phi = fpf_d4_matrix()
        iso = None
        for cand in (phi, mat_mul(phi, phi)):
            try:
                iso = _slot_maps_to_isometry(lat, [(c, cand) for c in range(6)], name)
                break
            except ValueError:
                continue
        if iso is None:
            raise ValueError("no orientation of the rotation preserves the glue")
    elif name == "sigma4":
        if comps != (SimpleType("D", 4),) * 6:
            raise ValueError("sigma4 lives on the six-D4 lattice")
        phi = fpf_d4_matrix()
        phi2 = mat_mul(phi, phi)
        psi = weyl_d4_matrix()
        psi2 = mat_mul(psi, psi)
        ident = _identity_local(4)
        rot = {0: ident, 1: phi, 2: phi2}

        def candidates():
            # one Weyl-rotation slot, two fixed-point-free slots, and a
            # 3-cycle whose edge maps compose to the identity
            for cycle in itertools.combinations(range(6), 3):
                singles = [c for c in range(6) if c not in cycle]
                a, b, c3 = cycle
                for cyc_perm in ({a: b, b: c3, c3: a}, {a: c3, c3: b, b: a}):
                    for e1, e2 in itertools.product(range(3), repeat=2):
                        e3 = (-e1 - e2) % 3
                        edges = [rot[e1], rot[e2], rot[e3]]
                        for psi_slot in singles:
                            fps = [s for s in singles if s != psi_slot]
                            for w in (psi, psi2):
                                for m1, m2 in itertools.product((phi, phi2), repeat=2):
                                    slot_maps: List[Tuple[int, List[List[Q]]]] = [
                                        (i, ident) for i in range(6)
                                    ]
                                    for k, (src, tgt) in enumerate(cyc_perm.items()):
                                        slot_maps[src] = (tgt, edges[k])
                                    slot_maps[psi_slot] = (psi_slot, w)
                                    slot_maps[fps[0]] = (fps[0], m1)
                                    slot_maps[fps[1]] = (fps[1], m2)
                                    yield slot_maps

        iso = None
        for slot_maps in candidates():
            try:
                cand = _slot_maps_to_isometry(lat, slot_maps, name)
            except ValueError:
                continue
            if cand.order() == 3:
                iso = cand
                break
        if iso is None:
            raise ValueError("no sigma4-shaped isometry preserves the glue")
    else:
        raise ValueError(f"unknown isometry name {name!r}")
    assert iso.order() == 3
    assert iso.preserves_gram()
    return iso


# ---------------------------------------------------------------------------
# the weight-one Lie algebra of the lattice vertex algebra


class LatticeLieAlgebra:
    """Cartan + root vectors with the ordered-basis sign bicharacter.

    Basis indices: 0..rank-1 are the Cartan directions dual to the lattice
    basis; rank+k is the root vector of the k-th root.  Elements are sparse
    {index: Fraction} maps.  eps is bimultiplicative with
    eps(b_i, b_j) = (-1)^(b_i|b_j) for i > j and 1 otherwise, which gives the
    commutation rule e^b e^a = (-1)^(a|b) e^a e^b.
    """

    def __init__(self, lat: EvenLattice):
        self.lattice = lat
        self.rank = lat.rank
        roots_ambient = lattice_roots(lat)
        coords = [lat.coords_of(r) for r in roots_ambient]
        assert all(c is not None for c in coords)
        self.root_coords: List[IntVec] = sorted(coords)  # type: ignore[arg-type]
        self.root_index: Dict[IntVec, int] = {
            c: i for i, c in enumerate(self.root_coords)
        }
        self.n_roots = len(self.root_coords)
        self.dim = self.rank + self.n_roots

        g = np.array(lat.gram, dtype=np.int64)
        r = np.array(self.root_coords, dtype=np.int64)
        self._ip_rr = r @ g @ r.T                      # (a|b) for root pairs
        self._ip_cr = g @ r.T                          # (b_i|a) Cartan x root
        low = np.tril(np.array(lat.gram, dtype=np.int64) & 1, k=-1)
        self._eps_rr = 1 - 2 * ((r @ low @ r.T) % 2)   # sign table
        sums: Dict[Tuple[int, int], int] = {}
        for i, ci in enumerate(self.root_coords):
            for j, cj in enumerate(self.root_coords):
                if self._ip_rr[i][j] == -1:
                    s = tuple(a + b for a, b in zip(ci, cj))
                    sums[(i, j)] = self.root_index[s]
        self._sum_idx = sums

    # -- sign bicharacter ---------------------------------------------------

    def eps_coords(self, m: Sequence[int], n: Sequence[int]) -> int:
        """eps(m, n) in {1, -1} for arbitrary integral coordinate rows."""
        gram = self.lattice.gram
        acc = 0
        for i, mi in enumerate(m):
            if mi:
                for j in range(i):
                    if n[j]:
                        acc += mi * n[j] * gram[i][j]
        return -1 if acc % 2 else 1

    def ip_coords(self, m: Sequence[int], n: Sequence[int]) -> int:
        gram = self.lattice.gram
        return sum(
            m[i] * sum(gram[i][j] * n[j] for j in range(self.rank) if n[j])
            for i in range(self.rank)
            if m[i]
        )

    # -- structure ------------------------------------------------------------

    def cartan_element(self, coords: Sequence[int]) -> Dict[int, Q]:
        return {i: Q(c) for i, c in enumerate(coords) if c}

    def root_element(self, k: int) -> Dict[int, Q]:
        return {self.rank + k: Q(1)}

    def bracket_basis(self, x: int, y: int) -> Dict[int, Q]:
        r = self.rank
        if x < r and y < r:
            return {}
        if x < r:
            k = y - r
            v = Q(int(self._ip_cr[x][k]))
            return {y: v} if v else {}
        if y < r:
            out = self.bracket_basis(y, x)
            return {i: -c for i, c in out.items()}
        k, l = x - r, y - r
        ip = int(self._ip_rr[k][l])
        if ip >= 0:
            return {}
        if ip == -1:
            sgn = int(self._eps_rr[k][l])
            return {r + self._sum_idx[(k, l)]: Q(sgn)}
        # ip == -2: opposite roots; bracket is the coroot direction
        sgn = int(self._eps_rr[k][l])
        return {
            i: Q(sgn * c) for i, c in enumerate(self.root_coords[k]) if c
        }

    def bracket(self, x: Dict[int, Q], y: Dict[int, Q]) -> Dict[int, Q]:
        out: Dict[int, Q] = {}
        for i, ci in x.items():
            for j, cj in y.items():
                for k, ck in self.bracket_basis(i, j).items():
                    v = out.get(k, Q(0)) + ci * cj * ck
                    if v:
                        out[k] = v
                    elif k in out:
                        del out[k]
        return out

    def form(self, x: Dict[int, Q], y: Dict[int, Q]) -> Q:
        """Invariant form: <t_a|t_b> = (a|b), <e^a|e^-a> = eps(a,-a)."""
        total = Q(0)
        gram = self.lattice.gram
        r = self.rank
        for i, ci in x.items():
            for j, cj in y.items():
                if i < r and j < r:
                    total += ci * cj * gram[i][j]
                elif i >= r and j >= r:
                    k, l = i - r, j - r
                    if self._ip_rr[k][l] == -2:
                        total += ci * cj * int(self._eps_rr[k][l])
        return total

    def negate_root_index(self, k: int) -> int:
        neg = tuple(-c for c in self.root_coords[k])
        return self.root_index[neg]


def weight_one_algebra(lat: EvenLattice) -> LatticeLieAlgebra:
    """Weight-one Lie algebra of the lattice vertex algebra of an even lattice."""
    return LatticeLieAlgebra(lat)


# ---------------------------------------------------------------------------
# standard lifts


@dataclass(frozen=True)
class LiftedAutomorphism:
    """Algebra automorphism covering an isometry: e^a -> phase(a) e^(ga)."""

    algebra: LatticeLieAlgebra
    isometry: LatticeIsometry
    root_phase: Tuple[int, ...]      # sign per root index
    root_perm: Tuple[int, ...]       # image root index per root index
    name: str

    def phase_of_root(self, k: int) -> int:
        return self.root_phase[k]

    def apply(self, x: Dict[int, Q]) -> Dict[int, Q]:
        alg = self.algebra
        r = alg.rank
        out: Dict[int, Q] = {}
        mat = self.isometry.matrix
        for i, c in x.items():
            if i < r:
                for j in range(r):
                    if mat[i][j]:
                        v = out.get(j, Q(0)) + c * mat[i][j]
                        if v:
                            out[j] = v
                        elif j in out:
                            del out[j]
            else:
                k = i - r
                tgt = r + self.root_perm[k]
                v = out.get(tgt, Q(0)) + c * self.root_phase[k]
                if v:
                    out[tgt] = v
                elif tgt in out:
                    del out[tgt]
        return out

    def compose(self, other: "LiftedAutomorphism") -> "LiftedAutomorphism":
        """self after other (apply other first)."""
        alg = self.algebra
        n = alg.lattice.rank
        m = tuple(
            tuple(
                sum(other.isometry.matrix[i][t] * self.isometry.matrix[t][j]
                    for t in range(n))
                for j in range(n)
            )
            for i in range(n)
        )
        perm = tuple(self.root_perm[other.root_perm[k]] for k in range(alg.n_roots))
        phase = tuple(
            other.root_phase[k] * self.root_phase[other.root_perm[k]]
            for k in range(alg.n_roots)
        )
        return LiftedAutomorphism(
            alg,
            LatticeIsometry(alg.lattice, m, f"{self.name}*{other.name}"),
            phase,
            perm,
            f"{self.name}*{other.name}",
        )

    def inverse(self) -> "LiftedAutomorphism":
        alg = self.algebra
        n = alg.lattice.rank
        minv = mat_inv([[Q(x) for x in row] for row in self.isometry.matrix])
        mi = tuple(tuple(int(x) for x in row) for row in minv)
        perm_inv = [0] * alg.n_roots
        for k in range(alg.n_roots):
            perm_inv[self.root_perm[k]] = k
        phase = tuple(self.root_phase[perm_inv[k]] for k in range(alg.n_roots))
        return LiftedAutomorphism(
            alg,
            LatticeIsometry(alg.lattice, mi, f"{self.name}^-1"),
            phase,
            tuple(perm_inv),
            f"{self.name}^-1",
        )

    def is_identity(self) -> bool:
        n = self.algebra.lattice.rank
        ident = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        return (
            self.isometry.matrix == ident
            and all(p == k for k, p in enumerate(self.root_perm))
            and all(s == 1 for s in self.root_phase)
        )

    def verify_automorphism(self, pair_limit: Optional[int] = None, seed: int = 0) -> bool:
        """Exact bracket-preservation check on root pairs (all, or sampled)."""
        alg = self.algebra
        pairs = [
            (k, l)
            for k in range(alg.n_roots)
            for l in range(alg.n_roots)
            if alg._ip_rr[k][l] in (-1, -2)
        ]
        if pair_limit is not None and pair_limit < len(pairs):
            rng = random.Random(seed)
            pairs = rng.sample(pairs, pair_limit)
        for k, l in pairs:
            x = alg.root_element(k)
            y = alg.root_element(l)
            lhs = self.apply(alg.bracket(x, y))
            rhs = alg.bracket(self.apply(x), self.apply(y))
            if lhs != rhs:
                return False
        # the invariant form must be preserved on opposite root pairs
        for k in range(alg.n_roots):
            l = alg.negate_root_index(k)
            x, y = alg.root_element(k), alg.root_element(l)
            if alg.form(self.apply(x), self.apply(y)) != alg.form(x, y):
                return False
        return True


def _phase_bit_expr(
    alg: LatticeLieAlgebra,
    h_bits: List[List[int]],
    coords: Sequence[int],
) -> Tuple[List[int], int]:
    """Exponent of c(x) as affine F2 expression: (basis-bit coefficients, const).

    c(sum m_i b_i) has sign exponent
    sum m_i x_i + sum_{i<j} m_i m_j h_ij + sum_i C(m_i,2) h_ii  (mod 2).
    """
    n = alg.rank
    lin = [(abs(m) % 2) for m in coords]
    const = 0
    for i in range(n):
        mi = coords[i]
        if not mi:
            continue
        const += (mi * (mi - 1) // 2) * h_bits[i][i]
        for j in range(i + 1, n):
            if coords[j]:
                const += mi * coords[j] * h_bits[i][j]
    return lin, const % 2


def _solve_f2(rows: List[List[int]], rhs: List[int], n: int) -> Optional[List[int]]:
    """Solve an F2 linear system; least solution (free variables zero)."""
    m = [row[:] + [b] for row, b in zip(rows, rhs)]
    pivots: List[int] = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                m[i] = [(a ^ b) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    for i in range(r, len(m)):
        if m[i][n]:
            return None
    x = [0] * n
    for idx, c in enumerate(pivots):
        x[c] = m[idx][n]
    return x


def standard_lift(alg: LatticeLieAlgebra, g: LatticeIsometry) -> LiftedAutomorphism:
    """Order-3 standard lift: phase 1 on the fixed sublattice.

    The phase function is the sign quadratic form refining the bicharacter
    eps(ga, gb)/eps(a, b); its free basis signs are solved over F2 so that
    the phase is 1 on a fixed-sublattice basis and the composite cubes to the
    identity.  Failure of the system is a cocycle bookkeeping error and is
    raised, never patched.
    """
    n = alg.rank
    basis_imgs = [g.apply_coords(tuple(1 if j == i else 0 for j in range(n)))
                  for i in range(n)]

    def eps_bit(a: Sequence[int], b: Sequence[int]) -> int:
        return 0 if alg.eps_coords(a, b) == 1 else 1

    unit = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    h_bits = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            h_bits[i][j] = eps_bit(basis_imgs[i], basis_imgs[j]) ^ eps_bit(unit[i], unit[j])
    for i in range(n):
        for j in range(n):
            assert h_bits[i][j] == h_bits[j][i], "twist bicharacter not symmetric"

    rows: List[List[int]] = []
    rhs: List[int] = []
    # standardness: phase 1 on a basis of the fixed sublattice
    for f in g.fixed_coords_basis():
        lin, const = _phase_bit_expr(alg, h_bits, f)
        rows.append(lin)
        rhs.append(const)
    # order 3: c(b_i) c(g b_i) c(g^2 b_i) = 1 for all i
    for i in range(n):
        gb = basis_imgs[i]
        g2b = g.apply_coords(gb)
        lin = [0] * n
        lin[i] ^= 1
        const = 0
        for v in (gb, g2b):
            lv, cv = _phase_bit_expr(alg, h_bits, v)
            lin = [(a ^ b) for a, b in zip(lin, lv)]
            const ^= cv
        rows.append(lin)
        rhs.append(const)
    x = _solve_f2(rows, rhs, n)
    if x is None:
        raise ValueError("no order-3 standard phase function exists")

    def phase_of(coords: Sequence[int]) -> int:
        lin, const = _phase_bit_expr(alg, h_bits, coords)
        bit = const ^ (sum(a & b for a, b in zip(lin, x)) % 2)
        return -1 if bit else 1

    perm = []
    phase = []
    for k, rc in enumerate(alg.root_coords):
        img = g.apply_coords(rc)
        perm.append(alg.root_index[img])
        phase.append(phase_of(rc))
    lift = LiftedAutomorphism(alg, g, tuple(phase), tuple(perm), f"lift({g.name})")
    # order 3 on the whole algebra
    cube = lift.compose(lift).compose(lift)
    assert cube.is_identity(), "standard lift does not cube to the identity"
    for f in g.fixed_coords_basis():
        assert phase_of(f) == 1
    return lift


def rough_lift(alg: LatticeLieAlgebra, g: LatticeIsometry) -> LiftedAutomorphism:
    """Some algebra automorphism covering g (no phase normalization)."""
    n = alg.rank
    basis_imgs = [g.apply_coords(tuple(1 if j == i else 0 for j in range(n)))
                  for i in range(n)]

    def eps_bit(a: Sequence[int], b: Sequence[int]) -> int:
        return 0 if alg.eps_coords(a, b) == 1 else 1

    unit = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    h_bits = [
        [eps_bit(basis_imgs[i], basis_imgs[j]) ^ eps_bit(unit[i], unit[j])
         for j in range(n)]
        for i in range(n)
    ]
    perm = []
    phase = []
    for rc in alg.root_coords:
        img = g.apply_coords(rc)
        perm.append(alg.root_index[img])
        lin, const = _phase_bit_expr(alg, h_bits, rc)
        phase.append(-1 if const else 1)
    return LiftedAutomorphism(alg, g, tuple(phase), tuple(perm), f"rough({g.name})")


# ---------------------------------------------------------------------------
# fixed subalgebras and type identification


@dataclass
class FixedSubalgebra:
    """Fixed points of an order-3 lifted automorphism, with local brackets."""

    algebra: LatticeLieAlgebra
    lift: LiftedAutomorphism
    basis: List[Dict[int, Q]]
    cartan_rows: List[IntVec]          # fixed-sublattice basis (coords)
    orbit_reps: List[int]              # root index per orbit-sum basis vector
    _cartan_solver: List[List[Q]] = field(repr=False, default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def to_local(self, x: Dict[int, Q]) -> List[Q]:
        """Coordinates of a fixed vector in the fixed basis."""
        alg = self.algebra
        r = alg.rank
        nc = len(self.cartan_rows)
        out = [Q(0)] * self.dim
        cart = [x.get(i, Q(0)) for i in range(r)]
        if any(cart):
            sol = [
                sum(cart[i] * self._cartan_solver[i][j] for i in range(r))
                for j in range(nc)
            ]
            recon = [Q(0)] * r
            for j in range(nc):
                if sol[j]:
                    for i in range(r):
                        recon[i] += sol[j] * self.cartan_rows[j][i]
            assert recon == cart, "Cartan part is outside the fixed sublattice"
            out[:nc] = sol
        for pos, rep in enumerate(self.orbit_reps):
            c = x.get(r + rep, Q(0))
            if c:
                out[nc + pos] = c
        return out

    def bracket_local(self, i: int, j: int) -> List[Q]:
        return self.to_local(self.algebra.bracket(self.basis[i], self.basis[j]))

    def form_local(self) -> List[List[Q]]:
        return [
            [self.algebra.form(x, y) for y in self.basis] for x in self.basis
        ]


def fixed_subalgebra(lift: LiftedAutomorphism) -> FixedSubalgebra:
    """Exact fixed-point subalgebra of an order-3 lifted automorphism."""
    alg = lift.algebra
    g = lift.isometry
    cartan_rows = [tuple(r) for r in g.fixed_coords_basis()]
    basis: List[Dict[int, Q]] = [
        {i: Q(c) for i, c in enumerate(row) if c} for row in cartan_rows
    ]
    orbit_reps: List[int] = []
    seen: Set[int] = set()
    for k in range(alg.n_roots):
        if k in seen:
            continue
        k1 = lift.root_perm[k]
        if k1 == k:
            seen.add(k)
            # a g-fixed root line survives only with trivial phase
            if lift.root_phase[k] == 1:
                basis.append(alg.root_element(k))
                orbit_reps.append(k)
            continue
        k2 = lift.root_perm[k1]
        assert lift.root_perm[k2] == k
        seen.update({k, k1, k2})
        # e^a + s(a) e^(ga) + s(a)s(ga) e^(g^2 a): the unique fixed line
        s0 = lift.root_phase[k]
        s1 = s0 * lift.root_phase[k1]
        assert s1 * lift.root_phase[k2] == 1, "orbit phase product must be 1"
        vec = {alg.rank + k: Q(1), alg.rank + k1: Q(s0), alg.rank + k2: Q(s1)}
        basis.append(vec)
        orbit_reps.append(k)
    nc = len(cartan_rows)
    if nc:
        f = [[Q(x) for x in row] for row in cartan_rows]          # nc x r
        ft = [[f[i][j] for i in range(nc)] for j in range(len(f[0]))]
        fft_inv = mat_inv(mat_mul(f, ft))
        solver = mat_mul(ft, fft_inv)                             # r x nc
    else:
        solver = [[Q(0)] * 0 for _ in range(alg.rank)]
    return FixedSubalgebra(alg, lift, basis, cartan_rows, orbit_reps, solver)


class IdentificationError(Exception):
    """Float root-space discovery could not be verified exactly."""


def _exact_nullity(m: List[List[Q]]) -> int:
    n = len(m)
    work = [list(r) for r in m]
    rank = 0
    for c in range(n):
        p = next((i for i in range(rank, n) if work[i][c]), None)
        if p is None:
            continue
        work[rank], work[p] = work[p], work[rank]
        inv = 1 / work[rank][c]
        work[rank] = [x * inv for x in work[rank]]
        for i in range(n):
            if i != rank and work[i][c]:
                fct = work[i][c]
                work[i] = [x - fct * y for x, y in zip(work[i], work[rank])]
        rank += 1
    return n - rank


def identify_type(sub: FixedSubalgebra, seed: int = 7) -> SemisimpleTypeWithLevels:
    """Type and level of a reductive fixed subalgebra.

    The center, Killing form and all dimensions are exact; root-space
    discovery runs in floats and every rounded Cartan integer and level is
    re-verified by the exact spectrum of the Killing-to-invariant-form ratio
    operator: an ideal of type X at level k contributes the eigenvalue
    2 h-dual(X)/k with multiplicity dim X.
    """
    dim = sub.dim
    brackets: List[List[List[Q]]] = [
        [sub.bracket_local(i, j) for j in range(dim)] for i in range(dim)
    ]

    def ad(vec: List[Q]) -> List[List[Q]]:
        out = [[Q(0)] * dim for _ in range(dim)]
        for i, ci in enumerate(vec):
            if ci:
                bi = brackets[i]
                for j in range(dim):
                    row = bi[j]
                    for k in range(dim):
                        if row[k]:
                            out[j][k] += ci * row[k]
        return out

    # Killing gram, exactly
    kill = [[Q(0)] * dim for _ in range(dim)]
    sparse = [
        [(j, k, brackets[i][j][k]) for j in range(dim) for k in range(dim)
         if brackets[i][j][k]]
        for i in range(dim)
    ]
    for i in range(dim):
        for j in range(i, dim):
            total = Q(0)
            bj = brackets[j]
            for (a, b, c) in sparse[i]:
                v = bj[b][a]
                if v:
                    total += c * v
            kill[i][j] = kill[j][i] = total
    gram = sub.form_local()

    center = rational_kernel(kill)
    abelian = len(center)
    # derived part: orthogonal complement of the center under the form
    if center:
        ortho = [[sum(gram[i][j] * z[j] for j in range(dim)) for z in center]
                 for i in range(dim)]
        derived = rational_kernel(ortho)
    else:
        derived = [[Q(1 if j == i else 0) for j in range(dim)] for i in range(dim)]
    sdim = len(derived)
    if sdim == 0:
        return SemisimpleTypeWithLevels.of([], abelian)

    rng = random.Random(seed)

    def random_derived() -> List[Q]:
        c = [Q(rng.randint(-9, 9)) for _ in range(sdim)]
        return [sum(c[a] * derived[a][j] for a in range(sdim)) for j in range(dim)]

    cartan: Optional[List[List[Q]]] = None
    for _ in range(12):
        x = random_derived()
        adx = ad(x)
        stack = [list(row) for row in adx]
        if center:
            # intersect ker(ad x) with the derived part
            ortho = [
                [sum(gram[i][j] * z[j] for j in range(dim)) for z in center]
                for i in range(dim)
            ]
            stack = [row + ortho[i] for i, row in enumerate(stack)]
        ker = rational_kernel(stack)
        ab = all(
            all(v == 0 for v in sub_bracket)
            for a in range(len(ker))
            for sub_bracket in [
                _apply_bilinear(brackets, ker[a], kb) for kb in ker[a + 1:]
            ]
        )
        if ker and ab:
            cartan = ker
            break
    if cartan is None:
        raise IdentificationError("no abelian generic centralizer found")
    rank_ss = len(cartan)

    ad_cartan = [ad(c) for c in cartan]
    ad_c_np = [
        np.array([[float(v) for v in row] for row in a]) for a in ad_cartan
    ]
    g_c = [
        [
            sum(
                cartan[a][i] * gram[i][j] * cartan[b][j]
                for i in range(dim)
                for j in range(dim)
                if cartan[a][i] and cartan[b][j]
            )
            for b in range(rank_ss)
        ]
        for a in range(rank_ss)
    ]
    g_c_inv = np.array([[float(x) for x in row] for row in mat_inv(g_c)])

    last_error: Optional[Exception] = None
    for _attempt in range(8):
        try:
            ideals, spectrum = _float_root_pass(
                rng, dim, sdim, rank_ss, ad_cartan, ad_c_np, g_c_inv
            )
            break
        except IdentificationError as err:
            last_error = err
    else:
        raise IdentificationError(f"float discovery failed: {last_error}")

    # exact re-verification via the spectrum of M = gram^-1 * killing
    m_op = mat_mul(mat_inv(gram), kill)
    if abelian:
        spectrum[Q(0)] = spectrum.get(Q(0), 0) + abelian
    total = 0
    for ev, mult in spectrum.items():
        shifted = [
            [m_op[i][j] - (ev if i == j else 0) for j in range(dim)]
            for i in range(dim)
        ]
        null = _exact_nullity(shifted)
        if null != mult:
            raise IdentificationError(
                f"eigenvalue {ev}: exact multiplicity {null} != claimed {mult}"
            )
        total += mult
    if total != dim:
        raise IdentificationError("claimed spectrum does not fill the algebra")
    if sum(t.dim() for t, _ in ideals) + abelian != dim:
        raise IdentificationError("dimension bookkeeping failed")
    if sum(t.rank for t, _ in ideals) + abelian != rank_ss + abelian:
        raise IdentificationError("rank bookkeeping failed")
    return SemisimpleTypeWithLevels.of(ideals, abelian)


def _apply_bilinear(
    brackets: List[List[List[Q]]], x: List[Q], y: List[Q]
) -> List[Q]:
    dim = len(x)
    out = [Q(0)] * dim
    for i in range(dim):
        if x[i]:
            for j in range(dim):
                if y[j]:
                    row = brackets[i][j]
                    for k in range(dim):
                        if row[k]:
                            out[k] += x[i] * y[j] * row[k]
    return out


def _float_root_pass(
    rng: random.Random,
    dim: int,
    sdim: int,
    rank_ss: int,
    ad_cartan: List[List[List[Q]]],
    ad_c_np: List[np.ndarray],
    g_c_inv: np.ndarray,
) -> Tuple[List[Tuple[SimpleType, Q]], Dict[Q, int]]:
    """One float root-space discovery attempt; raises on any inconsistency."""
    weights = [rng.randint(1, 997) for _ in ad_cartan]
    h_exact = ExactMatrix(
        [
            [
                sum(w * ad_cartan[k][i][j] for k, w in enumerate(weights))
                for j in range(dim)
            ]
            for i in range(dim)
        ]
    )
    try:
        pairs = float_eigen(h_exact)
    except ResidualExceeded as err:
        raise IdentificationError(f"eigen discovery failed: {err}")
    nonzero = [(lam, v) for lam, v in pairs if abs(lam) > 1e-7]
    if len(nonzero) != sdim - rank_ss:
        raise IdentificationError("root-space count mismatch in float pass")
    functionals = []
    for _, v in nonzero:
        denom = np.vdot(v, v)
        functionals.append(
            np.array([complex(np.vdot(v, a @ v) / denom) for a in ad_c_np])
        )

    def pairing(u: np.ndarray, w: np.ndarray) -> complex:
        return complex(u @ g_c_inv @ w)

    # generic complex functional splits every +- root pair
    xi = np.array(
        [complex(rng.uniform(0.5, 1.5), rng.uniform(-1.0, 1.0))
         for _ in range(rank_ss)]
    )
    scores = [(xi @ f).real for f in functionals]
    if any(abs(s) < 1e-6 for s in scores):
        raise IdentificationError("splitting functional degenerate")
    positives = [f for f, s in zip(functionals, scores) if s > 0]
    if 2 * len(positives) != len(functionals):
        raise IdentificationError("positive system is unbalanced")

    def approx_eq(u: np.ndarray, w: np.ndarray) -> bool:
        return bool(np.max(np.abs(u - w)) < 1e-6)

    simple = [
        f
        for f in positives
        if not any(approx_eq(f, g1 + g2) for g1 in positives for g2 in positives)
    ]
    if len(simple) != rank_ss:
        raise IdentificationError("simple-root count does not match the rank")

    adj = [
        [abs(pairing(simple[i], simple[j])) > 1e-6 for j in range(rank_ss)]
        for i in range(rank_ss)
    ]
    comp_of = [-1] * rank_ss
    ncomp = 0
    for i in range(rank_ss):
        if comp_of[i] >= 0:
            continue
        stack = [i]
        comp_of[i] = ncomp
        while stack:
            a = stack.pop()
            for b in range(rank_ss):
                if adj[a][b] and comp_of[b] < 0:
                    comp_of[b] = ncomp
                    stack.append(b)
        ncomp += 1

    ideals: List[Tuple[SimpleType, Q]] = []
    spectrum: Dict[Q, int] = {}
    for comp in range(ncomp):
        idxs = [i for i in range(rank_ss) if comp_of[i] == comp]
        pair = [[pairing(simple[a], simple[b]) for b in idxs] for a in idxs]
        for row in pair:
            for v in row:
                if abs(v.imag) > 1e-6:
                    raise IdentificationError("complex pairing in a component")
        maxnorm = max(pair[i][i].real for i in range(len(idxs)))
        # relative gram, normalized so long roots have norm 2
        gram_comp: List[List[Q]] = []
        for a in range(len(idxs)):
            row = []
            for b in range(len(idxs)):
                v = 2 * pair[a][b].real / maxnorm
                q = Q(round(v * 6), 6)
                if abs(float(q) - v) > 1e-6:
                    raise IdentificationError("component gram does not round")
                row.append(q)
            gram_comp.append(row)
        ty = classify_simple_system(gram_comp)
        level_f = 2 / maxnorm
        level = Q(round(level_f * 6), 6)
        if abs(float(level) - level_f) > 1e-6:
            raise IdentificationError("level does not round")
        ideals.append((ty, level))
        ev = Q(2 * ty.dual_coxeter_number()) / level
        spectrum[ev] = spectrum.get(ev, 0) + ty.dim()
    return ideals, spectrum


# ---------------------------------------------------------------------------
# twisted ground energies, projections, counting, glue automorphisms


_CYCLOTOMIC = {
    1: [-1, 1],            # x - 1
    2: [1, 1],             # x + 1
    3: [1, 1, 1],          # x^2 + x + 1
    4: [1, 0, 1],
    6: [1, -1, 1],
}


def _euler_phi(d: int) -> int:
    return sum(1 for k in range(1, d + 1) if gcd(k, d) == 1)


def twisted_ground_energy(g: LatticeIsometry) -> Tuple[Q, List[int]]:
    """Ground energy (1/4) sum_j (j/n)(1-j/n) m_j and the multiplicities m_j.

    m_j is the multiplicity of the eigenvalue e^(2 pi i j / n) of g on the
    ambient space, computed from exact kernels of cyclotomic evaluations.
    """
    n = g.order()
    dim = g.lattice.rank

    def poly_apply(coeffs: List[int]) -> List[List[Q]]:
        out = [[Q(0)] * dim for _ in range(dim)]
        power = [[Q(1 if i == j else 0) for j in range(dim)] for i in range(dim)]
        mat = [[Q(x) for x in row] for row in g.matrix]
        for c in coeffs:
            if c:
                for i in range(dim):
                    for j in range(dim):
                        out[i][j] += c * power[i][j]
            power = mat_mul(power, mat)
        return out

    orders = {n // gcd(j, n) if j else 1 for j in range(n)}
    if any(d not in _CYCLOTOMIC for d in orders):
        raise ValueError("unsupported eigenvalue order")
    mults = [0] * n
    for d in sorted(orders):
        null = len(rational_kernel(poly_apply(_CYCLOTOMIC[d])))
        share = null // _euler_phi(d)
        for j in range(n):
            if (n // gcd(j, n) if j else 1) == d:
                mults[j] = share
    assert sum(mults) == dim
    rho = sum(
        Q(j, n) * (1 - Q(j, n)) * mults[j] for j in range(1, n)
    ) / 4
    return rho, mults


def fixed_projection_norm(
    lat: EvenLattice, g: LatticeIsometry, u: Vec
) -> Tuple[Vec, Q]:
    """Orthogonal projection of a dual vector onto the fixed subspace of g."""
    n = g.order()
    amb = g.ambient_matrix()
    cur = list(u)
    acc = list(u)
    for _ in range(n - 1):
        cur = [
            sum(cur[i] * amb[i][j] for i in range(len(cur)) if cur[i])
            for j in range(len(cur))
        ]
        acc = [a + b for a, b in zip(acc, cur)]
    proj = tuple(a / n for a in acc)
    return proj, lat.ip_ambient(proj, proj)


def count_orthogonal_subsystems(
    ambient: SimpleType, part: SimpleType, copies: int
) -> int:
    """Number of sublattices of the ambient root lattice of shape part^copies.

    Subsystems are enumerated as root subsets (pairs for A1, hexagons for
    A2), and sets of pairwise orthogonal copies are counted; distinct sets
    span distinct sublattices because the root system of the span recovers
    the copies.
    """
    rs = build_root_system(ambient)
    roots = rs.roots
    subs: Set[FrozenSet] = set()
    if part == SimpleType("A", 1):
        for r in roots:
            subs.add(frozenset({r, tuple(-c for c in r)}))
    elif part == SimpleType("A", 2):
        for a, b in itertools.combinations(roots, 2):
            if rs.ip(a, b) == -1 and rs.norm_of(a) == rs.norm_of(b) == 2:
                ab = tuple(x + y for x, y in zip(a, b))
                hexagon = frozenset(
                    {
                        a,
                        b,
                        ab,
                        tuple(-x for x in a),
                        tuple(-x for x in b),
                        tuple(-x for x in ab),
                    }
                )
                subs.add(hexagon)
    else:
        raise ValueError("only A1 and A2 patterns are supported")
    sub_list = sorted(subs, key=lambda s: sorted(s))
    k = len(sub_list)
    ortho = [
        [
            all(rs.ip(x, y) == 0 for x in sub_list[i] for y in sub_list[j])
            for j in range(k)
        ]
        for i in range(k)
    ]
    count = 0

    def extend(start: int, chosen: List[int]) -> None:
        nonlocal count
        if len(chosen) == copies:
            count += 1
            return
        for nxt in range(start, k):
            if all(ortho[c][nxt] for c in chosen):
                extend(nxt + 1, chosen + [nxt])

    extend(0, [])
    return count


def _disc_automorphisms(t: SimpleType) -> List[Dict[int, int]]:
    if t == SimpleType("E", 6):
        return [{0: 0, 1: 1, 2: 2}, {0: 0, 1: 2, 2: 1}]
    if t == SimpleType("D", 4):
        return [
            {0: 0, 1: p[0], 2: p[1], 3: p[2]}
            for p in itertools.permutations((1, 2, 3))
        ]
    raise ValueError(f"no discriminant data for {t}")


def glue_automorphism_group_order(code: GlueCode) -> int:
    """Order of the group of (component permutation, digit map) pairs
    preserving the code."""
    k = len(code.components)
    words = code.words()
    if not all(t == code.components[0] for t in code.components):
        raise ValueError("mixed-component codes are not supported")
    t = code.components[0]
    autos = _disc_automorphisms(t)
    gens = list(code.generators)

    def image(w: IntVec, perm: Sequence[int], digit_maps: Sequence[Dict[int, int]]) -> IntVec:
        permuted = tuple(w[perm[i]] for i in range(k))
        return tuple(digit_maps[i][permuted[i]] for i in range(k))

    total_brute = len(autos) ** k * factorial(k) if k <= 6 else None
    if total_brute is not None and total_brute <= 10**6:
        count = 0
        for perm in itertools.permutations(range(k)):
            for maps in itertools.product(autos, repeat=k):
                if all(image(g, perm, maps) in words for g in gens):
                    count += 1
        return count

    # anchored search: requires the two constant full-support words
    all1 = tuple([1] * k)
    all2 = tuple([2] * k)
    if all1 not in words or all2 not in words:
        raise ValueError("anchored search needs the constant words in the code")
    full_support = [w for w in words if all(w)]
    count = 0
    for perm in itertools.permutations(range(k)):
        for w2img in full_support:
            for w1img in full_support:
                if any(a == b for a, b in zip(w1img, w2img)):
                    continue
                digit_maps = []
                for i in range(k):
                    third = ({1, 2, 3} - {w1img[i], w2img[i]}).pop()
                    digit_maps.append({0: 0, 1: w1img[i], 2: w2img[i], 3: third})
                if all(image(g, perm, digit_maps) in words for g in gens):
                    count += 1
    return count
