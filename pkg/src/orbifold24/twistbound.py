"""Lower bounds for lowest weights of twist-deformed modules.

For a semisimple weight-one algebra with ideals g_i at levels k_i and a
Cartan element h = (h_i), deforming a module with highest weights (lam_i)
shifts its lowest L(0)-weight to

    ell + sum_i min{(h_i|mu) : mu in Pi(lam_i)} + <h|h>/2,

where ell is the module's lowest weight.  Inside a CFT-type holomorphic VOA
whose weight-one space is exhausted by the ambient algebra, a non-vacuum
module has ell >= 2 and ell integral, so only tuples with integral
conformal-weight sum can occur; the minimum of the shifted bound over all
such tuples is computed exhaustively for h and -h.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from math import lcm
from typing import Iterator, List, Optional, Tuple

from .affinerep import (
    AffineAlgebra,
    TwistVector,
    enumerate_level_weights,
    n_min,
)
from .rootdata import Coords, Weight


@dataclass(frozen=True)
class CaseSpec:
    """Ambient semisimple algebra with levels, twist vector, and a name."""

    name: str
    ambient: Tuple[AffineAlgebra, ...]
    h: TwistVector

    def __post_init__(self) -> None:
        if len(self.h.components) != len(self.ambient):
            raise ValueError("twist vector length does not match ideal count")

    def negated(self) -> "CaseSpec":
        return CaseSpec(self.name + "-neg", self.ambient, self.h.negate())


@dataclass(frozen=True)
class TupleBound:
    """One admissible weight per ideal with its minimal-weight bound."""

    weights: Tuple[Coords, ...]
    cw_sum: Q
    ell_min: int
    nmin_sum: Q
    bound: Q
    feasible: bool


def invariant_norm(c: CaseSpec) -> Tuple[Q, bool, bool]:
    """<h|h> = sum_i k_i (h_i|h_i), with the 2Z and (2/3)Z membership flags."""
    total = Q(0)
    for a, hi in zip(c.ambient, c.h.components):
        total += a.level * a.root_system().norm_of(hi.coords)
    return total, (total / 2).denominator == 1, (total * 3 / 2).denominator == 1


def shift_ok(c: CaseSpec) -> bool:
    """True iff (h|alpha) >= -1 for every root alpha of the ambient algebra."""
    for a, hi in zip(c.ambient, c.h.components):
        rs = a.root_system()
        for root in rs.roots:
            if rs.ip(hi.coords, root) < -1:
                return False
    return True


class _CaseTables:
    """Per-ideal admissible weights with scaled-integer cw and n_min columns."""

    def __init__(self, c: CaseSpec):
        self.case = c
        self.weights: List[List[Coords]] = []
        cw: List[List[Q]] = []
        nm: List[List[Q]] = []
        for a, hi in zip(c.ambient, c.h.components):
            table = enumerate_level_weights(a)
            rs = a.root_system()
            self.weights.append([r.weight for r in table.rows])
            cw.append([r.conformal_weight for r in table.rows])
            nm.append(
                [n_min(hi, Weight(r.weight, rs)) for r in table.rows]
            )
        norm, _, _ = invariant_norm(c)
        self.half_norm = norm / 2
        denoms = [self.half_norm.denominator]
        for col in cw + nm:
            denoms.extend(v.denominator for v in col)
        self.scale = lcm(*denoms)
        d = self.scale
        self.cw_s = [[int(v * d) for v in col] for col in cw]
        self.nm_s = [[int(v * d) for v in col] for col in nm]
        self.half_norm_s = int(self.half_norm * d)

    def tuple_count(self) -> int:
        n = 1
        for col in self.weights:
            n *= len(col)
        return n

    def scan(self) -> Iterator[Tuple[Tuple[int, ...], int, int]]:
        """Yield (index tuple, scaled cw sum, scaled n_min sum) for all tuples."""
        sizes = [len(col) for col in self.weights]
        idx = [0] * len(sizes)
        while True:
            s_cw = sum(self.cw_s[i][idx[i]] for i in range(len(idx)))
            s_nm = sum(self.nm_s[i][idx[i]] for i in range(len(idx)))
            yield tuple(idx), s_cw, s_nm
            pos = len(idx) - 1
            while pos >= 0:
                idx[pos] += 1
                if idx[pos] < sizes[pos]:
                    break
                idx[pos] = 0
                pos -= 1
            if pos < 0:
                return


def feasible_tuples(c: CaseSpec) -> List[TupleBound]:
    """All weight tuples with integral conformal-weight sum, with bounds."""
    t = _CaseTables(c)
    d = t.scale
    out: List[TupleBound] = []
    for idx, s_cw, s_nm in t.scan():
        if s_cw % d:
            continue
        nonzero = any(i for i in idx)
        ell_s = max(2 * d if nonzero else 0, s_cw)
        bound_s = ell_s + s_nm + t.half_norm_s
        out.append(
            TupleBound(
                weights=tuple(t.weights[i][j] for i, j in enumerate(idx)),
                cw_sum=Q(s_cw, d),
                ell_min=ell_s // d,
                nmin_sum=Q(s_nm, d),
                bound=Q(bound_s, d),
                feasible=True,
            )
        )
    return out


def twisted_weight_lower_bound(t: TupleBound, c: CaseSpec) -> Q:
    """ell_min + sum n_min + <h|h>/2, recomputed from the case data."""
    if not shift_ok(c):
        raise ValueError("(h|alpha) >= -1 fails; the shift formula does not apply")
    norm, _, _ = invariant_norm(c)
    total = Q(t.ell_min) + norm / 2
    for a, hi, w in zip(c.ambient, c.h.components, t.weights):
        total += n_min(hi, Weight(w, a.root_system()))
    return total


def min_twisted_weight(c: CaseSpec) -> Tuple[Q, Tuple[Coords, ...], Q, Tuple[Coords, ...]]:
    """Exhaustive minimum of the bound over feasible tuples, for h and -h.

    Returns (min for h, witness, min for -h, witness); witnesses are the
    lexicographically least minimizers.  The -h scan is an independent run,
    not a symmetry image.
    """
    if not shift_ok(c):
        raise ValueError("(h|alpha) >= -1 fails; the shift formula does not apply")
    results = []
    for case in (c, c.negated()):
        t = _CaseTables(case)
        d = t.scale
        best: Optional[int] = None
        best_idx: Optional[Tuple[int, ...]] = None
        for idx, s_cw, s_nm in t.scan():
            if s_cw % d:
                continue
            ell_s = max(2 * d if any(idx) else 0, s_cw)
            bound_s = ell_s + s_nm + t.half_norm_s
            if best is None or bound_s < best:
                best = bound_s
                best_idx = idx
        assert best is not None and best_idx is not None
        witness = tuple(t.weights[i][j] for i, j in enumerate(best_idx))
        results.append((Q(best, d), witness))
    (m1, w1), (m2, w2) = results
    return m1, w1, m2, w2


def tuple_space_size(c: CaseSpec) -> int:
    return _CaseTables(c).tuple_count()
