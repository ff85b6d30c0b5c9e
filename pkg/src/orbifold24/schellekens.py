"""Candidate weight-one Lie algebras for the orbifolded VOA.

Every simple ideal of the weight-one algebra of a holomorphic VOA of central
charge 24 satisfies h-dual / level = (dim V_1 - 24) / 24, so a target
dimension and ratio cut the possible ideals to a finite list and candidate
algebras to multisets of those ideals.  An order-3 automorphism of a
candidate acts by permuting ideals in 3-cycles (each contributing a diagonal
ideal at triple level) and acting on the remaining ideals one at a time, so
a fixed-subalgebra target filters the candidates mechanically.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction as Q
from functools import lru_cache
from math import gcd
from typing import FrozenSet, List, Optional, Sequence, Tuple

from .affinerep import typed_components_of_subsystem
from .rootdata import (
    SemisimpleTypeWithLevels,
    SimpleType,
    build_root_system,
)

Ideal = Tuple[SimpleType, Q]


@dataclass(frozen=True)
class CandidateAlgebra:
    value: SemisimpleTypeWithLevels
    total_dim: int

    def ideals(self) -> List[Ideal]:
        return [(t, k) for t, k in self.value.ideals]


def simple_ideals_with_ratio(r: Q, dim_cap: int) -> List[Ideal]:
    """All (type, level) with h-dual = r * level, level >= 1, dim <= cap.

    B2 and D3 are reported under their A/C aliases to avoid duplicates.
    """
    if r <= 0:
        raise ValueError("ratio must be positive")
    out: List[Ideal] = []

    def consider(t: SimpleType) -> None:
        k = t.dual_coxeter_number() / Q(r)
        if k.denominator == 1 and k >= 1 and t.dim() <= dim_cap:
            out.append((t, Q(k)))

    for family, start in (("A", 1), ("B", 3), ("C", 2), ("D", 4)):
        rank = start
        while SimpleType(family, rank).dim() <= dim_cap:
            consider(SimpleType(family, rank))
            rank += 1
    for t in (
        SimpleType("E", 6),
        SimpleType("E", 7),
        SimpleType("E", 8),
        SimpleType("F", 4),
        SimpleType("G", 2),
    ):
        consider(t)
    return sorted(out)


def enumerate_candidates(total_dim: int, r: Q) -> List[CandidateAlgebra]:
    """All multisets of ratio-r ideals with dimensions summing to total_dim."""
    pool = simple_ideals_with_ratio(Q(r), total_dim)
    dims = [t.dim() for t, _ in pool]
    results: List[CandidateAlgebra] = []

    def rec(i: int, remaining: int, chosen: List[Ideal]) -> None:
        if remaining == 0:
            results.append(
                CandidateAlgebra(
                    SemisimpleTypeWithLevels.of(list(chosen)), total_dim
                )
            )
            return
        if i == len(pool) or remaining < 0:
            return
        # skip ideal i entirely, or take one more copy (non-decreasing index)
        rec(i + 1, remaining, chosen)
        if dims[i] <= remaining:
            chosen.append(pool[i])
            rec(i, remaining - dims[i], chosen)
            chosen.pop()

    rec(0, total_dim, [])
    return sorted(results, key=lambda c: str(c.value))


def _order3_label_vectors(t: SimpleType) -> List[Tuple[int, ...]]:
    """Affine-node label vectors of inner order-3 automorphism classes."""
    rs = build_root_system(t)
    theta_ac = rs.root_alpha_coords[rs.roots.index(rs.theta)]
    marks = [1] + [int(c) for c in theta_ac]
    n = len(marks)
    out: List[Tuple[int, ...]] = []

    def rec(i: int, budget: int, partial: List[int]) -> None:
        if i == n:
            if budget == 0 and gcd(*partial) == 1:
                out.append(tuple(partial))
            return
        top = budget // marks[i]
        for s in range(top + 1):
            rec(i + 1, budget - s * marks[i], partial + [s])

    rec(0, 3, [])
    return out


@dataclass(frozen=True)
class FixedOption:
    """One realizable fixed subalgebra of an order-3 action on a simple ideal."""

    result: SemisimpleTypeWithLevels
    kind: str  # "trivial" | "inner" | "outer"


@lru_cache(maxsize=None)
def order3_fixed_options(t: SimpleType, level: int) -> FrozenSet[FixedOption]:
    """Fixed-subalgebra types realizable by an order-3 automorphism of one ideal.

    Includes the trivial class (the ideal itself).  Inner options come from
    the full affine-label enumeration; ADE inner fixed ideals keep the
    ambient level.  Outer options exist only for D4: the branch rotation
    fixes A2 at triple level or G2 at the ambient level.
    """
    rs = build_root_system(t)
    options = {
        FixedOption(
            SemisimpleTypeWithLevels.of([(t, Q(level))]), "trivial"
        )
    }
    for s in _order3_label_vectors(t):
        retained = [
            (fw, ac)
            for fw, ac in zip(rs.roots, rs.root_alpha_coords)
            if sum(c * s[1 + j] for j, c in enumerate(ac)) % 3 == 0
        ]
        typed, abelian, _ = typed_components_of_subsystem(rs, retained, level)
        options.add(
            FixedOption(SemisimpleTypeWithLevels.of(typed, abelian), "inner")
        )
    if t == SimpleType("D", 4):
        options.add(
            FixedOption(
                SemisimpleTypeWithLevels.of([(SimpleType("A", 2), Q(3 * level))]),
                "outer",
            )
        )
        options.add(
            FixedOption(
                SemisimpleTypeWithLevels.of([(SimpleType("G", 2), Q(level))]),
                "outer",
            )
        )
    return frozenset(options)


Assignment = List[Tuple[str, Tuple[Ideal, ...], SemisimpleTypeWithLevels]]


def admits_order3_with_fixed(
    c: CandidateAlgebra, target: SemisimpleTypeWithLevels
) -> Tuple[bool, Optional[Assignment]]:
    """Whether some order-3 automorphism of c has fixed subalgebra target.

    The ideals of c are partitioned into 3-cycles of equal ideals (each
    contributing the diagonal ideal at triple level) and singletons (each
    contributing one fixed option); the union, including abelian bookkeeping,
    must equal the target.  Returns a witness assignment when it exists.
    """
    target_ideals = Counter(target.ideals)
    target_ab = target.abelian_rank
    ideals = sorted(c.ideals())

    def fits(acc: Counter, ab: int) -> bool:
        return ab <= target_ab and all(
            acc[key] <= target_ideals[key] for key in acc
        )

    def rec(
        remaining: Tuple[Ideal, ...],
        acc: Counter,
        ab: int,
        nontrivial: bool,
        witness: Assignment,
    ) -> Optional[Assignment]:
        if not remaining:
            if acc == target_ideals and ab == target_ab and nontrivial:
                return list(witness)
            return None
        first = remaining[0]
        rest = remaining[1:]
        # 3-cycle through the first ideal and two equal partners
        if remaining.count(first) >= 3:
            idx = [i for i, x in enumerate(rest) if x == first][:2]
            reduced = tuple(x for i, x in enumerate(rest) if i not in idx)
            diag = (first[0], 3 * first[1])
            acc2 = acc.copy()
            acc2[diag] += 1
            if fits(acc2, ab):
                contributed = SemisimpleTypeWithLevels.of([diag])
                witness.append(("cycle", (first, first, first), contributed))
                found = rec(reduced, acc2, ab, True, witness)
                if found is not None:
                    return found
                witness.pop()
        # singleton options
        for opt in sorted(
            order3_fixed_options(first[0], int(first[1])),
            key=lambda o: (o.kind, str(o.result)),
        ):
            acc2 = acc.copy()
            for key in opt.result.ideals:
                acc2[key] += 1
            ab2 = ab + opt.result.abelian_rank
            if not fits(acc2, ab2):
                continue
            witness.append((opt.kind, (first,), opt.result))
            found = rec(
                rest, acc2, ab2, nontrivial or opt.kind != "trivial", witness
            )
            if found is not None:
                return found
            witness.pop()
        return None

    found = rec(tuple(ideals), Counter(), 0, False, [])
    return (found is not None), found


def filter_candidates(
    candidates: Sequence[CandidateAlgebra], target: SemisimpleTypeWithLevels
) -> List[CandidateAlgebra]:
    """Candidates admitting an order-3 automorphism with the target fixed type."""
    return [c for c in candidates if admits_order3_with_fixed(c, target)[0]]
