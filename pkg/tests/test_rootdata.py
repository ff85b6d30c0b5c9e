import random
from fractions import Fraction as Q

import pytest

from orbifold24.rootdata import (
    SemisimpleTypeWithLevels,
    SimpleType,
    automorphism_order,
    build_root_system,
    classify_simple_system,
    dual_coxeter,
    inner_product,
    kac_fixed_subalgebra,
    lin_min_over_weights,
    lowest_weight,
    weight_system,
    weyl_dim,
)

ROOT_COUNTS = {
    ("A", 1): 2,
    ("A", 2): 6,
    ("A", 5): 30,
    ("D", 4): 24,
    ("E", 6): 72,
    ("G", 2): 12,
}


@pytest.mark.parametrize("fam,rank", sorted(ROOT_COUNTS))
def test_root_counts(fam, rank):
    rs = build_root_system(SimpleType(fam, rank))
    assert len(rs.roots) == ROOT_COUNTS[(fam, rank)]


@pytest.mark.parametrize("fam,rank", sorted(ROOT_COUNTS))
def test_roots_closed_under_negation_and_reflection(fam, rank):
    rs = build_root_system(SimpleType(fam, rank))
    roots = set(rs.roots)
    for r in rs.roots:
        assert tuple(-c for c in r) in roots
        for j in range(rs.rank):
            refl = tuple(
                r[k] - r[j] * rs.simple_roots[j][k] for k in range(rs.rank)
            )
            assert refl in roots


def test_g2_norms():
    rs = build_root_system(SimpleType("G", 2))
    norms = sorted(rs.norm_of(r) for r in rs.roots)
    assert norms[:6] == [Q(2, 3)] * 6 and norms[6:] == [Q(2)] * 6


def test_inner_products():
    g2 = build_root_system(SimpleType("G", 2))
    assert inner_product(g2.fundamental_weight(0), g2.fundamental_weight(0)) == Q(2, 3)
    a5 = build_root_system(SimpleType("A", 5))
    assert inner_product(a5.fundamental_weight(2), a5.fundamental_weight(2)) == Q(3, 2)


@pytest.mark.parametrize("fam,rank", sorted(ROOT_COUNTS))
def test_weight_root_duality(fam, rank):
    rs = build_root_system(SimpleType(fam, rank))
    for i in range(rs.rank):
        for j in range(rs.rank):
            lhs = rs.ip(rs.fundamental_weight(i).coords, rs.simple_roots[j])
            want = rs.norms[j] / 2 if i == j else Q(0)
            assert lhs == want


def test_dual_coxeter_values():
    assert dual_coxeter(SimpleType("E", 6)) == 12
    assert dual_coxeter(SimpleType("D", 4)) == 6
    assert dual_coxeter(SimpleType("G", 2)) == 4


def test_dual_coxeter_matches_closed_form():
    for t in [
        SimpleType("A", 7),
        SimpleType("B", 4),
        SimpleType("C", 5),
        SimpleType("D", 6),
        SimpleType("E", 7),
        SimpleType("F", 4),
        SimpleType("G", 2),
    ]:
        assert dual_coxeter(t) == t.dual_coxeter_number()
        rs = build_root_system(t)
        assert len(rs.roots) + t.rank == t.dim()


def test_weight_system_defining_a2():
    a2 = build_root_system(SimpleType("A", 2))
    ws = weight_system(a2.fundamental_weight(0))
    assert len(ws.entries) == 3
    assert all(m == 1 for _, m in ws.entries)


def test_weight_system_g2_seven():
    g2 = build_root_system(SimpleType("G", 2))
    ws = weight_system(g2.fundamental_weight(0))
    assert ws.total_multiplicity() == 7 == weyl_dim(g2.fundamental_weight(0))
    zero = tuple([Q(0)] * 2)
    assert dict(ws.entries)[zero] == 1


def test_weight_system_a5_twenty():
    a5 = build_root_system(SimpleType("A", 5))
    ws = weight_system(a5.fundamental_weight(2))
    assert len(ws.entries) == 20
    assert all(m == 1 for _, m in ws.entries)


def test_weyl_dim_adjoints():
    for fam, rank in sorted(ROOT_COUNTS):
        rs = build_root_system(SimpleType(fam, rank))
        assert weyl_dim(rs.weight(rs.theta)) == rs.type.dim()
    assert weyl_dim(build_root_system(SimpleType("A", 2)).zero()) == 1


def test_total_multiplicity_matches_weyl_dim():
    rng = random.Random(9)
    for t in [SimpleType("A", 2), SimpleType("G", 2), SimpleType("D", 4), SimpleType("A", 5)]:
        rs = build_root_system(t)
        for _ in range(4):
            lam = rs.weight([rng.randint(0, 2) for _ in range(t.rank)])
            if weyl_dim(lam) > 10**4:
                continue
            assert weight_system(lam).total_multiplicity() == weyl_dim(lam)


def test_lowest_weights():
    a2 = build_root_system(SimpleType("A", 2))
    assert lowest_weight(a2.fundamental_weight(0)).coords == (Q(0), Q(-1))
    a5 = build_root_system(SimpleType("A", 5))
    l3 = a5.fundamental_weight(2)
    assert lowest_weight(l3).coords == tuple(-c for c in l3.coords)
    assert lowest_weight(a2.zero()).coords == (Q(0), Q(0))


def test_lowest_weight_in_system_and_below():
    rng = random.Random(4)
    for t in [SimpleType("A", 2), SimpleType("G", 2), SimpleType("D", 4)]:
        rs = build_root_system(t)
        for _ in range(3):
            lam = rs.weight([rng.randint(0, 2) for _ in range(t.rank)])
            low = lowest_weight(lam)
            ws = weight_system(lam)
            assert low.coords in ws.weights()
            # lam - low is a non-negative integer root combination
            diff = [a - b for a, b in zip(lam.coords, low.coords)]
            # solve diff = x . simple_roots
            m = [list(row) + [Q(0)] for row in zip(*rs.simple_roots)]
            for i in range(t.rank):
                m[i][t.rank] = diff[i]
            # gaussian
            for c in range(t.rank):
                p = next(i for i in range(c, t.rank) if m[i][c])
                m[c], m[p] = m[p], m[c]
                scale = 1 / m[c][c]
                m[c] = [x * scale for x in m[c]]
                for i in range(t.rank):
                    if i != c and m[i][c]:
                        f = m[i][c]
                        m[i] = [x - f * y for x, y in zip(m[i], m[c])]
            sol = [m[i][t.rank] for i in range(t.rank)]
            assert all(s.denominator == 1 and s >= 0 for s in sol)


def test_lin_min_examples():
    g2 = build_root_system(SimpleType("G", 2))
    assert lin_min_over_weights(g2.fundamental_weight(0), g2.fundamental_weight(0)) == Q(-2, 3)
    a2 = build_root_system(SimpleType("A", 2))
    assert lin_min_over_weights(a2.fundamental_weight(0), a2.weight([1, 2])) == Q(-5, 3)
    a5 = build_root_system(SimpleType("A", 5))
    big = a5.fundamental_weight(2).scale(Q(2, 3))
    assert lin_min_over_weights(big, a5.weight([0, 0, 2, 0, 0])) == Q(-2)


def test_lin_min_requires_dominant_direction():
    a2 = build_root_system(SimpleType("A", 2))
    with pytest.raises(ValueError):
        lin_min_over_weights(a2.fundamental_weight(0).scale(-1), a2.fundamental_weight(0))


def test_kac_e6_trivalent_node():
    s = [0] * 7
    s[4] = 1  # the node with mark 3
    res = kac_fixed_subalgebra(SimpleType("E", 6), s)
    assert str(res) == "A2 A2 A2"
    assert automorphism_order(SimpleType("E", 6), s) == 3


def test_kac_d4_center_node():
    res = kac_fixed_subalgebra(SimpleType("D", 4), [1, 0, 1, 0, 0])
    assert str(res) == "A1 A1 A1 U(1)"


def test_kac_twisted_d4():
    assert str(kac_fixed_subalgebra(SimpleType("D", 4), [1, 0, 0], 3)) == "G2"
    assert str(kac_fixed_subalgebra(SimpleType("D", 4), [0, 0, 1], 3)) == "A2"
    assert automorphism_order(SimpleType("D", 4), [1, 0, 0], 3) == 3


def test_kac_rejects_zero_labels():
    with pytest.raises(ValueError):
        kac_fixed_subalgebra(SimpleType("A", 2), [0, 0, 0])


def test_kac_rank_bookkeeping():
    rng = random.Random(12)
    for t in [SimpleType("A", 3), SimpleType("D", 4), SimpleType("E", 6)]:
        n_nodes = t.rank + 1
        for _ in range(8):
            s = [rng.randint(0, 1) for _ in range(n_nodes)]
            if not any(s):
                continue
            res = kac_fixed_subalgebra(t, s)
            assert res.semisimple_rank() + res.abelian_rank == t.rank


def test_classify_from_gram():
    for t in [SimpleType("A", 4), SimpleType("B", 3), SimpleType("C", 4),
              SimpleType("D", 5), SimpleType("E", 6), SimpleType("F", 4),
              SimpleType("G", 2)]:
        rs = build_root_system(t)
        got = classify_simple_system([list(row) for row in rs.gram])
        assert got == t


def test_type_string_roundtrip():
    s = SemisimpleTypeWithLevels.parse("A2,3 A2,3 U(1) D4,3 A1,1 A1,1 A1,1")
    assert s.dim() == 54
    assert s.total_rank() == 12
    assert SemisimpleTypeWithLevels.parse(str(s)) == s


def test_invalid_types_rejected():
    with pytest.raises(ValueError):
        SimpleType("E", 9)
    with pytest.raises(ValueError):
        SimpleType("G", 3)
    with pytest.raises(ValueError):
        SimpleType("D", 2)
