import random
from fractions import Fraction as Q

import pytest

from orbifold24.latticevoa import (
    NI_D4_6,
    NI_E6_4,
    GlueCode,
    LatticeIsometry,
    assemble_niemeier,
    build_isometry,
    count_orthogonal_subsystems,
    disc_digit_action,
    fixed_projection_norm,
    fixed_subalgebra,
    fpf_d4_matrix,
    fpf_e6_matrix,
    glue_automorphism_group_order,
    identify_type,
    lattice_roots,
    root_lattice,
    rough_lift,
    standard_lift,
    twisted_ground_energy,
    weight_one_algebra,
    weyl_d4_matrix,
)
from orbifold24.rootdata import SimpleType


@pytest.fixture(scope="module")
def ne6():
    return assemble_niemeier(NI_E6_4)


@pytest.fixture(scope="module")
def nd4():
    return assemble_niemeier(NI_D4_6)


@pytest.fixture(scope="module")
def alg_e6(ne6):
    return weight_one_algebra(ne6)


@pytest.fixture(scope="module")
def alg_d4(nd4):
    return weight_one_algebra(nd4)


def test_glue_code_words():
    assert len(NI_E6_4.words()) == 9
    assert len(NI_D4_6.words()) == 64
    # minimum weights justify the root-count argument
    assert min(sum(1 for d in w if d) for w in NI_E6_4.words() if any(w)) == 3
    assert min(sum(1 for d in w if d) for w in NI_D4_6.words() if any(w)) == 4


def test_assembly_even_unimodular(ne6, nd4):
    # unimodularity and evenness are verified during assembly
    assert ne6.glue_index() == 9
    assert nd4.glue_index() == 64
    for lat in (ne6, nd4):
        for i in range(lat.rank):
            assert lat.gram[i][i] % 2 == 0


def test_root_counts(ne6, nd4):
    assert len(lattice_roots(ne6)) == 288
    assert len(lattice_roots(nd4)) == 144


def test_component_isometries_certified():
    # construction already asserts order 3, integrality, fixed-point-freeness
    fpf_e6_matrix()
    fpf_d4_matrix()
    weyl_d4_matrix()


def test_disc_actions():
    phi = fpf_d4_matrix()
    act = disc_digit_action(SimpleType("D", 4), phi)
    # fixed-point-free rotations must 3-cycle the nontrivial cosets
    orbit = {1}
    for _ in range(3):
        orbit.add(act[max(orbit)])
    assert act[0] == 0
    assert sorted(act[d] for d in (1, 2, 3)) == [1, 2, 3]
    assert all(act[d] != d for d in (1, 2, 3))


def test_isometries(ne6, nd4):
    s6 = build_isometry(ne6, "sigma6")
    s2 = build_isometry(nd4, "sigma2")
    s4 = build_isometry(nd4, "sigma4")
    for iso in (s6, s2, s4):
        assert iso.order() == 3
        assert iso.preserves_gram()
    assert len(s6.fixed_coords_basis()) == 6
    assert len(s2.fixed_coords_basis()) == 0
    assert len(s4.fixed_coords_basis()) == 6


def test_algebra_dims(alg_e6, alg_d4):
    assert alg_e6.dim == 312
    assert alg_d4.dim == 168


@pytest.mark.parametrize("which", ["e6", "d4"])
def test_jacobi_identity_sampled(which, alg_e6, alg_d4):
    alg = alg_e6 if which == "e6" else alg_d4
    rng = random.Random(99)
    for _ in range(2500):
        i, j, k = (rng.randrange(alg.dim) for _ in range(3))
        x, y, z = {i: Q(1)}, {j: Q(1)}, {k: Q(1)}
        lhs = alg.bracket(x, alg.bracket(y, z))
        r1 = alg.bracket(alg.bracket(x, y), z)
        r2 = alg.bracket(y, alg.bracket(x, z))
        for idx, c in r2.items():
            r1[idx] = r1.get(idx, Q(0)) + c
        assert lhs == {a: b for a, b in r1.items() if b}


def test_form_invariance_sampled(alg_d4):
    alg = alg_d4
    rng = random.Random(5)
    for _ in range(400):
        i, j, k = (rng.randrange(alg.dim) for _ in range(3))
        x, y, z = {i: Q(1)}, {j: Q(1)}, {k: Q(1)}
        lhs = alg.form(alg.bracket(x, y), z)
        rhs = alg.form(x, alg.bracket(y, z))
        assert lhs == rhs


@pytest.fixture(scope="module")
def lift6(ne6, alg_e6):
    return standard_lift(alg_e6, build_isometry(ne6, "sigma6"))


@pytest.fixture(scope="module")
def lift2(nd4, alg_d4):
    return standard_lift(alg_d4, build_isometry(nd4, "sigma2"))


@pytest.fixture(scope="module")
def lift4(nd4, alg_d4):
    return standard_lift(alg_d4, build_isometry(nd4, "sigma4"))


def test_lifts_are_automorphisms_everywhere(lift6, lift2, lift4):
    # complete check on every bracket-relevant root pair
    assert lift6.verify_automorphism()
    assert lift2.verify_automorphism()
    assert lift4.verify_automorphism()


def test_glue_index_squared_is_discriminant_product():
    assert len(NI_E6_4.words()) ** 2 == 3**4
    assert len(NI_D4_6.words()) ** 2 == 4**6


def test_lift_cubes_to_identity(lift6, lift2, lift4):
    for lift in (lift6, lift2, lift4):
        assert lift.compose(lift).compose(lift).is_identity()


def test_identity_lift(alg_d4, nd4):
    n = nd4.rank
    ident = LatticeIsometry(
        nd4,
        tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)),
        "id",
    )
    lift = standard_lift(alg_d4, ident)
    assert lift.is_identity()


def test_standard_phase_on_fixed_roots(lift6):
    alg = lift6.algebra
    for k in range(alg.n_roots):
        if lift6.root_perm[k] == k:
            assert lift6.root_phase[k] == 1


def test_fixed_dims(lift6, lift2, lift4):
    assert fixed_subalgebra(lift6).dim == 102
    assert fixed_subalgebra(lift2).dim == 48
    assert fixed_subalgebra(lift4).dim == 54


def test_fixed_types(lift6, lift2, lift4):
    assert str(identify_type(fixed_subalgebra(lift6))) == "A2,1 A2,1 A2,1 E6,3"
    assert (
        str(identify_type(fixed_subalgebra(lift2)))
        == "A2,3 A2,3 A2,3 A2,3 A2,3 A2,3"
    )
    assert (
        str(identify_type(fixed_subalgebra(lift4)))
        == "A1,1 A1,1 A1,1 A2,3 A2,3 D4,3 U(1)"
    )


def reflection(lat, alg, root_idx, name):
    beta = alg.root_coords[root_idx]
    n = lat.rank
    rows = []
    for i in range(n):
        e = [1 if j == i else 0 for j in range(n)]
        ip = alg.ip_coords(e, beta)
        rows.append(tuple(e[j] - ip * beta[j] for j in range(n)))
    return LatticeIsometry(lat, tuple(rows), name)


def test_identify_type_conjugation_invariant(nd4, alg_d4, lift2):
    rng = random.Random(31)
    base = str(identify_type(fixed_subalgebra(lift2)))
    for _ in range(3):
        w1 = rough_lift(alg_d4, reflection(nd4, alg_d4, rng.randrange(144), "w1"))
        w2 = rough_lift(alg_d4, reflection(nd4, alg_d4, rng.randrange(144), "w2"))
        conj = (
            w1.compose(w2)
            .compose(lift2)
            .compose(w2.inverse())
            .compose(w1.inverse())
        )
        assert str(identify_type(fixed_subalgebra(conj))) == base


def test_identify_single_component():
    # an untouched component algebra identifies as itself at level 1
    lat = root_lattice(SimpleType("D", 4))
    alg = weight_one_algebra(lat)
    n = lat.rank
    ident = LatticeIsometry(
        lat,
        tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)),
        "id",
    )
    lift = standard_lift(alg, ident)
    assert str(identify_type(fixed_subalgebra(lift))) == "D4,1"


def test_identify_diagonal_triple_level():
    # the diagonal of three copies is the same type at triple level: realize
    # it as the fixed algebra of the plain 3-cycle on A2+A2+A2
    code = GlueCode((SimpleType("A", 2),) * 3, ())
    # assemble by hand: block lattice of three A2 components
    from orbifold24.latticevoa import EvenLattice

    rs_gram = [[Q(2), Q(-1)], [Q(-1), Q(2)]]
    blocks = [[Q(0)] * 6 for _ in range(6)]
    for c in range(3):
        for i in range(2):
            for j in range(2):
                blocks[2 * c + i][2 * c + j] = rs_gram[i][j]
    basis = tuple(
        tuple(Q(1) if j == i else Q(0) for j in range(6)) for i in range(6)
    )
    lat = EvenLattice(
        code,
        basis,
        tuple(tuple(r) for r in blocks),
        basis,
        tuple(tuple(int(x) for x in row) for row in blocks),
    )
    alg = weight_one_algebra(lat)
    assert alg.dim == 24
    perm = [[0] * 6 for _ in range(6)]
    for c in range(3):
        for i in range(2):
            perm[2 * c + i][2 * ((c + 1) % 3) + i] = 1
    iso = LatticeIsometry(lat, tuple(tuple(r) for r in perm), "cycle")
    lift = standard_lift(alg, iso)
    fixed = fixed_subalgebra(lift)
    assert fixed.dim == 8
    assert str(identify_type(fixed)) == "A2,3"


def test_twisted_ground_energies(ne6, nd4):
    s6 = build_isometry(ne6, "sigma6")
    rho, mults = twisted_ground_energy(s6)
    assert rho == 1 and mults == [6, 9, 9]
    s2 = build_isometry(nd4, "sigma2")
    rho2, mults2 = twisted_ground_energy(s2)
    assert rho2 == Q(4, 3) and mults2 == [0, 12, 12]
    # identity
    n = ne6.rank
    ident = LatticeIsometry(
        ne6,
        tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)),
        "id",
    )
    assert twisted_ground_energy(ident)[0] == 0
    # negation: rho = rank / 16
    neg = LatticeIsometry(
        ne6,
        tuple(tuple(-1 if i == j else 0 for j in range(n)) for i in range(n)),
        "neg",
    )
    assert twisted_ground_energy(neg)[0] == Q(24, 16)


def test_ground_energy_symmetric_under_inversion(ne6):
    s6 = build_isometry(ne6, "sigma6")
    inv = LatticeIsometry(ne6, s6.power(2), "sigma6^2")
    assert twisted_ground_energy(s6)[0] == twisted_ground_energy(inv)[0]


def test_fixed_projection_norms(ne6):
    s6 = build_isometry(ne6, "sigma6")
    u = NI_E6_4.word_vector((0, 1, 0, 0))
    proj, norm = fixed_projection_norm(ne6, s6, u)
    assert norm == Q(4, 9)
    u0 = NI_E6_4.word_vector((1, 0, 0, 0))
    proj0, norm0 = fixed_projection_norm(ne6, s6, u0)
    assert norm0 == 0 and all(x == 0 for x in proj0)
    n = ne6.rank
    ident = LatticeIsometry(
        ne6,
        tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)),
        "id",
    )
    proj_u, _ = fixed_projection_norm(ne6, ident, u)
    assert proj_u == u


def test_subsystem_counts():
    assert count_orthogonal_subsystems(SimpleType("E", 6), SimpleType("A", 2), 3) == 40
    assert count_orthogonal_subsystems(SimpleType("D", 4), SimpleType("A", 1), 3) == 12
    assert count_orthogonal_subsystems(SimpleType("A", 2), SimpleType("A", 2), 1) == 1


def test_glue_automorphism_orders():
    assert glue_automorphism_group_order(NI_E6_4) == 48
    assert glue_automorphism_group_order(NI_D4_6) == 2160
    assert glue_automorphism_group_order(GlueCode((SimpleType("E", 6),), ())) == 2
    assert glue_automorphism_group_order(GlueCode((SimpleType("D", 4),), ())) == 6
