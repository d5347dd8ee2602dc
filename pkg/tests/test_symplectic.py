import random
from itertools import combinations

from polarhex.symplectic import (
    VECTORS,
    Characteristic,
    SympMatrixF2,
    act,
    arf,
    char_form,
    compose_form,
    cover_report,
    enumerate_characteristics,
    forms_equivariant,
    identity,
    odd_characteristics,
    orbits,
    parity,
    parity_counts,
    perm_representation,
    quadratic_forms,
    sp4_group,
    stabilizer,
    stabilizer_order,
    symplectic_product,
    transvections,
)

J_MATRIX = ((0, 0, 1, 0), (0, 0, 0, 1), (1, 0, 0, 0), (0, 1, 0, 0))


def test_parity_examples():
    assert parity(Characteristic((0, 0), (0, 0))) == 1
    assert parity(Characteristic((1, 0), (1, 0))) == -1
    assert parity(Characteristic((1, 1), (1, 1))) == 1


def test_sixteen_characteristics_split_10_6():
    chars = enumerate_characteristics()
    assert len(chars) == 16
    assert parity_counts() == (10, 6)


def test_group_order_and_invariant():
    group = sp4_group()
    assert len(group) == 720
    assert identity() in group
    # the constructor re-checks M^T J M = J
    for m in group:
        SympMatrixF2(m.rows)


def test_transvections_are_fifteen_involutions():
    ts = transvections()
    assert len(ts) == 15
    ident = identity()
    for t in ts:
        assert t * t == ident


def test_act_identity_and_j():
    chars = enumerate_characteristics()
    ident = identity()
    assert all(act(ident, m) == m for m in chars)
    J = SympMatrixF2(J_MATRIX)
    for m in chars:
        assert act(J, m) == Characteristic(m.b, m.a)


def test_act_composition_random_triples():
    group = sp4_group()
    chars = enumerate_characteristics()
    rng = random.Random(0)
    for _ in range(1000):
        m1, m2 = rng.choice(group), rng.choice(group)
        c = rng.choice(chars)
        assert act(m1 * m2, c) == act(m1, act(m2, c))


def test_act_composition_generator_complete():
    # checking g*(m acting) for every generator g and every group element m
    # extends to the whole group by induction on word length
    group = sp4_group()
    chars = enumerate_characteristics()
    for g in transvections():
        for m in group:
            prod = g * m
            for c in chars:
                assert act(prod, c) == act(g, act(m, c))


def test_orbits():
    orbs = orbits()
    assert len(orbs) == 2
    assert [len(o) for o in orbs] == [10, 6]
    for o in orbs:
        assert len({parity(m) for m in o}) == 1
    assert parity(orbs[0][0]) == 1 and parity(orbs[1][0]) == -1


def test_parity_invariant_under_full_group():
    group = sp4_group()
    for m in enumerate_characteristics():
        p = parity(m)
        assert all(parity(act(g, m)) == p for g in group)


def test_stabilizer_orders():
    orders = sorted(stabilizer_order(m) for m in enumerate_characteristics())
    assert orders == [72] * 10 + [120] * 6
    for m in enumerate_characteristics():
        orbit = {act(g, m) for g in sp4_group()}
        assert len(orbit) * stabilizer_order(m) == 720


def test_perm_representation_faithful_surjective():
    perms = perm_representation()
    values = set(perms.values())
    assert len(values) == 720  # all of the symmetric group on six letters
    ident_perm = tuple(range(6))
    kernel = [g for g, p in perms.items() if p == ident_perm]
    assert kernel == [identity()]


def test_perm_representation_homomorphism():
    group = sp4_group()
    perms = perm_representation()
    rng = random.Random(9)
    for _ in range(1000):
        g1, g2 = rng.choice(group), rng.choice(group)
        composed = tuple(perms[g1][perms[g2][i]] for i in range(6))
        assert perms[g1 * g2] == composed


def test_odd_stabilizer_is_full_symmetric_on_five():
    odd = odd_characteristics()
    m0 = odd[0]
    stab = stabilizer(m0)
    assert len(stab) == 120
    perms = perm_representation()
    fixed_letter = odd.index(m0)
    restricted = set()
    for g in stab:
        p = perms[g]
        assert p[fixed_letter] == fixed_letter
        restricted.add(tuple(v for i, v in enumerate(p) if i != fixed_letter))
    assert len(restricted) == 120


def test_quadratic_forms_polarization():
    forms = quadratic_forms()
    assert len(forms) == 16
    for q in forms:
        assert q((0, 0, 0, 0)) == 0
        for x in VECTORS:
            for y in VECTORS:
                s = tuple((x[i] + y[i]) % 2 for i in range(4))
                assert (q(s) + q(x) + q(y)) % 2 == symplectic_product(x, y)


def test_arf_split():
    arfs = [arf(q) for q in quadratic_forms()]
    assert (arfs.count(0), arfs.count(1)) == (10, 6)


def test_characteristic_form_matching_parity():
    for m in enumerate_characteristics():
        assert (parity(m) == 1) == (arf(char_form(m)) == 0)


def test_matching_is_bijective():
    forms = {char_form(m).values for m in enumerate_characteristics()}
    assert len(forms) == 16


def test_equivariance_exhaustive():
    assert forms_equivariant()


def test_compose_form_definition():
    # spot check: q o M^-1 evaluated pointwise
    g = transvections()[3]
    q = quadratic_forms()[5]
    composed = compose_form(q, g)
    ginv = g.inverse()
    for v in VECTORS:
        assert composed(v) == q(ginv.apply(v))


def test_cover_report():
    report = cover_report()
    assert report["group_order"] == 720
    assert report["stab_even"] == 72
    assert report["stab_odd"] == 120
    assert report["odd_cover_degree"] == 6
    assert report["even_cover_degree"] == 10
    assert report["level22_cover_degree"] == 720
