import random

import pytest

from braidgen import search_push_tuples_g2
from lietau.errors import (DepthTooShallowError, RelationViolatedError,
                           WeightTooLowError)
from lietau.hall import hall_basis
from lietau.johnson import (HomValue, MappingClassData, TauValue,
                            boundary_twist, braid_automorphism, eta,
                            eta_inverse, identity_mapping_class, johnson_depth,
                            jprime_depth, point_push_tau, push_tuple_of,
                            reduce_tau1, sigma, sigma_free, tau, tau1)
from lietau.lie import LieElement, bracket, random_like
from lietau.magnus import lie_class_at
from lietau.words import GroupEndomorphism, Word, commutator


def test_mapping_class_requires_fixed_relator(model_of):
    m = model_of(2)
    images = [m.b(1)] + [Word(m.alphabet, (i,)) for i in range(2, 5)]
    with pytest.raises(RelationViolatedError):
        MappingClassData(m, GroupEndomorphism(m.alphabet, images))
    # conjugating the relator is not enough: it must be fixed on the nose
    u = m.a(1)
    images = [u * Word(m.alphabet, (i,)) * ~u for i in range(1, 5)]
    with pytest.raises(RelationViolatedError):
        MappingClassData(m, GroupEndomorphism(m.alphabet, images))


def test_identity_depths(model_of):
    m = model_of(2)
    f = identity_mapping_class(m)
    assert johnson_depth(f, 6) is None
    assert jprime_depth(f, 6) is None
    assert tau(f, 3).is_zero()


def test_boundary_twist_fixes_relator(model_of):
    for g in (1, 2, 3):
        m = model_of(g)
        t = boundary_twist(m)
        assert t.endo.apply(m.relator) == m.relator
        # the b_g defect is the commutator of the relator with b_g
        bg = m.b(g)
        assert t.endo.apply(bg) * ~bg == commutator(m.relator, bg)


def test_boundary_twist_depths(model_of):
    for g in (1, 2, 3):
        m = model_of(g)
        t = boundary_twist(m)
        assert johnson_depth(t, 6) == 3
    for g in (2, 3):
        assert jprime_depth(boundary_twist(model_of(g)), 6) is None


def test_boundary_twist_tau1_class(model_of):
    for g in (2, 3):
        m = model_of(g)
        t = boundary_twist(m)
        value = tau1(t, 3)
        # the alpha_g-column holds the class of t(b_g) b_g^-1
        expected = LieElement.zero(3)
        for i in range(g):
            expected = expected + bracket(
                bracket(LieElement.generator(i), LieElement.generator(g + i)),
                LieElement.generator(2 * g - 1))
        assert not expected.is_zero()
        assert value.term(g - 1) == expected
        assert value.term(g - 1) == lie_class_at(t.defect(2 * g - 1), 3)


def test_boundary_twist_tau_surface_zero(model_of):
    for g in (2, 3):
        t = boundary_twist(model_of(g))
        assert sigma(t, 3).is_zero()
        assert tau(t, 3).is_zero()


def test_eta_examples(model_of):
    m = model_of(2)
    zero = HomValue(m, 2, {}, reduced=False)
    assert eta_inverse(zero).is_zero()
    ell = LieElement.from_tree(hall_basis(2, 4)[0])
    h = HomValue(m, 2, {0: ell}, reduced=False)
    got = eta_inverse(h)
    # h supported on alpha_1 pulls back to -beta_1 tensor ell
    assert got.term(2) == -ell
    assert set(got.terms) == {2}


def test_eta_round_trips(model_of):
    rng = random.Random(77)
    for g in (2, 3):
        m = model_of(g)
        for k in (2, 3, 4):
            for _ in range(5):
                vals = {mm: random_like(k, 2 * g, rng) for mm in range(2 * g)}
                h = HomValue(m, k, vals, reduced=False)
                assert eta(eta_inverse(h)) == h
                terms = {mm: random_like(k, 2 * g, rng) for mm in range(2 * g)}
                tv = TauValue(m, k, True, terms)
                assert eta_inverse(eta(tv)) == tv


def test_braid_empty_tuple_is_identity(model_of):
    m = model_of(2)
    f = braid_automorphism(m, [Word(m.alphabet), Word(m.alphabet)])
    assert f.endo == GroupEndomorphism.identity(m.alphabet)


def test_braid_relation_violated(model_of):
    m = model_of(2)
    with pytest.raises(RelationViolatedError):
        braid_automorphism(m, [m.b(2), Word(m.alphabet)])


def test_braid_must_use_b_letters(model_of):
    m = model_of(2)
    with pytest.raises(Exception):
        braid_automorphism(m, [m.a(1), Word(m.alphabet)])


def test_braid_fixes_relator_and_framing(model_of):
    m = model_of(2)
    # framing tuples b_i^s are always admissible
    f = braid_automorphism(m, [m.b(1) ** 2, m.b(2) ** -1])
    assert f.endo.apply(m.relator) == m.relator
    assert f.endo.images[0] == m.a(1) * m.b(1) ** 2


def test_braid_depth_two_and_three(model_of, g3_braids):
    c = g3_braids["c"]
    assert johnson_depth(c.fwd, 5) == 2
    d = g3_braids["d"]
    assert johnson_depth(d.fwd, 5) == 3
    assert jprime_depth(c.fwd, 3) == 2


def test_sigma_depth_guard(model_of, g3_braids):
    m = model_of(3)
    d = g3_braids["d"]
    with pytest.raises(DepthTooShallowError):
        sigma(d.fwd, 4)
    with pytest.raises(DepthTooShallowError):
        tau(boundary_twist(m), 4)


def test_braid_sigma_columns(model_of, g3_braids):
    # alpha_i goes to the class of lambda_i, beta_i to zero
    m = model_of(3)
    d = g3_braids["d"]
    lam = push_tuple_of(d.fwd)
    assert lam is not None
    s = sigma_free(d.fwd, 3)
    for i in range(3):
        assert s.value(i) == lie_class_at(lam[i], 3)
        assert s.value(3 + i).is_zero()


def test_point_push_matches_tau_on_deep_braid(model_of, g3_braids):
    m = model_of(3)
    d = g3_braids["d"]
    lam = push_tuple_of(d.fwd)
    assert point_push_tau(m, lam, 3) == tau(d.fwd, 3)
    assert point_push_tau(m, lam, 2) == tau(d.fwd, 2)


def test_point_push_empty_zero(model_of):
    m = model_of(2)
    e = Word(m.alphabet)
    assert point_push_tau(m, [e, e], 2).is_zero()


def test_point_push_weight_guard(model_of):
    m = model_of(2)
    with pytest.raises(WeightTooLowError):
        point_push_tau(m, [m.b(1) ** 2, m.b(2) ** -2], 2)


def test_point_push_relation_guard(model_of):
    m = model_of(2)
    with pytest.raises(RelationViolatedError):
        point_push_tau(m, [m.b(2), Word(m.alphabet)], 1)


def test_push_tuple_of_boundary_twist_is_none(model_of):
    # the twist conjugates by the relator, which is not a b-word
    assert push_tuple_of(boundary_twist(model_of(2))) is None


def test_additivity_and_kernel_property(model_of, g3_braids):
    m = model_of(3)
    t = boundary_twist(m)
    d = g3_braids["d"]
    # composites of two deep pushes square the word lengths, so pairs mix a
    # twist power with a push (plus the inverse-pair sanity case)
    pool = [t, t.compose(t), d.fwd, d.bwd]
    taus = [tau(f, 3) for f in pool]
    taus1 = [tau1(f, 3) for f in pool]
    pairs = [(0, 0), (0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1),
             (0, 3), (3, 0), (2, 3), (3, 2)]
    for i, j in pairs:
        f, h = pool[i], pool[j]
        assert tau(f.compose(h), 3) == taus[i] + taus[j]
        assert tau1(f.compose(h), 3) == taus1[i] + taus1[j]
    # kernel property: tau1 vanishes at k exactly when the depth exceeds k
    c = g3_braids["c"]
    assert johnson_depth(c.fwd, 4) == 2
    assert not tau1(c.fwd, 2).is_zero()
    assert tau1(d.fwd, 2).is_zero()          # depth 3 >= 2+1
    assert not tau1(d.fwd, 3).is_zero()      # not in the next stage
    assert not tau1(t, 3).is_zero()


def test_tau1_compatible_with_tau(model_of, g3_braids):
    m = model_of(3)
    d = g3_braids["d"]
    t = boundary_twist(m)
    for f in (d.fwd, t, t.compose(d.fwd)):
        assert reduce_tau1(tau1(f, 3)) == tau(f, 3)


def test_jprime_at_least_johnson(model_of, g3_braids):
    m = model_of(3)
    t = boundary_twist(m)
    c = g3_braids["c"]
    for f in (t, c.fwd):
        jd = johnson_depth(f, 4)
        jp = jprime_depth(f, 4)
        if jp is not None:
            assert jd is not None and jp >= jd


def test_defect_classes_vanish_on_commutators(model_of, g3_braids):
    # the defect homomorphism only sees homology: commutator words have
    # trivial defect class at the filtration weight
    m = model_of(3)
    ideal = m.symplectic_ideal()
    rng = random.Random(71)
    letters = [i for i in range(-6, 7) if i]
    for f, k in ((boundary_twist(m), 3), (g3_braids["c"].fwd, 2)):
        for _ in range(4):
            u = Word(m.alphabet, [rng.choice(letters) for _ in range(3)])
            v = Word(m.alphabet, [rng.choice(letters) for _ in range(3)])
            c = commutator(u, v)
            d = f.endo.apply(c) * ~c
            cls = ideal.reduce(lie_class_at(d, k)).vector
            assert cls.is_zero()
            # and shifting a generator by a commutator keeps its class
            w1 = m.b(1)
            w2 = w1 * c
            d1 = f.endo.apply(w1) * ~w1
            d2 = f.endo.apply(w2) * ~w2
            cls1 = ideal.reduce(lie_class_at(d1, k)).vector
            cls2 = ideal.reduce(lie_class_at(d2, k)).vector
            assert cls1 == cls2


def test_search_oracle_g2_weight_one(model_of):
    # with no depth requirement the bounded search finds real braid tuples
    m = model_of(2)
    found = search_push_tuples_g2(m, maxlen=4, min_weight=1)
    assert any(lam1 or lam2 for lam1, lam2 in found)
    for lam1, lam2 in found[:40]:
        f = braid_automorphism(m, [lam1, lam2])
        if lam1 or lam2:
            assert point_push_tau(m, [lam1, lam2], 1) == tau(f, 1)


def test_braid_inverse_exactness(model_of, g3_braids):
    m = model_of(3)
    b12, b23 = g3_braids["b12"], g3_braids["b23"]
    ident = GroupEndomorphism.identity(m.alphabet)
    assert b12.fwd.compose(b12.bwd).endo == ident
    assert b23.bwd.compose(b23.fwd).endo == ident
    c = g3_braids["c"]
    assert c.fwd.compose(c.bwd).endo == ident
