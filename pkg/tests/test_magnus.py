import random

import pytest
from hypothesis import given, strategies as st

from lietau.errors import PreconditionError
from lietau.hall import hall_basis
from lietau.lie import LieElement, bracket, lift_word, random_like
from lietau.magnus import (MagnusSeries, induced_lie_map, lie_class_at, magnus,
                           weight_of)
from lietau.surface import SurfaceModel
from lietau.words import Alphabet, GroupEndomorphism, Word, commutator

AB = Alphabet(["x", "y"])
X, Y = AB.generator("x"), AB.generator("y")


def test_empty_word_is_one():
    for cap in (1, 3, 6):
        assert magnus(Word(AB), cap).is_one()


def test_inverse_cancels_exactly():
    for cap in (1, 2, 5, 8):
        assert magnus(X * ~X, cap).is_one()
        s = magnus(X * Y * ~X, cap)
        assert (s * s.inverse()).is_one()


def test_commutator_series_frozen():
    # [x,y] at cap 2 is 1 + (XY - YX); the four factors multiplied by hand
    s = magnus(commutator(X, Y), 2)
    assert s.coeffs == {(): 1, (0, 1): 1, (1, 0): -1}


small_words = st.lists(st.sampled_from([1, -1, 2, -2]), max_size=12)


@given(small_words, small_words)
def test_multiplicative(u_letters, v_letters):
    u, v = Word(AB, u_letters), Word(AB, v_letters)
    cap = 4
    assert magnus(u * v, cap) == magnus(u, cap) * magnus(v, cap)


def test_weight_of_examples():
    sa = SurfaceModel(2)
    assert weight_of(sa.a(1), 6) == 1
    assert weight_of(Word(sa.alphabet), 6) is None
    w = commutator(sa.relator, sa.b(2))
    assert weight_of(w, 6) == 3
    m3 = SurfaceModel(3)
    assert weight_of(commutator(m3.relator, m3.b(3)), 6) == 3


def test_weight_of_commutator_depth():
    c = commutator(X, Y)
    assert weight_of(c, 6) == 2
    assert weight_of(commutator(c, X), 6) == 3


def test_lie_class_generator():
    assert lie_class_at(X, 1) == LieElement.generator(0)


def test_lie_class_commutator():
    got = lie_class_at(commutator(X, Y), 2)
    assert got == bracket(LieElement.generator(0), LieElement.generator(1))


def test_lie_class_relator_is_symplectic_class():
    for g in range(1, 5):
        m = SurfaceModel(g)
        assert lie_class_at(m.relator, 2) == m.symplectic_class()


def test_lie_class_precondition():
    with pytest.raises(PreconditionError):
        lie_class_at(X, 2)
    with pytest.raises(PreconditionError):
        lie_class_at(X * Y, 3)


def test_lie_class_zero_when_deeper():
    c = commutator(commutator(Y, X), X)
    assert lie_class_at(c, 2).is_zero()
    assert lie_class_at(c, 3) == bracket(
        bracket(LieElement.generator(1), LieElement.generator(0)),
        LieElement.generator(0))


def test_induced_identity():
    phi = GroupEndomorphism.identity(AB)
    rng = random.Random(11)
    for w in (1, 2, 3, 4):
        e = random_like(w, 2, rng)
        assert induced_lie_map(phi, e, 6) == e


def test_induced_zero_map_example():
    c = commutator(commutator(Y, X), X)
    d = commutator(commutator(Y, X), Y)
    phi = GroupEndomorphism(AB, [c, d])
    for w in (1, 2):
        for t in hall_basis(w, 2):
            assert induced_lie_map(phi, LieElement.from_tree(t), 6).is_zero()


def test_induced_conjugation_trivial():
    rng = random.Random(13)
    for conj_letters in [(1,), (2, 1), (1, -2, 1)]:
        u = Word(AB, conj_letters)
        phi = GroupEndomorphism(AB, [u * X * ~u, u * Y * ~u])
        for w in (1, 2, 3, 4):
            e = random_like(w, 2, rng)
            assert induced_lie_map(phi, e, 6) == e


def test_induced_respects_brackets_for_permutation():
    swap = GroupEndomorphism(AB, [Y, X])
    rng = random.Random(17)
    for wa, wb in [(1, 1), (1, 2), (2, 2), (1, 3)]:
        a = random_like(wa, 2, rng)
        b = random_like(wb, 2, rng)
        lhs = induced_lie_map(swap, bracket(a, b), 6)
        rhs = bracket(induced_lie_map(swap, a, 6), induced_lie_map(swap, b, 6))
        assert lhs == rhs


def test_series_letter_expansion():
    s = MagnusSeries.letter(0, 3, -1)
    assert s.coeffs == {(): 1, (0,): -1, (0, 0): 1, (0, 0, 0): -1}


def test_lift_word_series_depth():
    # the expansion of a lift of a weight-k tree starts in degree k
    for k in (2, 3, 4):
        for t in hall_basis(k, 2):
            s = magnus(lift_word(t, AB), k)
            assert s.min_positive_degree() == k
