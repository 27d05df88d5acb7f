import random

from hypothesis import given, strategies as st

from lietau.hall import HallTree, hall_basis, is_basic, tree_from_str
from lietau.lie import (LieElement, bracket, expand_associative, lie_from_json,
                        lie_to_json, lift_word, random_like, substitute,
                        tree_to_lie)
from lietau.magnus import lie_class_at
from lietau.words import Alphabet

AB2 = Alphabet(["x", "y"])


def gen(i):
    return LieElement.generator(i)


def test_bracket_alternating():
    assert bracket(gen(0), gen(0)).is_zero()


def test_bracket_skew_on_generators():
    xy = bracket(gen(0), gen(1))
    yx = bracket(gen(1), gen(0))
    assert xy == -yx
    # with x < y the basic commutator is [y,x]
    t = tree_from_str("[y,x]", AB2)
    assert yx == LieElement.from_tree(t)


def test_bracket_already_basic():
    yx = tree_from_str("[y,x]", AB2)
    out = bracket(LieElement.from_tree(yx), gen(1))
    assert out == LieElement.from_tree(tree_from_str("[[y,x],y]", AB2))


@given(st.permutations([0, 1, 2]))
def test_jacobi_on_letters(perm):
    a, b, c = (gen(i) for i in perm)
    total = (bracket(a, bracket(b, c)) + bracket(b, bracket(c, a))
             + bracket(c, bracket(a, b)))
    assert total.is_zero()


def test_jacobi_and_skew_random_homogeneous():
    rng = random.Random(20240211)
    for n in (2, 3):
        for wa, wb in [(1, 2), (2, 2), (1, 3), (2, 3), (3, 3), (1, 4), (2, 4)]:
            a = random_like(wa, n, rng)
            b = random_like(wb, n, rng)
            assert bracket(a, b) == -bracket(b, a)
        for wa, wb, wc in [(1, 1, 2), (1, 2, 2), (1, 2, 3), (2, 2, 2)]:
            a = random_like(wa, n, rng)
            b = random_like(wb, n, rng)
            c = random_like(wc, n, rng)
            total = (bracket(a, bracket(b, c)) + bracket(b, bracket(c, a))
                     + bracket(c, bracket(a, b)))
            assert total.is_zero()


def test_bracket_output_is_basic():
    rng = random.Random(7)
    for _ in range(20):
        a = random_like(rng.randint(1, 3), 3, rng)
        b = random_like(rng.randint(1, 3), 3, rng)
        for t in bracket(a, b).terms:
            assert is_basic(t)


def test_bilinearity():
    rng = random.Random(99)
    a = random_like(2, 2, rng)
    b = random_like(2, 2, rng)
    c = random_like(1, 2, rng)
    assert bracket(a + b, c) == bracket(a, c) + bracket(b, c)
    assert bracket(c, a + b) == bracket(c, a) + bracket(c, b)


def test_lift_roundtrip_two_letters():
    for k in range(1, 6):
        for t in hall_basis(k, 2):
            w = lift_word(t, AB2)
            assert lie_class_at(w, k) == LieElement.from_tree(t)


def test_lift_roundtrip_three_letters():
    ab = Alphabet(["x", "y", "z"])
    for k in range(1, 5):
        for t in hall_basis(k, 3):
            w = lift_word(t, ab)
            assert lie_class_at(w, k) == LieElement.from_tree(t)


def test_tree_to_lie_rewrites_non_basic():
    # [x,y] is not basic; its Hall form is -[y,x]
    t = HallTree.make_node(HallTree.make_leaf(0), HallTree.make_leaf(1))
    assert tree_to_lie(t) == -LieElement.from_tree(tree_from_str("[y,x]", AB2))


def test_substitute_identity_and_swap():
    rng = random.Random(5)
    e = random_like(3, 2, rng)
    ident = [gen(0), gen(1)]
    assert substitute(e, ident) == e
    swap = [gen(1), gen(0)]
    a = random_like(2, 2, rng)
    b = random_like(2, 2, rng)
    assert (substitute(bracket(a, b), swap)
            == bracket(substitute(a, swap), substitute(b, swap)))


def test_expand_associative_antisymmetry():
    t = tree_from_str("[y,x]", AB2)
    assert expand_associative(t) == {(1, 0): 1, (0, 1): -1}


def test_lie_json_roundtrip():
    rng = random.Random(3)
    e = random_like(3, 2, rng)
    obj = lie_to_json(e, AB2)
    assert lie_from_json(obj, AB2) == e
    # non-basic trees in the input are rewritten
    obj2 = {"weight": 2, "terms": [[1, ["x", "y"]]]}
    assert lie_from_json(obj2, AB2) == bracket(gen(0), gen(1))
