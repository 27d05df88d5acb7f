"""Hall basic-commutator trees and the Witt rank formula.

Trees are interned, so structural equality is identity and they hash fast.
Leaves hold 0-based indices into an ordered alphabet.  The total order on
trees is weight first, then a lexicographic comparison of a flattened
structure code with leaves ordered by the alphabet; any such order yields a
valid basic-commutator family, and fixing this one makes every basis and
every rewriting deterministic.
"""

import threading
from functools import lru_cache


class HallTree:
    """leaf(i) or node(left, right); weight = number of leaves."""

    __slots__ = ("leaf", "left", "right", "weight", "key", "mdeg")

    _registry = {}
    _lock = threading.Lock()

    def __init__(self, *, _token=None, leaf=None, left=None, right=None):
        if _token is not HallTree._registry:
            raise TypeError("use HallTree.make_leaf / HallTree.make_node")
        object.__setattr__(self, "leaf", leaf)
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        if leaf is not None:
            w = 1
            key = (1, 0, leaf)
            mdeg = (leaf,)
        else:
            w = left.weight + right.weight
            key = (w,) + left.key[1:] + right.key[1:]
            mdeg = tuple(sorted(left.mdeg + right.mdeg))
        object.__setattr__(self, "weight", w)
        object.__setattr__(self, "key", key)
        object.__setattr__(self, "mdeg", mdeg)

    def __setattr__(self, *a):
        raise AttributeError("HallTree is immutable")

    @staticmethod
    def make_leaf(i):
        i = int(i)
        if i < 0:
            raise ValueError("leaf index must be >= 0")
        reg = HallTree._registry
        tok = ("L", i)
        t = reg.get(tok)
        if t is None:
            with HallTree._lock:
                t = reg.get(tok)
                if t is None:
                    t = HallTree(_token=reg, leaf=i)
                    reg[tok] = t
        return t

    @staticmethod
    def make_node(left, right):
        reg = HallTree._registry
        tok = (id(left), id(right))
        t = reg.get(tok)
        if t is None:
            with HallTree._lock:
                t = reg.get(tok)
                if t is None:
                    t = HallTree(_token=reg, left=left, right=right)
                    reg[tok] = t
        return t

    def is_leaf(self):
        return self.leaf is not None

    def __lt__(self, other):
        return self.key < other.key

    def __le__(self, other):
        return self.key <= other.key

    def __repr__(self):
        return tree_to_str(self)

    def max_leaf(self):
        return max(self.mdeg)

    def x_count(self, g):
        """Number of leaves among the first g letters of the alphabet."""
        return sum(1 for i in self.mdeg if i < g)


def is_basic(t):
    """The defining condition: at [w1,w2], w1 > w2 and, if w1 = [v1,v2], v2 <= w2."""
    if t.is_leaf():
        return True
    if not (t.left.key > t.right.key):
        return False
    if not t.left.is_leaf() and not (t.left.right.key <= t.right.key):
        return False
    return is_basic(t.left) and is_basic(t.right)


def mobius(d):
    """Mobius mu: 0 unless square-free, else (-1)^(number of prime factors)."""
    if d < 1:
        raise ValueError("d must be >= 1")
    count = 0
    p = 2
    while p * p <= d:
        if d % p == 0:
            d //= p
            if d % p == 0:
                return 0
            count += 1
        else:
            p += 1
    if d > 1:
        count += 1
    return 1 if count % 2 == 0 else -1


def divisors(k):
    small = [d for d in range(1, int(k ** 0.5) + 1) if k % d == 0]
    large = [k // d for d in reversed(small) if d * d != k]
    return small + large


def witt(k, g):
    """Rank of the weight-k layer of the free Lie ring on g generators.

    (1/k) * sum over d | k of mu(d) * g^(k/d); the division is exact.
    """
    if k < 1:
        raise ValueError("weight must be >= 1")
    if g < 0:
        raise ValueError("rank must be >= 0")
    total = sum(mobius(d) * g ** (k // d) for d in divisors(k))
    q, r = divmod(total, k)
    if r:
        raise AssertionError("Witt sum not divisible by k")
    return q


@lru_cache(maxsize=None)
def hall_basis(k, n):
    """All weight-k basic commutators on n letters, sorted in the fixed order.

    Its length always equals witt(k, n).
    """
    if k < 1:
        raise ValueError("weight must be >= 1")
    if n < 1:
        raise ValueError("alphabet size must be >= 1")
    if k == 1:
        return tuple(HallTree.make_leaf(i) for i in range(n))
    out = []
    for w1 in range(1, k):
        for u in hall_basis(w1, n):
            for v in hall_basis(k - w1, n):
                if u.key > v.key and (u.is_leaf() or u.right.key <= v.key):
                    out.append(HallTree.make_node(u, v))
    out.sort(key=lambda t: t.key)
    return tuple(out)


@lru_cache(maxsize=None)
def hall_index(k, n):
    """tree -> position within hall_basis(k, n)."""
    return {t: i for i, t in enumerate(hall_basis(k, n))}


@lru_cache(maxsize=None)
def basis_block(k, n, mdeg):
    """The weight-k basic commutators with the given leaf multidegree."""
    return tuple(t for t in hall_basis(k, n) if t.mdeg == mdeg)


def tree_to_str(t, alphabet=None):
    """Nested bracket form, e.g. ``[[b1,a1],b2]``; indices if no alphabet given."""
    if t.is_leaf():
        return alphabet.names[t.leaf] if alphabet is not None else "x%d" % t.leaf
    return "[%s,%s]" % (tree_to_str(t.left, alphabet), tree_to_str(t.right, alphabet))


def tree_from_str(s, alphabet):
    """Parse the nested bracket form over a given alphabet."""
    s = s.replace(" ", "")
    pos = 0

    def parse():
        nonlocal pos
        if pos < len(s) and s[pos] == "[":
            pos += 1
            left = parse()
            if pos >= len(s) or s[pos] != ",":
                raise ValueError("expected ',' at %d in %r" % (pos, s))
            pos += 1
            right = parse()
            if pos >= len(s) or s[pos] != "]":
                raise ValueError("expected ']' at %d in %r" % (pos, s))
            pos += 1
            return HallTree.make_node(left, right)
        start = pos
        while pos < len(s) and s[pos] not in ",]":
            pos += 1
        name = s[start:pos]
        if name not in alphabet.index:
            raise ValueError("unknown generator %r" % name)
        return HallTree.make_leaf(alphabet.index[name])

    t = parse()
    if pos != len(s):
        raise ValueError("trailing input in %r" % s)
    return t


def tree_to_json(t, alphabet=None):
    if t.is_leaf():
        return alphabet.names[t.leaf] if alphabet is not None else t.leaf
    return [tree_to_json(t.left, alphabet), tree_to_json(t.right, alphabet)]


def tree_from_json(obj, alphabet=None):
    if isinstance(obj, list):
        if len(obj) != 2:
            raise ValueError("tree node must have two children")
        return HallTree.make_node(tree_from_json(obj[0], alphabet),
                                  tree_from_json(obj[1], alphabet))
    if isinstance(obj, str):
        if alphabet is None or obj not in alphabet.index:
            raise ValueError("unknown generator %r" % obj)
        return HallTree.make_leaf(alphabet.index[obj])
    return HallTree.make_leaf(int(obj))


def enumerate_trees(k, n):
    """Every binary tree of weight k on n letters (not only basic ones)."""
    if k == 1:
        return [HallTree.make_leaf(i) for i in range(n)]
    out = []
    for w1 in range(1, k):
        for u in enumerate_trees(w1, n):
            for v in enumerate_trees(k - w1, n):
                out.append(HallTree.make_node(u, v))
    return out
