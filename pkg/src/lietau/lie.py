"""Exact free-Lie-ring arithmetic in Hall coordinates.

A LieElement is a homogeneous integer combination of basic commutators of one
weight.  Brackets of basic commutators are rewritten into the basis by the
classical recursion: flip when the arguments are out of order, and when the
pair [w1, w2] = [[v1, v2], w2] violates the basis condition (v2 > w2) apply

    [[v1, v2], w2] = [[v1, w2], v2] + [v1, [v2, w2]]

and recurse.  Each recursive call strictly decreases the well-founded measure
(total weight, weight of the smaller argument, its rank within that weight),
so the rewriting terminates; results are memoized per tree pair.
"""

import threading

from .hall import HallTree, hall_basis, is_basic
from .words import Word, commutator as word_commutator


class LieElement:
    """weight plus a map from basic commutators of that weight to nonzero ints."""

    __slots__ = ("weight", "terms")

    def __init__(self, weight, terms=()):
        if weight < 1:
            raise ValueError("weight must be >= 1")
        tm = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for t, c in items:
            c = int(c)
            if c == 0:
                continue
            if t.weight != weight:
                raise ValueError("tree of weight %d in weight-%d element"
                                 % (t.weight, weight))
            tm[t] = tm.get(t, 0) + c
            if tm[t] == 0:
                del tm[t]
        object.__setattr__(self, "weight", weight)
        object.__setattr__(self, "terms", tm)

    def __setattr__(self, *a):
        raise AttributeError("LieElement is immutable")

    @staticmethod
    def zero(weight):
        return LieElement(weight)

    @staticmethod
    def from_tree(t, coeff=1):
        return LieElement(t.weight, [(t, coeff)])

    @staticmethod
    def generator(i, coeff=1):
        return LieElement(1, [(HallTree.make_leaf(i), coeff)])

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, LieElement) and self.weight == other.weight
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.weight, frozenset(self.terms.items())))

    def __add__(self, other):
        if self.weight != other.weight:
            raise ValueError("weights differ: %d vs %d" % (self.weight, other.weight))
        tm = dict(self.terms)
        for t, c in other.terms.items():
            v = tm.get(t, 0) + c
            if v:
                tm[t] = v
            else:
                tm.pop(t, None)
        return LieElement(self.weight, tm)

    def __neg__(self):
        return LieElement(self.weight, {t: -c for t, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = int(c)
        if c == 0:
            return LieElement(self.weight)
        return LieElement(self.weight, {t: c * v for t, v in self.terms.items()})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda tc: tc[0].key)

    def __repr__(self):
        if not self.terms:
            return "0_(w=%d)" % self.weight
        parts = []
        for t, c in self.sorted_terms():
            parts.append(("%+d*%r" % (c, t)))
        return " ".join(parts)

    def max_letter(self):
        m = -1
        for t in self.terms:
            m = max(m, t.max_leaf())
        return m


_bracket_memo = {}
_bracket_lock = threading.Lock()


def _bracket_trees(u, v):
    """[u, v] for basic commutators u, v, as a {tree: coeff} map."""
    if u is v:
        return {}
    key = (u, v)
    hit = _bracket_memo.get(key)
    if hit is not None:
        return hit
    if u.key < v.key:
        res = {t: -c for t, c in _bracket_trees(v, u).items()}
    elif u.is_leaf() or u.right.key <= v.key:
        res = {HallTree.make_node(u, v): 1}
    else:
        # u = [v1, v2] with v2 > v: Jacobi rearrangement, then recurse.
        v1, v2 = u.left, u.right
        res = {}
        for h, c in _bracket_trees(v1, v).items():
            for t, d in _bracket_trees(h, v2).items():
                res[t] = res.get(t, 0) + c * d
        for h, c in _bracket_trees(v2, v).items():
            for t, d in _bracket_trees(v1, h).items():
                res[t] = res.get(t, 0) + c * d
        res = {t: c for t, c in res.items() if c}
    with _bracket_lock:
        _bracket_memo[key] = res
    return res


def bracket(e1, e2):
    """Bilinear bracket; the result is homogeneous of weight w1 + w2."""
    w = e1.weight + e2.weight
    acc = {}
    for u, c in e1.terms.items():
        for v, d in e2.terms.items():
            cd = c * d
            for t, e in _bracket_trees(u, v).items():
                val = acc.get(t, 0) + cd * e
                if val:
                    acc[t] = val
                else:
                    acc.pop(t, None)
    return LieElement(w, acc)


def tree_to_lie(t):
    """Any binary tree, rewritten into Hall coordinates."""
    if t.is_leaf():
        return LieElement.from_tree(t)
    return bracket(tree_to_lie(t.left), tree_to_lie(t.right))


def lift_word(t, alphabet):
    """Group-word lift: leaf -> generator, node -> group commutator of lifts."""
    if t.is_leaf():
        return Word(alphabet, (t.leaf + 1,))
    return word_commutator(lift_word(t.left, alphabet), lift_word(t.right, alphabet))


_expand_memo = {}
_expand_lock = threading.Lock()


def expand_associative(t):
    """Expansion of a tree in the free associative ring: [u,v] -> uv - vu.

    Monomials are tuples of leaf indices; this realizes the embedding of the
    free Lie ring into noncommutative polynomials.
    """
    hit = _expand_memo.get(t)
    if hit is not None:
        return hit
    if t.is_leaf():
        res = {(t.leaf,): 1}
    else:
        le = expand_associative(t.left)
        re = expand_associative(t.right)
        res = {}
        for m1, c1 in le.items():
            for m2, c2 in re.items():
                m = m1 + m2
                res[m] = res.get(m, 0) + c1 * c2
                m = m2 + m1
                res[m] = res.get(m, 0) - c1 * c2
        res = {m: c for m, c in res.items() if c}
    with _expand_lock:
        _expand_memo[t] = res
    return res


def substitute(e, images):
    """Apply the degree-1 substitution leaf i -> images[i] multiplicatively.

    images[i] must be a weight-1 LieElement; the substitution extends to a Lie
    ring endomorphism, so each tree expands multilinearly and is re-reduced
    into Hall coordinates.
    """
    memo = {}

    def sub_tree(t):
        got = memo.get(t)
        if got is not None:
            return got
        if t.is_leaf():
            res = images[t.leaf]
        else:
            res = bracket(sub_tree(t.left), sub_tree(t.right))
        memo[t] = res
        return res

    out = LieElement.zero(e.weight)
    for t, c in e.terms.items():
        out = out + sub_tree(t).scale(c)
    return out


def x_count_split(e, g):
    """Split by the number of leaves among the first g letters; returns {i: part}."""
    parts = {}
    for t, c in e.terms.items():
        i = t.x_count(g)
        parts.setdefault(i, {})[t] = c
    return {i: LieElement(e.weight, tm) for i, tm in parts.items()}


def lie_to_json(e, alphabet=None):
    from .hall import tree_to_json
    return {"weight": e.weight,
            "terms": [[c, tree_to_json(t, alphabet)] for t, c in e.sorted_terms()]}


def lie_from_json(obj, alphabet=None):
    from .hall import tree_from_json
    weight = int(obj["weight"])
    out = LieElement.zero(weight)
    for c, tj in obj["terms"]:
        t = tree_from_json(tj, alphabet)
        if t.weight != weight:
            raise ValueError("tree of weight %d in weight-%d element" % (t.weight, weight))
        if is_basic(t):
            out = out + LieElement.from_tree(t, int(c))
        else:
            out = out + tree_to_lie(t).scale(int(c))
    return out


def random_like(weight, n, rng, coeff_range=(-3, 3)):
    """Small pseudo-random element, for tests; deterministic given the rng."""
    basis = hall_basis(weight, n)
    tm = {}
    for t in basis:
        c = rng.randint(*coeff_range)
        if c:
            tm[t] = c
    return LieElement(weight, tm)
