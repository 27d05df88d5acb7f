"""Graded Lie ring ideals with group-word lifts, and quotient normal forms.

A graded ideal is generated by homogeneous elements, each paired with a group
word whose leading Lie term is that element.  The weight-k span is built
inductively: generator vectors of weight k together with brackets of the
weight-(k-1) spanning set against all weight-1 leaves, each new spanning
vector inheriting the lift [lift, generator].

When every generator is concentrated in a single leaf multidegree the spans
split into independent multidegree blocks, which keeps the row reduction
small even at weight 5 on six letters.
"""

import threading

from .hall import hall_index, basis_block, witt
from .intlinalg import IntLattice, smith_divisors
from .lie import LieElement, bracket
from .words import Word, commutator


class QuotientClass:
    """Canonical representative of a Lie element modulo a graded ideal."""

    __slots__ = ("weight", "vector", "quotient_rank", "torsion")

    def __init__(self, weight, vector, quotient_rank, torsion):
        object.__setattr__(self, "weight", weight)
        object.__setattr__(self, "vector", vector)
        object.__setattr__(self, "quotient_rank", quotient_rank)
        object.__setattr__(self, "torsion", tuple(torsion))

    def __setattr__(self, *a):
        raise AttributeError("QuotientClass is immutable")

    def is_zero(self):
        return self.vector.is_zero()

    def __eq__(self, other):
        return (isinstance(other, QuotientClass) and self.weight == other.weight
                and self.vector == other.vector)

    def __hash__(self):
        return hash((self.weight, self.vector))

    def __repr__(self):
        return "QuotientClass(%r, rank=%d%s)" % (
            self.vector, self.quotient_rank,
            ", torsion=%r" % (self.torsion,) if self.torsion else "")


class _Level:
    __slots__ = ("spanning", "lattices", "rank", "torsion")

    def __init__(self):
        self.spanning = []      # (LieElement, lift Word), an independent set
        self.lattices = {}      # multidegree signature (or None) -> IntLattice
        self.rank = 0
        self.torsion = ()


class GradedIdeal:
    """Ideal of the free Lie ring on an ordered alphabet, with lifts."""

    def __init__(self, alphabet, generators):
        self.alphabet = alphabet
        self.n = len(alphabet)
        gens = []
        for e, lift in generators:
            if e.is_zero():
                raise ValueError("zero ideal generator")
            if not isinstance(lift, Word) or lift.alphabet != alphabet:
                raise ValueError("generator lift must be a word over the alphabet")
            gens.append((e, lift))
        self.generators = tuple(gens)
        self.min_weight = min(e.weight for e, _ in gens) if gens else 1
        # one multidegree per generator lets spans split into blocks
        self.blocked = all(len({t.mdeg for t in e.terms}) == 1 for e, _ in gens)
        self._levels = {}
        self._lock = threading.RLock()

    def _sig_of(self, tree):
        return tree.mdeg if self.blocked else None

    def _block_columns(self, k, sig):
        if sig is None:
            return hall_index(k, self.n)
        return {t: i for i, t in enumerate(basis_block(k, self.n, sig))}

    def _coords(self, k, sig, terms):
        cols = self._block_columns(k, sig)
        vec = [0] * len(cols)
        for t, c in terms:
            vec[cols[t]] = c
        return vec

    def level(self, k):
        """Build (and cache) the weight-k span; levels build bottom-up."""
        with self._lock:
            for kk in range(1, k + 1):
                if kk in self._levels:
                    continue
                self._levels[kk] = self._build_level(kk)
            return self._levels[k]

    def _build_level(self, k):
        lv = _Level()
        candidates = [(e, lift) for e, lift in self.generators if e.weight == k]
        if k > 1:
            prev = self._levels.get(k - 1)
            if prev is not None:
                for v, lift in prev.spanning:
                    for i in range(self.n):
                        leaf = LieElement.generator(i)
                        bv = bracket(v, leaf)
                        if bv.is_zero():
                            continue
                        blift = commutator(lift, Word(self.alphabet, (i + 1,)))
                        candidates.append((bv, blift))
        for e, lift in candidates:
            # keep exactly the candidates that enlarge the span lattice, so
            # the kept lifts always generate it over the integers
            if self._insert(lv, k, e, len(lv.spanning)):
                lv.spanning.append((e, lift))
        lv.rank = sum(lat.rank for lat in lv.lattices.values())
        divisors = []
        for lat in lv.lattices.values():
            divisors.extend(d for d in smith_divisors(lat.matrix()) if d != 1)
        lv.torsion = tuple(sorted(divisors))
        return lv

    def _insert(self, lv, k, e, tag):
        by_sig = {}
        for t, c in e.terms.items():
            by_sig.setdefault(self._sig_of(t), []).append((t, c))
        changed = False
        for sig, terms in by_sig.items():
            lat = lv.lattices.get(sig)
            if lat is None:
                lat = IntLattice(len(self._block_columns(k, sig)), track=True)
                lv.lattices[sig] = lat
            if lat.add(self._coords(k, sig, terms), tag):
                changed = True
        return changed

    def span(self, k):
        """The independent spanning set [(LieElement, lift)] at weight k."""
        return list(self.level(k).spanning)

    def span_rank(self, k):
        return self.level(k).rank

    def quotient_rank(self, k):
        return witt(k, self.n) - self.level(k).rank

    def reduce(self, e):
        """Canonical normal form of e modulo the weight-(e.weight) span."""
        k = e.weight
        lv = self.level(k)
        by_sig = {}
        for t, c in e.terms.items():
            by_sig.setdefault(self._sig_of(t), []).append((t, c))
        out = {}
        for sig, terms in by_sig.items():
            lat = lv.lattices.get(sig)
            if lat is None:
                out.update(terms)
                continue
            cols = self._block_columns(k, sig)
            back = {i: t for t, i in cols.items()}
            red = lat.reduce_mod(self._coords(k, sig, terms))
            for i, c in enumerate(red):
                if c:
                    out[back[i]] = c
        return QuotientClass(k, LieElement(k, out), self.quotient_rank(k),
                             lv.torsion)

    def solve_in_span(self, e):
        """Integer combination of spanning vectors equal to e, with lifts.

        Returns [(coeff, lift)] or None when e is not in the integer span.
        """
        k = e.weight
        lv = self.level(k)
        by_sig = {}
        for t, c in e.terms.items():
            by_sig.setdefault(self._sig_of(t), []).append((t, c))
        acc = {}
        for sig, terms in by_sig.items():
            lat = lv.lattices.get(sig)
            if lat is None:
                return None
            combo = lat.member_combo(self._coords(k, sig, terms))
            if combo is None:
                return None
            for tag, c in combo.items():
                acc[tag] = acc.get(tag, 0) + c
        out = []
        for tag in sorted(acc):
            c = acc[tag]
            if c:
                out.append((c, lv.spanning[tag][1]))
        return out


def ideal_extend(ideal, k):
    """Functional alias for GradedIdeal.span."""
    return ideal.span(k)


def quotient_reduce(e, ideal):
    """Functional alias for GradedIdeal.reduce."""
    return ideal.reduce(e)
