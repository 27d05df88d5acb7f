"""Symplectic homology of the surface: the intersection form, integer
symplectic matrices, Lagrangian subspaces, basis adaptation, and the
homology-level extension obstructions.

Coordinates are always (alpha_1..alpha_g, beta_1..beta_g), in which the form
has Gram matrix J = [[0, I], [-I, 0]].
"""

from fractions import Fraction

from sympy import Poly, symbols

from .errors import (DimensionMismatchError, GenusTooLargeError, InternalFault,
                     NotDirectSummandError, NotIsotropicError, PreconditionError)
from .intlinalg import (IntLattice, bareiss_det, charpoly, hermite_rows,
                        identity_matrix, int_kernel_basis, mat_mul, mat_vec,
                        poly_eval_matrix, rref_fractions, saturate_rows,
                        smith_divisors, transpose)


def gram_matrix(g):
    j = [[0] * (2 * g) for _ in range(2 * g)]
    for i in range(g):
        j[i][g + i] = 1
        j[g + i][i] = -1
    return j


def omega(u, v):
    """Algebraic intersection pairing in the standard symplectic basis."""
    if len(u) != len(v) or len(u) % 2:
        raise DimensionMismatchError("vectors must share an even dimension",
                                     lengths=(len(u), len(v)))
    g = len(u) // 2
    return sum(u[i] * v[g + i] - u[g + i] * v[i] for i in range(g))


def is_symplectic(m):
    """True iff M^T J M = J."""
    n = len(m)
    if n % 2 or any(len(r) != n for r in m):
        return False
    j = gram_matrix(n // 2)
    return mat_mul(transpose(m), mat_mul(j, m)) == j


def eigen_pm1_condition(m):
    """Necessary homology condition for extension: +1 or -1 is an eigenvalue.

    Any extension forces an invariant primitive vector with eigenvalue +-1 in
    genus one, so failing this certifies non-extension at the H_1 level.
    """
    if not is_symplectic(m):
        raise PreconditionError("matrix is not symplectic")
    n = len(m)
    m_minus = [[m[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)]
    m_plus = [[m[i][j] + (1 if i == j else 0) for j in range(n)] for i in range(n)]
    return bareiss_det(m_minus) == 0 or bareiss_det(m_plus) == 0


class Lagrangian:
    """Rank-g isotropic direct summand of Z^{2g}, stored by its canonical
    Hermite-form spanning rows so equality is equality of subspaces."""

    __slots__ = ("genus", "rows")

    def __init__(self, genus, spanning_rows):
        rows = [list(map(int, r)) for r in spanning_rows]
        if any(len(r) != 2 * genus for r in rows):
            raise DimensionMismatchError("spanning vectors must have length 2g")
        for i in range(len(rows)):
            for j in range(i + 1, len(rows)):
                if omega(rows[i], rows[j]) != 0:
                    raise NotIsotropicError(
                        "spanning vectors %d and %d pair nontrivially" % (i, j))
        canon = hermite_rows(rows, 2 * genus)
        if len(canon) != genus:
            raise NotDirectSummandError(
                "spanning set has rank %d, expected %d" % (len(canon), genus))
        if any(d != 1 for d in smith_divisors(canon)):
            raise NotDirectSummandError(
                "span is not a direct summand (non-unit elementary divisors)")
        object.__setattr__(self, "genus", genus)
        object.__setattr__(self, "rows", tuple(tuple(r) for r in canon))

    def __setattr__(self, *a):
        raise AttributeError("Lagrangian is immutable")

    def __eq__(self, other):
        return (isinstance(other, Lagrangian) and self.genus == other.genus
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.genus, self.rows))

    def __repr__(self):
        return "Lagrangian(g=%d, %r)" % (self.genus, [list(r) for r in self.rows])

    @staticmethod
    def standard(genus):
        """span{alpha_1..alpha_g}."""
        rows = [[1 if j == i else 0 for j in range(2 * genus)] for i in range(genus)]
        return Lagrangian(genus, rows)

    @staticmethod
    def coordinate(genus, beta_indices):
        """One of alpha_i / beta_i per index; beta_indices lists the i with beta."""
        chosen = set(beta_indices)
        rows = []
        for i in range(genus):
            col = (genus + i) if i in chosen else i
            rows.append([1 if j == col else 0 for j in range(2 * genus)])
        return Lagrangian(genus, rows)


def is_invariant(m, lagrangian):
    """True iff M maps the rational span of the Lagrangian into itself."""
    rows = [list(r) for r in lagrangian.rows]
    if len(m) != 2 * lagrangian.genus:
        raise DimensionMismatchError("matrix size does not match the genus")
    pivcols, rref = rref_fractions(rows)
    for r in rows:
        img = mat_vec(m, r)
        img = [Fraction(v) for v in img]
        for pc, rr in zip(pivcols, rref):
            if img[pc]:
                f = img[pc]
                img = [v - f * w for v, w in zip(img, rr)]
        if any(img):
            return False
    return True


def adapt_symplectic_basis(lagrangian):
    """An integer symplectic matrix whose first g columns span the Lagrangian.

    The x-side is the canonical Hermite basis of the subspace; the y-side is
    the deterministic integer solution of the duality equations, corrected to
    be isotropic.  Column pivots are processed in index order, so the output
    is reproducible.
    """
    g = lagrangian.genus
    n = 2 * g
    x_rows = [list(r) for r in lagrangian.rows]
    j = gram_matrix(g)
    # pairing matrix: A[i][m] = omega(x_i, e_m) = (J^T x_i)_m
    a = [mat_vec(transpose(j), x) for x in x_rows]
    lat = IntLattice(g, track=True)
    for mcol in range(n):
        lat.add([a[i][mcol] for i in range(g)], tag=mcol)
    ys = []
    for jcol in range(g):
        target = [1 if i == jcol else 0 for i in range(g)]
        combo = lat.member_combo(target)
        if combo is None:
            raise NotDirectSummandError(
                "duality system has no integer solution; span is not primitive")
        y = [0] * n
        for mcol, c in combo.items():
            y[mcol] += c
        ys.append(y)
    # isotropize the y side: y_j += sum_{i<j} omega(y_i, y_j) x_i
    pair = [[omega(ys[i], ys[jj]) for jj in range(g)] for i in range(g)]
    for jj in range(g):
        for i in range(jj):
            d = pair[i][jj]
            if d:
                ys[jj] = [yv + d * xv for yv, xv in zip(ys[jj], x_rows[i])]
    s = [[0] * n for _ in range(n)]
    for col in range(g):
        for row in range(n):
            s[row][col] = x_rows[col][row]
            s[row][g + col] = ys[col][row]
    if not is_symplectic(s):
        raise InternalFault("adapted basis failed the symplectic identity")
    return s


# --- arithmetic in Q[x]/(p) for the conjugate-pair isotropy certificate ---

def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1) if p and q else []
    for i, a in enumerate(p):
        if a:
            for jj, b in enumerate(q):
                out[i + jj] += a * b
    return _poly_trim(out)


def _poly_divmod(p, q):
    p = [Fraction(v) for v in p]
    out = [Fraction(0)] * max(0, len(p) - len(q) + 1)
    while len(p) >= len(q) and p:
        f = p[-1] / q[-1]
        deg = len(p) - len(q)
        out[deg] = f
        for i, b in enumerate(q):
            p[deg + i] -= f * b
        _poly_trim(p)
    return _poly_trim(out), p


def _poly_sub(p, q):
    out = [Fraction(0)] * max(len(p), len(q))
    for i, v in enumerate(p):
        out[i] += v
    for i, v in enumerate(q):
        out[i] -= v
    return _poly_trim(out)


class _Field:
    """Q[x]/(p) with p monic irreducible; elements are coefficient lists."""

    def __init__(self, p_coeffs_low_first):
        self.p = [Fraction(v) for v in p_coeffs_low_first]
        self.deg = len(self.p) - 1

    def reduce(self, coeffs):
        _, r = _poly_divmod([Fraction(v) for v in coeffs], self.p)
        return r

    def mul(self, a, b):
        return self.reduce(_poly_mul(a, b))

    def add(self, a, b):
        out = [Fraction(0)] * max(len(a), len(b))
        for i, v in enumerate(a):
            out[i] += v
        for i, v in enumerate(b):
            out[i] += v
        return _poly_trim(out)

    def neg(self, a):
        return [-v for v in a]

    def inv(self, a):
        # extended Euclid in Q[x]
        r0, r1 = self.p[:], self.reduce(a)
        if not r1:
            raise ZeroDivisionError("inverting zero in the quotient field")
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        if len(r0) != 1:
            raise ZeroDivisionError("polynomial is not invertible (reducible modulus?)")
        c = r0[0]
        return self.reduce([v / c for v in s0])

    def x(self):
        return self.reduce([Fraction(0), Fraction(1)])

    def of_int(self, c):
        return self.reduce([Fraction(c)])

    def x_inverse(self):
        return self.inv(self.x())

    def subst(self, a, value):
        """a(value) for value an element of the field."""
        out = []
        for c in reversed(a):
            out = self.add(self.mul(out, value), [c])
        return out

    def to_str(self, a, var="z"):
        if not a:
            return "0"
        parts = []
        for i, c in enumerate(a):
            if c:
                if i == 0:
                    parts.append(str(c))
                elif i == 1:
                    parts.append("%s*%s" % (c, var))
                else:
                    parts.append("%s*%s^%d" % (c, var, i))
        return " + ".join(parts)


def _is_reciprocal(coeffs_high_first):
    n = len(coeffs_high_first) - 1
    return all(coeffs_high_first[i] == coeffs_high_first[n - i]
               for i in range(len(coeffs_high_first))) or all(
        coeffs_high_first[i] == -coeffs_high_first[n - i]
        for i in range(len(coeffs_high_first)))


def _eigenvector_over_field(m, field):
    """Nonzero v with (M - x I) v = 0 over Q[x]/(p), p a factor of charpoly."""
    n = len(m)
    x = field.x()
    rows = [[field.of_int(m[i][jcol]) for jcol in range(n)] for i in range(n)]
    for i in range(n):
        rows[i][i] = field.add(rows[i][i], field.neg(x))
    # Gaussian elimination over the field
    pivots = []
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, n):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [field.mul(inv, v) for v in rows[r]]
        for i in range(n):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [field.add(v, field.neg(field.mul(f, w)))
                           for v, w in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    if not free:
        raise InternalFault("no eigenvector over the factor field")
    v = [[] for _ in range(n)]
    fcol = free[0]
    v[fcol] = field.of_int(1)
    for rr, pc in enumerate(pivots):
        v[pc] = field.neg(rows[rr][fcol])
    return v


class PairCheck:
    """Exact isotropy certificate for the real 2-planes of one conjugate
    eigenvalue pair: records omega(v, v-bar) in the factor field."""

    __slots__ = ("factor", "value_str", "nonzero")

    def __init__(self, factor, value_str, nonzero):
        self.factor = factor
        self.value_str = value_str
        self.nonzero = nonzero

    def __repr__(self):
        return "PairCheck(factor=%s, omega(v, conj v)=%s, nonzero=%s)" % (
            self.factor, self.value_str, self.nonzero)


class SearchReport:
    __slots__ = ("found", "rational_eigenvalues", "candidates_tested",
                 "pair_checks", "notes")

    def __init__(self):
        self.found = None
        self.rational_eigenvalues = []
        self.candidates_tested = 0
        self.pair_checks = []
        self.notes = []


def invariant_lagrangian_search(m, bound=None):
    """Search for an M-invariant rational Lagrangian; None when exhausted.

    Candidates are assembled from generalized eigenspaces of the rational
    eigenvalues and from whole primary components of the other irreducible
    factors of the characteristic polynomial, then filtered by isotropy and
    saturation.  A returned Lagrangian is always genuinely invariant and
    Lagrangian; a None answer is exhaustive only over this candidate family.
    """
    return invariant_lagrangian_report(m, bound).found


def invariant_lagrangian_report(m, bound=None):
    if not is_symplectic(m):
        raise PreconditionError("matrix is not symplectic")
    n = len(m)
    g = n // 2
    if g > 3:
        raise GenusTooLargeError("search supports genus <= 3, got %d" % g)
    report = SearchReport()
    coeffs = charpoly(m)  # highest first
    xsym = symbols("x")
    poly = Poly(coeffs, xsym)
    _, factors = poly.factor_list()
    factors = sorted(((Poly(f, xsym), mult) for f, mult in factors),
                     key=lambda fm: (fm[0].degree(), fm[0].all_coeffs()))

    option_sets = []   # per factor: list of (dim, rows)
    for f, mult in factors:
        fdeg = f.degree()
        fc = [int(c) for c in f.all_coeffs()]  # highest first
        if fdeg == 1:
            root = -fc[1] // fc[0]
            report.rational_eigenvalues.append(root)
            options = [(0, [])]
            seen = set()
            shifted = [[m[i][jj] - (root if i == jj else 0) for jj in range(n)]
                       for i in range(n)]
            power = identity_matrix(n)
            for _lvl in range(mult):
                power = mat_mul(power, shifted)
                basis = int_kernel_basis(power, n)
                from itertools import combinations
                for size in range(1, len(basis) + 1):
                    for idxs in combinations(range(len(basis)), size):
                        rows = [basis[i] for i in idxs]
                        keyrows = tuple(map(tuple, hermite_rows(rows, n)))
                        if keyrows in seen:
                            continue
                        seen.add(keyrows)
                        options.append((len(keyrows), [list(r) for r in keyrows]))
            option_sets.append(options)
        else:
            pm = poly_eval_matrix(fc, m)
            power = identity_matrix(n)
            for _ in range(mult):
                power = mat_mul(power, pm)
            comp = int_kernel_basis(power, n)
            option_sets.append([(0, []), (len(comp), [list(r) for r in comp])])
            # certificate: the real 2-planes of a conjugate pair are isotropic
            # iff omega(v, v-bar) = 0; record the exact field value
            if _is_reciprocal(fc):
                low_first = [Fraction(c) for c in reversed(fc)]
                lead = low_first[-1]
                field = _Field([c / lead for c in low_first])
                v = _eigenvector_over_field(m, field)
                xinv = field.x_inverse()
                vbar = [field.subst(c, xinv) for c in v]
                s = []
                for i in range(g):
                    s = field.add(s, field.mul(v[i], vbar[g + i]))
                    s = field.add(s, field.neg(field.mul(v[g + i], vbar[i])))
                report.pair_checks.append(
                    PairCheck(str(f.as_expr()), field.to_str(s), bool(s)))
            else:
                report.notes.append(
                    "factor %s is not reciprocal; no pair certificate" % f.as_expr())

    from itertools import product as _prod
    for choice in _prod(*option_sets):
        total = sum(dim for dim, _ in choice)
        if total != g:
            continue
        rows = [r for _, rs in choice for r in rs]
        report.candidates_tested += 1
        if bound is not None and report.candidates_tested > bound:
            report.notes.append("candidate bound reached")
            break
        sat = saturate_rows(rows, n)
        if len(sat) != g:
            continue
        ok = True
        for i in range(g):
            for jj in range(i + 1, g):
                if omega(sat[i], sat[jj]) != 0:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        lag = Lagrangian(g, sat)
        if not is_invariant(m, lag):
            continue
        report.found = lag
        return report
    return report
