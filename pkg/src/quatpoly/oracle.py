"""Independent semantic verification: exact quaternion arithmetic, the
evaluation homomorphism, randomized zero testing, a graded rank oracle for
counting normal words, and the corpus of algebraic identities that every
claimed rule family must annihilate.

Zero testing is probabilistic evidence; reduction to the zero normal form
is the syntactic certificate.  The two routes are kept independent so each
can catch the other out.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .freealg import (
    Polynomial,
    Scalar,
    bracket,
    bracket3,
    cross,
    inner,
    vector_part,
)
from .rewrite import RuleSet, is_normal_factorfree, is_normal_structural


class Quaternion:
    """Exact quaternion a + b*i + c*j + d*k over the rationals."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.c = Fraction(c)
        self.d = Fraction(d)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Quaternion(self.a * other, self.b * other, self.c * other, self.d * other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = other.a, other.b, other.c, other.d
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __add__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __sub__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def __neg__(self):
        return Quaternion(-self.a, -self.b, -self.c, -self.d)

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.a, -self.b, -self.c, -self.d)

    def is_real(self) -> bool:
        return not (self.b or self.c or self.d)

    def is_pure_imaginary(self) -> bool:
        return not self.a

    def __bool__(self):
        return bool(self.a or self.b or self.c or self.d)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Quaternion(other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        return (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d)

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def __repr__(self):
        return "Quaternion(%s, %s, %s, %s)" % (self.a, self.b, self.c, self.d)

    def __str__(self):
        return "(%s, %s, %s, %s)" % (self.a, self.b, self.c, self.d)


ONE = Quaternion(1)
I = Quaternion(0, 1)
J = Quaternion(0, 0, 1)
K = Quaternion(0, 0, 0, 1)


def qmul(x: Quaternion, y: Quaternion) -> Quaternion:
    return x * y


def qconj(x: Quaternion) -> Quaternion:
    return x.conjugate()


@dataclass(frozen=True)
class Assignment:
    """Concrete values for letters: vector letters get pure-imaginary
    quaternions, scalar symbols get rationals."""

    vectors: dict = field(default_factory=dict)
    scalars: dict = field(default_factory=dict)

    def __post_init__(self):
        for i, q in self.vectors.items():
            if not q.is_pure_imaginary():
                raise ValueError("vector v%d assigned a non-pure-imaginary value %s" % (i, q))

    def __str__(self):
        vs = ", ".join(
            "v%d=%s" % (i, self.vectors[i]) for i in sorted(self.vectors)
        )
        ss = ", ".join("s%d=%s" % (i, self.scalars[i]) for i in sorted(self.scalars))
        return "; ".join(x for x in (vs, ss) if x)


def _coeff_value(c, scalars) -> Fraction:
    if isinstance(c, Scalar):
        try:
            return c.substitute(scalars)
        except KeyError as exc:
            raise ValueError("unassigned scalar symbol s%s" % exc.args[0]) from None
    return c


def evaluate(p: Polynomial, assignment: Assignment) -> Quaternion:
    """Ring homomorphism sending each letter to its assigned value; the
    empty word maps to 1."""
    total = Quaternion()
    for w, c in p.terms.items():
        value = ONE
        for letter in w:
            try:
                value = value * assignment.vectors[letter]
            except KeyError:
                raise ValueError("unassigned variable v%d" % letter) from None
        total = total + value * _coeff_value(c, assignment.scalars)
    return total


def random_assignment(n: int, seed: int) -> Assignment:
    """Deterministic assignment: vector coordinates are integers in
    [-9, 9], redrawn if all zero; scalar symbols get integers in the same
    range."""
    rng = random.Random(seed)
    vectors = {}
    for i in range(1, n + 1):
        while True:
            b, c, d = (rng.randint(-9, 9) for _ in range(3))
            if b or c or d:
                break
        vectors[i] = Quaternion(0, b, c, d)
    scalars = {i: Fraction(rng.randint(-9, 9)) for i in range(1, n + 1)}
    return Assignment(vectors, scalars)


@dataclass(frozen=True)
class ZeroTestResult:
    passed: bool
    trials: int
    witness_trial: int | None = None
    witness: Assignment | None = None
    value: Quaternion | None = None

    def __bool__(self):
        return self.passed


def _integer_terms(p: Polynomial):
    """Terms of ``p`` scaled by the common coefficient denominator."""
    den = 1
    for c in p.terms.values():
        if isinstance(c, Scalar):
            for q in c.terms.values():
                den = lcm(den, q.denominator)
        else:
            den = lcm(den, c.denominator)
    return [(w, c * den) for w, c in p.terms.items()]


def _evaluate_int(terms, vecs, scals):
    """Evaluate integer-coefficient terms at integer assignments using
    plain int arithmetic; returns a coordinate 4-tuple."""
    ta = tb = tc = td = 0
    for w, coeff in terms:
        if isinstance(coeff, Scalar):
            cv = int(coeff.substitute(scals))
        else:
            cv = int(coeff)
        if not cv:
            continue
        a, b, c, d = 1, 0, 0, 0
        for letter in w:
            e, f, g = vecs[letter]
            a, b, c, d = (
                -b * e - c * f - d * g,
                a * e + c * g - d * f,
                a * f - b * g + d * e,
                a * g + b * f - c * e,
            )
        ta += cv * a
        tb += cv * b
        tc += cv * c
        td += cv * d
    return ta, tb, tc, td


def zero_test(p: Polynomial, trials: int = 100, seed: int = 0, n: int | None = None) -> ZeroTestResult:
    """Evaluate ``p`` exactly at ``trials`` seeded assignments; returns the
    first nonzero witness or a pass verdict.  Trial t uses
    ``random_assignment(n, seed + t)``."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if n is None:
        n = max(p.variables() | p.scalar_symbols(), default=0)
    terms = _integer_terms(p)
    for t in range(trials):
        assignment = random_assignment(n, seed + t)
        vecs = {i: (int(q.b), int(q.c), int(q.d)) for i, q in assignment.vectors.items()}
        scals = {i: int(v) for i, v in assignment.scalars.items()}
        if any(_evaluate_int(terms, vecs, scals)):
            return ZeroTestResult(False, trials, t, assignment, evaluate(p, assignment))
    return ZeroTestResult(True, trials)


def _rank_int(rows) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pval = rows[rank][col]
        prow = rows[rank]
        for r in range(rank + 1, len(rows)):
            row = rows[r]
            x = row[col]
            for cc in range(col, ncols):
                row[cc] = (row[cc] * pval - x * prow[cc]) // prev
        prev = pval
        rank += 1
        if rank == len(rows):
            break
    return rank


@dataclass(frozen=True)
class DimensionReport:
    n: int
    degree: int
    mode: str
    total_words: int
    rank: int
    normal_by_rank: int
    normal_factorfree: int
    normal_structural: int

    @property
    def ok(self) -> bool:
        return self.normal_by_rank == self.normal_factorfree == self.normal_structural


def _generator_polys(generators):
    out = []
    for g in generators:
        p = g if isinstance(g, Polynomial) else g.element
        if p:
            out.append(p)
    return out


def _row_for(p: Polynomial, left, right, col_index):
    row = [0] * len(col_index)
    den = 1
    for c in p.terms.values():
        den = lcm(den, c.denominator)
    for w, c in p.terms.items():
        col = col_index.get(left + w + right)
        if col is None:
            return None
        row[col] += int(c * den)
    return row


def dimension_check(
    n: int,
    d: int,
    generators,
    base: RuleSet,
    multiset: tuple | None = None,
    guard: int = 10000,
) -> DimensionReport:
    """Count normal words of degree ``d`` three independent ways.

    The rank route spans the degree-``d`` slice of the two-sided ideal by
    all products left*g*right and subtracts its exact rank from the word
    count; the other two routes count words passing the factor-free and
    the structural normality predicates.  With ``multiset`` the slice is
    restricted to permutation words of that letter multiset.
    """
    gens = _generator_polys(generators)
    alphabet = range(1, n + 1)
    if multiset is None:
        mode = "general"
        if n**d > guard:
            raise ValueError("n^d = %d exceeds the dense-rank guard %d" % (n**d, guard))
        words = [w for w in itertools.product(alphabet, repeat=d)]
    else:
        multiset = tuple(sorted(multiset))
        if len(multiset) != d:
            raise ValueError("multiset size %d != degree %d" % (len(multiset), d))
        words = sorted(set(itertools.permutations(multiset)))
        if len(words) > guard:
            raise ValueError("permutation count exceeds the dense-rank guard")
        mode = "multilinear" if len(set(multiset)) == len(multiset) else "general"

    col_index = {w: i for i, w in enumerate(words)}
    rows = []
    if multiset is None:
        for g in gens:
            dg = g.degree()
            if dg > d:
                continue
            for la in range(d - dg + 1):
                lb = d - dg - la
                for left in itertools.product(alphabet, repeat=la):
                    for right in itertools.product(alphabet, repeat=lb):
                        row = _row_for(g, left, right, col_index)
                        if row is not None:
                            rows.append(row)
    else:
        from collections import Counter

        target = Counter(multiset)
        for g in gens:
            mds = g.multidegree()
            if len(mds) != 1:
                raise ValueError("generator is not multiset-homogeneous")
            gset = Counter(next(iter(mds)))
            if gset - target:
                continue
            rest = list((target - gset).elements())
            seen = set()
            for perm in set(itertools.permutations(rest)):
                for cut in range(len(perm) + 1):
                    pair = (perm[:cut], perm[cut:])
                    if pair in seen:
                        continue
                    seen.add(pair)
                    row = _row_for(g, pair[0], pair[1], col_index)
                    if row is not None:
                        rows.append(row)

    rank = _rank_int(rows)
    ff = sum(1 for w in words if is_normal_factorfree(w, base))
    st = sum(1 for w in words if is_normal_structural(w, mode))
    return DimensionReport(n, d, mode, len(words), rank, len(words) - rank, ff, st)


# ---------------------------------------------------------------------------
# identity corpus
# ---------------------------------------------------------------------------


def _index_patterns(k: int, cap: int = 60, samples: int = 10, seed: int = 0):
    """Index tuples covering coincidence patterns of k slots: every
    restricted-growth tuple when there are at most ``cap``, otherwise the
    all-distinct tuple plus seeded random draws."""
    patterns = []

    def grow(prefix, mx):
        if len(patterns) > cap:
            return
        if len(prefix) == k:
            patterns.append(tuple(prefix))
            return
        for v in range(1, mx + 2):
            grow(prefix + [v], max(mx, v))

    grow([], 0)
    if len(patterns) <= cap:
        return patterns
    rng = random.Random(seed)
    out = [tuple(range(1, k + 1))]
    seen = set(out)
    while len(out) < samples + 1:
        t = tuple(rng.randint(1, k) for _ in range(k))
        if t not in seen:
            seen.add(t)
            out.append(t)
    return out


def _perm_sign(positions) -> int:
    inv = 0
    for a in range(len(positions)):
        for b in range(a + 1, len(positions)):
            if positions[a] > positions[b]:
                inv += 1
    return -1 if inv % 2 else 1


def _v(i: int) -> Polynomial:
    return Polynomial.variable(i)


def _pw(*letters) -> Polynomial:
    return Polynomial.from_word(letters)


def _expand_even_inner(w) -> Polynomial:
    """Pair the first letter with each later one, bracket the rest."""
    out = Polynomial()
    k = len(w)
    for i in range(2, k + 1):
        pair = bracket((w[0], w[i - 1]))
        rest = w[1 : i - 1] + w[i:]
        sign = 1 if i % 2 == 0 else -1
        out = out + (pair * bracket(rest)).scale(sign)
    return out


def _bipartitions(w, first_len: int):
    """All order-preserving splits of ``w`` into subsequences of sizes
    (first_len, rest), with the permutation sign of the reordering."""
    k = len(w)
    for sel in itertools.combinations(range(k), first_len):
        rest = tuple(i for i in range(k) if i not in sel)
        sign = _perm_sign(sel + rest)
        yield tuple(w[i] for i in sel), tuple(w[i] for i in rest), sign


def _expand_odd_vector(w) -> Polynomial:
    out = Polynomial()
    for part1, part2, sign in _bipartitions(w, len(w) - 1):
        out = out + (bracket(part1) * _pw(*part2)).scale(sign)
    return out


def _expand_even_vector(w) -> Polynomial:
    out = Polynomial()
    for part1, part2, sign in _bipartitions(w, len(w) - 2):
        out = out + (bracket(part1) * vector_part(part2)).scale(sign)
    return out


def _expand_odd_inner(w) -> Polynomial:
    out = Polynomial()
    for part1, part2, sign in _bipartitions(w, len(w) - 3):
        out = out + (bracket(part1) * bracket(part2)).scale(sign)
    return out


def _random_word(rng, length: int, n: int = 6):
    return tuple(rng.randint(1, n) for _ in range(length))


def identity_corpus():
    """Named polynomials, each expected to normalize and evaluate to zero.

    The instantiations cover every index-coincidence pattern where that
    stays small and seeded random draws where it would not; instance
    families are closed under letter relabeling, so patterns exhaust the
    membership behavior.
    """
    items = []

    def add(name, p):
        if p:
            items.append((name, p))

    def tag(name, idx):
        return "%s[%s]" % (name, ",".join(str(i) for i in idx))

    half = Fraction(1, 2)

    # squared letters slide through: vi*vi*vj - vj*vi*vi
    for i, j in _index_patterns(2):
        add(tag("eq7", (i, j)), _pw(i, i, j) - _pw(j, i, i))

    # four-point expansion of a triple bracket against a fourth letter
    for i, j, k, l in _index_patterns(4):
        p = (
            bracket3(_v(i), _v(j), _v(k)) * _v(l)
            - bracket3(_v(i), _v(j), _v(l)) * _v(k)
            + bracket3(_v(i), _v(k), _v(l)) * _v(j)
            - _v(i) * bracket3(_v(j), _v(k), _v(l))
        )
        add(tag("cramer1", (i, j, k, l)), p)

    # cross/inner recombinations, plus their raw-word forms
    for i, j, k in _index_patterns(3):
        lhs = cross(cross(_v(i), _v(j)), _v(k))
        add(
            tag("eq9-line1", (i, j, k)),
            lhs - inner(_v(j), _v(k)) * _v(i) + inner(_v(i), _v(k)) * _v(j),
        )
        add(
            tag("eq9-line1-alt", (i, j, k)),
            lhs - (_pw(i, j, k) - _pw(k, i, j)) * half,
        )
    for i, j, k, l in _index_patterns(4):
        lhs = inner(cross(_v(i), _v(j)), cross(_v(k), _v(l)))
        add(
            tag("eq9-line2", (i, j, k, l)),
            lhs
            - inner(_v(i), _v(l)) * inner(_v(j), _v(k))
            + inner(_v(i), _v(k)) * inner(_v(j), _v(l)),
        )
        add(
            tag("eq9-line2-alt", (i, j, k, l)),
            lhs - bracket3(_v(i), _v(j), cross(_v(k), _v(l))),
        )
        lhs3 = cross(cross(_v(i), _v(j)), cross(_v(k), _v(l)))
        add(
            tag("eq9-line3", (i, j, k, l)),
            lhs3
            - bracket3(_v(j), _v(k), _v(l)) * _v(i)
            + bracket3(_v(i), _v(k), _v(l)) * _v(j),
        )
        add(
            tag("eq9-line3-alt", (i, j, k, l)),
            lhs3 - (_pw(i, j, k, l) - _pw(k, l, i, j)) * half,
        )

    # five-point expansion with a cross-product slot
    for i, j, k, l, m in _index_patterns(5):
        cij = cross(_v(i), _v(j))
        p = (
            bracket3(cij, _v(k), _v(l)) * _v(m)
            - bracket3(cij, _v(k), _v(m)) * _v(l)
            + bracket3(cij, _v(l), _v(m)) * _v(k)
            - bracket3(_v(k), _v(l), _v(m)) * cij
        )
        add(tag("cramer2", (i, j, k, l, m)), p)

    # graded expansions of brackets and vector parts
    for length in (4, 6):
        for idx in _index_patterns(length):
            add(tag("eq13-even-inner", idx), bracket(idx) - _expand_even_inner(idx))
            add(tag("eq13-even-vector", idx), vector_part(idx) - _expand_even_vector(idx))
    for idx in _index_patterns(3):
        add(tag("eq13-odd-vector", idx), vector_part(idx) - _expand_odd_vector(idx))
    for idx in _index_patterns(5):
        add(tag("eq13-odd-vector", idx), vector_part(idx) - _expand_odd_vector(idx))
        add(tag("eq13-odd-inner", idx), bracket(idx) - _expand_odd_inner(idx))

    # the two-variable quartic witness
    q = (_pw(1, 2, 1, 2) + _pw(2, 1, 2, 1) - _pw(1, 1, 2, 2).scale(2)) * Fraction(1, 4)
    add("eq14", bracket3(cross(_v(1), _v(2)), _v(1), _v(2)) - q)

    # product of two triple brackets against a 3x3 inner-product determinant
    for idx in _index_patterns(6):
        a, b, c, d, e, f = (_v(i) for i in idx)
        lhs = bracket3(a, b, c) * bracket3(d, e, f)
        det = Polynomial()
        m = [[inner(x, y) for y in (d, e, f)] for x in (a, b, c)]
        for perm in itertools.permutations(range(3)):
            sign = _perm_sign(perm)
            det = det + (m[0][perm[0]] * m[1][perm[1]] * m[2][perm[2]]).scale(sign)
        add(tag("lemma1", idx), lhs + det)

    # shift invariance of the bracket under rotating one letter across
    rng = random.Random(0)
    for length in range(1, 6):
        for t in range(3):
            w = _random_word(rng, length)
            i = rng.randint(1, 6)
            add(
                "prop1-shift[len%d-%d]" % (length, t),
                bracket((i,) + w) - bracket(w + (i,)),
            )

    # left multiple of a degree-3 rule element
    add("step3a", _pw(4) * (_pw(3, 2, 1) - _pw(1, 2, 3) - _pw(1, 3, 2) + _pw(2, 3, 1)))
    add("step3b", _pw(4) * (_pw(3, 1, 2) - _pw(2, 1, 3) - _pw(2, 3, 1) + _pw(1, 3, 2)))

    # hand-reduced case polynomials, five and six letters
    for perm in itertools.permutations((1, 2, 3)):
        s1, s2, s3 = perm
        h = _pw(5, s1) * (
            _pw(4, s2, s3) + _pw(s2, 4, s3) - _pw(s3, 4, s2) - _pw(s3, s2, 4)
        )
        add(tag("step11", perm), h)
    for q_, w_, y in ((5, 5, (4,)), (5, 4, (5,)), (6, 6, (4, 5)), (6, 5, (4, 6)), (6, 4, (5, 6))):
        sq = 1 if q_ % 2 == 0 else -1
        yr = y[::-1]
        h = _pw(w_) * (
            _pw(3, 2, *y, 1)
            + _pw(3, 1, *yr, 2).scale(sq)
            - _pw(1, *yr, 2, 3).scale(sq)
            - _pw(2, *y, 1, 3)
        )
        add("step12[q%d-w%d]" % (q_, w_), h)
    add(
        "step13[q6]",
        _pw(4, 3, 5)
        * (_pw(6, 2, 1) - _pw(1, 2, 6) - _pw(1, 6, 2) + _pw(2, 6, 1)),
    )
    add(
        "step14[q5]",
        _pw(3, 2) * (_pw(5, 1, 4) - _pw(4, 1, 5) - _pw(4, 5, 1) + _pw(1, 5, 4)),
    )
    add(
        "step15[q6]",
        _pw(3, 2, 4) * (_pw(6, 1, 5) - _pw(5, 1, 6) - _pw(5, 6, 1) + _pw(1, 6, 5)),
    )

    # commutation of even/odd symmetrized words, and the reversed-pair form
    rng = random.Random(1)
    for j in range(1, 6):
        for k in range(1, 7 - j):
            for t in range(2):
                wj = _random_word(rng, j)
                wk = _random_word(rng, k)
                sk = 1 if k % 2 == 0 else -1
                sym = _pw(*wk) + _pw(*wk[::-1]).scale(sk)
                add(
                    "eq25a[j%d-k%d-%d]" % (j, k, t),
                    sym * _pw(*wj) - _pw(*wj) * sym,
                )
                sjk = 1 if (j + k) % 2 == 0 else -1
                com = _pw(*wj) * _pw(*wk) - _pw(*wk) * _pw(*wj)
                com_rev = _pw(*wj[::-1]) * _pw(*wk[::-1]) - _pw(*wk[::-1]) * _pw(*wj[::-1])
                add("eq25b[j%d-k%d-%d]" % (j, k, t), com - com_rev.scale(sjk))

    # pushing a high letter across a low pair
    rng = random.Random(2)
    for a in range(4):
        for t in range(5):
            i1 = rng.randint(1, 2)
            i2 = rng.randint(1, 2)
            i3 = rng.randint(3, 6)
            body = tuple(rng.randint(3, 6) for _ in range(a))
            sa = 1 if a % 2 == 0 else -1
            lhs = _pw(i3, *body, i1, i2)
            rhs = (
                _pw(i2, *body, i1, i3)
                + _pw(i2, i3, i1, *body[::-1]).scale(sa)
                - _pw(i1, *body[::-1], i3, i2).scale(sa)
            )
            add("eq26[a%d-%d]" % (a, t), lhs - rhs)

    return items
