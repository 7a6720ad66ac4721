"""Closed-form generator and rule families, parameterized by the number of
variables and a degree bound.

Families are tagged V2/V3/V4 (vector generators), Q0..Q4 (quaternionic
generators over the barred alphabet), G3/Gm (multilinear rules) and
VG3sq/VGm (the extra rules needed once letters may repeat).  Rule elements
are stored scaled by two, which makes them monic with integer tails.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .freealg import Polynomial
from .qvars import QPolynomial
from .rewrite import RewriteRule, RuleSet


@dataclass(frozen=True, eq=False)
class GeneratorFamily:
    """One instantiated family element."""

    family: str
    indices: tuple
    element: object  # Polynomial or QPolynomial
    variant: int = 0
    choices: tuple = ()

    def __repr__(self):
        extra = "" if not self.choices else ", choices=%r" % (self.choices,)
        return "GeneratorFamily(%s%r%s)" % (self.family, self.indices, extra)


def _w(*letters) -> Polynomial:
    return Polynomial.from_word(letters)


def gen_vector_syzygies(n: int):
    """All V2/V3/V4 instances over pairwise-distinct indices in 1..n."""
    if n < 2:
        raise ValueError("need at least two vector variables, got n=%d" % n)
    out = []
    rng = range(1, n + 1)
    for i, j in itertools.permutations(rng, 2):
        el = _w(i, i, j) - _w(j, i, i)
        out.append(GeneratorFamily("V2", (i, j), el))
    for i, j, k in itertools.permutations(rng, 3):
        sym = _w(i, j) + _w(j, i)
        el = sym * _w(k) - _w(k) * sym
        out.append(GeneratorFamily("V3", (i, j, k), el))
    for i, j, k, l in itertools.permutations(rng, 4):
        odd = _w(i, j, k) - _w(k, j, i)
        el = odd * _w(l) - _w(l) * odd
        out.append(GeneratorFamily("V4", (i, j, k, l), el))
    return out


def gen_multilinear_syzygies(n: int):
    """The generators that survive in the multilinear ring: the V3 and V4
    instances (squared letters never occur there)."""
    return [g for g in gen_vector_syzygies(n) if g.family in ("V3", "V4")]


def _q(*letters) -> QPolynomial:
    return QPolynomial.from_word(letters)


def gen_quaternion_syzygies(n: int):
    """All Q0..Q4 instances over the barred alphabet, with every choice of
    plain-or-barred letter where the family leaves it free."""
    if n < 2:
        raise ValueError("need at least two quaternionic variables, got n=%d" % n)
    out = []
    rng = range(1, n + 1)
    for i in rng:
        out.append(GeneratorFamily("Q0", (i,), _q(i, -i) - _q(-i, i)))
    for i, j in itertools.permutations(rng, 2):
        real = _q(i) + _q(-i)
        for bj in (0, 1):
            pj = _q(-j if bj else j)
            out.append(
                GeneratorFamily("Q1", (i, j), real * pj - pj * real, choices=(bj,))
            )
    for i, j in itertools.permutations(rng, 2):
        norm = _q(i, -i)
        for bj in (0, 1):
            pj = _q(-j if bj else j)
            out.append(
                GeneratorFamily("Q2", (i, j), norm * pj - pj * norm, choices=(bj,))
            )
    for i, j, k in itertools.permutations(rng, 3):
        for bits in itertools.product((0, 1), repeat=3):
            pi, pj, pk = (_q(-x if b else x) for x, b in zip((i, j, k), bits))
            pib, pjb = (_q(x if b else -x) for x, b in zip((i, j), bits[:2]))
            sym = pi * pj + pjb * pib
            out.append(
                GeneratorFamily("Q3", (i, j, k), sym * pk - pk * sym, choices=bits)
            )
    for i, j, k, l in itertools.permutations(rng, 4):
        for bits in itertools.product((0, 1), repeat=4):
            pi, pj, pk, pl = (_q(-x if b else x) for x, b in zip((i, j, k, l), bits))
            pib, pjb, pkb = (_q(x if b else -x) for x, b in zip((i, j, k), bits[:3]))
            sym = pi * pj * pk + pkb * pjb * pib
            out.append(
                GeneratorFamily("Q4", (i, j, k, l), sym * pl - pl * sym, choices=bits)
            )
    return out


def _bracket2(w) -> Polynomial:
    """Twice the conjugation-even half of a word: w + (-1)^deg reversed."""
    w = tuple(w)
    sign = 1 if len(w) % 2 == 0 else -1
    return Polynomial({w: 1}) + Polynomial({w[::-1]: sign})


def _rule(element: Polynomial, family: str, indices: tuple, variant: int = 0) -> RewriteRule:
    lc = element.leading_coeff()
    if lc != 1:
        raise AssertionError("family element is not monic: %s" % element)
    lead = element.leading_word()
    return RewriteRule(lead, Polynomial.from_word(lead) - element, family, indices, variant)


def _g3_elements(a: int, b: int, c: int):
    """The two degree-3 bracket-commutation elements for a < b < c."""
    yield _bracket2((c, b, a)) - _bracket2((a, c, b)), 0
    yield _bracket2((c, a, b)) - _bracket2((b, c, a)), 1


def _gm_element(idx: tuple) -> Polynomial:
    """The four-term commutation element for an index tuple of length >= 4."""
    i1, i2, i3 = idx[0], idx[1], idx[2]
    mid = idx[3:]
    w1 = (i3, i2) + mid + (i1,)
    w2 = (i2,) + mid + (i1, i3)
    return _bracket2(w1) - _bracket2(w2)


def gb_multilinear(n: int) -> RuleSet:
    """The reduced rule family for multilinear words in n variables:
    G3 pairs over strict triples and one Gm rule per strict m-tuple,
    4 <= m <= n."""
    if n < 3:
        raise ValueError("the multilinear family needs n >= 3, got %d" % n)
    rng = range(1, n + 1)
    rules = []
    for a, b, c in itertools.combinations(rng, 3):
        for el, variant in _g3_elements(a, b, c):
            rules.append(_rule(el, "G3", (a, b, c), variant))
    for m in range(4, n + 1):
        for idx in itertools.combinations(rng, m):
            rules.append(_rule(_gm_element(idx), "Gm", idx))
    return RuleSet(rules, degree_bound=n)


def _vg_index_chains(n: int, m: int):
    """Index tuples for the degree-m commutation rules: i1 < i2 < i3,
    then non-descending, with a strict final step once m >= 5.

    The boundary case m = 4 keeps i3 <= i4; dropping those instances
    leaves overlap residues unresolved (the completion oracle exhibits
    one at three variables, degree four), so equality is allowed there.
    """
    for i1, i2, i3 in itertools.combinations(range(1, n + 1), 3):
        for tail in itertools.combinations_with_replacement(range(i3, n + 1), m - 3):
            if m >= 5 and tail[-1] <= tail[-2]:
                continue
            yield (i1, i2, i3) + tail


def gb_vector(n: int, max_degree: int) -> RuleSet:
    """The full rule family for words in n variables up to ``max_degree``:
    the G3 pairs, the square-swap rules, and one VGm rule per admissible
    index chain with 4 <= m <= max_degree."""
    if n < 1:
        raise ValueError("need n >= 1, got %d" % n)
    if max_degree < 3:
        raise ValueError("max_degree must be >= 3, got %d" % max_degree)
    rng = range(1, n + 1)
    rules = []
    for a, b, c in itertools.combinations(rng, 3):
        for el, variant in _g3_elements(a, b, c):
            rules.append(_rule(el, "G3", (a, b, c), variant))
    for a, b in itertools.combinations(rng, 2):
        rules.append(_rule(_w(b, b, a) - _w(a, b, b), "VG3sq", (a, b), 0))
        rules.append(_rule(_w(b, a, a) - _w(a, a, b), "VG3sq", (a, b), 1))
    for m in range(4, max_degree + 1):
        for idx in _vg_index_chains(n, m):
            rules.append(_rule(_gm_element(idx), "VGm", idx))
    return RuleSet(rules, degree_bound=max_degree)
