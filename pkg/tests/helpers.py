"""Shared test utilities: seeded random polynomials and a randomized
reduction strategy used to probe confluence."""

from quatpoly.freealg import Polynomial
from quatpoly.rewrite import RuleSet


def random_poly(rng, n=4, max_degree=5, max_terms=5, coeff_range=5):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        length = rng.randint(0, max_degree)
        w = tuple(rng.randint(1, n) for _ in range(length))
        c = 0
        while c == 0:
            c = rng.randint(-coeff_range, coeff_range)
        terms[w] = terms.get(w, 0) + c
    return Polynomial(terms)


def random_word(rng, n=4, max_degree=5, min_degree=0):
    length = rng.randint(min_degree, max_degree)
    return tuple(rng.randint(1, n) for _ in range(length))


def _matches(base: RuleSet, w):
    out = []
    wb = bytes(w)
    for rule in base.rules:
        lb = bytes(rule.lead)
        start = wb.find(lb)
        while start >= 0:
            out.append((rule, start))
            start = wb.find(lb, start + 1)
    return out


def normalize_random(p, base: RuleSet, rng):
    """Reduce to a fixed point picking the rewritten term, rule and
    position at random each step."""
    terms = dict(p.terms)
    while True:
        words = list(terms)
        rng.shuffle(words)
        hit = None
        for w in words:
            found = _matches(base, w)
            if found:
                hit = (w, found[rng.randrange(len(found))])
                break
        if hit is None:
            return Polynomial(terms)
        w, (rule, pos) = hit
        c = terms.pop(w)
        for u, cu in rule.rhs.terms.items():
            nw = w[:pos] + u + w[pos + len(rule.lead) :]
            nc = terms.get(nw, 0) + c * cu
            if nc:
                terms[nw] = nc
            else:
                terms.pop(nw, None)
