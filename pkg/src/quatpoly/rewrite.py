"""Reduction engine: factor matching against leading words, normal forms,
structural normality predicates, overlap detection and bounded completion.

A :class:`RewriteRule` is a monic polynomial split as ``lead -> rhs``; a
:class:`RuleSet` is an immutable, canonically ordered family of such rules
whose leads are pairwise factor-free.  Normal-form computation memoizes
per-word results on the rule set, which is sound because the rewrite step
chosen for a word depends on the word alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .freealg import Polynomial, Word, word_key, word_multiset, word_str


class CompletionLimitExceeded(RuntimeError):
    """Bounded completion hit its rule-count cap before closing."""


@dataclass(frozen=True, eq=False)
class RewriteRule:
    """Rewrite ``lead`` to ``rhs``; the underlying element is ``lead - rhs``."""

    lead: Word
    rhs: Polynomial
    family: str = ""
    indices: tuple = ()
    variant: int = 0

    def __post_init__(self):
        if not self.lead:
            raise ValueError("rewrite rule with empty lead (ideal contains a unit)")
        lk = word_key(self.lead)
        lm = word_multiset(self.lead)
        for w in self.rhs.terms:
            if word_key(w) >= lk:
                raise ValueError(
                    "rule lead %s does not dominate %s" % (word_str(self.lead), word_str(w))
                )
            if word_multiset(w) != lm:
                raise ValueError(
                    "rule %s -> ... mixes letter multisets" % word_str(self.lead)
                )

    @property
    def element(self) -> Polynomial:
        return Polynomial.from_word(self.lead) - self.rhs

    @property
    def degree(self) -> int:
        return len(self.lead)

    def __repr__(self):
        return "RewriteRule(%s -> %s)" % (word_str(self.lead), self.rhs)


def _rule_key(rule: RewriteRule):
    return (len(rule.lead), rule.family, rule.indices, rule.variant, rule.lead)


class RuleSet:
    """Canonically ordered rewrite rules with pairwise factor-free leads.

    Immutable after construction; the internal normal-form cache is a pure
    memo (idempotent writes), so sharing across threads is safe.
    """

    __slots__ = ("rules", "degree_bound", "_lead_bytes", "_nf_cache")

    def __init__(self, rules=(), degree_bound=None):
        rules = tuple(sorted(rules, key=_rule_key))
        leads = [r.lead for r in rules]
        for lead in leads:
            if any(x < 1 or x > 255 for x in lead):
                raise ValueError("letters must lie in 1..255 (factor search packs words into bytes)")
        for i, la in enumerate(leads):
            for j, lb in enumerate(leads):
                if i != j and find_factor(la, lb) is not None:
                    raise ValueError(
                        "lead %s contains lead %s" % (word_str(la), word_str(lb))
                    )
        self.rules = rules
        self.degree_bound = degree_bound
        self._lead_bytes = [bytes(r.lead) for r in rules]
        self._nf_cache = {}

    def __len__(self):
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)

    def leads(self) -> tuple:
        return tuple(r.lead for r in self.rules)

    @property
    def max_rule_degree(self) -> int:
        return max((len(r.lead) for r in self.rules), default=0)

    def __repr__(self):
        return "RuleSet(%d rules, degree_bound=%r)" % (len(self.rules), self.degree_bound)


def find_factor(w: Word, lead: Word):
    """Leftmost offset of ``lead`` inside ``w``, or None.  The empty word
    is a factor of everything at offset 0."""
    if not lead:
        return 0
    if len(lead) > len(w):
        return None
    pos = bytes(w).find(bytes(lead))
    return pos if pos >= 0 else None


def _first_step(base: RuleSet, w: Word):
    """One rewrite of ``w`` by the first matching rule at its leftmost
    occurrence, as a list of (word, coefficient) pairs; None if normal."""
    wb = bytes(w)
    n = len(wb)
    for rule, lb in zip(base.rules, base._lead_bytes):
        if len(lb) > n:
            continue
        pos = wb.find(lb)
        if pos < 0:
            continue
        end = pos + len(lb)
        head, tail = w[:pos], w[end:]
        return [(head + u + tail, c) for u, c in rule.rhs.terms.items()]
    return None


def _check_bound(base: RuleSet, degree: int):
    if base.degree_bound is not None and degree > base.degree_bound:
        raise ValueError(
            "degree %d exceeds the rule set bound %d" % (degree, base.degree_bound)
        )


def reduce_once(p: Polynomial, base: RuleSet):
    """Rewrite the highest reducible term of ``p`` once.

    Returns ``(polynomial, changed)``.  The highest term with a lead
    factor is rewritten at the leftmost occurrence of the first matching
    rule in canonical order.
    """
    _check_bound(base, p.degree())
    for w in p.terms:  # iteration is descending
        step = _first_step(base, w)
        if step is None:
            continue
        c = p.terms[w]
        data = dict(p.terms)
        del data[w]
        for u, cu in step:
            data[u] = data.get(u, 0) + c * cu
        return Polynomial(data), True
    return p, False


def _nf_word(base: RuleSet, w: Word) -> dict:
    """Fully reduced form of a single word, as a raw word->Fraction dict.
    Memoized on the rule set."""
    cache = base._nf_cache
    hit = cache.get(w)
    if hit is not None:
        return hit
    stack = [w]
    while stack:
        u = stack[-1]
        if u in cache:
            stack.pop()
            continue
        step = _first_step(base, u)
        if step is None:
            cache[u] = {u: Fraction(1)}
            stack.pop()
            continue
        missing = [x for x, _ in step if x not in cache]
        if missing:
            stack.extend(missing)
            continue
        acc = {}
        for x, cx in step:
            for ww, cc in cache[x].items():
                val = acc.get(ww, 0) + cx * cc
                if val:
                    acc[ww] = val
                elif ww in acc:
                    del acc[ww]
        cache[u] = acc
        stack.pop()
    return cache[w]


def normalize(p: Polynomial, base: RuleSet) -> Polynomial:
    """The unique fixed point of :func:`reduce_once`.

    Termination follows from the well-founded word order; every rewrite
    replaces a word by strictly smaller words of the same letter multiset.
    """
    _check_bound(base, p.degree())
    acc = {}
    for w, c in p.terms.items():
        for u, cu in _nf_word(base, w).items():
            val = acc.get(u, 0) + c * cu
            if val:
                acc[u] = val
            elif u in acc:
                del acc[u]
    return Polynomial(acc)


def is_normal_factorfree(w: Word, base: RuleSet) -> bool:
    """True iff no rule lead occurs as a factor of ``w``."""
    _check_bound(base, len(w))
    wb = bytes(w)
    for lb in base._lead_bytes:
        if len(lb) <= len(wb) and wb.find(lb) >= 0:
            return False
    return True


def _descents(w: Word):
    return [p for p in range(len(w) - 1) if w[p] > w[p + 1]]


def _normal_general(w: Word) -> bool:
    # Decompose around strict descents: each descent pair is a peak
    # followed by a bottom, the runs between are the non-descending
    # blocks.  The decomposition is forced, so one scan decides.
    ds = _descents(w)
    if not ds:
        return True
    peaks = [w[p] for p in ds]
    bottoms = [w[p + 1] for p in ds]
    if any(bottoms[i] > bottoms[i + 1] for i in range(len(bottoms) - 1)):
        return False
    if any(peaks[i] > peaks[i + 1] for i in range(len(peaks) - 1)):
        return False
    # Upper chain: blocks and peaks interleaved must be non-descending,
    # and a nonempty block must end strictly below its peak.
    chain = []
    prev_end = 0
    for p in ds:
        block = w[prev_end:p]
        if block and block[-1] >= w[p]:
            return False
        chain.extend(block)
        chain.append(w[p])
        prev_end = p + 2
    chain.extend(w[prev_end:])
    return all(chain[i] <= chain[i + 1] for i in range(len(chain) - 1))


def _normal_multilinear(w: Word) -> bool:
    # Same scan with all letters distinct: the letter before each descent
    # ends its block, bottoms must ascend, and the concatenated blocks
    # must ascend as one sequence.
    ds = _descents(w)
    if not ds:
        return True
    bottoms = [w[p + 1] for p in ds]
    if any(bottoms[i] >= bottoms[i + 1] for i in range(len(bottoms) - 1)):
        return False
    chain = []
    prev_end = 0
    for p in ds:
        block = w[prev_end : p + 1]
        if not block:
            return False
        chain.extend(block)
        prev_end = p + 2
    chain.extend(w[prev_end:])
    return all(chain[i] < chain[i + 1] for i in range(len(chain) - 1))


def is_normal_structural(w: Word, mode: str = "general") -> bool:
    """Decide normality from the word shape alone.

    ``general`` accepts exactly the double-nondescending words;
    ``multilinear`` (distinct letters required) accepts the
    double-ascending ones.
    """
    if mode == "multilinear":
        if len(set(w)) != len(w):
            raise ValueError("multilinear mode requires distinct letters: %s" % word_str(w))
        return _normal_multilinear(w)
    if mode == "general":
        return _normal_general(w)
    raise ValueError("unknown mode %r" % mode)


@dataclass(frozen=True)
class Obstruction:
    """Two rule leads meeting inside one word.

    ``word[offset_a:]`` starts lead of ``rule_a`` and likewise for
    ``rule_b``; the occurrences genuinely overlap.
    """

    rule_a: int
    rule_b: int
    word: Word
    offset_a: int
    offset_b: int


@dataclass(frozen=True)
class GroebnerReport:
    """Outcome of a base check: any nonzero residues, with counts.

    ``residues`` come from overlap S-polynomials; ``generator_residues``
    from supplied ideal generators that failed to reduce to zero (a base
    can resolve every overlap yet still miss part of the ideal).
    """

    residues: tuple
    obstructions_checked: int
    max_degree: int
    generator_residues: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.residues and not self.generator_residues


def overlaps(base: RuleSet, max_degree: int):
    """All suffix-prefix overlaps and containments among the leads whose
    overlap word has degree <= ``max_degree``."""
    out = []
    rules = base.rules
    for i, ri in enumerate(rules):
        li = ri.lead
        for j, rj in enumerate(rules):
            lj = rj.lead
            # suffix of li meets prefix of lj: li at offset 0, lj at k
            for k in range(1, len(li)):
                if k + len(lj) <= len(li):
                    continue  # containment, handled below
                shared = len(li) - k
                if li[k:] != lj[:shared]:
                    continue
                u = li + lj[shared:]
                if len(u) <= max_degree:
                    out.append(Obstruction(i, j, u, 0, k))
            # lj properly inside li
            if i != j and len(lj) < len(li) and len(li) <= max_degree:
                for k in range(len(li) - len(lj) + 1):
                    if li[k : k + len(lj)] == lj:
                        out.append(Obstruction(i, j, li, 0, k))
    out.sort(key=lambda ob: (word_key(ob.word), ob.rule_a, ob.rule_b, ob.offset_b))
    return out


def s_polynomial(base: RuleSet, ob: Obstruction) -> Polynomial:
    """Difference of the two one-step rewrites of the overlap word."""
    ra = base.rules[ob.rule_a]
    rb = base.rules[ob.rule_b]
    u = ob.word
    pa = (
        Polynomial.from_word(u[: ob.offset_a])
        * ra.rhs
        * Polynomial.from_word(u[ob.offset_a + len(ra.lead) :])
    )
    pb = (
        Polynomial.from_word(u[: ob.offset_b])
        * rb.rhs
        * Polynomial.from_word(u[ob.offset_b + len(rb.lead) :])
    )
    return pa - pb


def check_groebner(
    base: RuleSet,
    max_degree: int,
    multilinear: bool = False,
    generators=None,
) -> GroebnerReport:
    """Normalize every overlap's S-polynomial; nonzero residues are
    reported, an empty residue list certifies local confluence up to
    ``max_degree``.  With ``multilinear`` only distinct-letter overlap
    words are considered.

    When ``generators`` are supplied, each one is also reduced; a nonzero
    result lands in ``generator_residues`` and fails the report.  This
    catches a base that resolves all its overlaps but generates too small
    an ideal, which pairwise S-polynomials alone cannot see.
    """
    if base.degree_bound is not None:
        max_degree = min(max_degree, base.degree_bound)
    residues = []
    checked = 0
    for ob in overlaps(base, max_degree):
        if multilinear and len(set(ob.word)) != len(ob.word):
            continue
        checked += 1
        residue = normalize(s_polynomial(base, ob), base)
        if residue:
            residues.append((ob, residue))
    gen_residues = []
    for g in generators or ():
        p = g if isinstance(g, Polynomial) else g.element
        if not p or p.degree() > max_degree:
            continue
        residue = normalize(p, base)
        if residue:
            gen_residues.append(residue)
    return GroebnerReport(tuple(residues), checked, max_degree, tuple(gen_residues))


def _monic(p: Polynomial) -> Polynomial:
    lc = p.leading_coeff()
    if not isinstance(lc, Fraction):
        lc = lc.as_fraction()
    return p if lc == 1 else p.scale(Fraction(1) / lc)


def complete(generators, max_degree: int, max_rules: int = 1000) -> RuleSet:
    """Bounded two-sided completion of a homogeneous generator list.

    Repeatedly adds normalized nonzero S-polynomial residues (monic, with
    leads kept factor-free by re-queuing displaced rules) until no
    obstruction of degree <= ``max_degree`` leaves a residue.  The output
    is re-verified before returning, so a returned set is genuinely
    locally confluent to the bound.  Exceeding ``max_rules`` raises
    :class:`CompletionLimitExceeded`.
    """
    pending = []
    for g in generators:
        if isinstance(g, Polynomial):
            p = g
        else:  # GeneratorFamily-like carrier
            p = g.element
        if not p:
            continue
        if not p.is_multiset_homogeneous():
            raise ValueError("generator is not multiset-homogeneous: %s" % p)
        pending.append(p)

    rules: list = []
    snapshot = RuleSet()
    done = set()

    def absorb():
        nonlocal rules, snapshot
        changed = False
        while pending:
            pending.sort(key=lambda q: word_key(q.leading_word()), reverse=True)
            p = normalize(pending.pop(), snapshot)
            if not p:
                continue
            p = _monic(p)
            lead = p.leading_word()
            keep, requeue = [], []
            for r in rules:
                if find_factor(r.lead, lead) is not None:
                    requeue.append(r.element)
                else:
                    keep.append(r)
            keep.append(RewriteRule(lead, Polynomial.from_word(lead) - p))
            if len(keep) > max_rules:
                raise CompletionLimitExceeded(
                    "completion exceeded %d rules at degree bound %d" % (max_rules, max_degree)
                )
            rules = keep
            pending.extend(requeue)
            snapshot = RuleSet(rules)
            changed = True
        return changed

    while True:
        absorb()
        found = False
        for ob in overlaps(snapshot, max_degree):
            key = (
                snapshot.rules[ob.rule_a].lead,
                snapshot.rules[ob.rule_b].lead,
                ob.word,
                ob.offset_a,
                ob.offset_b,
            )
            if key in done:
                continue
            done.add(key)
            residue = normalize(s_polynomial(snapshot, ob), snapshot)
            if residue:
                pending.append(residue)
                found = True
                break
        if found or pending:
            continue
        # final verification sweep; rule replacement can in principle
        # stale an earlier zero residue, so recheck everything once
        clean = True
        for ob in overlaps(snapshot, max_degree):
            residue = normalize(s_polynomial(snapshot, ob), snapshot)
            if residue:
                pending.append(residue)
                clean = False
                break
        if clean:
            break

    final = inter_reduce(RuleSet(rules))
    return RuleSet(final.rules, degree_bound=max_degree)


def inter_reduce(base: RuleSet) -> RuleSet:
    """Tail-reduce every rule against the whole set; leads are untouched."""
    new_rules = [
        RewriteRule(r.lead, normalize(r.rhs, base), r.family, r.indices, r.variant)
        for r in base.rules
    ]
    return RuleSet(new_rules, degree_bound=base.degree_bound)
