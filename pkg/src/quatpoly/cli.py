"""Command-line front end.

Expression grammar (ASCII):

    expr   := ['-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := coeff | var | '(' expr ')'
              | 'S(' expr ')' | 'A(' expr ')' | 'rev(' expr ')'
              | 'cross(' expr ',' expr ')'
    var    := 'v' INT | 's' INT | 'q' INT ["'"]
    coeff  := INT ['/' INT]

``S`` takes the conjugation-even part, ``A`` the odd part, ``rev``
reverses letter order, ``cross`` is the antisymmetrized half product; a
trailing apostrophe conjugates a q-variable.  An expression is either all
v/s-letters or all q-letters; mixing the two alphabets is rejected.

Exit codes: 0 success / property verified, 1 verification finding,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction

from . import oracle, qvars, rewrite, syzygy
from .freealg import Polynomial, bracket_poly, vector_part_poly, word_str
from .qvars import QPolynomial


class ExpressionError(ValueError):
    """Parse or semantic error in an input expression, with position."""

    def __init__(self, message, pos=None):
        if pos is not None:
            message = "%s (column %d)" % (message, pos + 1)
        super().__init__(message)
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z]+)(?P<idx>\d*)|(?P<op>[()+\-*,/'])|(?P<bad>\S))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group("bad"):
            raise ExpressionError("unexpected character %r" % m.group("bad"), m.start("bad"))
        if m.group("int"):
            tokens.append(("int", int(m.group("int")), m.start("int")))
        elif m.group("name"):
            tokens.append(("name", (m.group("name"), m.group("idx")), m.start("name")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Value:
    """Tagged expression value: mode 'c' (rational), 'v' or 'q'."""

    __slots__ = ("mode", "data")

    def __init__(self, mode, data):
        self.mode = mode
        self.data = data


def _lift(value, mode):
    if value.mode == mode:
        return value.data
    if value.mode == "c":
        if mode == "v":
            return Polynomial.constant(value.data)
        return QPolynomial.constant(value.data)
    raise ExpressionError("cannot mix v-variables and q-variables in one expression")


def _combine(a, b, op):
    mode = a.mode
    if mode == "c":
        mode = b.mode
    if a.mode != "c" and b.mode != "c" and a.mode != b.mode:
        raise ExpressionError("cannot mix v-variables and q-variables in one expression")
    if mode == "c":
        return _Value("c", op(a.data, b.data))
    return _Value(mode, op(_lift(a, mode), _lift(b, mode)))


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, symbol):
        kind, value, pos = self.next()
        if kind != "op" or value != symbol:
            raise ExpressionError("expected %r" % symbol, pos)

    def parse(self):
        value = self.expr()
        kind, _, pos = self.peek()
        if kind != "end":
            raise ExpressionError("trailing input", pos)
        return value

    def expr(self):
        kind, value, _ = self.peek()
        negate = False
        if kind == "op" and value == "-":
            self.next()
            negate = True
        out = self.term()
        if negate:
            out = _Value(out.mode, -out.data)
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.next()
                rhs = self.term()
                if value == "+":
                    out = _combine(out, rhs, lambda a, b: a + b)
                else:
                    out = _combine(out, rhs, lambda a, b: a - b)
            else:
                return out

    def term(self):
        out = self.factor()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.next()
                rhs = self.factor()
                out = _combine(out, rhs, lambda a, b: a * b)
            else:
                return out

    def factor(self):
        kind, value, pos = self.next()
        if kind == "int":
            num = value
            kind, nxt, _ = self.peek()
            if kind == "op" and nxt == "/":
                self.next()
                k2, den, p2 = self.next()
                if k2 != "int":
                    raise ExpressionError("expected denominator digits", p2)
                if den == 0:
                    raise ExpressionError("zero denominator", p2)
                return _Value("c", Fraction(num, den))
            return _Value("c", Fraction(num))
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        if kind == "name":
            return self.named(value, pos)
        raise ExpressionError("expected a factor", pos)

    def named(self, name_idx, pos):
        name, idx = name_idx
        if name in ("S", "A", "rev"):
            if idx:
                raise ExpressionError("unknown variable %r" % (name + idx), pos)
            self.expect_op("(")
            inner = self.expr()
            self.expect_op(")")
            return _apply_func(name, inner)
        if name == "cross":
            if idx:
                raise ExpressionError("unknown variable %r" % (name + idx), pos)
            self.expect_op("(")
            a = self.expr()
            self.expect_op(",")
            b = self.expr()
            self.expect_op(")")
            return _combine(a, b, _cross_any)
        if name in ("v", "s", "q") and idx:
            index = int(idx)
            if index < 1:
                raise ExpressionError("variable index must be >= 1", pos)
            if name == "v":
                return _Value("v", Polynomial.variable(index))
            if name == "s":
                from .freealg import Scalar

                return _Value("v", Polynomial.constant(Scalar.symbol(index)))
            barred = False
            kind, nxt, _ = self.peek()
            if kind == "op" and nxt == "'":
                self.next()
                barred = True
            return _Value("q", QPolynomial.variable(index, barred=barred))
        raise ExpressionError("unknown name %r" % (name + idx), pos)


def _cross_any(a, b):
    return (a * b - b * a) * Fraction(1, 2)


def _apply_func(name, value):
    if value.mode == "c":
        if name == "S" or name == "rev":
            return value
        return _Value("c", Fraction(0))
    if value.mode == "v":
        if name == "S":
            return _Value("v", bracket_poly(value.data))
        if name == "A":
            return _Value("v", vector_part_poly(value.data))
        return _Value("v", value.data.reversion())
    if name == "S":
        return _Value("q", qvars.scalar_part(value.data))
    if name == "A":
        return _Value("q", qvars.vector_part_q(value.data))
    return _Value("q", value.data.reversion())


def parse_expression(text):
    """Parse ``text`` into a Polynomial (v-mode, possibly with scalar
    symbols) or a QPolynomial (q-mode).  Returns ``(mode, value)`` with
    mode 'v' or 'q'; a pure number parses as a constant Polynomial."""
    value = _Parser(text).parse()
    if value.mode == "q":
        return "q", value.data
    if value.mode == "v":
        return "v", value.data
    return "v", Polynomial.constant(value.data)


def _infer_vars(option, poly, qpoly=None):
    if option is not None:
        return option
    if qpoly is not None:
        return max(qpoly.indices(), default=0)
    return max(poly.variables() | poly.scalar_symbols(), default=0)


def _build_base(n, max_degree, multilinear):
    if multilinear:
        return syzygy.gb_multilinear(n)
    return syzygy.gb_vector(n, max(3, max_degree))


def _expr_arg(text):
    """Expression from the argument list, or from stdin when given '-'."""
    if text == "-":
        return sys.stdin.read()
    return text


def _cmd_normalize(args, out):
    mode, value = parse_expression(_expr_arg(args.expr))
    if mode == "q":
        n = _infer_vars(args.vars, None, value)
        result = qvars.normalize_q(value, n=n, max_degree=args.max_deg)
    else:
        degree = value.degree()
        max_deg = args.max_deg if args.max_deg is not None else degree
        if degree > max_deg:
            raise ExpressionError("input degree %d exceeds --max-deg %d" % (degree, max_deg))
        n = _infer_vars(args.vars, value)
        if n >= 2 and max_deg >= 3:
            result = rewrite.normalize(value, _build_base(n, max_deg, args.multilinear))
        else:
            result = value
    out.write("%s\n" % result)
    return 0


def _single_word(value):
    if len(value.terms) != 1:
        raise ExpressionError("expected a single monomial")
    (w, c), = value.terms.items()
    if c != 1:
        raise ExpressionError("expected a monic monomial")
    return w


def _cmd_check_normal(args, out):
    mode, value = parse_expression(_expr_arg(args.expr))
    if mode != "v":
        raise ExpressionError("check-normal expects vector letters")
    w = _single_word(value)
    n = _infer_vars(args.vars, value)
    pmode = "multilinear" if args.multilinear else "general"
    structural = rewrite.is_normal_structural(w, pmode)
    base = _build_base(n, max(3, len(w)), args.multilinear) if n >= 2 else rewrite.RuleSet()
    factorfree = rewrite.is_normal_factorfree(w, base)
    verdict = "normal" if structural else "not normal"
    agree = "" if structural == factorfree else " (predicates disagree!)"
    out.write("%s%s\n" % (verdict, agree))
    return 0 if structural else 1


def _format_rule(rule):
    return "%s -> %s" % (word_str(rule.lead), rule.rhs)


def _cmd_gb(args, out):
    base = _build_base(args.vars, args.max_deg, args.multilinear)
    if args.tail_reduce:
        base = rewrite.inter_reduce(base)
    for rule in base.rules:
        out.write("%s\n" % _format_rule(rule))
    return 0


def _cmd_verify_groebner(args, out):
    base = _build_base(args.vars, args.max_deg, args.multilinear)
    if args.multilinear:
        gens = syzygy.gen_multilinear_syzygies(args.vars)
    else:
        gens = syzygy.gen_vector_syzygies(args.vars)
    report = rewrite.check_groebner(
        base, args.max_deg, multilinear=args.multilinear, generators=gens
    )
    out.write("checked %d obstructions up to degree %d\n" % (report.obstructions_checked, report.max_degree))
    if report.ok:
        out.write("all S-polynomials reduce to 0\n")
        return 0
    for ob, residue in report.residues:
        out.write("residue at %s: %s\n" % (word_str(ob.word), residue))
    for residue in report.generator_residues:
        out.write("generator residue: %s\n" % residue)
    return 1


def _cmd_zero_test(args, out):
    mode, value = parse_expression(_expr_arg(args.expr))
    if mode == "q":
        value = qvars.split(value)
    result = oracle.zero_test(value, trials=args.trials, seed=args.seed)
    if result.passed:
        out.write("zero on all %d trials\n" % result.trials)
        return 0
    out.write(
        "counterexample at trial %d: %s => %s\n"
        % (result.witness_trial, result.witness, result.value)
    )
    return 1


def _cmd_dim_check(args, out):
    if args.multilinear:
        gens = syzygy.gen_multilinear_syzygies(args.vars)
        base = syzygy.gb_multilinear(args.vars)
        multiset = tuple(range(1, args.deg + 1))
        if args.deg > args.vars:
            raise ExpressionError("multilinear degree cannot exceed --vars")
        report = oracle.dimension_check(args.vars, args.deg, gens, base, multiset=multiset)
    else:
        gens = syzygy.gen_vector_syzygies(args.vars)
        base = syzygy.gb_vector(args.vars, max(3, args.deg))
        report = oracle.dimension_check(args.vars, args.deg, gens, base)
    out.write(
        "words %d  rank %d  normal %d  factor-free %d  structural %d\n"
        % (
            report.total_words,
            report.rank,
            report.normal_by_rank,
            report.normal_factorfree,
            report.normal_structural,
        )
    )
    out.write("counts agree\n" if report.ok else "counts disagree\n")
    return 0 if report.ok else 1


def _cmd_identities(args, out):
    corpus = oracle.identity_corpus()
    failures = 0
    shown = 0
    base_cache = {}
    for name, p in corpus:
        n = max(p.variables(), default=0)
        if n > args.max_n:
            continue
        shown += 1
        degree = p.degree()
        key = (max(2, n), max(3, degree))
        if key not in base_cache:
            base_cache[key] = syzygy.gb_vector(*key)
        residue = rewrite.normalize(p, base_cache[key])
        zt = oracle.zero_test(p, trials=args.trials, seed=args.seed)
        if not residue and zt.passed:
            out.write("ok %s\n" % name)
        else:
            failures += 1
            detail = []
            if residue:
                detail.append("nonzero normal form")
            if not zt.passed:
                detail.append("counterexample at trial %d" % zt.witness_trial)
            out.write("FAIL %s: %s\n" % (name, ", ".join(detail)))
    out.write("%d identities checked, %d failures\n" % (shown, failures))
    return 1 if failures else 0


def _cmd_complete(args, out):
    if args.expr:
        texts = args.expr
        if texts == ["-"]:
            texts = [line for line in sys.stdin.read().splitlines() if line.strip()]
        gens = []
        for text in texts:
            mode, value = parse_expression(text)
            if mode != "v":
                raise ExpressionError("complete expects vector-letter generators")
            gens.append(value)
    else:
        gens = [g.element for g in syzygy.gen_vector_syzygies(args.vars)]
    try:
        base = rewrite.complete(gens, args.max_deg)
    except rewrite.CompletionLimitExceeded as exc:
        out.write("completion failed: %s\n" % exc)
        return 1
    for rule in base.rules:
        out.write("%s\n" % _format_rule(rule))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="quatpoly",
        description="normal forms and verification for quaternionic-variable polynomials",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, vars_required=False, max_deg=False, seed=False):
        p.add_argument("--vars", type=int, required=vars_required, default=None,
                       help="number of variables (default: inferred)")
        if max_deg:
            p.add_argument("--max-deg", dest="max_deg", type=int, default=None,
                           help="degree bound (default: input degree)")
        if seed:
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--trials", type=int, default=100)

    p = sub.add_parser("normalize", help="print the canonical normal form")
    common(p, max_deg=True)
    p.add_argument("--multilinear", action="store_true")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("check-normal", help="test a monomial for normality")
    common(p)
    p.add_argument("--multilinear", action="store_true")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_check_normal)

    p = sub.add_parser("gb", help="emit the rule family, one LEAD -> RHS per line")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--max-deg", dest="max_deg", type=int, required=True)
    p.add_argument("--multilinear", action="store_true")
    p.add_argument("--tail-reduce", dest="tail_reduce", action="store_true")
    p.set_defaults(func=_cmd_gb)

    p = sub.add_parser("verify-groebner", help="check overlaps and generator membership")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--max-deg", dest="max_deg", type=int, required=True)
    p.add_argument("--multilinear", action="store_true")
    p.set_defaults(func=_cmd_verify_groebner)

    p = sub.add_parser("zero-test", help="evaluate at seeded random assignments")
    common(p, seed=True)
    p.add_argument("expr")
    p.set_defaults(func=_cmd_zero_test)

    p = sub.add_parser("dim-check", help="count normal words three independent ways")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--deg", type=int, required=True)
    p.add_argument("--multilinear", action="store_true")
    p.set_defaults(func=_cmd_dim_check)

    p = sub.add_parser("identities", help="run the identity corpus")
    p.add_argument("--max-n", dest="max_n", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.set_defaults(func=_cmd_identities)

    p = sub.add_parser("complete", help="bounded completion of generators")
    p.add_argument("--vars", type=int, default=3)
    p.add_argument("--max-deg", dest="max_deg", type=int, required=True)
    p.add_argument("expr", nargs="*")
    p.set_defaults(func=_cmd_complete)

    return parser


def main(argv=None, out=None):
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args, out)
    except (ExpressionError, ValueError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
