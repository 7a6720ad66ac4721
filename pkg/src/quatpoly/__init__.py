"""Exact rewriting and verification engine for polynomials in
pure-imaginary quaternionic variables."""

from .freealg import (
    Polynomial,
    Scalar,
    Word,
    bracket,
    bracket3,
    bracket4,
    bracket_poly,
    cross,
    inner,
    multidegree,
    reversion,
    vector_part,
    vector_part_poly,
    word_cmp,
    word_key,
    word_str,
)
from .oracle import (
    Assignment,
    Quaternion,
    ZeroTestResult,
    dimension_check,
    evaluate,
    identity_corpus,
    qconj,
    qmul,
    random_assignment,
    zero_test,
)
from .qvars import (
    QPolynomial,
    normalize_q,
    qconjugate,
    scalar_part,
    split,
    vector_part_q,
)
from .rewrite import (
    CompletionLimitExceeded,
    GroebnerReport,
    Obstruction,
    RewriteRule,
    RuleSet,
    check_groebner,
    complete,
    find_factor,
    inter_reduce,
    is_normal_factorfree,
    is_normal_structural,
    normalize,
    overlaps,
    reduce_once,
    s_polynomial,
)
from .syzygy import (
    GeneratorFamily,
    gb_multilinear,
    gb_vector,
    gen_multilinear_syzygies,
    gen_quaternion_syzygies,
    gen_vector_syzygies,
)

__all__ = [
    "Assignment",
    "CompletionLimitExceeded",
    "GeneratorFamily",
    "GroebnerReport",
    "Obstruction",
    "Polynomial",
    "QPolynomial",
    "Quaternion",
    "RewriteRule",
    "RuleSet",
    "Scalar",
    "Word",
    "ZeroTestResult",
    "bracket",
    "bracket3",
    "bracket4",
    "bracket_poly",
    "check_groebner",
    "complete",
    "cross",
    "dimension_check",
    "evaluate",
    "find_factor",
    "gb_multilinear",
    "gb_vector",
    "gen_multilinear_syzygies",
    "gen_quaternion_syzygies",
    "gen_vector_syzygies",
    "identity_corpus",
    "inner",
    "inter_reduce",
    "is_normal_factorfree",
    "is_normal_structural",
    "multidegree",
    "normalize",
    "normalize_q",
    "overlaps",
    "qconj",
    "qconjugate",
    "qmul",
    "random_assignment",
    "reduce_once",
    "reversion",
    "s_polynomial",
    "scalar_part",
    "split",
    "vector_part",
    "vector_part_poly",
    "vector_part_q",
    "word_cmp",
    "word_key",
    "word_str",
    "zero_test",
]
