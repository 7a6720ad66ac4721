import random
from fractions import Fraction

import pytest

import helpers
from quatpoly.freealg import Polynomial, Scalar, bracket, bracket3, cross, vector_part
from quatpoly.oracle import (
    Assignment,
    I,
    J,
    K,
    ONE,
    Quaternion,
    dimension_check,
    evaluate,
    identity_corpus,
    qconj,
    qmul,
    random_assignment,
    zero_test,
)
from quatpoly.syzygy import (
    gb_multilinear,
    gb_vector,
    gen_multilinear_syzygies,
    gen_vector_syzygies,
)


def w(*letters):
    return Polynomial.from_word(letters)


def basis_assignment():
    return Assignment({1: I, 2: J, 3: K}, {})


def test_hamilton_table():
    assert I * J == K
    assert J * K == I
    assert K * I == J
    assert I * I == Quaternion(-1)
    assert qmul(ONE, J) == J
    assert qmul(qmul(K, J), I) == ONE  # kji = 1


def test_conjugation_antihomomorphism():
    rng = random.Random(5)
    for _ in range(100):
        x = Quaternion(*(rng.randint(-5, 5) for _ in range(4)))
        y = Quaternion(*(rng.randint(-5, 5) for _ in range(4)))
        assert qconj(x * y) == qconj(y) * qconj(x)
        assert qconj(qconj(x)) == x


def test_assignment_requires_pure_imaginary():
    with pytest.raises(ValueError):
        Assignment({1: Quaternion(1, 1, 0, 0)}, {})


def test_evaluate_examples():
    a = basis_assignment()
    assert evaluate(bracket((1, 2, 3)), a) == Quaternion(-1)
    assert evaluate(w(1, 1) + Polynomial.one(), Assignment({1: I}, {})) == Quaternion(0)
    shift = bracket((1, 2, 3)) - bracket((3, 1, 2))
    assert evaluate(shift, a) == Quaternion(0)
    with pytest.raises(ValueError):
        evaluate(w(1, 2), Assignment({1: I}, {}))


def test_evaluate_is_homomorphism():
    rng = random.Random(9)
    for trial in range(50):
        a = random_assignment(4, trial)
        p = helpers.random_poly(rng, n=4, max_degree=3, max_terms=3)
        q = helpers.random_poly(rng, n=4, max_degree=3, max_terms=3)
        assert evaluate(p * q, a) == evaluate(p, a) * evaluate(q, a)
        assert evaluate(p + q, a) == evaluate(p, a) + evaluate(q, a)


def test_evaluate_scalar_symbols():
    p = Polynomial({(1,): Scalar.symbol(2)})
    a = Assignment({1: I}, {2: Fraction(3)})
    assert evaluate(p, a) == Quaternion(0, 3, 0, 0)
    with pytest.raises(ValueError):
        evaluate(p, Assignment({1: I}, {}))


def test_reversion_conjugation_compatibility():
    rng = random.Random(13)
    for _ in range(60):
        word = helpers.random_word(rng, n=3, max_degree=6)
        p = Polynomial.from_word(word)
        for seed in range(3):
            a = random_assignment(3, seed)
            lhs = evaluate(p.reversion(), a)
            sign = 1 if len(word) % 2 == 0 else -1
            assert lhs == qconj(evaluate(p, a)) * sign


def test_bracket_parts_land_in_real_and_imaginary():
    rng = random.Random(21)
    for _ in range(40):
        word = helpers.random_word(rng, n=3, max_degree=6)
        for seed in range(5):
            a = random_assignment(3, seed)
            assert evaluate(bracket(word), a).is_real()
            assert evaluate(vector_part(word), a).is_pure_imaginary()


def test_iota_value_at_standard_basis():
    v1, v2, v3 = (Polynomial.variable(i) for i in (1, 2, 3))
    assert evaluate(bracket3(v1, v2, v3), basis_assignment()) == Quaternion(-1)


def test_random_assignment_deterministic():
    a = random_assignment(3, 42)
    b = random_assignment(3, 42)
    assert a.vectors == b.vectors and a.scalars == b.scalars
    assert len({str(random_assignment(3, s)) for s in range(100)}) > 90
    for q in a.vectors.values():
        assert q.is_pure_imaginary() and bool(q)


def test_zero_test_examples():
    v2_instance = w(1, 1, 2) - w(2, 1, 1)
    assert zero_test(v2_instance, trials=100, seed=0).passed
    commutator = w(1, 2) - w(2, 1)
    res = zero_test(commutator, trials=100, seed=0)
    assert not res.passed
    assert res.value == evaluate(commutator, res.witness)
    assert bool(res.value)
    assert evaluate(commutator, basis_assignment()) == Quaternion(0, 0, 0, 2)  # 2k at i, j
    v1, v2 = Polynomial.variable(1), Polynomial.variable(2)
    n2 = bracket3(cross(v1, v2), v1, v2) - (
        w(1, 2, 1, 2) + w(2, 1, 2, 1) - w(1, 1, 2, 2) * 2
    ) * Fraction(1, 4)
    assert zero_test(n2, trials=100, seed=0).passed


def test_zero_test_trial_guard():
    with pytest.raises(ValueError):
        zero_test(w(1), trials=0)


def test_dimension_check_small_cases():
    rep = dimension_check(2, 3, gen_vector_syzygies(2), gb_vector(2, 3))
    assert rep.total_words == 8 and rep.rank == 2 and rep.normal_by_rank == 6
    assert rep.ok
    rep = dimension_check(
        3, 3, gen_multilinear_syzygies(3), gb_multilinear(3), multiset=(1, 2, 3)
    )
    assert rep.total_words == 6 and rep.rank == 2 and rep.normal_by_rank == 4
    assert rep.ok
    rep = dimension_check(3, 4, gen_vector_syzygies(3), gb_vector(3, 4))
    assert rep.ok


def test_dimension_check_wider_points():
    for n, d in ((2, 5), (2, 6), (3, 5), (4, 3), (4, 4)):
        rep = dimension_check(n, d, gen_vector_syzygies(n), gb_vector(n, max(3, d)))
        assert rep.ok, (n, d)
    rep = dimension_check(
        5, 5, gen_multilinear_syzygies(5), gb_multilinear(5), multiset=(1, 2, 3, 4, 5)
    )
    assert rep.ok and rep.total_words == 120 and rep.normal_by_rank == 21


def test_dimension_check_guard():
    with pytest.raises(ValueError):
        dimension_check(10, 9, [], gb_vector(2, 3))


def test_corpus_contents():
    corpus = dict(identity_corpus())
    assert "eq9-line1[1,2,3]" in corpus
    assert "lemma1[1,2,3,4,5,6]" in corpus
    assert "step13[q6]" in corpus
    assert "eq14" in corpus
    step13 = corpus["step13[q6]"]
    assert step13 == w(4, 3, 5) * (
        w(6, 2, 1) - w(1, 2, 6) - w(1, 6, 2) + w(2, 6, 1)
    )
    assert len(corpus) > 300
    for name, p in corpus.items():
        assert p, name  # identically-zero instances are pruned


def test_corpus_random_spot_checks():
    rng = random.Random(3)
    corpus = identity_corpus()
    for name, p in rng.sample(corpus, 25):
        assert zero_test(p, trials=20, seed=7).passed, name
