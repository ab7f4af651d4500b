# -*- coding: utf-8 -*-
import pytest

from diagram import (
    IDENTITY, FriezeK, Matching, balance, catalan, collapse_modulus, compose, crown_pair,
    cups_caps, enumerate_Jn, eq_frieze, eval_term, frieze_at_width, gen_frieze, is_noncrossing,
    make_matching, matching_to_term, slope_sequences, span, span_one_cups, threads_covering,
)
from errors import EquationHoldsError, MatchingError, RealizabilityError, TheoryError
from normalize import eq_Kn, enumerate_jones_nf, jones_to_term, knf_to_term, normalize_K
from samples import random_k_word
from terms import A, Circle, K, Kn, L, Term, parse_term


def k(text):
    return parse_term(text, K)


# cup'lar (T1,T2), (T4,T5); cap'ler dört tane; iç içe transversaller
SIX_EXAMPLE = make_matching(7, 11, [
    (-3, -4), (-2, -5), (-7, -8), (-9, -10),
    (1, 2), (4, 5),
    (-1, 3), (-6, 6), (-11, 7),
])


class TestMatching:
    def test_trimmed_storage(self):
        assert SIX_EXAMPLE.top == 6 and SIX_EXAMPLE.bottom == 10
        assert (-11, 7) not in SIX_EXAMPLE.pairs

    def test_crossing_is_rejected(self):
        with pytest.raises(MatchingError):
            make_matching(2, 2, [(-1, 2), (-2, 1)])

    def test_imperfect_is_rejected(self):
        with pytest.raises(MatchingError):
            make_matching(2, 0, [(1, 1)])

    def test_noncrossing_check(self):
        assert is_noncrossing(Matching(2, 2, frozenset({(1, 2), (-2, -1)})))
        assert not is_noncrossing(Matching(2, 2, frozenset({(-1, 2), (-2, 1)})))

    def test_frieze_at_width(self):
        assert frieze_at_width(IDENTITY, 2) == Matching(2, 2, frozenset({(-1, 1), (-2, 2)}))


class TestEvaluation:
    def test_generators(self):
        assert gen_frieze(Circle()) == FriezeK(IDENTITY, 1)
        cup = eval_term(k("u1"))
        assert cup.matching == Matching(2, 0, frozenset({(1, 2)}))

    def test_cup_cap_closes_a_loop(self):
        assert eval_term(k("u1 n1")) == FriezeK(IDENTITY, 1)
        assert eval_term(k("u1 n2")) == FriezeK()

    def test_homomorphism(self, rng):
        for _ in range(100):
            t, u = random_k_word(rng, 4, 3), random_k_word(rng, 4, 3)
            assert eval_term(t + u) == compose(eval_term(u), eval_term(t))

    def test_agrees_with_normal_forms(self, short_k_words):
        for t in short_k_words:
            assert eval_term(knf_to_term(normalize_K(t))) == eval_term(t), str(t)

    def test_frieze_decides_K(self, short_k_words):
        words = short_k_words[:80]
        for t in words:
            for u in words:
                assert (eval_term(t) == eval_term(u)) == (normalize_K(t) == normalize_K(u))

    def test_ignore_loops(self):
        assert eq_frieze(eval_term(k("c u1")), eval_term(k("u1")), ignore_loops=True)
        assert not eq_frieze(eval_term(k("c u1")), eval_term(k("u1")))

    def test_ext_generators_rejected(self):
        with pytest.raises(TheoryError):
            eval_term(Term((A(1),), L))


class TestInvariants:
    def test_cups_caps(self):
        assert cups_caps(eval_term(k("u1 u1 n5"))) == (2, 1)

    def test_balance(self):
        assert balance(k("u1"), k("1")) == 1
        assert balance(k("u1 u1"), k("n1")) == 3
        assert balance(k("h1"), k("1")) == 0

    def test_collapse_modulus(self):
        assert collapse_modulus(k("u1 u1"), k("u1")) == 1
        with pytest.raises(EquationHoldsError):
            collapse_modulus(k("u1 n1"), k("1"))

    @pytest.mark.parametrize("word, pair", [
        ("1", (1, 1)),
        ("c", (1, 1)),
        ("u1", (1, 3)),
        ("u1 u1", (1, 5)),
        ("h1", (3, 3)),
    ])
    def test_crown_pair(self, word, pair):
        assert crown_pair(eval_term(k(word))) == pair

    def test_crown_pair_of_worked_example(self):
        f = FriezeK(SIX_EXAMPLE)
        assert crown_pair(f) == (11, 7)
        assert cups_caps(f) == (2, 4)

    def test_crown_difference_is_twice_the_balance(self, rng):
        for _ in range(100):
            t = random_k_word(rng, 5, 3)
            k_, l_ = crown_pair(eval_term(t))
            assert abs(k_ - l_) == 2 * balance(t, k("1"))

    def test_square_invariants_of_h1(self):
        f = eval_term(k("h1"))
        assert span(f) == 2
        assert slope_sequences(f) == ([1], [1])
        assert threads_covering(f, 1) == 2
        assert span_one_cups(f) == [1]

    def test_span_needs_square_type(self):
        with pytest.raises(MatchingError):
            span(eval_term(k("u1")))


class TestGeneratingProcedure:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_round_trip(self, n):
        for circles in (0, 1):
            for nf in enumerate_jones_nf(n, circles):
                t = jones_to_term(nf, Kn(n))
                f = eval_term(t)
                back = matching_to_term(f, n)
                assert eval_term(back) == f
                assert eq_Kn(back, t)

    def test_non_square_is_not_realizable(self):
        with pytest.raises(RealizabilityError):
            matching_to_term(eval_term(k("u1")), 3)

    def test_too_wide(self):
        with pytest.raises(RealizabilityError):
            matching_to_term(eval_term(k("h3")), 3)


class TestCatalan:
    @pytest.mark.parametrize("n", range(7))
    def test_counts(self, n):
        assert len(enumerate_Jn(n)) == catalan(n)

    @pytest.mark.parametrize("n", range(6))
    def test_direct_matches_jones(self, n):
        assert enumerate_Jn(n, "direct") == enumerate_Jn(n, "jones")

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            enumerate_Jn(2, "magic")

    def test_catalan_values(self):
        assert [catalan(n) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]
