# -*- coding: utf-8 -*-
import pytest

from errors import IndexRangeError, ParseError, TheoryError
from ordinals import ONE, ZERO, parse_pword
from terms import (
    A, B, C, J, K, L, Cap, Circle, Cup, Diapsis, Jn, Kn, Ln, Term, Unit, embed_diapsides,
    extword_to_term, from_extgen, make_term, parse_extword, parse_term, print_extword,
    print_term, retheory, theory_from_name, to_extword,
)


class TestParse:
    def test_cup_cap_circle_unit(self):
        t = parse_term("u1 n2 c 1", K)
        assert t.gens == (Cup(1), Cap(2), Circle(), Unit())

    def test_diapsis_is_embedded_in_omega_theories(self):
        assert parse_term("h2", K).gens == (Cap(2), Cup(2))

    def test_diapsis_kept_in_finite_theories(self):
        assert parse_term("h2 h1", Kn(3)).gens == (Diapsis(2), Diapsis(1))

    def test_extended_tokens_in_L(self):
        t = parse_term("a1^(()) C2^e", L)
        assert t.gens == (A(1, parse_pword("(())")), C(2, ZERO))

    def test_extended_tokens_expand_in_K(self):
        # C1^() = ∪1 ∩1
        assert parse_term("C1^()", K).gens == (Cup(1), Cap(1))
        # a1^() = ∪1 ∪2 ∩2
        assert parse_term("a1^()", K).gens == (Cup(1), Cup(2), Cap(2))

    def test_whitespace_is_free(self):
        assert parse_term("  u1\tn1  ", K) == parse_term("u1 n1", K)

    @pytest.mark.parametrize("text, position", [
        ("", 0),
        ("u1 x2", 3),
        ("u1 u0", 3),
        ("n1 a1^(()", 3),
    ])
    def test_parse_errors_carry_position(self, text, position):
        with pytest.raises(ParseError) as info:
            parse_term(text, L)
        assert info.value.position >= position
        assert info.value.text == text


class TestTheoryChecks:
    def test_circle_is_not_an_L_generator(self):
        with pytest.raises(TheoryError):
            parse_term("c", L)

    def test_diapsis_out_of_range(self):
        with pytest.raises(IndexRangeError):
            parse_term("h3", Kn(3))

    def test_cups_not_in_Kn(self):
        with pytest.raises(TheoryError):
            parse_term("u1", Kn(3))

    def test_ext_gens_rejected_by_make_term_in_K(self):
        with pytest.raises(TheoryError):
            make_term([A(1)], K)

    def test_Ln_circle_index_bound(self):
        assert parse_term("C4^()", Ln(3)).gens == (C(4, ONE),)
        with pytest.raises(IndexRangeError):
            parse_term("C5^()", Ln(3))

    @pytest.mark.parametrize("name, n, expected", [
        ("K", None, K), ("J", 7, J), ("Kn", 4, Kn(4)), ("Jn", 2, Jn(2)), ("Ln", 3, Ln(3)),
    ])
    def test_theory_from_name(self, name, n, expected):
        assert theory_from_name(name, n) == expected

    def test_finite_theory_needs_width(self):
        with pytest.raises(TheoryError):
            theory_from_name("Kn")
        with pytest.raises(TheoryError):
            theory_from_name("Q")

    def test_multiplication_needs_same_theory(self):
        t = parse_term("u1", K)
        assert (t + t).gens == (Cup(1), Cup(1))
        with pytest.raises(TheoryError):
            t + parse_term("u1", L)


class TestPrinting:
    @pytest.mark.parametrize("text", ["u1 n3 c", "1", "h1 h2", "c c h2"])
    def test_print_parse(self, text):
        theory = Kn(4) if "h" in text else K
        assert print_term(parse_term(text, theory)) == text

    def test_empty_word_prints_as_unit(self):
        assert print_term(Term((), K)) == "1"
        assert print_extword(()) == "1"

    def test_extended_printing(self):
        assert print_extword((A(1), B(2, ONE))) == "a1^e b2^()"


class TestEmbeddings:
    def test_embed_diapsides(self):
        t = embed_diapsides(parse_term("h1 c", Kn(3)))
        assert t.theory == K
        assert t.gens == (Cap(1), Cup(1), Circle())

    def test_embed_Ln_goes_to_L(self):
        assert embed_diapsides(parse_term("h1", Ln(2))).theory == L

    def test_to_extword(self):
        assert to_extword(parse_term("u2 1 n1", L)) == (A(2), B(1))
        with pytest.raises(TheoryError):
            to_extword(parse_term("u1", K))

    def test_circle_expansion(self):
        # C1^(()) = ∪1 C2^() ∩1 = ∪1 ∪2 ∩2 ∩1
        gens = from_extgen(C(1, parse_pword("(())"))).gens
        assert gens == (Cup(1), Cup(2), Cap(2), Cap(1))

    def test_a_generator_expansion(self):
        # a2^() = ∪2 C3^() = ∪2 ∪3 ∩3
        gens = from_extgen(A(2, parse_pword("()"))).gens
        assert gens == (Cup(2), Cup(3), Cap(3))

    def test_extword_to_term_concatenates(self):
        w = parse_extword("a1^e b1^e")
        assert extword_to_term(w).gens == (Cup(1), Cap(1))

    def test_retheory(self):
        t = retheory(parse_term("u1 n1", L), K)
        assert t.theory == K
        with pytest.raises(TheoryError):
            retheory(parse_term("u1 c", K), L)
