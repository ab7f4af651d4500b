# -*- coding: utf-8 -*-
import pytest

from equations import applicable_rewrites, k_rewrites, kn_rewrites, l_rewrites, random_rewrite
from normalize import normalize_K, normalize_Kn, normalize_L
from samples import random_ext_word, random_k_word, random_kn_word
from terms import Circle, Diapsis, K, Kn, L, Ln, Term, parse_term, print_term


class TestSingleSteps:
    def test_circle_definition(self):
        results = {print_term(r.result) for r in k_rewrites(parse_term("u1 n1", K)) if r.rule == "circle-def"}
        assert "c" in results

    def test_hc2_inserts_circle(self):
        found = [r for r in kn_rewrites(parse_term("h1 h1", Kn(3))) if r.rule == "hc2" and r.direction == "→"]
        assert len(found) == 1
        assert found[0].result.gens == (Circle(), Diapsis(1))

    def test_h2_right_to_left_stays_in_width(self):
        for r in kn_rewrites(parse_term("h1", Kn(2))):
            assert all(g.i <= 1 for g in r.result.gens if isinstance(g, Diapsis))

    def test_unit_insertion_everywhere(self):
        t = parse_term("u1 n2", K)
        inserted = [r for r in k_rewrites(t) if r.rule == "1" and r.direction == "←"]
        assert len(inserted) == len(t) + 1

    def test_no_equations_for_Ln(self):
        with pytest.raises(ValueError):
            applicable_rewrites(parse_term("h1", Ln(2)))

    def test_random_rewrite_on_unit(self, rng):
        # 1'e bile birim eklenip silinebilir
        t = parse_term("1", K)
        assert random_rewrite(t, rng) is not None


class TestRewritesPreserveNormalForms:
    def test_L(self, rng):
        for _ in range(60):
            w = Term(random_ext_word(rng, 4, 3), L)
            expected = normalize_L(w)
            for r in l_rewrites(w):
                assert normalize_L(r.result) == expected, (r.rule, r.direction, print_term(w))

    def test_K(self, rng):
        for _ in range(60):
            t = random_k_word(rng, 5, 3)
            expected = normalize_K(t)
            for r in k_rewrites(t):
                assert normalize_K(r.result) == expected, (r.rule, r.direction, print_term(t))

    def test_Kn(self, rng):
        for _ in range(60):
            t = random_kn_word(rng, 5, 6)
            expected = normalize_Kn(t)
            for r in kn_rewrites(t):
                assert normalize_Kn(r.result) == expected, (r.rule, r.direction, print_term(t))
