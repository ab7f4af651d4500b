# -*- coding: utf-8 -*-
import pytest

from errors import ParseError
from ordinals import (
    ONE, OMEGA, ZERO, CircularForm, Ordering, circle_count, cmp, depth, describe, from_int,
    nat_sum, omega_pow, parse_pword, print_pword, splits,
)


class TestParsePrint:
    def test_empty_word_is_zero(self):
        assert parse_pword("") == ZERO
        assert print_pword(ZERO) == ""

    def test_children_are_sorted(self):
        # ()(()) ile (())() aynı CNF ağacıdır
        assert parse_pword("()(())") == parse_pword("(())()")
        assert print_pword(parse_pword("()(())")) == "(())()"

    @pytest.mark.parametrize("text, position", [(")", 0), ("(()", 0), ("(x)", 1)])
    def test_malformed(self, text, position):
        with pytest.raises(ParseError) as info:
            parse_pword(text)
        assert info.value.position == position


class TestDescribe:
    @pytest.mark.parametrize("word, expected", [
        ("", "0"),
        ("()()()", "3"),
        ("(())", "ω"),
        ("(())(())()", "ω·2+1"),
        ("((()))", "ω^ω"),
        ("((())())(())()()()", "ω^(ω+1)+ω+3"),
    ])
    def test_cantor_notation(self, word, expected):
        assert describe(parse_pword(word)) == expected


class TestArithmetic:
    def test_from_int(self):
        assert from_int(0) == ZERO
        assert from_int(1) == ONE
        assert describe(from_int(4)) == "4"
        with pytest.raises(ValueError):
            from_int(-1)

    def test_natural_sum_is_commutative(self):
        a, b = parse_pword("(())()"), parse_pword("((()))")
        assert nat_sum(a, b) == nat_sum(b, a)
        assert describe(nat_sum(a, b)) == "ω^ω+ω+1"

    def test_natural_sum_unit(self):
        a = parse_pword("(()())")
        assert nat_sum(a, ZERO) == a
        assert nat_sum(ZERO, a) == a

    def test_omega_pow(self):
        assert omega_pow(ZERO) == ONE
        assert omega_pow(ONE) == OMEGA

    def test_circle_count_and_depth(self):
        a = parse_pword("(()())()")
        assert circle_count(a) == 4
        assert depth(a) == 2
        assert depth(ZERO) == 0

    def test_circle_count_cache_is_bounded(self):
        assert circle_count.cache_info().maxsize == 4096
        circle_count(parse_pword("((()))"))
        assert circle_count.cache_info().currsize <= 4096


class TestOrder:
    @pytest.mark.parametrize("smaller, larger", [
        ("", "()"),
        ("()", "()()"),
        ("()()()", "(())"),
        ("(())()", "(())()()"),
        ("(())(())", "(()())"),
        ("(()())", "((()))"),
    ])
    def test_cnf_order(self, smaller, larger):
        a, b = parse_pword(smaller), parse_pword(larger)
        assert a < b
        assert cmp(a, b) is Ordering.LESS
        assert cmp(b, a) is Ordering.GREATER

    def test_sorting(self):
        forms = [parse_pword(w) for w in ("(())", "", "()()", "()")]
        assert [describe(f) for f in sorted(forms)] == ["0", "1", "2", "ω"]


def test_splits_cover_every_cut():
    a = parse_pword("(())()()")
    parts = list(splits(a))
    assert len(parts) == 4
    for left, right in parts:
        assert nat_sum(left, right) == a
    assert parts[0] == (ZERO, a)
    assert isinstance(parts[-1][0], CircularForm)
