# -*- coding: utf-8 -*-

import pytest
from sympy import QQ

from errors import DimensionError, ParseError, ScalarError
from linalg import (
    as_rational, flatten_rows, format_scalar, from_rows, identity, kron, kron_identity, mat_add,
    mat_eq, mat_mul, mat_sub, parse_rational, qsqrt, quadratic_field, radical_parts, rank,
    scalar_mul, support, to_scalar, transpose, unify, zeros,
)
from samples import random_matrix


def radical(a, b, d):
    K = quadratic_field(d)
    return to_scalar(a, K) + to_scalar(b, K) * qsqrt(d), K


class TestScalars:
    def test_square_root_squares(self):
        K = quadratic_field(5)
        assert qsqrt(5) * qsqrt(5) == K.convert(5)

    def test_perfect_square_stays_rational(self):
        assert quadratic_field(4) == QQ
        assert qsqrt(4) == QQ(2)

    def test_golden_ratio(self):
        phi, K = radical(QQ(1, 2), QQ(1, 2), 5)
        conj, _ = radical(QQ(1, 2), QQ(-1, 2), 5)
        assert phi * phi == phi + K.one
        assert phi * conj == K.convert(-1)
        assert radical_parts(phi, K) == (QQ(1, 2), QQ(1, 2), 5)

    def test_radicand_with_square_factor(self):
        K = quadratic_field(12)
        assert radical_parts(qsqrt(12), K) == (QQ(0), QQ(1), 12)
        assert format_scalar(qsqrt(12), K) == "√12"

    def test_as_rational(self):
        K = quadratic_field(5)
        assert as_rational(K.convert(3), K) == 3
        assert as_rational(qsqrt(5), K) is None

    def test_radical_is_not_rational(self):
        with pytest.raises(ScalarError):
            to_scalar(qsqrt(2), QQ)

    def test_mixed_radicals(self):
        a = from_rows([[qsqrt(2)]], quadratic_field(2))
        b = from_rows([[qsqrt(3)]], quadratic_field(3))
        with pytest.raises(ScalarError):
            unify(a, b)

    @pytest.mark.parametrize("a, b, d, text", [
        (QQ(3, 2), 0, 0, "3/2"),
        (-4, 0, 0, "-4"),
        (QQ(1, 2), QQ(1, 2), 5, "1/2+1/2√5"),
        (0, -1, 5, "-√5"),
        (2, -1, 3, "2-√3"),
        (7, 0, 5, "7"),
    ])
    def test_format(self, a, b, d, text):
        x, K = radical(a, b, d)
        assert format_scalar(x, K) == text

    @pytest.mark.parametrize("text, value", [("3/2", QQ(3, 2)), ("-1", QQ(-1)), ("0.25", QQ(1, 4))])
    def test_parse_rational(self, text, value):
        assert parse_rational(text) == value

    @pytest.mark.parametrize("text", ["abc", "1/0", ""])
    def test_parse_rational_errors(self, text):
        with pytest.raises(ParseError):
            parse_rational(text)


class TestMatrices:
    def test_shapes(self):
        a = from_rows([[1, 2, 3]])
        assert a.shape == (1, 3)
        assert transpose(a).shape == (3, 1)
        assert zeros(2, 3).is_zero_matrix

    def test_ragged_rows(self):
        with pytest.raises(DimensionError):
            from_rows([[1, 2], [3]])

    def test_product(self):
        a = from_rows([[1, 2], [3, 4]])
        b = from_rows([[0, 1], [1, 0]])
        assert mat_mul(a, b) == from_rows([[2, 1], [4, 3]])
        assert mat_mul(a, identity(2)) == a
        with pytest.raises(DimensionError):
            mat_mul(a, from_rows([[1, 2, 3]]))

    def test_sum_and_scaling(self):
        a = from_rows([[1, 0], [0, 1]])
        assert mat_add(a, a) == scalar_mul(2, a)
        assert mat_sub(a, a) == zeros(2, 2)
        assert scalar_mul(0, a) == zeros(2, 2)
        with pytest.raises(DimensionError):
            mat_add(a, zeros(1, 2))

    def test_kron(self):
        assert kron(identity(2), from_rows([[1, 2]])) == from_rows([[1, 2, 0, 0], [0, 0, 1, 2]])
        assert kron_identity(1, from_rows([[5]])) == from_rows([[5]])

    def test_kron_identity_is_block_diagonal(self, rng):
        for _ in range(10):
            a = random_matrix(rng, 2, 3)
            assert kron_identity(3, a) == kron(identity(3), a)

    def test_kron_mixed_product(self, rng):
        for _ in range(10):
            a, b = random_matrix(rng, 2, 3), random_matrix(rng, 3, 2)
            c, d = random_matrix(rng, 2, 2), random_matrix(rng, 2, 1)
            assert mat_mul(kron(a, c), kron(b, d)) == kron(mat_mul(a, b), mat_mul(c, d))

    def test_radical_entries(self):
        K = quadratic_field(2)
        r = qsqrt(2)
        a = from_rows([[r, 1], [0, r]], K)
        assert mat_mul(a, a) == from_rows([[2, 2 * r], [0, 2]], K)

    def test_rational_and_radical_matrices_compare(self):
        K = quadratic_field(5)
        assert mat_eq(from_rows([[2, 0]]), from_rows([[2, 0]], K))
        assert not mat_eq(from_rows([[2, 0]]), from_rows([[2], [0]]))
        assert mat_mul(identity(2), from_rows([[qsqrt(5)], [1]], K)).domain == K

    def test_flatten_rows_and_support(self):
        swap = from_rows([[0, 1], [1, 0]])
        assert flatten_rows([identity(2), swap]) == from_rows([[1, 0, 0, 1], [0, 1, 1, 0]])
        assert support(swap) == {(0, 1), (1, 0)}
        with pytest.raises(DimensionError):
            flatten_rows([identity(2), identity(3)])


class TestRank:
    @pytest.mark.parametrize("rows, expected", [
        ([[1, 2], [2, 4]], 1),
        ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 3),
        ([[QQ(1, 2), 1], [1, 2]], 1),
        ([[0, 0], [0, 0]], 0),
        ([[0, 1, 1], [1, 1, 0], [1, 2, 1]], 2),
        ([[2, 3, 5, 7], [11, 13, 17, 19]], 2),
    ])
    def test_rank(self, rows, expected):
        assert rank(from_rows(rows)) == expected

    def test_rank_of_transpose(self, rng):
        for _ in range(20):
            a = random_matrix(rng, 3, 5)
            assert rank(a) == rank(transpose(a))

    def test_radical_entries(self):
        K = quadratic_field(2)
        r = qsqrt(2)
        assert rank(from_rows([[r, 2], [1, r]], K)) == 1
        assert rank(from_rows([[r, 1], [1, r]], K)) == 2

    def test_empty(self):
        assert rank(zeros(0, 3)) == 0
