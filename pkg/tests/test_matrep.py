# -*- coding: utf-8 -*-
import pytest

from adjunction import Fof, Id, Phi, kappa, psi
from errors import DimensionError, IndexRangeError, ParseError, ScalarError, TheoryError
from linalg import from_rows, identity, kron_identity, mat_mul, scalar_mul
from matrep import (
    BraidRep, H_eval, braid_kernel_search, braid_rho, braid_scalars, check_braid_relations,
    check_dim, e_row, equiv_J, eta, faithfulness_check, format_braid, format_matrix, gamma_mat,
    h_mat, independence_check, independence_report, j_witness, mat_adjunction_identities,
    parse_braid, phi_mat, relation_product_check, rep_Kn,
)
from normalize import KNF, eq_J, jones_to_term, knf_to_term, normalize_K, normalize_Kn
from samples import random_braid_word, random_k_word, random_kn_word, random_matrix
from terms import K, Kn, parse_term

E2_CAP_CUP = [[1, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 1]]


class TestBaseMatrices:
    def test_e_rows(self):
        assert e_row(2) == from_rows([[1, 0, 0, 1]])
        assert e_row(3) == from_rows([[1, 0, 0, 0, 1, 0, 0, 0, 1]])

    def test_cap_cup(self):
        assert h_mat(2, 2, 1) == from_rows(E2_CAP_CUP)

    def test_phi_gamma_is_p(self):
        assert mat_mul(phi_mat(2, 1), gamma_mat(2, 1)) == from_rows([[2]])
        assert mat_mul(phi_mat(3, 2), gamma_mat(3, 2)) == scalar_mul(3, identity(2))

    def test_shapes(self):
        assert phi_mat(2, 3).shape == (3, 12)
        assert gamma_mat(2, 3).shape == (12, 3)
        assert h_mat(3, 3, 2).shape == (27, 27)

    def test_h_index_range(self):
        with pytest.raises(IndexRangeError):
            h_mat(2, 3, 3)

    def test_size_cap(self):
        assert check_dim(2, 11) == 2048
        with pytest.raises(DimensionError):
            check_dim(2, 12)
        with pytest.raises(DimensionError):
            h_mat(2, 4, 1, max_dim=8)


class TestKnRepresentation:
    @pytest.mark.parametrize("p", [2, 3])
    def test_relations(self, p):
        n = 3
        h1 = rep_Kn(p, n, parse_term("h1", Kn(n)))
        assert rep_Kn(p, n, parse_term("h1 h1", Kn(n))) == scalar_mul(p, h1)
        assert rep_Kn(p, n, parse_term("c h1", Kn(n))) == scalar_mul(p, h1)
        assert rep_Kn(p, n, parse_term("h1 h2 h1", Kn(n))) == h1
        assert rep_Kn(p, n, parse_term("1", Kn(n))) == identity(p ** n)

    def test_respects_normal_forms(self, rng):
        for _ in range(40):
            t = random_kn_word(rng, 4, 6)
            nf = jones_to_term(normalize_Kn(t), Kn(4))
            assert rep_Kn(2, 4, t) == rep_Kn(2, 4, nf)

    def test_rejects_omega_terms(self):
        with pytest.raises(TheoryError):
            rep_Kn(2, 2, parse_term("u1", K))


class TestFunctorH:
    def test_kappa(self):
        assert H_eval(2, kappa(0)) == from_rows([[2]])
        assert H_eval(3, Id(2)) == identity(9)

    def test_F_is_kronecker(self):
        assert H_eval(2, Fof(Phi(0))) == kron_identity(2, phi_mat(2, 1))
        assert H_eval(2, Fof(Phi(0))).shape == (2, 8)

    def test_eta_of_circle(self):
        assert eta(2, parse_term("u1 n1", K)) == from_rows([[2]])
        assert eta(3, parse_term("c", K)) == from_rows([[3]])

    @pytest.mark.parametrize("f", [Phi(0), Fof(Phi(0)), kappa(1)])
    def test_H_agrees_with_eta_of_psi(self, f):
        assert equiv_J(2, H_eval(2, f), eta(2, psi(f)))

    def test_matrix_adjunction(self, rng):
        for p in (2, 3):
            for _ in range(5):
                f = random_matrix(rng, rng.randint(1, 3), rng.randint(1, 3))
                assert all(mat_adjunction_identities(p, f).values())


class TestJEquivalence:
    def test_scalar_multiples(self):
        w = j_witness(2, from_rows([[2]]), from_rows([[1]]))
        assert w is not None and w.m == 1
        assert equiv_J(2, from_rows([[1]]), from_rows([[4]]))
        assert not equiv_J(2, from_rows([[1]]), from_rows([[3]]))

    def test_kronecker_padding(self):
        assert equiv_J(2, identity(2), identity(1))

    def test_different_matrices(self):
        assert not equiv_J(2, from_rows([[1, 0], [0, 0]]), identity(2))

    @pytest.mark.parametrize("left, right", [
        ("n1 c u1", "c c n1 u1"),
        ("u1 n2 c", "1"),
        ("u1 n1 n2", "n2"),
    ])
    def test_equal_in_J_means_equivalent_images(self, left, right):
        t, u = parse_term(left, K), parse_term(right, K)
        assert eq_J(t, u)
        for p in (2, 3):
            assert equiv_J(p, eta(p, t), eta(p, u))

    def test_J_twins_of_random_words(self, rng):
        for _ in range(30):
            t = random_k_word(rng, 4, 2)
            nf = normalize_K(t)
            u = knf_to_term(KNF(nf.caps, rng.randint(0, 3), nf.cups))
            assert eq_J(t, u)
            assert equiv_J(2, eta(2, t), eta(2, u))

    def test_different_J_classes_stay_apart(self):
        assert not equiv_J(2, eta(2, parse_term("n1 u1", K)), eta(2, parse_term("1", K)))
        assert not equiv_J(3, eta(3, parse_term("n2", K)), eta(3, parse_term("n1", K)))

    def test_needs_p_at_least_two(self):
        with pytest.raises(DimensionError):
            j_witness(1, identity(1), identity(1))


class TestIndependence:
    @pytest.mark.parametrize("p, n, count", [(2, 2, 2), (2, 3, 5), (3, 3, 5)])
    def test_circle_free_forms_are_independent(self, p, n, count):
        report = independence_report(p, n)
        assert report.count == count
        assert report.rank == count
        assert independence_check(p, n)

    def test_faithfulness(self):
        report = faithfulness_check(2, 3, max_circles=1)
        assert report.count == 10
        assert report.faithful

    def test_relation_view(self):
        checks, failures = relation_product_check(2, 3)
        assert checks == 25
        assert failures == []


class TestBraids:
    def test_parse_format(self):
        assert parse_braid("s1 s2! 1") == ((1, 1), (2, -1))
        assert format_braid(((1, 1), (2, -1))) == "s1 s2!"
        assert format_braid(()) == "1"

    @pytest.mark.parametrize("text", ["t1", "s0", "s1!!"])
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            parse_braid(text)

    def test_p2_scalars(self):
        s = braid_scalars(2, 1, "+")
        assert s.alpha == 1 and s.beta == -1

    def test_p3_scalars_are_conjugate_roots(self):
        s = braid_scalars(3, 1, "+")
        r = s.alpha * s.beta_inv
        assert r * r + 3 * r + 1 == s.domain.zero
        assert s.beta * s.beta_inv == s.domain.one

    @pytest.mark.parametrize("kwargs", [{"alpha": 0}, {"branch": "x"}])
    def test_scalar_errors(self, kwargs):
        with pytest.raises(ScalarError):
            braid_scalars(2, **{"alpha": 1, **kwargs})

    def test_generator_range(self):
        with pytest.raises(IndexRangeError):
            BraidRep(2, 3).generator(3, 1)
        with pytest.raises(ScalarError):
            BraidRep(1, 3)

    @pytest.mark.parametrize("p, n, branch", [(2, 3, "+"), (2, 4, "-"), (3, 3, "+"), (3, 3, "-")])
    def test_relations_hold(self, p, n, branch):
        report = check_braid_relations(p, n, 1, branch)
        assert report.all_hold
        assert all(rel.holds for rel in report.witnesses)

    def test_relation_inventory(self):
        report = check_braid_relations(2, 4)
        names = [rel.name for rel in report.relations]
        assert names.count("σ0") == 1
        assert names.count("σ2") == 6
        assert names.count("σ3") == 2
        assert report.alpha == "1"
        assert len(report.witnesses) == 2

    def test_inverse_words_cancel(self, rng):
        rho = BraidRep(3, 3, 2, "-")
        for _ in range(5):
            w = random_braid_word(rng, 3, 4)
            inverse = tuple((i, -e) for i, e in reversed(w))
            assert rho(w + inverse) == rho.identity

    def test_p2_is_not_faithful(self):
        assert braid_rho(2, 3, parse_braid("s1 s1")) == identity(8)

    def test_kernel_search(self):
        report = braid_kernel_search(2, 3, max_len=2)
        assert report.words_checked == 16
        assert report.certified == ("s1 s1", "s1! s1!", "s2 s2", "s2! s2!")
        assert report.candidates == ()


class TestFormatting:
    def test_text(self):
        assert format_matrix(h_mat(2, 2, 1)) == "1 0 0 1\n0 0 0 0\n0 0 0 0\n1 0 0 1\n"

    def test_csv(self):
        assert format_matrix(from_rows([[1, -2]]), "csv") == "1,-2\n"

    def test_text_alignment(self):
        assert format_matrix(from_rows([[1, -2], [10, 0]])) == " 1 -2\n10  0\n"

    def test_radical_entries(self):
        rows = format_matrix(BraidRep(3, 2).generator(1, 1), "csv").splitlines()
        assert len(rows) == 9
        assert rows[0] == "-1/2-1/2√5,0,0,0,1,0,0,0,1"
        assert rows[1].split(",")[1] == "-3/2-1/2√5"

    def test_unknown(self):
        with pytest.raises(ValueError):
            format_matrix(identity(1), "tsv")
