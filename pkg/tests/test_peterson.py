from math import comb

import pytest

from affine_schubert.doublesym import CutoffTooSmall
from affine_schubert.nilhecke import NilHeckeElt
from affine_schubert.peterson import (compute_j, coproduct_constants, j_product, j_special,
                                      j_times, kostka_matrix_aff, special_classes)
from affine_schubert.poly import Poly, simple_root, specialize_zero
from affine_schubert.weyl import AffinePerm, NotGrassmannian, grassmannian_up_to, partition_to_w_aff

from oracles import aff_from_word, kostka_a0, nc_h


def alpha(i, n):
    return simple_root(i, n)


def A(word, n, c=1):
    return NilHeckeElt.basis(AffinePerm.from_word(word, n), c)


def alternating(start, length):
    return [(start + t) % 2 for t in range(length)]


class TestLevelTwo:
    @pytest.mark.parametrize("k", range(1, 5))
    def test_closed_forms(self, k):
        n = 2
        a = alpha(1, n)
        odd = AffinePerm.from_word(alternating(0, 2 * k - 1), n)
        expected = A(alternating(0, 2 * k - 1), n) + A(alternating(1, 2 * k - 1), n) \
            + A(alternating(0, 2 * k), n, -a)
        assert compute_j(odd).elt == expected
        even = AffinePerm.from_word(alternating(1, 2 * k), n)
        assert compute_j(even).elt == A(alternating(1, 2 * k), n) + A(alternating(0, 2 * k), n)

    def test_products(self):
        n = 2
        a = alpha(1, n)
        j0 = compute_j(AffinePerm.s(0, n)).elt
        j10 = compute_j(AffinePerm.from_word([1, 0], n)).elt
        j010 = compute_j(AffinePerm.from_word([0, 1, 0], n)).elt
        assert j_times(j0, j10) == j010
        assert j_times(j0, j0) == j10 - j010.left_scale(a)

    def test_identity(self):
        for n in (2, 3, 4):
            assert compute_j(AffinePerm.identity(n)).elt == NilHeckeElt.one(n)


class TestStructure:
    @pytest.mark.parametrize("n", [2, 3])
    def test_centralizer_and_leading_terms(self, n):
        grass = grassmannian_up_to(n, 4)
        for w in grass:
            j = compute_j(w)
            assert j.stabilized
            assert j.coefficient(w) == Poly.one(n)
            for x, c in j.elt.terms.items():
                if x != w:
                    assert not x.is_grassmannian()
                assert c.is_homogeneous(x.length() - w.length())
            for m in range(1, n + 1):
                am = NilHeckeElt.scalar(Poly.var(m, n))
                assert j.elt * am == am * j.elt

    @pytest.mark.parametrize("n", [3, 4])
    def test_special_classes_commute(self, n):
        js = special_classes(n)
        for r in range(1, n):
            for s in range(r + 1, n):
                assert j_times(js[r], js[s]) == j_times(js[s], js[r])

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_j1_at_a_zero(self, n):
        j1 = j_special(1, n).elt
        at_zero = {x.window: int(specialize_zero(c)) for x, c in j1.terms.items() if specialize_zero(c)}
        assert at_zero == dict(nc_h(1, n))

    def test_cutoffs(self):
        n = 3
        w = partition_to_w_aff((2, 1), n)
        full = compute_j(w)
        short = compute_j(w, L=w.length())
        assert not short.stabilized or short.elt == full.elt
        if not short.stabilized:
            with pytest.raises(CutoffTooSmall):
                compute_j(w, L=w.length(), strict=True)
        with pytest.raises(CutoffTooSmall):
            compute_j(w, L=w.length() - 1)
        with pytest.raises(NotGrassmannian):
            compute_j(AffinePerm.s(1, n))
        with pytest.raises(ValueError):
            j_special(3, 3)

    def test_truncation_agrees(self):
        n = 3
        w = partition_to_w_aff((2, 1), n)
        full = compute_j(w).elt
        assert compute_j(w, L=5).elt == full.truncate(5)


class TestKostka:
    @pytest.mark.parametrize("p", range(1, 7))
    def test_level_two_closed_form(self, p):
        K = kostka_matrix_aff(2, 6)
        for j in range(p):
            expected = Poly.const(comb((p - 1) // 2, j), 2) * (-alpha(1, 2)) ** j
            assert K[(1,) * p, (1,) * (p - j)] == expected

    def test_examples(self):
        K3 = kostka_matrix_aff(3, 4)
        assert K3[(2,), (1, 1)] == Poly.one(3)
        assert K3[(1, 1), (1, 1)] == Poly.one(3)
        assert K3[(2, 1, 1), (1, 1, 1)] == -2 * (alpha(1, 3) + alpha(2, 3))
        K4 = kostka_matrix_aff(4, 4)
        assert K4[(2, 2), (1, 1)] == (alpha(1, 4) + alpha(2, 4) + alpha(3, 4)) ** 2
        for K in (K3, K4):
            assert K.is_unitriangular()

    def test_product_expansion_two_boxes(self):
        n = 2
        prod = j_product((1, 1), n)
        w11 = partition_to_w_aff((1, 1), n)
        assert prod.coefficient(w11) == Poly.one(n)
        assert prod.coefficient(partition_to_w_aff((1,), n)).is_zero()

    def test_a_zero_against_nilcoxeter(self):
        n = 3
        K = kostka_matrix_aff(n, 6)
        parts = list(K.rows)
        oracle = kostka_a0(n, parts)
        got = {(la, mu): int(specialize_zero(c)) for (la, mu), c in K.entries.items()
               if specialize_zero(c)}
        assert got == oracle
        for la in parts:
            assert partition_to_w_aff(la, n).window == _oracle_window(la, n)


def _oracle_window(la, n):
    from oracles import grassmannian_of_partition
    return grassmannian_of_partition(la, n)


class TestCoproductConstants:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_counit_and_symmetry(self, n):
        for i in range(1, n):
            c = coproduct_constants(i, n)
            assert c[(i, 0)] == Poly.one(n) == c[(0, i)]
            for (r, l), v in c.items():
                assert v == c[(l, r)]
                if r + l < i:
                    assert v.is_zero()
        with pytest.raises(ValueError):
            coproduct_constants(0, n)


def test_word_helper_matches_oracle():
    assert AffinePerm.from_word([0, 1, 0], 2).window == aff_from_word([0, 1, 0], 2)
