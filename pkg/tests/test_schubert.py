import json
import random

import pytest
from hypothesis import given, strategies as st

from affine_schubert.doublesym import (CutoffTooSmall, double_h, double_schur, mtilde, p_x,
                                       quotient_project)
from affine_schubert.nilhecke import xi
from affine_schubert.peterson import compute_j, k_bounded_partitions, kostka_matrix_aff
from affine_schubert.poly import Poly, simple_root
from affine_schubert.schubert import (InsufficientData, LocalizedFunction, affine_double_stanley,
                                      affine_window, branching_coeffs,
                                      cohomology_generation_witness, epsilon_gr, epsilon_inf,
                                      gkm_check, k_double_schur, localize_gr, localize_inf,
                                      power_sum_alphabet, pullback_expansion, sz_window,
                                      xi_function)
from affine_schubert.weyl import (AffinePerm, FinitePermZ, affine_elements_up_to,
                                  grassmannian_up_to, partition_to_w_aff, rho, translation)

from oracles import eps_power_sum_affine

a = Poly.var


def alpha(i, n):
    return simple_root(i, n)


def eps_inf_by_substitution(r: int, w: FinitePermZ) -> Poly:
    """p_r[x-a] at w: sum over i >= 1 of a_{1-w(1-i)}^r - a_i^r, on a range covering the support."""
    lo, hi = w.support() if w.moved else (0, 0)
    B = max(abs(lo), abs(hi)) + 2
    out = Poly.zero()
    for i in range(1, B + 1):
        out = out + a(1 - w.apply(1 - i)) ** r - a(i) ** r
    return out


class TestEpsilonInf:
    def test_identity(self):
        for r in range(1, 4):
            assert epsilon_inf(p_x(r), FinitePermZ.identity()).is_zero()
        assert power_sum_alphabet(FinitePermZ.s(0)) == ([0], [1])

    @given(st.lists(st.integers(-3, 3), max_size=6), st.integers(1, 3))
    def test_power_sums_match_substitution(self, word, r):
        w = FinitePermZ.from_word(word)
        assert epsilon_inf(p_x(r), w) == eps_inf_by_substitution(r, w)

    @given(st.lists(st.integers(-2, 2), max_size=5), st.lists(st.integers(-2, 2), max_size=5))
    def test_ring_homomorphism(self, u, v):
        w = FinitePermZ.from_word(u + v)
        f, g = double_schur((2, 1)), double_h(2)
        assert epsilon_inf(f * g, w) == epsilon_inf(f, w) * epsilon_inf(g, w)


class TestEpsilonGr:
    def test_examples(self):
        n = 3
        # sum_i nu_i a_{1-i}^2 with nu = (1, 0, -1): a_0^2 - a_{-2}^2 = a_3^2 - a_1^2
        assert epsilon_gr(p_x(2), translation((1, 0, -1))) == a(3, n) ** 2 - a(1, n) ** 2
        s0 = AffinePerm.s(0, 2)
        assert epsilon_gr(double_h(1), s0) == a(2, 2) - a(1, 2)
        assert epsilon_gr(double_h(1), s0) == xi(rho(1, 2), s0)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_power_sums_match_window_oracle(self, n):
        rng = random.Random(n)
        for _ in range(15):
            w = AffinePerm.from_word([rng.randrange(n) for _ in range(rng.randrange(9))], n)
            for r in (1, 2, 3):
                expected = Poly.zero(n)
                for k, mult in eps_power_sum_affine(w.window, r).items():
                    expected = expected + a(k, n) ** r * mult
                assert epsilon_gr(p_x(r), w) == expected

    @pytest.mark.parametrize("n", [2, 3])
    def test_one_row_classes(self, n):
        for r in range(1, n):
            v = rho(r, n)
            for w in affine_elements_up_to(n, 4):
                assert epsilon_gr(double_h(r), w) == xi(v, w)

    def test_coset_invariance(self):
        n = 3
        for w in affine_elements_up_to(n, 4):
            for k in (1, 2):
                assert epsilon_gr(double_schur((2, 1)), w) == epsilon_gr(double_schur((2, 1)), w.right_mul_s(k))


class TestGKM:
    def test_sz_pass(self):
        rep = gkm_check(localize_inf(p_x(1)), sz_window(-1, 2, 3), window_label="[-1,2], l<=3")
        assert rep.passed and rep.checked > 0
        assert rep.window == "[-1,2], l<=3"

    def test_affine_pass_and_fail(self):
        n = 2
        f = xi_function(AffinePerm.s(0, n))
        win = affine_window(n, 4)
        assert gkm_check(f, win, d_max=3).passed
        bad = f.perturbed(AffinePerm.from_word([1, 0], n), Poly.one(n))
        rep = gkm_check(bad, win, d_max=3)
        assert not rep.passed and rep.witnesses
        data = rep.to_json()
        assert set(data) == {"check", "window", "pass", "checked", "witnesses"}
        assert json.loads(json.dumps(data)) == data

    def test_sz_fail(self):
        f = localize_inf(double_schur((1,)))
        bad = f.perturbed(FinitePermZ.s(0), Poly.one())
        assert not gkm_check(bad, sz_window(-1, 2, 2)).passed

    def test_insufficient_data(self):
        f = LocalizedFunction(2, {AffinePerm.identity(2): Poly.zero(2)}, "partial")
        with pytest.raises(InsufficientData):
            gkm_check(f, affine_window(2, 1))

    def test_epsilon_gr_passes(self):
        f = localize_gr(mtilde(1) * double_h(1), 3)
        assert gkm_check(f, affine_window(3, 3), d_max=2).passed


class TestStanley:
    def test_examples(self):
        n = 3
        st_ = affine_double_stanley(partition_to_w_aff((2, 1), n))
        assert st_.coords == {(1, 1): -alpha(1, n), (1, 1, 1): Poly.one(n), (2, 1): Poly.one(n)}
        assert affine_double_stanley(AffinePerm.identity(n)).coords == {(): Poly.one(n)}

    @pytest.mark.parametrize("n", [3, 4])
    def test_small_shapes_are_double_schurs(self, n):
        for la in k_bounded_partitions(n, 4):
            if la and la[0] + len(la) <= n:
                got = affine_double_stanley(partition_to_w_aff(la, n)).coords
                assert got == quotient_project(double_schur(la), n)

    @pytest.mark.parametrize("n", [2, 3])
    def test_grassmannian_rows_are_kostka_rows(self, n):
        K = kostka_matrix_aff(n, 5)
        for la in K.rows:
            got = affine_double_stanley(partition_to_w_aff(la, n)).coords
            assert got == K.row(la)
            assert got[la] == Poly.one(n)


class TestKDoubleSchur:
    def test_one_box(self):
        d = k_double_schur((1,), 3, 3)
        assert d[(1,)] == Poly.one(3)

    def test_duality(self):
        n, D = 3, 4
        K = kostka_matrix_aff(n, D)
        for la in K.rows:
            d = k_double_schur(la, n, D)
            for mu in K.rows:
                total = Poly.zero(n)
                for nu, c in K.row(mu).items():
                    total = total + c * d.get(nu, Poly.zero(n))
                assert total == (Poly.one(n) if la == mu else Poly.zero(n))

    def test_errors(self):
        with pytest.raises(CutoffTooSmall):
            k_double_schur((2, 1), 3, 2)
        with pytest.raises(ValueError):
            k_double_schur((3,), 3, 4)


class TestBranching:
    def test_level_two_infinite(self):
        B = branching_coeffs(2, None, 4)
        assert B.branch_row((2, 1)) == {(1, 1): alpha(1, 2), (1, 1, 1): Poly.const(2, 2)}
        assert B.branch_row((2,)) == {(1, 1): Poly.one(2)}
        assert B.basis_rows_agree()

    def test_level_two_from_four(self):
        B = branching_coeffs(2, 4, 4)
        assert B.branch_row((2, 1, 1)) == {(1, 1, 1): -alpha(1, 2), (1, 1, 1, 1): Poly.const(2, 2)}
        assert B.basis_rows_agree()

    def test_level_three_both_bases(self):
        n = 3
        B = branching_coeffs(n, None, 4)
        assert not B.basis_rows_agree()
        assert B.branch_row((3,)) == {(2, 1): Poly.one(n)}
        assert B.branch_row((3, 1)) == {(2, 1): alpha(2, n), (2, 1, 1): Poly.one(n), (2, 2): Poly.one(n)}
        assert B.branch_row((4,)) == {(2, 2): Poly.one(n)}
        over_reduced = B.branch_row((3,), basis="reduced-rows")
        assert over_reduced == {(1, 1, 1): -Poly.one(n), (2, 1): Poly.one(n)}

    @pytest.mark.parametrize("n,m", [(2, None), (3, None), (2, 4)])
    def test_factorization(self, n, m):
        B = branching_coeffs(n, m, 4)
        K = kostka_matrix_aff(n, 4)
        for nu in B.source_rows:
            for mu in B.target:
                total = Poly.zero(n)
                for la in B.target:
                    b = B.branch.get((nu, la))
                    k = K.entries.get((la, mu))
                    if b and k:
                        total = total + b * k
                assert total == B.reduced.get((nu, mu), Poly.zero(n))

    def test_quotient_coordinates_in_schubert_basis(self):
        # s_21(x||a) at n = 2: alpha_1 at (1,1), 2 at (1,1,1) over F~; -alpha_1, 2 over m(x||a)
        B = branching_coeffs(2, None, 3)
        assert B.branch_row((2, 1)) == {(1, 1): alpha(1, 2), (1, 1, 1): Poly.const(2, 2)}
        assert quotient_project(double_schur((2, 1)), 2) == {(1, 1): -alpha(1, 2), (1, 1, 1): Poly.const(2, 2)}

    def test_bad_level(self):
        with pytest.raises(ValueError):
            branching_coeffs(2, 3, 3)


class TestPullback:
    def test_examples(self):
        n = 2
        assert pullback_expansion(AffinePerm.s(1, n)) == {(1,): Poly.one(n)}
        got = pullback_expansion(AffinePerm.from_word([0, 1], n))
        assert got[(1,)] == -alpha(1, n)
        for w, la in _grassmannian_labels(n, 4).items():
            assert pullback_expansion(w) == {la: Poly.one(n)}

    @pytest.mark.parametrize("n", [2, 3])
    def test_coefficients_are_j_coefficients(self, n):
        grass = _grassmannian_labels(n, 4)
        for x in affine_elements_up_to(n, 4):
            got = pullback_expansion(x)
            for w, la in grass.items():
                assert got.get(la, Poly.zero(n)) == compute_j(w).coefficient(x)


class TestCohomologyGeneration:
    @pytest.mark.parametrize("n", [2, 3])
    def test_witness_reproduces_xi(self, n):
        for w in grassmannian_up_to(n, 3):
            coeffs = cohomology_generation_witness(w)
            # check on points longer than the ones used to solve
            for x in affine_elements_up_to(n, w.length() + 2):
                total = Poly.zero(n)
                for mu, c in coeffs.items():
                    v = c
                    for r in mu:
                        v = v * xi(rho(r, n), x)
                    total = total + v
                assert total == xi(w, x)


def _grassmannian_labels(n, max_size):
    return {partition_to_w_aff(la, n): la for la in k_bounded_partitions(n, max_size)}
