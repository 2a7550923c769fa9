import pytest
from hypothesis import given, strategies as st

from affine_schubert.weyl import (AffinePerm, FinitePermZ, PartTooLarge, affine_elements_of_length,
                                  bounded_partitions, bruhat_leq, conjugate, core_of, core_to_affine,
                                  grassmannian_up_to, is_core, partition_to_w_aff,
                                  partition_to_w_inf, partitions, rho, translation,
                                  translation_coset, w_to_partition_inf)

from oracles import aff_from_word, aff_length

words2 = st.lists(st.integers(0, 1), max_size=8)
words3 = st.lists(st.integers(0, 2), max_size=8)


def add_residue(core, i, n):
    """Add every addable box of residue i (residue of (r, c) is c - r mod n)."""
    rows = list(core)
    out = []
    for r in range(len(rows) + 1):
        length = rows[r] if r < len(rows) else 0
        above = rows[r - 1] if r > 0 else float("inf")
        c = length  # 0-based column of the candidate box
        if length < above and (c - r) % n == i % n:
            length += 1
        out.append(length)
    return tuple(p for p in out if p)


def core_by_residues(word, n):
    core = ()
    for i in reversed(word):
        core = add_residue(core, i, n)
    return core


class TestAffineGroup:
    def test_examples(self):
        assert AffinePerm.from_word([1, 0], 2).length() == 2
        assert translation((1, -1)).apply(1) == 3
        w = AffinePerm.from_word([0, 1, 0, 1, 1, 0], 2)
        assert (w * w.inverse()).is_identity()

    @given(words3)
    def test_length_matches_inversion_formula(self, word):
        w = AffinePerm.from_word(word, 3)
        assert w.window == aff_from_word(word, 3)
        assert w.length() == aff_length(w.window)

    @given(words3)
    def test_reduced_word_round_trip(self, word):
        w = AffinePerm.from_word(word, 3)
        rw = w.reduced_word()
        assert len(rw) == w.length()
        assert AffinePerm.from_word(rw, 3) == w

    @pytest.mark.parametrize("n", [3, 4])
    def test_braid_relations(self, n):
        for i in range(n):
            j = (i + 1) % n
            assert AffinePerm.from_word([i, j, i], n) == AffinePerm.from_word([j, i, j], n)
            assert AffinePerm.from_word([i, i], n).is_identity()

    @given(words2, words2)
    def test_inverse_and_associativity(self, u, v):
        U, V = AffinePerm.from_word(u, 2), AffinePerm.from_word(v, 2)
        assert (U * V).inverse() == V.inverse() * U.inverse()

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_grassmannian_elements_match_bounded_partitions(self, n):
        for ell in range(6):
            grass = [w for w in affine_elements_of_length(n, ell) if w.is_grassmannian()]
            assert len(grass) == len(bounded_partitions(ell, n, ell))


class TestBruhat:
    def test_examples(self):
        s0, s1 = AffinePerm.s(0, 2), AffinePerm.s(1, 2)
        assert bruhat_leq(AffinePerm.identity(2), AffinePerm.from_word([1, 0, 1], 2))
        assert bruhat_leq(s0, AffinePerm.from_word([1, 0], 2))
        assert not bruhat_leq(s1, s0)

    @given(st.lists(st.integers(0, 2), min_size=1, max_size=7), st.data())
    def test_subword_property(self, word, data):
        w = AffinePerm.from_word(word, 3)
        rw = w.reduced_word()
        if not rw:
            return
        k = data.draw(st.integers(0, len(rw) - 1))
        v = AffinePerm.from_word(rw[:k] + rw[k + 1:], 3)
        assert bruhat_leq(v, w)
        if v.length() < w.length():
            assert not bruhat_leq(w, v)


class TestPartitions:
    def test_inf_examples(self):
        assert partition_to_w_inf((1,)) == FinitePermZ.s(0)
        assert partition_to_w_inf((2, 1)) == FinitePermZ.from_word([-1, 1, 0])
        assert w_to_partition_inf(FinitePermZ.s(0)) == (1,)

    @pytest.mark.parametrize("k", range(6))
    def test_inf_round_trip(self, k):
        for la in partitions(k):
            w = partition_to_w_inf(la)
            assert w.is_grassmannian()
            assert w.length() == k
            assert w_to_partition_inf(w) == la

    def test_aff_examples(self):
        assert partition_to_w_aff((1,), 2) == AffinePerm.s(0, 2)
        assert partition_to_w_aff((1, 1), 2) == AffinePerm.from_word([1, 0], 2)
        for n in (3, 4, 5):
            for r in range(1, n):
                assert partition_to_w_aff((r,), n) == AffinePerm.from_word(list(range(r - 1, -1, -1)), n)
                assert rho(r, n) == partition_to_w_aff((r,), n)

    def test_too_large(self):
        with pytest.raises(PartTooLarge):
            partition_to_w_aff((3,), 3)

    def test_is_grassmannian(self):
        assert AffinePerm.identity(2).is_grassmannian()
        assert not AffinePerm.s(1, 2).is_grassmannian()
        assert AffinePerm.from_word([1, 0], 2).is_grassmannian()


class TestCores:
    def test_examples(self):
        assert core_of(AffinePerm.identity(2)) == ()
        assert core_of(AffinePerm.s(0, 2)) == (1,)
        assert core_of(AffinePerm.from_word([1, 0], 2)) == (2, 1)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_against_residue_addition(self, n):
        for w in grassmannian_up_to(n, 6):
            kappa = core_by_residues(w.reduced_word(), n)
            assert core_of(w) == kappa
            assert is_core(kappa, n)
            assert core_to_affine(kappa, n) == w

    def test_conjugate(self):
        assert conjugate((3, 1)) == (2, 1, 1)
        assert conjugate(()) == ()


class TestTranslations:
    def test_examples(self):
        assert translation_coset(translation((2, -1, -1))) == (2, -1, -1)
        assert translation_coset(AffinePerm.s(0, 2)) == (1, -1)

    @given(words3, st.lists(st.integers(1, 2), max_size=4))
    def test_coset_invariance(self, word, finite):
        w = AffinePerm.from_word(word, 3)
        u = AffinePerm.from_word(finite, 3)
        assert translation_coset(w * u) == translation_coset(w)
