"""
A walk through the n = 2 case, where everything has a closed form.

Run with ``python demos/level_two_tour.py``.
"""

from affine_schubert import AffinePerm, compute_j, kostka_matrix_aff, simple_root
from affine_schubert.peterson import j_times

n = 2
alpha = simple_root(1, n)


def show(title, elt):
    print(title)
    for w, c in sorted(elt.terms.items(), key=lambda kv: (kv[0].length(), kv[0].word_str())):
        print(f"   A[{w.word_str()}]  {c}")


# Peterson's j-functions for the first few Grassmannian elements
for word in ([0], [1, 0], [0, 1, 0]):
    w = AffinePerm.from_word(word, n)
    show(f"j for {w.word_str()}", compute_j(w).elt)

# j_{s0} squared is not j_{s1 s0}: the equivariant correction is -alpha_1 j_{s0 s1 s0}
j0 = compute_j(AffinePerm.s(0, n)).elt
j10 = compute_j(AffinePerm.from_word([1, 0], n)).elt
j010 = compute_j(AffinePerm.from_word([0, 1, 0], n)).elt
print("j0 * j0 == j10 - alpha_1 j010:", j_times(j0, j0) == j10 - j010.left_scale(alpha))

# The column rows of the equivariant 1-Kostka matrix are binomials in -alpha_1
K = kostka_matrix_aff(n, 6)
for p in range(1, 7):
    row = K.row((1,) * p)
    print(f"1^{p}:", ", ".join(f"1^{len(mu)} -> {c}" for mu, c in row.items() if c))
