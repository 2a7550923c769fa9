"""
Localization on the affine Grassmannian for n = 3: evaluate double symmetric
functions at affine permutations, compare with the xi basis, and run the GKM
conditions on a small window.

Run with ``python demos/localization_tour.py``.
"""

from affine_schubert import AffinePerm, double_schur, epsilon_gr, gkm_check, partition_to_w_aff, xi
from affine_schubert.schubert import affine_window, localize_gr
from affine_schubert.weyl import affine_elements_up_to

n = 3
la = (1, 1)
v = partition_to_w_aff(la, n)
f = double_schur(la)

print(f"s_{la}(x||a) against xi^{v.word_str()} on elements of length <= 3")
for w in affine_elements_up_to(n, 3):
    value = epsilon_gr(f, w)
    flag = "" if value == xi(v, w) else "   <-- differs"
    print(f"   {w.word_str() or 'id':<12} {value}{flag}")

report = gkm_check(localize_gr(f, n), affine_window(n, 4), d_max=2)
print("GKM on length <= 4:", "pass" if report.passed else "fail", f"({report.checked} checks)")

bad = localize_gr(f, n).perturbed(AffinePerm.from_word([1, 0], n), 1)
report = gkm_check(bad, affine_window(n, 4), d_max=2)
print("after perturbing one value:", "pass" if report.passed else "fail",
      "witness", report.witnesses[0] if report.witnesses else None)
