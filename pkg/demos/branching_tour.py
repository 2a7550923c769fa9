"""
Branching from the infinite Grassmannian to the affine one for n = 3.

Each double Schur function s_nu(x||a) projects to the affine double Schur
functions F~_la; rows with nu_1 < 3 are Kostka rows, longer rows branch.

Run with ``python demos/branching_tour.py``.
"""

from affine_schubert import branching_coeffs

B = branching_coeffs(3, None, 4)
for nu in B.source_rows:
    if nu and nu[0] >= 3:
        true_row = B.branch_row(nu)
        over_reduced = B.branch_row(nu, basis="reduced-rows")
        print(f"s_{nu}:")
        print("   over F~       ", {la: str(c) for la, c in true_row.items()})
        print("   over reduced  ", {la: str(c) for la, c in over_reduced.items()})
