"""
Localization, GKM verification, affine double Stanley / Schur functions,
k-double Schur functions and branching coefficients.

Localization sends a double symmetric function to its values at fixed points.
For ``w`` in S_Z the value of ``p_r[x-a]`` is a finite signed power sum over
the symmetric difference of ``w.Z_{<=0}`` and ``Z_{<=0}``; for an affine
element only the translation part of the coset ``w S_n`` matters.

>>> from .doublesym import double_h
>>> str(epsilon_gr(double_h(1), AffinePerm.s(0, 2)))
'-a_1 + a_2'
"""

from __future__ import annotations

__all__ = [
    "InsufficientData", "LocalizedFunction", "GKMReport", "StanleyExpansion", "BranchMatrix",
    "epsilon_inf", "epsilon_gr", "power_sum_alphabet", "localize_inf", "localize_gr",
    "xi_function", "gkm_check", "sz_window", "affine_window",
    "affine_double_stanley", "k_double_schur", "branching_coeffs", "pullback_expansion",
    "graham_sign_check", "cohomology_generation_witness", "kostka_inverse",
]

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb
from typing import Callable, Optional

from .doublesym import CutoffTooSmall, SymFuncPrimal, equivariant_kostka
from .linalg import invert_unitriangular, solve_rational
from .nilhecke import xi
from .peterson import compute_j, j_product, k_bounded_partitions, kostka_matrix_aff
from .poly import NotDivisible, Poly, forget, forget_cyclic, root, to_alpha
from .weyl import (AffinePerm, FinitePermZ, Partition, affine_elements_up_to,
                   grassmannian_up_to, rho, translation,
                   translation_coset)


class InsufficientData(LookupError):
    """A check needed a function value that is not available."""


# localization ------------------------------------------------------------------

def power_sum_alphabet(w: FinitePermZ) -> tuple[list[int], list[int]]:
    """
    Indices (plus, minus) with eps_w(p_r[x-a]) = sum_plus a_i^r - sum_minus a_i^r.

    >>> power_sum_alphabet(FinitePermZ.s(0))
    ([0], [1])
    """
    lo, hi = w.support()
    R = max(abs(lo), abs(hi), 1) + 1
    image = {w.apply(m) for m in range(-R, 1)}
    plus = sorted(1 - j for j in image if j > 0)
    minus = sorted(1 - j for j in range(-R, 1) if j not in image)
    return plus, minus


def _eval_from_p(f: SymFuncPrimal, p_value: Callable[[int], Poly], lift: Callable[[Poly], Poly],
                 one: Poly) -> Poly:
    cache: dict = {}
    total = one * 0
    for mu, c in f.to_p().items():
        term = lift(c)
        for r in mu:
            if r not in cache:
                cache[r] = p_value(r)
            term = term * cache[r]
        total = total + term
    return total


def epsilon_inf(f: SymFuncPrimal, w: FinitePermZ) -> Poly:
    """The localization eps_w(f) in Q[a] for w in S_Z."""
    plus, minus = power_sum_alphabet(w)

    def p_value(r):
        out = Poly.zero()
        for i in plus:
            out = out + Poly.var(i) ** r
        for i in minus:
            out = out - Poly.var(i) ** r
        return out

    return _eval_from_p(f, p_value, lambda c: c, Poly.one())


def epsilon_gr(f: SymFuncPrimal, w: AffinePerm) -> Poly:
    """The localization at an affine element, in the cyclic ring (depends only on w S_n)."""
    n = w.n
    nu = translation_coset(w)

    def p_value(r):
        out = Poly.zero(n)
        for i, v in enumerate(nu, start=1):
            if v:
                out = out + Poly.var(1 - i, n) ** r * v
        return out

    return _eval_from_p(f, p_value, lambda c: forget(c, n), Poly.one(n))


# localized functions and GKM checks ------------------------------------------------

@dataclass
class LocalizedFunction:
    """
    Values of a function on group elements. ``domain`` is ``"SZ"`` or the level
    ``n`` of the affine group. ``func``, if given, supplies values on demand.
    """
    domain: object
    values: dict = field(default_factory=dict)
    description: str = ""
    func: Optional[Callable] = None
    coset_invariant: bool = False

    def __call__(self, w):
        if w in self.values:
            return self.values[w]
        if self.func is None:
            raise InsufficientData(f"no value at {w} for {self.description or 'function'}")
        v = self.func(w)
        self.values[w] = v
        return v

    def perturbed(self, w, delta) -> "LocalizedFunction":
        """A copy with one value shifted by ``delta`` (used to exercise failure paths)."""
        base = self
        target = w

        def g(x):
            v = base(x)
            return v + delta if x == target else v

        return LocalizedFunction(self.domain, {}, f"{self.description} perturbed at {w}", g,
                                 self.coset_invariant)


def localize_inf(f: SymFuncPrimal, description: str = "") -> LocalizedFunction:
    return LocalizedFunction("SZ", {}, description or "eps(f)", lambda w: epsilon_inf(f, w))


def localize_gr(f: SymFuncPrimal, n: int, description: str = "") -> LocalizedFunction:
    return LocalizedFunction(n, {}, description or "eps_Gr(f)", lambda w: epsilon_gr(f, w),
                             coset_invariant=True)


def xi_function(v: AffinePerm) -> LocalizedFunction:
    """w -> xi^v(w), from the group-element expansion in the nilHecke ring."""
    return LocalizedFunction(v.n, {}, f"xi^{v.word_str()}", lambda w: xi(v, w),
                             coset_invariant=v.is_grassmannian())


@dataclass
class GKMReport:
    check: str
    window: str
    passed: bool
    checked: int
    witnesses: list

    def to_json(self) -> dict:
        return {"check": self.check, "window": self.window, "pass": self.passed,
                "checked": self.checked, "witnesses": self.witnesses}


def sz_window(lo: int, hi: int, max_length: int) -> list[FinitePermZ]:
    """Permutations of Z supported in [lo, hi] with length at most ``max_length``."""
    pts = list(range(lo, hi + 1))
    out = []
    for img in permutations(pts):
        w = FinitePermZ.from_map(dict(zip(pts, img)))
        if w.length() <= max_length:
            out.append(w)
    return out


def affine_window(n: int, max_length: int, grassmannian_only: bool = False) -> list[AffinePerm]:
    if grassmannian_only:
        return grassmannian_up_to(n, max_length)
    return affine_elements_up_to(n, max_length)


def _divisible(f: Poly, d: Poly) -> bool:
    if not f:
        return True
    try:
        f.div_exact(d)
    except NotDivisible:
        return False
    return True


def gkm_check(f: LocalizedFunction, window: list, d_max: int = 3,
              window_label: str = "", max_witnesses: int = 5) -> GKMReport:
    """
    Verify the GKM divisibility conditions of ``f`` on ``window``.

    On S_Z: ``g(s_ij w) - g(w)`` divisible by ``alpha_ij`` whenever both points
    are in the window, and ``g(w s_i) = g(w)`` for ``i != 0``. On the affine
    group: ``f((1 - t)^d w)`` divisible by ``alpha_ij^d`` for the coroot
    translation ``t`` of ``alpha_ij``, ``d <= d_max``, plus coset invariance.
    """
    witnesses: list = []
    checked = 0
    label = window_label or f"{len(window)} elements"

    def fail(kind, **data):
        if len(witnesses) < max_witnesses:
            witnesses.append({"kind": kind, **{k: str(v) for k, v in data.items()}})

    if f.domain == "SZ":
        inwin = set(window)
        for w in window:
            gw = f(w)
            lo, hi = w.support()
            pts = sorted({p for x in window for p in (x.support() if x.moved else ())})
            for i in pts:
                for j in pts:
                    if i >= j:
                        continue
                    sw = FinitePermZ.from_map({i: j, j: i}) * w
                    if sw not in inwin:
                        continue
                    checked += 1
                    if not _divisible(f(sw) - gw, root(i, j)):
                        fail("divisibility", i=i, j=j, w=w)
            for i in pts:
                if i == 0:
                    continue
                ws = w * FinitePermZ.s(i)
                if ws in inwin:
                    checked += 1
                    if f(ws) != gw:
                        fail("coset", w=w, i=i)
        return GKMReport("gkm-SZ", label, not witnesses, checked, witnesses)

    n = f.domain
    for w in window:
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j:
                    continue
                nu = [0] * n
                nu[i - 1], nu[j - 1] = 1, -1
                t = translation(nu)
                alpha = root(i, j, n)
                vals = [f(w)]
                tw = w
                for q in range(1, d_max + 1):
                    tw = t * tw
                    vals.append(f(tw))
                for d in range(1, d_max + 1):
                    total = Poly.zero(n)
                    for q in range(d + 1):
                        total = total + vals[q] * ((-1) ** q * comb(d, q))
                    checked += 1
                    if not _divisible(total, alpha ** d):
                        fail("divisibility", i=i, j=j, d=d, w=w.word_str())
        if f.coset_invariant:
            for k in range(1, n):
                checked += 1
                if f(w.right_mul_s(k)) != f(w):
                    fail("coset", w=w.word_str(), i=k)
    return GKMReport("gkm-affine", label, not witnesses, checked, witnesses)


# affine double Stanley / Schur and friends -----------------------------------------

@dataclass(frozen=True)
class StanleyExpansion:
    n: int
    w: AffinePerm
    coords: dict
    length_cutoff: int

    def to_json(self) -> dict:
        return {"n": self.n, "w": list(self.w.window),
                "entries": [[list(mu), c.to_json()] for mu, c in
                            sorted(self.coords.items(), key=lambda t: (sum(t[0]), t[0]))]}


def affine_double_stanley(w: AffinePerm) -> StanleyExpansion:
    """
    Coordinates of F~_w(x||a) over m_mu(x||a) (mu_1 < n): the coefficient of
    A_w in j_{mu_1} j_{mu_2} ... . Only |mu| <= l(w) can contribute.
    """
    n = w.n
    lw = w.length()
    coords = {}
    for mu in k_bounded_partitions(n, lw):
        c = j_product(mu, n, lw).coefficient(w)
        if c:
            coords[mu] = c
    return StanleyExpansion(n, w, coords, lw)


@lru_cache(maxsize=None)
def kostka_inverse(n: int, max_size: int) -> dict:
    """Inverse of the equivariant k-Kostka matrix, as {(row, col): poly}."""
    K = kostka_matrix_aff(n, max_size)
    return invert_unitriangular(K.rows, K.entries, Poly.one(n))


def k_double_schur(la: Partition, n: int, D: int) -> dict:
    """
    Coordinates of the k-double Schur function over h^_nu(y||a), nu_1 < n,
    |nu| <= D.
    """
    la = tuple(la)
    if sum(la) > D:
        raise CutoffTooSmall(f"cutoff {D} is below |la| = {sum(la)}")
    if la and la[0] >= n:
        raise ValueError(f"{la} is not {n - 1}-bounded")
    X = kostka_inverse(n, D)
    return {nu: X[(nu, la)] for nu in k_bounded_partitions(n, D) if (nu, la) in X}


@dataclass(frozen=True)
class BranchMatrix:
    """The reduced Kostka matrix and the resulting branching coefficients."""
    n: int
    m: Optional[int]
    max_size: int
    reduced: dict          # (nu, mu) -> poly, mu_1 < n
    branch: dict           # (nu, la) -> poly, la_1 < n
    source_rows: tuple
    target: tuple
    # rows la_1 >= n written over the reduced rows with la_1 < n (rather than
    # over the true F~ rows); the two agree whenever those rows coincide
    branch_reduced_rows: dict = field(default_factory=dict)

    def reduced_row(self, nu):
        return {mu: c for (r, mu), c in self.reduced.items() if r == tuple(nu)}

    def branch_row(self, nu, basis: str = "schubert"):
        src = self.branch if basis == "schubert" else self.branch_reduced_rows
        return {la: c for (r, la), c in src.items() if r == tuple(nu)}

    def basis_rows_agree(self) -> bool:
        """Whether the reduced rows with la_1 < n are the F~ rows themselves."""
        K = kostka_matrix_aff(self.n, self.max_size).entries
        return all(self.reduced.get((la, mu)) == K.get((la, mu))
                   for la in self.target for mu in self.target)


def branching_coeffs(n: int, m: Optional[int], max_size: int) -> BranchMatrix:
    """
    Expand the images of the source Schubert functions (double Schurs when
    ``m`` is None, affine double Schurs of level ``m`` otherwise) in the affine
    double Schur basis of level ``n``.
    """
    if m is not None and (m % n or m <= n):
        raise ValueError("m must be a proper multiple of n")
    target = tuple(k_bounded_partitions(n, max_size))
    tset = set(target)
    if m is None:
        K = equivariant_kostka(max_size)
        rows = K.rows
        project = lambda c: forget(c, n)
    else:
        K = kostka_matrix_aff(m, max_size)
        rows = K.rows
        project = lambda c: forget_cyclic(c, n)
    reduced = {}
    for (nu, mu), c in K.entries.items():
        if mu in tset:
            v = project(c)
            if v:
                reduced[(nu, mu)] = v
    X = kostka_inverse(n, max_size)
    basis = {(la, mu): c for (la, mu), c in reduced.items() if la in tset}
    Y = invert_unitriangular(target, basis, Poly.one(n))
    branch = _times_inverse(reduced, rows, target, X, n)
    alt = _times_inverse(reduced, [nu for nu in rows if nu and nu[0] >= n], target, Y, n)
    return BranchMatrix(n, m, max_size, reduced, branch, tuple(rows), target, alt)


def _times_inverse(reduced: dict, rows, target, inv: dict, n: int) -> dict:
    out = {}
    for nu in rows:
        row = {mu: c for (r, mu), c in reduced.items() if r == nu}
        for la in target:
            total = Poly.zero(n)
            for mu, c in row.items():
                x = inv.get((mu, la))
                if x:
                    total = total + c * x
            if total:
                out[(nu, la)] = total
    return out


def pullback_expansion(x: AffinePerm) -> dict:
    """
    Expand F~_x over the affine double Schur basis {F~_la}; the coefficient at
    la equals the A_x coefficient of j_{w_la}.
    """
    st = affine_double_stanley(x)
    n, lx = x.n, x.length()
    X = kostka_inverse(n, lx)
    out = {}
    for la in k_bounded_partitions(n, lx):
        total = Poly.zero(n)
        for mu, c in st.coords.items():
            v = X.get((mu, la))
            if v:
                total = total + c * v
        if total:
            out[la] = total
    return out


# reports over many j's -----------------------------------------------------------

def graham_sign_check(n: int, max_length: int) -> GKMReport:
    """
    Check that (-1)^{l(x)-l(w)} j_w^x is a polynomial in the simple roots with
    nonnegative integer coefficients, for all Grassmannian w with l(w) <= max_length.
    """
    witnesses = []
    checked = 0
    for w in grassmannian_up_to(n, max_length):
        j = compute_j(w)
        for x, c in j.elt.terms.items():
            if x.is_grassmannian():
                continue
            checked += 1
            signed = c * (-1) ** (x.length() - w.length())
            g = to_alpha(signed)
            ok = g is not None and all(v.denominator == 1 and v >= 0 for v in g.terms.values())
            if not ok:
                witnesses.append({"w": w.word_str(), "x": x.word_str(), "coeff": str(c)})
    return GKMReport("graham-sign", f"n={n}, l(w)<={max_length}", not witnesses, checked, witnesses)


def cohomology_generation_witness(w: AffinePerm) -> dict:
    """
    Write xi^w as an S-combination of products of xi^{rho^r}. Returns
    {mu: coefficient} such that xi^w = sum_mu c_mu prod_i xi^{rho^{mu_i}}; the
    identity is certified on every Grassmannian point of length <= l(w),
    which determines an element of that degree.
    """
    n, lw = w.n, w.length()
    points = grassmannian_up_to(n, lw)
    mus = k_bounded_partitions(n, lw)
    from .poly import _mono_normalize  # local: monomial enumeration helper
    from itertools import combinations_with_replacement

    def monomials(d):
        return [_mono_normalize(((i, 1) for i in c), n)
                for c in combinations_with_replacement(range(1, n + 1), d)]

    unknowns = [(mu, m) for mu in mus for m in monomials(lw - sum(mu))]
    rho_vals = {(r, x): xi(rho(r, n), x) for r in range(1, n) for x in points}
    rows, rhs = [], []
    for x in points:
        target = xi(w, x)
        basis_vals = {}
        for mu in mus:
            v = Poly.one(n)
            for r in mu:
                v = v * rho_vals[(r, x)]
            basis_vals[mu] = v
        eq: dict = {}
        for mu, m in unknowns:
            contrib = basis_vals[mu] * Poly({m: 1}, n)
            for mono, c in contrib.terms.items():
                eq.setdefault(mono, {})[(mu, m)] = c
        monos = set(eq) | set(target.terms)
        for mono in sorted(monos):
            rows.append(eq.get(mono, {}))
            rhs.append(target.terms.get(mono, Fraction(0)))
    sol = solve_rational(rows, rhs, unknowns)
    out: dict = {}
    for (mu, m), c in sol.items():
        out[mu] = out.get(mu, Poly.zero(n)) + Poly({m: c}, n)
    return {mu: c for mu, c in out.items() if c}
