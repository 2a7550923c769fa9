"""
Independent reference implementations used only by tests.

Nothing here imports the package's group, nilHecke or linear algebra code:

* affine permutations are plain windows with their own composition and a
  closed-form length,
* the a = 0 k-Kostka matrix comes from products of cyclically decreasing
  elements in the affine nilCoxeter algebra,
* localization of power sums at affine elements is a direct finite
  multiset difference on a large window of integers.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import sympy as sp


# affine permutations as windows -------------------------------------------------

def aff_apply(w: tuple, i: int) -> int:
    n = len(w)
    q, r = divmod(i - 1, n)
    return w[r] + q * n


def aff_mul(u: tuple, v: tuple) -> tuple:
    return tuple(aff_apply(u, aff_apply(v, i)) for i in range(1, len(u) + 1))


def aff_s(i: int, n: int) -> tuple:
    w = list(range(1, n + 1))
    if i % n == 0:
        w[0], w[-1] = 0, n + 1
    else:
        w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def aff_length(w: tuple) -> int:
    """Inversion count: sum over i < j of |floor((w(j) - w(i)) / n)|."""
    n = len(w)
    return sum(abs((w[j] - w[i]) // n) for i in range(n) for j in range(i + 1, n))


def aff_from_word(word, n: int) -> tuple:
    w = tuple(range(1, n + 1))
    for i in word:
        w = aff_mul(w, aff_s(i, n))
    return w


# a = 0 affine nilCoxeter algebra -----------------------------------------------

def nc_mul(x: dict, y: dict) -> dict:
    out: dict = {}
    for u, c in x.items():
        lu = aff_length(u)
        for v, d in y.items():
            uv = aff_mul(u, v)
            if aff_length(uv) == lu + aff_length(v):
                out[uv] = out.get(uv, 0) + c * d
    return {k: v for k, v in out.items() if v}


def cyclically_decreasing(A: frozenset, n: int) -> tuple:
    """
    The element s_{i_1} ... s_{i_r} over a proper subset A of Z/n in an order
    where j+1 comes before j whenever both lie in A.
    """
    A = set(A)
    # start from an element whose successor is absent, then walk downward
    order = []
    remaining = set(A)
    while remaining:
        start = next(i for i in sorted(remaining) if (i + 1) % n not in remaining)
        i = start
        while i in remaining:
            order.append(i)
            remaining.discard(i)
            i = (i - 1) % n
    return aff_from_word(order, n)


@lru_cache(maxsize=None)
def nc_h(r: int, n: int) -> tuple:
    if r == 0:
        return ((tuple(range(1, n + 1)), 1),)
    terms = {}
    for A in combinations(range(n), r):
        w = cyclically_decreasing(frozenset(A), n)
        terms[w] = terms.get(w, 0) + 1
    return tuple(terms.items())


def grassmannian_of_partition(la, n: int) -> tuple:
    """w_la: left product of the cyclically decreasing elements of the row residue sets."""
    w = tuple(range(1, n + 1))
    for i, part in enumerate(la, start=1):
        res = frozenset((j - i) % n for j in range(1, part + 1))
        if len(res) != part:
            raise ValueError("partition is not bounded")
        row = cyclically_decreasing(res, n)
        nw = aff_mul(row, w)
        assert aff_length(nw) == aff_length(row) + aff_length(w)
        w = nw
    return w


def kostka_a0(n: int, parts: list) -> dict:
    """{(la, mu): int}: coefficient of A_{w_la} in h_{mu_1} h_{mu_2} ... at a = 0."""
    ws = {la: grassmannian_of_partition(la, n) for la in parts}
    out = {}
    for mu in parts:
        prod = {tuple(range(1, n + 1)): 1}
        for r in mu:
            prod = nc_mul(dict(nc_h(r, n)), prod)
        for la in parts:
            c = prod.get(ws[la], 0)
            if c:
                out[(la, mu)] = c
    return out


def k_schur_a0(n: int, parts: list) -> dict:
    """Classical k-Schur coordinates over h_nu: inverse of the a = 0 k-Kostka matrix."""
    K = kostka_a0(n, parts)
    M = sp.Matrix(len(parts), len(parts), lambda i, j: K.get((parts[i], parts[j]), 0))
    X = M.inv()
    return {(parts[i], parts[j]): Fraction(int(X[i, j].p), int(X[i, j].q))
            for i in range(len(parts)) for j in range(len(parts)) if X[i, j] != 0}


# windowed localization of power sums ----------------------------------------------

def eps_power_sum_affine(window: tuple, r: int):
    """
    sum over m in (w Z_{<=0}) minus Z_{<=0} of a_{1-m}^r, minus the sum over
    Z_{<=0} minus (w Z_{<=0}); returned as {index mod n: integer multiplicity}
    after the reduction a_{i + kn} = a_i (so the caller raises to the r-th power).
    """
    n = len(window)
    spread = max(abs(x - i) for i, x in enumerate(window, start=1))
    B = 4 * spread + 4 * n
    image = {aff_apply(window, m) for m in range(-B, 1)}
    plus = [m for m in image if m > 0]
    minus = [m for m in range(-B + 2 * spread + n, 1) if m not in image]
    counts: dict = {}
    for m in plus:
        k = (1 - m - 1) % n + 1
        counts[k] = counts.get(k, 0) + 1
    for m in minus:
        k = (1 - m - 1) % n + 1
        counts[k] = counts.get(k, 0) - 1
    return {k: v for k, v in counts.items() if v}
