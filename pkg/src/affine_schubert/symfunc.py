"""
Classical symmetric functions in a single alphabet, stored as Schur
expansions ``{partition: coefficient}``.

Coefficients may be anything supporting ``+``, ``*`` and truthiness (ints,
Fractions, :class:`~affine_schubert.poly.Poly`). Only integer combinatorial
tables live here; everything double or equivariant is built on top of them.

>>> lr_product((1,), (1,))
{(2,): 1, (1, 1): 1}
>>> character((2, 1), (1, 1, 1)), character((2, 1), (3,))
(2, -1)
"""

from __future__ import annotations

__all__ = [
    "pieri_h", "pieri_e", "kostka", "inverse_kostka", "h_to_s", "s_to_h",
    "e_to_s", "s_to_m", "m_to_s", "character", "z_coefficient", "p_to_s",
    "s_to_p", "lr_product", "hook", "add_scaled", "multiply", "horizontal_strips_removed",
    "vertical_strips_removed",
]

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .linalg import invert_unitriangular
from .weyl import Partition, conjugate, multiplicities, partitions


# strips ----------------------------------------------------------------------

@lru_cache(maxsize=None)
def pieri_h(mu: Partition, r: int) -> tuple[Partition, ...]:
    """Shapes la with la/mu a horizontal strip of size r (so s_mu h_r = sum s_la)."""
    out = []
    rows = list(mu) + [0]

    def rec(i, left, acc):
        if i == len(rows):
            if left == 0:
                out.append(tuple(p for p in acc if p))
            return
        cap = left if i == 0 else min(left, rows[i - 1] - rows[i])
        for add in range(cap, -1, -1):
            rec(i + 1, left - add, acc + [rows[i] + add])

    rec(0, r, [])
    return tuple(out)


@lru_cache(maxsize=None)
def pieri_e(mu: Partition, r: int) -> tuple[Partition, ...]:
    """Shapes la with la/mu a vertical strip of size r."""
    return tuple(conjugate(la) for la in pieri_h(conjugate(mu), r))


@lru_cache(maxsize=None)
def horizontal_strips_removed(la: Partition) -> tuple[Partition, ...]:
    """All mu inside la with la/mu a horizontal strip (any size)."""
    out = []
    rows = list(la)

    def rec(i, acc):
        if i == len(rows):
            out.append(tuple(p for p in acc if p))
            return
        lo = rows[i + 1] if i + 1 < len(rows) else 0
        for v in range(rows[i], lo - 1, -1):
            rec(i + 1, acc + [v])

    rec(0, [])
    return tuple(out)


@lru_cache(maxsize=None)
def vertical_strips_removed(la: Partition) -> tuple[Partition, ...]:
    return tuple(conjugate(mu) for mu in horizontal_strips_removed(conjugate(la)))


# Kostka numbers and h, e, m <-> s ---------------------------------------------

@lru_cache(maxsize=None)
def h_to_s(mu: Partition) -> dict:
    """h_mu = sum_la K_{la,mu} s_la, by iterated Pieri."""
    acc = {(): 1}
    for r in mu:
        nxt: dict = {}
        for nu, c in acc.items():
            for la in pieri_h(nu, r):
                nxt[la] = nxt.get(la, 0) + c
        acc = nxt
    return acc


def e_to_s(mu: Partition) -> dict:
    return {conjugate(la): c for la, c in h_to_s(mu).items()}


def kostka(la: Partition, mu: Partition) -> int:
    return h_to_s(tuple(sorted(mu, reverse=True))).get(la, 0)


@lru_cache(maxsize=None)
def _kostka_inverse_table(k: int) -> dict:
    parts = partitions(k)
    entries = {(la, mu): kostka(la, mu) for la in parts for mu in parts}
    return invert_unitriangular(parts, entries)


def inverse_kostka(la: Partition, mu: Partition) -> Fraction:
    if sum(la) != sum(mu):
        return Fraction(0)
    return _kostka_inverse_table(sum(la)).get((la, mu), Fraction(0))


@lru_cache(maxsize=None)
def s_to_h(la: Partition) -> dict:
    """s_la in the h basis (inverse transpose of the Kostka matrix)."""
    k = sum(la)
    return {mu: int(inverse_kostka(mu, la)) for mu in partitions(k)
            if inverse_kostka(mu, la)}


@lru_cache(maxsize=None)
def s_to_m(la: Partition) -> dict:
    return {mu: kostka(la, mu) for mu in partitions(sum(la)) if kostka(la, mu)}


@lru_cache(maxsize=None)
def m_to_s(mu: Partition) -> dict:
    """m_mu = sum_la (K^{-1})_{mu,la} s_la."""
    return {la: int(inverse_kostka(mu, la)) for la in partitions(sum(mu))
            if inverse_kostka(mu, la)}


# characters and power sums ----------------------------------------------------

def z_coefficient(mu: Partition) -> int:
    out = 1
    for part, m in multiplicities(mu).items():
        out *= part ** m * factorial(m)
    return out


@lru_cache(maxsize=None)
def character(la: Partition, mu: Partition) -> int:
    """chi^la evaluated at cycle type mu (Murnaghan-Nakayama)."""
    if sum(la) != sum(mu):
        return 0
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    ell = len(la)
    beta = [la[i] + ell - 1 - i for i in range(ell)]
    bset = set(beta)
    total = 0
    for b in beta:
        c = b - r
        if c < 0 or c in bset:
            continue
        sign = (-1) ** sum(1 for x in beta if c < x < b)
        nb = sorted((c if x == b else x for x in beta), reverse=True)
        new = tuple(p for p in (nb[i] - (ell - 1 - i) for i in range(ell)) if p)
        total += sign * character(new, rest)
    return total


@lru_cache(maxsize=None)
def p_to_s(mu: Partition) -> dict:
    return {la: character(la, mu) for la in partitions(sum(mu)) if character(la, mu)}


@lru_cache(maxsize=None)
def s_to_p(la: Partition) -> dict:
    out = {}
    for mu in partitions(sum(la)):
        c = character(la, mu)
        if c:
            out[mu] = Fraction(c, z_coefficient(mu))
    return out


def hook(a: int, b: int) -> Partition:
    """The hook (a, 1^b)."""
    return (a,) + (1,) * b


# products -------------------------------------------------------------------

@lru_cache(maxsize=None)
def _schur_times_h(mu: Partition, alpha: tuple) -> dict:
    acc = {mu: 1}
    for r in alpha:
        nxt: dict = {}
        for nu, c in acc.items():
            for la in pieri_h(nu, r):
                nxt[la] = nxt.get(la, 0) + c
        acc = nxt
    return acc


@lru_cache(maxsize=None)
def lr_product(mu: Partition, nu: Partition) -> dict:
    """Littlewood-Richardson expansion of s_mu s_nu."""
    if sum(mu) < sum(nu) or (sum(mu) == sum(nu) and mu < nu):
        mu, nu = nu, mu
    out: dict = {}
    for alpha, c in s_to_h(nu).items():
        for la, d in _schur_times_h(mu, alpha).items():
            out[la] = out.get(la, 0) + c * d
    return {la: c for la, c in out.items() if c}


def add_scaled(acc: dict, expansion: dict, coeff) -> None:
    """acc += coeff * expansion, dropping zero coefficients."""
    for key, c in expansion.items():
        v = coeff * c
        if key in acc:
            v = acc[key] + v
            if v:
                acc[key] = v
            else:
                del acc[key]
        elif v:
            acc[key] = v


def multiply(f: dict, g: dict, max_degree=None) -> dict:
    """Product of two Schur expansions, optionally dropping degrees above ``max_degree``."""
    out: dict = {}
    for mu, a in f.items():
        for nu, b in g.items():
            if max_degree is not None and sum(mu) + sum(nu) > max_degree:
                continue
            add_scaled(out, lr_product(mu, nu), a * b)
    return out
