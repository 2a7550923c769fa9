"""
The Peterson subalgebra: the centralizer of S in the affine nilHecke ring.

Each basis element ``j_w`` (w affine Grassmannian) is found by exact linear
algebra, one length layer at a time. Writing ``j = sum_x c_x A_x`` and
expanding ``A_x a_m = (x . a_m) A_x + sum_y kappa(x, y, m) A_y`` (the second
sum runs over ``y`` one step shorter, with rational constants), the condition
``j a_m = a_m j`` becomes, at every ``y``,

    sum_{l(x) = l(y) + 1} c_x kappa(x, y, m) = -c_y (y . a_m - a_m).

So layer ``l + 1`` is determined by layer ``l``. The matrix ``kappa`` is the
same for every monomial of S, which lets the polynomial system split into
scalar systems sharing one elimination. When a layer comes out entirely zero
the truncated sum already commutes with S exactly; uniqueness of ``j_w`` then
certifies it is the answer.

>>> j = compute_j(AffinePerm.s(0, 2))
>>> print(j.elt)
A[s0] + A[s1] + (-a_1 + a_2)*A[s0s1]
>>> j.stabilized
True
"""

from __future__ import annotations

__all__ = [
    "JElement", "CutoffTooSmall", "compute_j", "j_special", "j_product",
    "j_times", "kostka_matrix_aff", "coproduct_constants", "special_classes",
    "k_bounded_partitions",
]

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .doublesym import CutoffTooSmall, TransitionMatrix
from .linalg import Inconsistent, SingularSystem
from .nilhecke import NilHeckeElt, coproduct, linear_commute, nilcoxeter_mul
from .poly import Poly, act
from .weyl import (AffinePerm, NotGrassmannian, Partition, affine_elements_of_length,
                   bounded_partitions, partition_to_w_aff, rho)


@dataclass(frozen=True)
class JElement:
    """A Peterson basis element together with how far it was computed."""
    w: AffinePerm
    elt: NilHeckeElt
    length_cutoff: int
    stabilized: bool

    def coefficient(self, x: AffinePerm) -> Poly:
        return self.elt.coefficient(x)


# the layer solve ------------------------------------------------------------------

@lru_cache(maxsize=None)
def _layer_matrix(n: int, ell: int):
    """
    Elimination data for the map c (on non-Grassmannian x of length ell) ->
    equations indexed by (y, m) with l(y) = ell - 1.
    """
    xs = [x for x in affine_elements_of_length(n, ell) if not x.is_grassmannian()]
    cols = {x: k for k, x in enumerate(xs)}
    grass = [x for x in affine_elements_of_length(n, ell) if x.is_grassmannian()]
    rows: dict = {}
    grass_rows: dict = {}
    for x in xs + grass:
        for m in range(1, n + 1):
            for y, c in linear_commute(x.window, m).items():
                if y.length() == ell - 1:
                    k = c.constant_term()
                    if x in cols:
                        rows.setdefault((y, m), {})[cols[x]] = k
                    else:
                        grass_rows.setdefault((y, m), {})[x] = k
    # Gaussian elimination on the rows, recording the combination of original
    # equations that produced each pivot row so right-hand sides can be replayed.
    keys = sorted(set(rows) | set(grass_rows), key=lambda t: (t[0].window, t[1]))
    pivots: dict = {}
    null_rows = []
    for key in keys:
        r = dict(rows.get(key, {}))
        comb = {key: Fraction(1)}
        while r:
            p = min(r)
            if p in pivots:
                prow, pcomb = pivots[p]
                f = r[p]
                for k, v in prow.items():
                    nv = r.get(k, 0) - f * v
                    if nv:
                        r[k] = nv
                    else:
                        r.pop(k, None)
                for k, v in pcomb.items():
                    nv = comb.get(k, 0) - f * v
                    if nv:
                        comb[k] = nv
                    else:
                        comb.pop(k, None)
            else:
                f = r[p]
                pivots[p] = ({k: v / f for k, v in r.items()}, {k: v / f for k, v in comb.items()})
                break
        else:
            null_rows.append(comb)
    if len(pivots) < len(xs):
        raise SingularSystem(f"centralizer layer {ell} for n={n} is not uniquely solvable")
    return xs, grass, grass_rows, pivots, null_rows


def _solve_layer(n: int, ell: int, prev: dict, pinned: dict) -> dict:
    """Coefficients at length ``ell`` given those at ``ell - 1`` and pinned Grassmannian ones."""
    xs, grass, grass_rows, pivots, null_rows = _layer_matrix(n, ell)
    zero = Poly.zero(n)
    rhs_cache: dict = {}

    def rhs(key):
        if key in rhs_cache:
            return rhs_cache[key]
        y, m = key
        v = zero
        cy = prev.get(y)
        if cy:
            am = Poly.var(m, n)
            v = v - cy * (act(y, am) - am)
        for x, k in grass_rows.get(key, {}).items():
            cx = pinned.get(x)
            if cx:
                v = v - cx * k
        rhs_cache[key] = v
        return v

    def combine(comb):
        total = zero
        for key, f in comb.items():
            b = rhs(key)
            if b:
                total = total + b * f
        return total

    for comb in null_rows:
        if combine(comb):
            raise Inconsistent(f"centralizer equations are inconsistent at length {ell}")
    sol = [zero] * len(xs)
    for p in sorted(pivots, reverse=True):
        prow, pcomb = pivots[p]
        v = combine(pcomb)
        for k, c in prow.items():
            if k != p and sol[k]:
                v = v - sol[k] * c
        sol[p] = v
    out = {x: c for x, c in zip(xs, sol) if c}
    for x, c in pinned.items():
        if c and x.length() == ell:
            out[x] = c
    return out


@lru_cache(maxsize=None)
def _compute_j_cached(window: tuple, max_length: Optional[int]) -> JElement:
    w = AffinePerm(window)
    n = w.n
    lw = w.length()
    pinned = {w: Poly.one(n)}
    terms: dict = {}
    prev: dict = {}
    ell = lw
    stabilized = False
    while True:
        if max_length is not None and ell > max_length:
            break
        layer = _solve_layer(n, ell, prev, pinned) if ell > 0 else {w: Poly.one(n)}
        if not layer and ell > lw:
            stabilized = True
            break
        terms.update(layer)
        prev = layer
        ell += 1
    cut = ell - 1 if not stabilized else ell
    return JElement(w, NilHeckeElt(n, terms), cut, stabilized)


def compute_j(w: AffinePerm, L: Optional[int] = None, strict: bool = False) -> JElement:
    """
    The Peterson basis element j_w.

    With ``L=None`` layers are solved until one vanishes, which certifies the
    exact answer. With a cutoff the result is truncated at length ``L``;
    ``strict=True`` then raises :class:`CutoffTooSmall` if it had not settled.
    """
    if not w.is_grassmannian():
        raise NotGrassmannian(f"{w} is not affine Grassmannian")
    if L is not None and L < w.length():
        raise CutoffTooSmall(f"cutoff {L} is below the length {w.length()}")
    j = _compute_j_cached(w.window, L)
    if strict and not j.stabilized:
        raise CutoffTooSmall(f"j_{w.word_str()} still has terms at length {L}")
    return j


def j_special(r: int, n: int, L: Optional[int] = None) -> JElement:
    """j_r = j_{rho^r}."""
    if not 0 <= r <= n - 1:
        raise ValueError(f"special classes need 0 <= r <= {n - 1}")
    return compute_j(rho(r, n), L)


def special_classes(n: int) -> list[NilHeckeElt]:
    return [j_special(r, n).elt for r in range(n)]


# products -------------------------------------------------------------------------

def j_times(j: NilHeckeElt, y: NilHeckeElt, max_length: Optional[int] = None) -> NilHeckeElt:
    """
    ``j * y`` for ``j`` in the centralizer: since j commutes with scalars,
    ``j (sum d_v A_v) = sum d_v c_u A_u A_v``.
    """
    out: dict = {}
    for v, d in y.terms.items():
        lv = v.length()
        for u, c in j.terms.items():
            if max_length is not None and u.length() + lv > max_length:
                continue
            uv = nilcoxeter_mul(u, v)
            if uv is not None:
                val = d * c
                cur = out.get(uv)
                out[uv] = val if cur is None else cur + val
    return NilHeckeElt(j.n, out)


@lru_cache(maxsize=None)
def j_product(mu: Partition, n: int, max_length: Optional[int] = None) -> NilHeckeElt:
    """j_{mu_1} j_{mu_2} ..., truncated at ``max_length`` if given."""
    out = NilHeckeElt.one(n)
    for r in reversed(mu):
        out = j_times(j_special(r, n).elt, out, max_length)
    return out


def k_bounded_partitions(n: int, max_size: int, min_size: int = 0) -> list:
    """Partitions with first part < n, ordered by size then lexicographically."""
    parts = bounded_partitions(max_size, n, min_size)
    return sorted(parts, key=lambda la: (sum(la), la))


@lru_cache(maxsize=None)
def kostka_matrix_aff(n: int, max_size: int) -> TransitionMatrix:
    """
    The equivariant k-Kostka matrix: entry (la, mu) is the coefficient of
    A_{w_la} in j_{mu_1} j_{mu_2} ... .
    """
    if max_size < 0:
        raise ValueError("max_size must be nonnegative")
    order = tuple(k_bounded_partitions(n, max_size))
    ws = {la: partition_to_w_aff(la, n) for la in order}
    ents = {}
    for mu in order:
        prod = j_product(mu, n, max_size)
        for la in order:
            c = prod.coefficient(ws[la])
            if c:
                ents[(la, mu)] = c
    return TransitionMatrix("F~", "mDouble", order, order, ents, max_size, n)


def coproduct_constants(i: int, n: int, max_idx: Optional[int] = None) -> dict:
    """
    c~_i^{r,l}: coefficients of j_r (x) j_l in Delta(j_i), read off at
    A_{rho^r} (x) A_{rho^l}.
    """
    if not 1 <= i <= n - 1:
        raise ValueError(f"need 1 <= i <= {n - 1}")
    max_idx = n - 1 if max_idx is None else max_idx
    delta = coproduct(j_special(i, n).elt)
    out = {}
    for r in range(min(max_idx, n - 1) + 1):
        for l in range(min(max_idx, n - 1) + 1):
            out[(r, l)] = delta.coefficient(rho(r, n), rho(l, n))
    return out
