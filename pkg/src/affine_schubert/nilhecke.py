"""
The small-torus affine nilHecke ring: elements ``sum_w f_w A_w`` with
coefficients in the cyclic ring S = Q[a_1..a_n].

Scalars are kept on the left. Moving a scalar past ``A_w`` uses the relation
``A_i f = (A_i . f) + (s_i . f) A_i`` along a reduced word of ``w``.

>>> n = 2
>>> s0 = AffinePerm.s(0, n)
>>> A = NilHeckeElt.basis(s0)
>>> (A * A).is_zero()
True
>>> print(expand_group_elt(s0))
A[id] + (-a_1 + a_2)*A[s0]
"""

from __future__ import annotations

__all__ = [
    "NilHeckeElt", "NilHeckeTensor", "scalar_commute", "expand_group_elt", "xi",
    "coproduct", "coproduct_basis", "nilcoxeter_mul", "linear_commute",
]

from functools import lru_cache
from typing import Optional

from .poly import Poly, act, divided_difference, simple_root
from .weyl import AffinePerm, GroupMismatch


def nilcoxeter_mul(x: AffinePerm, y: AffinePerm) -> Optional[AffinePerm]:
    """A_x A_y = A_{xy} when lengths add, else zero (returned as None)."""
    xy = x * y
    if xy.length() == x.length() + y.length():
        return xy
    return None


def _add(acc: dict, key, c: Poly) -> None:
    if not c:
        return
    v = acc.get(key)
    v = c if v is None else v + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


class NilHeckeElt:
    """A finite sum ``sum_w f_w A_w`` with ``f_w`` in the cyclic ring."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Optional[dict] = None):
        self.n = n
        clean = {}
        for w, c in (terms or {}).items():
            if w.n != n:
                raise GroupMismatch("affine permutation of the wrong level")
            c = c if isinstance(c, Poly) else Poly.const(c, n)
            if c.n != n:
                raise GroupMismatch("coefficient in the wrong ring")
            if c:
                clean[w] = c
        self.terms = clean

    @classmethod
    def basis(cls, w: AffinePerm, coeff=1) -> "NilHeckeElt":
        return cls(w.n, {w: coeff})

    @classmethod
    def one(cls, n: int) -> "NilHeckeElt":
        return cls(n, {AffinePerm.identity(n): 1})

    @classmethod
    def scalar(cls, f: Poly) -> "NilHeckeElt":
        return cls(f.n, {AffinePerm.identity(f.n): f})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, w: AffinePerm) -> Poly:
        return self.terms.get(w, Poly.zero(self.n))

    def __add__(self, other: "NilHeckeElt") -> "NilHeckeElt":
        out = dict(self.terms)
        for w, c in other.terms.items():
            _add(out, w, c)
        return NilHeckeElt(self.n, out)

    def __neg__(self):
        return NilHeckeElt(self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return isinstance(other, NilHeckeElt) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def left_scale(self, f: Poly) -> "NilHeckeElt":
        return NilHeckeElt(self.n, {w: f * c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (Poly, int)):
            other = NilHeckeElt.scalar(other if isinstance(other, Poly) else Poly.const(other, self.n))
        if other.n != self.n:
            raise GroupMismatch("nilHecke elements of different levels")
        out: dict = {}
        for u, c in self.terms.items():
            for v, d in other.terms.items():
                for z, e in scalar_commute(u, d).items():
                    zv = nilcoxeter_mul(z, v)
                    if zv is not None:
                        _add(out, zv, c * e)
        return NilHeckeElt(self.n, out)

    def truncate(self, max_length: int) -> "NilHeckeElt":
        return NilHeckeElt(self.n, {w: c for w, c in self.terms.items() if w.length() <= max_length})

    def max_length(self) -> int:
        return max((w.length() for w in self.terms), default=-1)

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: (t[0].length(), t[0].window))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            name = f"A[{w.word_str().replace(' ', '')}]" if not w.is_identity() else "A[id]"
            parts.append(name if c == 1 else f"({c})*{name}")
        return " + ".join(parts)

    __repr__ = __str__

    def to_json(self) -> list:
        return [[list(w.window), c.to_json()] for w, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, n: int, data: list) -> "NilHeckeElt":
        return cls(n, {AffinePerm(tuple(w)): Poly.from_json(c) for w, c in data})


# scalar commutation -------------------------------------------------------------

def scalar_commute(w: AffinePerm, f: Poly) -> dict:
    """
    Expansion of ``A_w f`` as ``{x: coeff}`` meaning ``sum_x coeff A_x``.

    >>> s1 = AffinePerm.s(1, 2)
    >>> {x.word_str(): str(c) for x, c in scalar_commute(s1, Poly.var(1, n=2)).items()}
    {'id': '-1', 's1': 'a_2'}
    """
    out: dict = {}
    for m, c in f.terms.items():
        for x, d in _commute_monomial(w.window, m, f.n).items():
            _add(out, x, d * c)
    return out


@lru_cache(maxsize=None)
def _commute_monomial(window: tuple, mono: tuple, n: int) -> dict:
    w = AffinePerm(window)
    f = Poly({mono: 1}, n)
    if w.is_identity() or not mono:
        return {w: f}
    word = w.reduced_word()
    i = word[-1]
    wp = w.right_mul_s(i)
    out: dict = {}
    # A_w f = A_{w'} (A_i . f) + (A_{w'} (s_i . f)) A_i
    df = divided_difference(i, f)
    for x, c in scalar_commute(wp, df).items():
        _add(out, x, c)
    si = AffinePerm.s(i, n)
    for x, c in scalar_commute(wp, act(si, f)).items():
        xi_ = nilcoxeter_mul(x, si)
        if xi_ is not None:
            _add(out, xi_, c)
    return out


@lru_cache(maxsize=None)
def linear_commute(window: tuple, m: int) -> dict:
    """Cached ``A_w a_m`` for a single variable: the workhorse of the centralizer solve."""
    w = AffinePerm(window)
    return scalar_commute(w, Poly.var(m, w.n))


# group elements ----------------------------------------------------------------

@lru_cache(maxsize=None)
def _group_expansion(window: tuple) -> dict:
    w = AffinePerm(window)
    n = w.n
    if w.is_identity():
        return {w: Poly.one(n)}
    i = w.reduced_word()[-1]
    wp = w.right_mul_s(i)
    prev = _group_expansion(wp.window)
    root = act(wp, simple_root(i, n))
    out = dict(prev)
    for v, c in prev.items():
        if not v.has_right_descent(i):
            _add(out, v.right_mul_s(i), root * c)
    return out


def expand_group_elt(w: AffinePerm) -> NilHeckeElt:
    """The expansion w = sum_v xi^v(w) A_v."""
    return NilHeckeElt(w.n, _group_expansion(w.window))


@lru_cache(maxsize=None)
def _xi(v: tuple, w: tuple) -> Poly:
    V, W = AffinePerm(v), AffinePerm(w)
    n = W.n
    lv, lw = V.length(), W.length()
    if lv > lw:
        return Poly.zero(n)
    if lw == 0:
        return Poly.one(n)
    i = W.reduced_word()[-1]
    wp = W.right_mul_s(i)
    out = _xi(v, wp.window)
    if V.has_right_descent(i):
        out = out + act(wp, simple_root(i, n)) * _xi(V.right_mul_s(i).window, wp.window)
    return out


def xi(v: AffinePerm, w: AffinePerm) -> Poly:
    """The single localization value xi^v(w), without expanding all of w."""
    if v.n != w.n:
        raise GroupMismatch("different levels")
    return _xi(v.window, w.window)


# coproduct ------------------------------------------------------------------------

class NilHeckeTensor:
    """``sum f A_x (x) A_y`` with every scalar moved into the left factor."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Optional[dict] = None):
        self.n = n
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    def coefficient(self, x: AffinePerm, y: AffinePerm) -> Poly:
        return self.terms.get((x, y), Poly.zero(self.n))

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            _add(out, k, c)
        return NilHeckeTensor(self.n, out)

    def __eq__(self, other):
        return isinstance(other, NilHeckeTensor) and self.terms == other.terms

    def left_scale(self, f: Poly) -> "NilHeckeTensor":
        return NilHeckeTensor(self.n, {k: f * c for k, c in self.terms.items()})

    def _times_delta_generator(self, i: int) -> "NilHeckeTensor":
        # right multiplication by Delta(A_i) = A_i(x)1 + 1(x)A_i + alpha_i A_i(x)A_i
        n = self.n
        si = AffinePerm.s(i, n)
        alpha = simple_root(i, n)
        out: dict = {}
        for (x, y), c in self.terms.items():
            xs = nilcoxeter_mul(x, si)
            ys = nilcoxeter_mul(y, si)
            if xs is not None:
                _add(out, (xs, y), c)
            if ys is not None:
                _add(out, (x, ys), c)
                for z, e in scalar_commute(x, alpha).items():
                    zs = nilcoxeter_mul(z, si)
                    if zs is not None:
                        _add(out, (zs, ys), c * e)
        return NilHeckeTensor(n, out)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (t[0][0].length() + t[0][1].length(),
                                                         t[0][0].window, t[0][1].window))

    def to_json(self) -> list:
        return [[list(x.window), list(y.window), c.to_json()] for (x, y), c in self.sorted_terms()]

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for (x, y), c in self.sorted_terms():
            out.append(f"({c})*A[{x.word_str()}]#A[{y.word_str()}]")
        return " + ".join(out)


@lru_cache(maxsize=None)
def _coproduct_word(word: tuple, n: int) -> NilHeckeTensor:
    e = AffinePerm.identity(n)
    t = NilHeckeTensor(n, {(e, e): Poly.one(n)})
    for i in word:
        t = t._times_delta_generator(i)
    return t


def coproduct_basis(w: AffinePerm, word: Optional[list] = None) -> NilHeckeTensor:
    """Delta(A_w), computed along ``word`` (default: the canonical reduced word)."""
    word = tuple(w.reduced_word() if word is None else word)
    return _coproduct_word(word, w.n)


def coproduct(x: NilHeckeElt) -> NilHeckeTensor:
    out = NilHeckeTensor(x.n)
    for w, c in x.terms.items():
        out = out + coproduct_basis(w).left_scale(c)
    return out
