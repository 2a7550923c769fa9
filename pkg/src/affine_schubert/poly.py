"""
Sparse multivariate polynomials over the rationals in variables ``a_i``
indexed by arbitrary integers.

Two ring modes exist. ``None`` is the infinite ring Q[..., a_-1, a_0, a_1, ...];
an integer ``n >= 2`` is the cyclic ring S = Q[a_1, ..., a_n] in which
``a_{i+kn}`` is identified with ``a_i``.

>>> a = Poly.var
>>> (a(1) - a(0)) * (a(1) + a(0))
Poly('-a_0^2 + a_1^2')
>>> a(0, n=2) * a(1, n=2)
Poly('a_1*a_2', n=2)
"""

from __future__ import annotations

__all__ = [
    "Monomial", "Poly", "PolyError", "ModeMismatch", "BadMode",
    "NotDivisible", "forget", "forget_cyclic", "specialize_zero",
    "elementary", "complete", "simple_root", "root", "product",
    "act", "divided_difference", "to_alpha", "from_alpha", "format_alpha",
    "format_poly",
]

from fractions import Fraction
from functools import reduce
from itertools import combinations_with_replacement, combinations
from typing import Iterable, Mapping, Optional, Union

# sorted tuple of (index, exponent) pairs, exponents positive
Monomial = tuple

Scalar = Union[int, Fraction]


class PolyError(ValueError):
    pass


class ModeMismatch(PolyError):
    pass


class BadMode(PolyError):
    pass


class NotDivisible(PolyError):
    """Raised by :meth:`Poly.div_exact`; ``remainder`` is the stuck remainder."""

    def __init__(self, msg, remainder=None):
        super().__init__(msg)
        self.remainder = remainder


def _reduce_index(i: int, n: Optional[int]) -> int:
    if n is None:
        return i
    return (i - 1) % n + 1


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for i, e in m2:
        d[i] = d.get(i, 0) + e
    return tuple(sorted(d.items()))


def _mono_normalize(pairs: Iterable[tuple[int, int]], n: Optional[int]) -> Monomial:
    d: dict[int, int] = {}
    for i, e in pairs:
        if e:
            j = _reduce_index(i, n)
            d[j] = d.get(j, 0) + e
    return tuple(sorted(d.items()))


def _mono_deg(m: Monomial) -> int:
    return sum(e for _, e in m)


def _mono_key(m: Monomial):
    # graded, then lexicographic on (index, exponent) pairs
    return (-_mono_deg(m), m)


def _grlex_key(m: Monomial):
    # graded lex with a_i > a_j for i < j
    return (_mono_deg(m), tuple((-i, e) for i, e in m))


class Poly:
    """Immutable polynomial. ``n`` is ``None`` (infinite) or the cyclic modulus."""

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None,
                 n: Optional[int] = None, *, _trusted: bool = False):
        if n is not None and n < 2:
            raise BadMode(f"cyclic modulus must be >= 2, got {n}")
        self.n = n
        if _trusted:
            self.terms = terms
        else:
            acc: dict[Monomial, Fraction] = {}
            for m, c in (terms or {}).items():
                if not c:
                    continue
                m = _mono_normalize(m, n)
                acc[m] = acc.get(m, 0) + Fraction(c)
            self.terms = {m: c for m, c in acc.items() if c}
        self._hash = None

    # construction -------------------------------------------------------
    @classmethod
    def var(cls, i: int, n: Optional[int] = None) -> "Poly":
        return cls({((i, 1),): 1}, n)

    @classmethod
    def const(cls, c: Scalar, n: Optional[int] = None) -> "Poly":
        return cls({(): c}, n)

    @classmethod
    def zero(cls, n: Optional[int] = None) -> "Poly":
        return cls({}, n, _trusted=True)

    @classmethod
    def one(cls, n: Optional[int] = None) -> "Poly":
        return cls.const(1, n)

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.n != self.n:
                raise ModeMismatch(f"ring modes differ: {self.n} vs {other.n}")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other, self.n)
        return NotImplemented

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.terms:
            return self
        d = dict(self.terms)
        for m, c in other.terms.items():
            v = d.get(m, 0) + c
            if v:
                d[m] = v
            else:
                d.pop(m, None)
        return Poly(d, self.n, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()}, self.n, _trusted=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.terms or not other.terms:
            return Poly.zero(self.n)
        d: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                d[m] = d.get(m, 0) + c1 * c2
        return Poly({m: c for m, c in d.items() if c}, self.n, _trusted=True)

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "Poly":
        if not c:
            return Poly.zero(self.n)
        c = Fraction(c)
        return Poly({m: c * v for m, v in self.terms.items()}, self.n, _trusted=True)

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        result = Poly.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(other))
        return self.div_exact(other)

    # comparison ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other, self.n)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # inspection ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not m for m in self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((_mono_deg(m) for m in self.terms), default=-1)

    def is_homogeneous(self, d: Optional[int] = None) -> bool:
        degs = {_mono_deg(m) for m in self.terms}
        if not degs:
            return True
        if len(degs) > 1:
            return False
        return d is None or degs == {d}

    def variables(self) -> set[int]:
        return {i for m in self.terms for i, _ in m}

    def constant_term(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: _mono_key(t[0]))

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(_mono_normalize(mono, self.n), Fraction(0))

    # substitution -------------------------------------------------------
    def map_indices(self, f, n: Optional[int] = "same") -> "Poly":
        """Rename every variable ``a_i`` to ``a_{f(i)}``."""
        if n == "same":
            n = self.n
        d: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            mm = _mono_normalize(((f(i), e) for i, e in m), n)
            d[mm] = d.get(mm, 0) + c
        return Poly({m: c for m, c in d.items() if c}, n, _trusted=True)

    def subs(self, values: Mapping[int, "Poly | Scalar"]) -> "Poly":
        """Substitute polynomials (in the same mode) for some variables."""
        result = Poly.zero(self.n)
        cache: dict[tuple[int, int], Poly] = {}
        for m, c in self.terms.items():
            term = Poly.const(c, self.n)
            rest = []
            for i, e in m:
                if i in values:
                    key = (i, e)
                    if key not in cache:
                        v = values[i]
                        v = v if isinstance(v, Poly) else Poly.const(v, self.n)
                        cache[key] = v ** e
                    term = term * cache[key]
                else:
                    rest.append((i, e))
            if rest:
                term = term * Poly({tuple(rest): 1}, self.n)
            result = result + term
        return result

    def evaluate(self, values: Mapping[int, Scalar]) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            t = c
            for i, e in m:
                t *= Fraction(values[i]) ** e
            total += t
        return total

    def shift(self, k: int) -> "Poly":
        """The automorphism a_i -> a_{i+k} (only meaningful up to mode)."""
        if k == 0:
            return self
        return self.map_indices(lambda i: i + k)

    # division -----------------------------------------------------------
    def div_exact(self, d: "Poly") -> "Poly":
        """
        Exact quotient ``self / d``.

        >>> a = Poly.var
        >>> (a(1)**2 - a(2)**2).div_exact(a(1) - a(2))
        Poly('a_1 + a_2')
        """
        d = self._coerce(d)
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        # leading terms are taken in graded lex order (a genuine monomial order)
        lead_m, lead_c = max(d.terms.items(), key=lambda t: _grlex_key(t[0]))
        lead = dict(lead_m)
        rem = dict(self.terms)
        quot: dict[Monomial, Fraction] = {}
        while rem:
            m, c = max(rem.items(), key=lambda t: _grlex_key(t[0]))
            md = dict(m)
            if any(md.get(i, 0) < e for i, e in lead.items()):
                raise NotDivisible(f"{self} is not divisible by {d}",
                                   Poly(rem, self.n, _trusted=True))
            for i, e in lead.items():
                md[i] -= e
            qm = tuple(sorted((i, e) for i, e in md.items() if e))
            qc = c / lead_c
            quot[qm] = quot.get(qm, 0) + qc
            for m2, c2 in d.terms.items():
                mm = _mono_mul(qm, m2)
                v = rem.get(mm, 0) - qc * c2
                if v:
                    rem[mm] = v
                else:
                    rem.pop(mm, None)
        return Poly({m: c for m, c in quot.items() if c}, self.n, _trusted=True)

    def divides(self, f: "Poly") -> bool:
        try:
            f.div_exact(self)
        except NotDivisible:
            return False
        return True

    # printing -----------------------------------------------------------
    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        if self.n is None:
            return f"Poly({str(self)!r})"
        return f"Poly({str(self)!r}, n={self.n})"

    def to_json(self) -> dict:
        mode = "infinite" if self.n is None else {"cyclic": self.n}
        terms = []
        for m, c in self.sorted_terms():
            coeff = str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
            terms.append({"coeff": coeff, "monomial": [list(p) for p in m]})
        return {"mode": mode, "terms": terms}

    @classmethod
    def from_json(cls, data: dict) -> "Poly":
        mode = data["mode"]
        n = None if mode == "infinite" else int(mode["cyclic"])
        terms = {}
        for t in data["terms"]:
            m = tuple((int(i), int(e)) for i, e in t["monomial"])
            terms[m] = Fraction(t["coeff"])
        return cls(terms, n)


def _var_name(i: int, sym: str = "a") -> str:
    return f"{sym}_{i}" if i >= 0 else f"{sym}_{{{i}}}"


def _format_terms(items, sym: str) -> str:
    if not items:
        return "0"
    out = []
    for k, (m, c) in enumerate(items):
        sign = "-" if c < 0 else "+"
        c = abs(c)
        factors = [_var_name(i, sym) + (f"^{e}" if e > 1 else "") for i, e in m]
        if c != 1 or not factors:
            cs = str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
            factors.insert(0, cs)
        body = "*".join(factors)
        if k == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def format_poly(f: Poly) -> str:
    return _format_terms(f.sorted_terms(), "a")


def forget(f: Poly, n: int) -> Poly:
    """
    The forgetful map Q[a] -> S sending a_{i+kn} to a_i.

    >>> forget(Poly.var(0) - Poly.var(1), 2)
    Poly('-a_1 + a_2', n=2)
    """
    if f.n is not None:
        raise BadMode("forget expects a polynomial in the infinite ring")
    return f.map_indices(lambda i: i, n)


def forget_cyclic(f: Poly, n: int) -> Poly:
    """Project S_m = Q[a_1..a_m] onto S_n when ``n`` divides ``m``."""
    if f.n is None:
        return forget(f, n)
    if f.n % n:
        raise BadMode(f"cannot reduce cyclic({f.n}) to cyclic({n})")
    return f.map_indices(lambda i: i, n)


def specialize_zero(f: Poly) -> Fraction:
    return f.constant_term()


def elementary(k: int, idx: Iterable[int], n: Optional[int] = None) -> Poly:
    """e_k of the variables a_i, i in ``idx`` (a list; repeats allowed)."""
    idx = list(idx)
    if k < 0 or k > len(idx):
        return Poly.zero(n)
    terms: dict = {}
    for combo in combinations(idx, k):
        m = _mono_normalize(((i, 1) for i in combo), n)
        terms[m] = terms.get(m, 0) + 1
    return Poly(terms, n)


def complete(k: int, idx: Iterable[int], n: Optional[int] = None) -> Poly:
    """h_k of the variables a_i, i in ``idx``."""
    idx = list(idx)
    if k < 0:
        return Poly.zero(n)
    if k == 0:
        return Poly.one(n)
    if not idx:
        return Poly.zero(n)
    terms: dict = {}
    for combo in combinations_with_replacement(idx, k):
        m = _mono_normalize(((i, 1) for i in combo), n)
        terms[m] = terms.get(m, 0) + 1
    return Poly(terms, n)


def root(i: int, j: int, n: Optional[int] = None) -> Poly:
    """The root alpha_{ij} = a_{1-j} - a_{1-i}."""
    return Poly.var(1 - j, n) - Poly.var(1 - i, n)


def simple_root(i: int, n: Optional[int] = None) -> Poly:
    """alpha_i = a_{-i} - a_{1-i}."""
    return Poly.var(-i, n) - Poly.var(1 - i, n)


def product(polys: Iterable[Poly], n: Optional[int] = None) -> Poly:
    return reduce(lambda x, y: x * y, polys, Poly.one(n))


# group actions and divided differences ------------------------------------

def act(w, f: Poly) -> Poly:
    """
    Left action of a permutation of Z on Q[a] or S, via a_m -> a_{1 - w(1 - m)}.

    ``w`` is any object exposing ``apply(i)``; affine permutations must match
    the cyclic mode of ``f`` (translations then act trivially).
    """
    wn = getattr(w, "n", None)
    if f.n is not None:
        if wn != f.n:
            raise ModeMismatch(f"cannot act by an element of level {wn} on cyclic({f.n})")
    elif wn is not None:
        raise ModeMismatch("affine permutations act only on the cyclic ring")
    return f.map_indices(lambda m: 1 - w.apply(1 - m))


def divided_difference(i: int, f: Poly) -> Poly:
    """
    A_i . f = (s_i f - f) / alpha_i in the cyclic ring.

    >>> divided_difference(1, Poly.var(3, n=3))
    Poly('1', n=3)
    """
    n = f.n
    if n is None:
        raise BadMode("divided differences are taken in the cyclic ring")
    i %= n
    sf = f.map_indices(lambda m: _swap_cyclic(m, i, n))
    diff = sf - f
    if diff.is_zero():
        return Poly.zero(n)
    return diff.div_exact(simple_root(i, n))


def _swap_cyclic(m: int, i: int, n: int) -> int:
    # s_i swaps residues i, i+1 of the argument 1 - m, i.e. variables a_{-i}, a_{1-i}
    r = (1 - m) % n
    if r == i % n:
        return m - 1
    if r == (i + 1) % n:
        return m + 1
    return m


# alpha printing -------------------------------------------------------------

def to_alpha(f: Poly) -> Optional[Poly]:
    """
    Rewrite a cyclic polynomial in the simple roots alpha_1..alpha_{n-1}.

    Returns a polynomial whose variable ``i`` stands for alpha_i, or ``None``
    when ``f`` is not a polynomial in the simple roots.
    """
    n = f.n
    if n is None:
        return None
    # a_k = a_n + alpha_1 + ... + alpha_{n-k}; set a_n = 0
    images = {k: Poly({((i, 1),): 1 for i in range(1, n - k + 1)}) for k in range(1, n + 1)}
    images = {k: v if v.terms else Poly.zero() for k, v in images.items()}
    g = Poly.zero()
    for m, c in f.terms.items():
        t = Poly.const(c)
        for k, e in m:
            t = t * images[k] ** e
        g = g + t
    if from_alpha(g, n) != f:
        return None
    return g


def from_alpha(g: Poly, n: int) -> Poly:
    """Inverse of :func:`to_alpha`: substitute alpha_i = a_{n-i} - a_{n-i+1}."""
    out = Poly.zero(n)
    for m, c in g.terms.items():
        t = Poly.const(c, n)
        for i, e in m:
            t = t * simple_root(i, n) ** e
        out = out + t
    return out


def format_alpha(f: Poly, reverse: bool = False) -> str:
    """
    Print in simple roots when possible, else in the a-variables.

    ``reverse=True`` relabels alpha_i as alpha_{n-i} (the diagram symmetry
    fixing the node 0), for comparison with tables printed in that labeling.

    >>> f = simple_root(1, 3) * 2 + simple_root(2, 3)
    >>> format_alpha(f), format_alpha(f, reverse=True)
    ('2*alpha_1 + alpha_2', 'alpha_1 + 2*alpha_2')
    """
    g = to_alpha(f)
    if g is None:
        return format_poly(f)
    if reverse:
        g = g.map_indices(lambda i: f.n - i, None)
    return _format_terms(g.sorted_terms(), "alpha")
