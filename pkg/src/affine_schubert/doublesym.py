"""
Double symmetric functions and their dual ring.

A primal element is stored as a finite Schur expansion in the shifted alphabet
``x - a`` (basis ``s_mu[x-a]``) with coefficients in Q[a]. A dual element is a
degree-truncated Schur expansion in ``y``. The pairing makes ``s_mu[x-a]`` and
``s_mu[y]`` dual, so most constructions reduce to classical tables from
:mod:`affine_schubert.symfunc` plus exact triangular solves.

>>> str(double_monomial((1, 1)))
's[1,1] + (a_1)*s[1]'
>>> pairing(mtilde((3,)), hhat((3,), 3))
Poly('1')
"""

from __future__ import annotations

__all__ = [
    "CutoffTooSmall", "SymFuncPrimal", "SymFuncDual", "TransitionMatrix",
    "p_x", "s_x", "h_x", "m_x", "double_h", "double_schur", "mtilde", "double_monomial",
    "basis_element", "hhat", "shat", "h_y", "p_y", "dual_basis_element",
    "pairing", "matrix_M", "monomial_expand", "equivariant_kostka",
    "quotient_project", "product_coeff_c",
]

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional

from . import symfunc as sf
from .linalg import invert_unitriangular
from .poly import Poly, complete, elementary, forget
from .weyl import Partition, partitions


class CutoffTooSmall(ValueError):
    """A truncated computation would need terms above its degree cutoff."""


def _zero():
    return Poly.zero()


def _coeff(c) -> Poly:
    return c if isinstance(c, Poly) else Poly.const(c)


def _fmt_part(la: Partition) -> str:
    return ",".join(map(str, la))


# primal ring -------------------------------------------------------------------

class SymFuncPrimal:
    """An element of the double symmetric functions, in the ``s_mu[x-a]`` basis."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Optional[dict] = None):
        self.coeffs = {tuple(la): _coeff(c) for la, c in (coeffs or {}).items() if c}

    @classmethod
    def one(cls) -> "SymFuncPrimal":
        return cls({(): 1})

    def __add__(self, other: "SymFuncPrimal") -> "SymFuncPrimal":
        out = dict(self.coeffs)
        sf.add_scaled(out, other.coeffs, 1)
        return SymFuncPrimal(out)

    def __neg__(self):
        return SymFuncPrimal({la: -c for la, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymFuncPrimal):
            return SymFuncPrimal(sf.multiply(self.coeffs, other.coeffs))
        c = _coeff(other)
        return SymFuncPrimal({la: c * v for la, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, SymFuncPrimal) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Largest partition size present (-1 for zero)."""
        return max((sum(la) for la in self.coeffs), default=-1)

    def coefficient(self, la: Partition) -> Poly:
        return self.coeffs.get(tuple(la), _zero())

    def map_coeffs(self, f) -> "SymFuncPrimal":
        return SymFuncPrimal({la: f(c) for la, c in self.coeffs.items()})

    def specialize_zero(self) -> dict:
        """Set every a_i to zero; returns a classical Schur expansion."""
        out = {la: c.constant_term() for la, c in self.coeffs.items()}
        return {la: c for la, c in out.items() if c}

    # other bases ----------------------------------------------------------
    def to_p(self) -> dict:
        """Expansion in the power sums ``p_mu[x-a]``."""
        out: dict = {}
        for la, c in self.coeffs.items():
            sf.add_scaled(out, sf.s_to_p(la), c)
        return out

    @classmethod
    def from_p(cls, coeffs: dict) -> "SymFuncPrimal":
        out: dict = {}
        for mu, c in coeffs.items():
            sf.add_scaled(out, sf.p_to_s(mu), _coeff(c))
        return cls(out)

    def coproduct(self) -> dict:
        """
        Delta(f) as ``{(la, mu): coeff}`` in ``s_la[x-a] (x) s_mu[x-a]``,
        computed by declaring every ``p_r[x-a]`` primitive.
        """
        out: dict = {}
        for mu, c in self.to_p().items():
            for left, right in _split_multiset(mu):
                lt, rt = sf.p_to_s(left), sf.p_to_s(right)
                for la, x in lt.items():
                    for nu, y in rt.items():
                        sf.add_scaled(out, {(la, nu): 1}, c * (x * y))
        return out

    def tau(self, k: int = 1) -> "SymFuncPrimal":
        """The shift automorphism a_i -> a_{i+1}, p_r[x-a] -> p_r[x-a] + a_1^r, to the power k."""
        f = self
        step = 1 if k > 0 else -1
        for _ in range(abs(k)):
            f = f._tau_step(step)
        return f

    def _tau_step(self, step: int) -> "SymFuncPrimal":
        out: dict = {}
        if step > 0:
            # s_la[x - a + a_1]: strip a horizontal strip, weight a_1 per box
            b = Poly.var(1)
            for la, c in self.coeffs.items():
                c = c.shift(1)
                for mu in sf.horizontal_strips_removed(la):
                    sf.add_scaled(out, {mu: 1}, c * b ** (sum(la) - sum(mu)))
        else:
            # s_la[x - a - a_0]: strip a vertical strip, weight -a_0 per box
            b = -Poly.var(0)
            for la, c in self.coeffs.items():
                c = c.shift(-1)
                for mu in sf.vertical_strips_removed(la):
                    sf.add_scaled(out, {mu: 1}, c * b ** (sum(la) - sum(mu)))
        return SymFuncPrimal(out)

    def __str__(self):
        if not self.coeffs:
            return "0"
        items = sorted(self.coeffs.items(), key=lambda t: (-sum(t[0]), t[0]), reverse=False)
        parts = []
        for la, c in items:
            basis = f"s[{_fmt_part(la)}]" if la else "1"
            if la and c == 1:
                parts.append(basis)
            elif not la:
                parts.append(f"({c})")
            else:
                parts.append(f"({c})*{basis}")
        return " + ".join(parts)

    def __repr__(self):
        return f"SymFuncPrimal({self})"

    def to_json(self) -> dict:
        return {"basis": "s[x-a]",
                "entries": [[list(la), c.to_json()] for la, c in
                            sorted(self.coeffs.items(), key=lambda t: (sum(t[0]), t[0]))]}

    @classmethod
    def from_json(cls, data: dict) -> "SymFuncPrimal":
        return cls({tuple(la): Poly.from_json(c) for la, c in data["entries"]})


def _split_multiset(mu: Partition):
    """All ways of distributing the parts of mu into (left, right) as multisets."""
    seen: dict = {}
    idx = range(len(mu))
    for k in range(len(mu) + 1):
        for chosen in combinations(idx, k):
            left = tuple(sorted((mu[i] for i in chosen), reverse=True))
            right = tuple(sorted((mu[i] for i in idx if i not in chosen), reverse=True))
            seen[(left, right)] = seen.get((left, right), 0) + 1
    for (left, right), mult in seen.items():
        for _ in range(mult):
            yield left, right


# primal bases -----------------------------------------------------------------

def s_x(la: Partition) -> SymFuncPrimal:
    return SymFuncPrimal({tuple(la): 1})


def h_x(la: Partition) -> SymFuncPrimal:
    return SymFuncPrimal(sf.h_to_s(tuple(la)))


def p_x(la) -> SymFuncPrimal:
    """p_la[x-a]; an int r means the single power sum p_r."""
    la = (la,) if isinstance(la, int) else tuple(la)
    return SymFuncPrimal(sf.p_to_s(la))


def m_x(la: Partition) -> SymFuncPrimal:
    """m_la[x-a], the basis dual to h_la[y]."""
    return SymFuncPrimal(sf.m_to_s(tuple(la)))


@lru_cache(maxsize=None)
def _double_h_single(r: int) -> SymFuncPrimal:
    if r < 0:
        return SymFuncPrimal()
    if r == 0:
        return SymFuncPrimal.one()
    shifted = list(range(0, 1 - r, -1))  # a_0, a_{-1}, ..., a_{2-r}
    out: dict = {}
    for j in range(r):
        c = elementary(j, shifted) * (-1) ** j
        sf.add_scaled(out, {(r - j,): 1}, c)
    return SymFuncPrimal(out)


def double_h(la) -> SymFuncPrimal:
    """h_la(x||a); an int r means the single-row h_r(x||a)."""
    if isinstance(la, int):
        return _double_h_single(la)
    f = SymFuncPrimal.one()
    for r in la:
        f = f * _double_h_single(r)
    return f


@lru_cache(maxsize=None)
def _shifted_h(m: int, shift: int) -> SymFuncPrimal:
    # tau^shift h_m(x||a)
    return _double_h_single(m).tau(shift) if m > 0 else _double_h_single(m)


@lru_cache(maxsize=None)
def double_schur(la: Partition) -> SymFuncPrimal:
    """
    s_la(x||a) = det(tau^{j-1} h_{la_i - i + j}(x||a)).

    >>> double_schur((1,)) == p_x(1)
    True
    """
    la = tuple(la)
    ell = len(la)
    if ell == 0:
        return SymFuncPrimal.one()

    @lru_cache(maxsize=None)
    def minor(row: int, cols: frozenset) -> SymFuncPrimal:
        # Laplace expansion along row ``row`` over the remaining columns
        if row == ell:
            return SymFuncPrimal.one()
        total = SymFuncPrimal()
        for pos, j in enumerate(sorted(cols)):
            m = la[row] - (row + 1) + (j + 1)
            if m < 0:
                continue
            entry = _shifted_h(m, j)
            if entry.is_zero():
                continue
            sub = minor(row + 1, cols - {j})
            if sub.is_zero():
                continue
            term = entry * sub
            total = total + term if pos % 2 == 0 else total - term
        return total

    return minor(0, frozenset(range(ell)))


@lru_cache(maxsize=None)
def _mtilde_single(r: int) -> SymFuncPrimal:
    idx = list(range(1, 1 - r, -1))  # a_1, a_0, ..., a_{2-r}
    out: dict = {}
    for j in range(1, r + 1):
        c = elementary(r - j, idx) * (-1) ** (r - j)
        sf.add_scaled(out, p_x(j).coeffs, c)
    return SymFuncPrimal(out)


def mtilde(la) -> SymFuncPrimal:
    """The primitive-product basis m~_la(x||a); an int r means m~_r."""
    if isinstance(la, int):
        return _mtilde_single(la) if la else SymFuncPrimal.one()
    f = SymFuncPrimal.one()
    for r in la:
        f = f * _mtilde_single(r)
    return f


@lru_cache(maxsize=None)
def double_monomial(la: Partition) -> SymFuncPrimal:
    """m_la(x||a) = sum_mu M_{la,mu} m_mu[x-a]."""
    la = tuple(la)
    M = matrix_M(max(sum(la), 1))
    out: dict = {}
    for mu in M.cols_of(la):
        sf.add_scaled(out, sf.m_to_s(mu), M[la, mu])
    return SymFuncPrimal(out)


_PRIMAL = {
    "pX": p_x, "sX": s_x, "hX": h_x, "mX": m_x, "hDouble": double_h,
    "sDouble": double_schur, "mTilde": mtilde, "mDouble": double_monomial,
}


def basis_element(basis: str, la: Partition) -> SymFuncPrimal:
    try:
        return _PRIMAL[basis](tuple(la))
    except KeyError:
        raise ValueError(f"unknown primal basis {basis!r}; choose from {sorted(_PRIMAL)}") from None


# dual ring -------------------------------------------------------------------

@dataclass(frozen=True)
class SymFuncDual:
    """A symmetric series in y, known exactly through degree ``cutoff``."""
    coeffs: dict
    cutoff: int

    def __post_init__(self):
        clean = {tuple(la): _coeff(c) for la, c in self.coeffs.items()
                 if c and sum(la) <= self.cutoff}
        object.__setattr__(self, "coeffs", clean)

    def _low(self) -> int:
        return min((sum(la) for la in self.coeffs), default=self.cutoff + 1)

    def __add__(self, other: "SymFuncDual") -> "SymFuncDual":
        out = dict(self.coeffs)
        sf.add_scaled(out, other.coeffs, 1)
        return SymFuncDual(out, min(self.cutoff, other.cutoff))

    def __neg__(self):
        return SymFuncDual({la: -c for la, c in self.coeffs.items()}, self.cutoff)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymFuncDual):
            cut = min(self.cutoff + other._low(), other.cutoff + self._low())
            return SymFuncDual(sf.multiply(self.coeffs, other.coeffs, cut), cut)
        c = _coeff(other)
        return SymFuncDual({la: c * v for la, v in self.coeffs.items()}, self.cutoff)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, SymFuncDual) and self.cutoff == other.cutoff
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.cutoff, frozenset(self.coeffs.items())))

    def truncate(self, d: int) -> "SymFuncDual":
        if d > self.cutoff:
            raise CutoffTooSmall(f"cannot extend cutoff {self.cutoff} to {d}")
        return SymFuncDual(self.coeffs, d)

    def coefficient(self, la: Partition) -> Poly:
        if sum(la) > self.cutoff:
            raise CutoffTooSmall(f"degree {sum(la)} is above the cutoff {self.cutoff}")
        return self.coeffs.get(tuple(la), _zero())

    def specialize_zero(self) -> dict:
        out = {la: c.constant_term() for la, c in self.coeffs.items()}
        return {la: c for la, c in out.items() if c}

    def to_h(self) -> dict:
        """Expansion in h_mu[y] (exact through the cutoff)."""
        out: dict = {}
        for la, c in self.coeffs.items():
            sf.add_scaled(out, sf.s_to_h(la), c)
        return out


def _check_cutoff(need: int, have: int):
    if need > have:
        raise CutoffTooSmall(f"need degree {need} but cutoff is {have}")


@lru_cache(maxsize=None)
def _hhat_single(k: int, D: int) -> SymFuncDual:
    if k == 0:
        return SymFuncDual({(): 1}, D)
    idx = list(range(0, -k, -1))  # a_0, ..., a_{1-k}
    a1 = -Poly.var(1)
    out: dict = {}
    for p in range(D - k + 1):
        hp = complete(p, idx)
        for q in range(D - k - p + 1):
            sf.add_scaled(out, {sf.hook(k + p, q): 1}, a1 ** q * hp)
    return SymFuncDual(out, D)


@lru_cache(maxsize=None)
def hhat(la, D: int) -> SymFuncDual:
    """
    The dual homogeneous element h^_la(y||a), exact through degree D.

    >>> hh = hhat((1,), 2)
    >>> [(la, str(c)) for la, c in sorted(hh.coeffs.items())]
    [((1,), '1'), ((1, 1), '-a_1'), ((2,), 'a_0')]
    """
    la = (la,) if isinstance(la, int) else tuple(la)
    _check_cutoff(sum(la), D)
    f = SymFuncDual({(): 1}, D)
    for k in la:
        f = f * _hhat_single(k, D)
    return f.truncate(D) if f.cutoff > D else f


def h_y(la: Partition, D: int) -> SymFuncDual:
    _check_cutoff(sum(la), D)
    return SymFuncDual(sf.h_to_s(tuple(la)), D)


def p_y(la: Partition, D: int) -> SymFuncDual:
    _check_cutoff(sum(la), D)
    return SymFuncDual(sf.p_to_s(tuple(la)), D)


def _all_partitions(max_size: int) -> list:
    return [la for k in range(max_size + 1) for la in partitions(k)]


@lru_cache(maxsize=None)
def _double_schur_inverse(D: int) -> dict:
    order = _all_partitions(D)
    entries = {}
    for la in order:
        for mu, c in double_schur(la).coeffs.items():
            entries[(la, mu)] = c
    return invert_unitriangular(order, entries, Poly.one())


def shat(la: Partition, D: int) -> SymFuncDual:
    """The dual Schur element, dual to the double Schur basis, exact through degree D."""
    la = tuple(la)
    _check_cutoff(sum(la), D)
    inv = _double_schur_inverse(D)
    # <s_nu(x||a), sum_mu X[mu, la] s_mu[y]> = sum_mu S[nu, mu] X[mu, la] = delta
    return SymFuncDual({mu: inv[(mu, la)] for mu in _all_partitions(D) if (mu, la) in inv}, D)


_DUAL = {"hHat": hhat, "sHat": shat, "hY": h_y, "pY": p_y}


def dual_basis_element(basis: str, la: Partition, D: int) -> SymFuncDual:
    try:
        fn = _DUAL[basis]
    except KeyError:
        raise ValueError(f"unknown dual basis {basis!r}; choose from {sorted(_DUAL)}") from None
    return fn(tuple(la), D)


def pairing(f: SymFuncPrimal, g: SymFuncDual) -> Poly:
    """The bilinear form making s_la[x-a] and s_mu[y] dual."""
    _check_cutoff(f.degree(), g.cutoff)
    total = _zero()
    for la, c in f.coeffs.items():
        d = g.coeffs.get(la)
        if d is not None:
            total = total + c * d
    return total


# transition matrices -----------------------------------------------------------

@dataclass(frozen=True)
class TransitionMatrix:
    """Partition-indexed matrix of polynomials; missing entries are zero."""
    row_basis: str
    col_basis: str
    rows: tuple
    cols: tuple
    entries: dict = field(repr=False)
    degree_bound: int
    mode: Optional[int] = None

    def __getitem__(self, key) -> Poly:
        la, mu = key
        return self.entries.get((tuple(la), tuple(mu)), Poly.zero(self.mode))

    def cols_of(self, la: Partition) -> list:
        return [mu for mu in self.cols if (tuple(la), mu) in self.entries]

    def row(self, la: Partition) -> dict:
        return {mu: self.entries[(la, mu)] for mu in self.cols if (la, mu) in self.entries}

    def is_unitriangular(self) -> bool:
        pos = {mu: i for i, mu in enumerate(self.cols)}
        for (la, mu), v in self.entries.items():
            if la == mu and v != 1:
                return False
            if la != mu and la in pos and pos[mu] > pos[la]:
                return False
        return all(self.entries.get((la, la)) == 1 for la in self.rows if la in pos)

    def map(self, f, mode="same") -> "TransitionMatrix":
        ents = {k: f(v) for k, v in self.entries.items()}
        return TransitionMatrix(self.row_basis, self.col_basis, self.rows, self.cols,
                                {k: v for k, v in ents.items() if v}, self.degree_bound,
                                self.mode if mode == "same" else mode)


def _size_order(parts: Iterable[Partition]) -> tuple:
    return tuple(sorted(parts, key=lambda la: (sum(la), la)))


@lru_cache(maxsize=None)
def matrix_M(max_size: int) -> TransitionMatrix:
    """
    M with m_la(x||a) = sum_mu M[la, mu] m_mu[x-a]; M[la, mu] is the
    coefficient of h^_la(y||a) in h_mu[y].
    """
    if max_size < 1:
        raise ValueError("max_size must be at least 1")
    order = _all_partitions(max_size)
    H = {}
    for la in order:
        for nu, c in hhat(la, max_size).to_h().items():
            H[(la, nu)] = c
    X = invert_unitriangular(order, H, Poly.one())
    ents = {(la, mu): X[(mu, la)] for la in order for mu in order if (mu, la) in X}
    return TransitionMatrix("mDouble", "mX", _size_order(order), _size_order(order),
                            ents, max_size)


def monomial_expand(f: SymFuncPrimal, D: Optional[int] = None) -> dict:
    """Coordinates of f in the double monomial basis, as {la: poly}."""
    deg = max(f.degree(), 0)
    D = deg if D is None else D
    _check_cutoff(deg, D)
    out = {}
    for la in _all_partitions(deg):
        c = pairing(f, hhat(la, D))
        if c:
            out[la] = c
    return out


@lru_cache(maxsize=None)
def equivariant_kostka(max_size: int) -> TransitionMatrix:
    """K^_{la,mu}(a) with s_la(x||a) = sum_mu K^_{la,mu} m_mu(x||a)."""
    order = _size_order(_all_partitions(max_size))
    ents = {}
    for la in order:
        for mu, c in monomial_expand(double_schur(la)).items():
            ents[(la, mu)] = c
    return TransitionMatrix("sDouble", "mDouble", order, order, ents, max_size)


def quotient_project(f: SymFuncPrimal, n: int) -> dict:
    """Image of f in the quotient ring, in the basis m_la(x||a) with la_1 < n."""
    out = {}
    for la, c in monomial_expand(f).items():
        if la and la[0] >= n:
            continue
        c = forget(c, n)
        if c:
            out[la] = c
    return out


def product_coeff_c(i: int, r: int, l: int, n: Optional[int] = None) -> Poly:
    """
    Coefficient of s_(i)(x||a) = h_i(x||a) when h_r(x||a) h_l(x||a) is expanded
    in the double Schur basis; reduced to the cyclic ring when ``n`` is given.

    >>> str(product_coeff_c(1, 1, 1))
    'a_0 - a_1'
    """
    prod = double_h(r) * double_h(l)
    c = pairing(prod, shat((i,) if i else (), max(r + l, i)))
    return forget(c, n) if n is not None else c
