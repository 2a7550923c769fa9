"""
Type A Weyl groups: finitary permutations of Z (the group S_Z) and the affine
symmetric group in window notation, with lengths, reduced words, Bruhat order,
Grassmannian quotients and the partition / core bijections.

Both groups act on Z. ``s(i)`` in S_Z swaps i and i+1; the affine ``s(i, n)``
swaps j and j+1 for every j congruent to i mod n.

>>> w = AffinePerm.from_word([1, 0], 2)
>>> w, w.length(), core_of(w)
(AffinePerm([-1, 4]), 2, (2, 1))
>>> w_to_partition_inf(partition_to_w_inf((3, 1)))
(3, 1)
"""

from __future__ import annotations

__all__ = [
    "Partition", "FinitePermZ", "AffinePerm", "GroupMismatch", "NotGrassmannian",
    "NotACore", "PartTooLarge",
    "conjugate", "partitions", "bounded_partitions", "is_core", "hook_lengths",
    "contains", "dominates", "sorted_partitions", "multiplicities",
    "partition_to_w_inf", "w_to_partition_inf", "partition_to_w_aff",
    "core_of", "core_to_affine", "translation", "translation_coset",
    "affine_elements_of_length", "affine_elements_up_to", "grassmannian_up_to",
    "bruhat_leq", "rho", "positive_image",
]

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

Partition = tuple  # weakly decreasing tuple of positive ints


class GroupMismatch(ValueError):
    pass


class NotGrassmannian(ValueError):
    pass


class NotACore(ValueError):
    pass


class PartTooLarge(ValueError):
    pass


# partitions --------------------------------------------------------------

def conjugate(la: Partition) -> Partition:
    if not la:
        return ()
    return tuple(sum(1 for p in la if p > j) for j in range(la[0]))


@lru_cache(maxsize=None)
def partitions(k: int, max_part: Optional[int] = None) -> tuple[Partition, ...]:
    """
    Partitions of ``k`` with parts at most ``max_part``, in reverse
    lexicographic order.

    >>> partitions(4)
    ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    """
    if max_part is None:
        max_part = k
    if k == 0:
        return ((),)
    out = []
    for first in range(min(k, max_part), 0, -1):
        for rest in partitions(k - first, first):
            out.append((first,) + rest)
    return tuple(out)


def sorted_partitions(parts: Iterable[Partition]) -> list[Partition]:
    """Order used by the tables: by size, then lexicographically on parts."""
    return sorted(parts, key=lambda la: (sum(la), la))


def bounded_partitions(max_size: int, bound: Optional[int] = None,
                       min_size: int = 0) -> list[Partition]:
    """All partitions of size ``min_size..max_size`` with parts ``< bound``."""
    out = []
    for k in range(min_size, max_size + 1):
        mp = k if bound is None else min(k, bound - 1)
        out.extend(reversed(partitions(k, mp)))
    return out


def contains(la: Partition, mu: Partition) -> bool:
    """True iff the diagram of ``mu`` is inside ``la``."""
    if len(mu) > len(la):
        return False
    return all(m <= l for m, l in zip(mu, la))


def dominates(la: Partition, mu: Partition) -> bool:
    if sum(la) != sum(mu):
        return False
    s = t = 0
    for i in range(max(len(la), len(mu))):
        s += la[i] if i < len(la) else 0
        t += mu[i] if i < len(mu) else 0
        if s < t:
            return False
    return True


def hook_lengths(la: Partition) -> list[int]:
    lc = conjugate(la)
    return [la[i] - j + lc[j] - i - 1 for i in range(len(la)) for j in range(la[i])]


def is_core(la: Partition, n: int) -> bool:
    return all(h % n for h in hook_lengths(la))


def multiplicities(la: Partition) -> dict[int, int]:
    d: dict[int, int] = {}
    for p in la:
        d[p] = d.get(p, 0) + 1
    return d


# S_Z ---------------------------------------------------------------------

@dataclass(frozen=True)
class FinitePermZ:
    """A permutation of Z moving finitely many points; ``moved`` lists (i, w(i))."""
    moved: tuple = ()

    n = None

    @classmethod
    def from_map(cls, m: dict[int, int]) -> "FinitePermZ":
        items = tuple(sorted((i, j) for i, j in m.items() if i != j))
        if sorted(i for i, _ in items) != sorted(j for _, j in items):
            raise ValueError("not a bijection on its support")
        return cls(items)

    @classmethod
    def s(cls, i: int) -> "FinitePermZ":
        return cls(((i, i + 1), (i + 1, i)))

    @classmethod
    def identity(cls) -> "FinitePermZ":
        return cls(())

    @classmethod
    def from_word(cls, word: Iterable[int]) -> "FinitePermZ":
        w = cls.identity()
        for i in word:
            w = w * cls.s(i)
        return w

    def apply(self, i: int) -> int:
        for a, b in self.moved:
            if a == i:
                return b
        return i

    __call__ = apply

    def support(self) -> tuple[int, int]:
        if not self.moved:
            return (1, 0)
        return (self.moved[0][0], self.moved[-1][0])

    def __mul__(self, other: "FinitePermZ") -> "FinitePermZ":
        if not isinstance(other, FinitePermZ):
            raise GroupMismatch("cannot multiply elements of different groups")
        pts = {i for i, _ in self.moved} | {i for i, _ in other.moved}
        return FinitePermZ.from_map({i: self.apply(other.apply(i)) for i in pts})

    def inverse(self) -> "FinitePermZ":
        return FinitePermZ(tuple(sorted((b, a) for a, b in self.moved)))

    def length(self) -> int:
        lo, hi = self.support()
        vals = [self.apply(i) for i in range(lo, hi + 1)]
        return sum(1 for x in range(len(vals)) for y in range(x + 1, len(vals))
                   if vals[x] > vals[y])

    def right_descents(self) -> list[int]:
        lo, hi = self.support()
        return [i for i in range(lo, hi) if self.apply(i) > self.apply(i + 1)]

    def reduced_word(self) -> list[int]:
        word = []
        w = self
        while w.moved:
            i = min(w.right_descents())
            word.append(i)
            w = w * FinitePermZ.s(i)
        return word[::-1]

    def is_grassmannian(self) -> bool:
        return all(i == 0 for i in self.right_descents())

    def __repr__(self):
        if not self.moved:
            return "FinitePermZ(id)"
        return "FinitePermZ(" + " ".join(f"s{i}" for i in self.reduced_word()) + ")"


def partition_to_w_inf(la: Partition) -> FinitePermZ:
    """w_la in S_Z."""
    return FinitePermZ.from_word(_partition_word(la))


def _partition_word(la: Partition) -> list[int]:
    word = []
    for i in range(len(la), 0, -1):
        word.extend(range(la[i - 1] - i, -i, -1))
    return word


def w_to_partition_inf(w: FinitePermZ) -> Partition:
    if not w.is_grassmannian():
        raise NotGrassmannian(f"{w} has a right descent away from 0")
    parts = []
    i = 1
    while True:
        p = w.apply(1 - i) + i - 1
        if p <= 0:
            break
        parts.append(p)
        i += 1
    return tuple(parts)


# affine symmetric group ----------------------------------------------------

@dataclass(frozen=True)
class AffinePerm:
    """An element of the affine symmetric group, stored by its window."""
    window: tuple

    @property
    def n(self) -> int:
        return len(self.window)

    def __post_init__(self):
        n = len(self.window)
        if n < 2:
            raise ValueError("n must be at least 2")
        if len({x % n for x in self.window}) != n or sum(self.window) != n * (n + 1) // 2:
            raise ValueError(f"invalid affine window {self.window}")

    @classmethod
    def identity(cls, n: int) -> "AffinePerm":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def s(cls, i: int, n: int) -> "AffinePerm":
        return _simple(i % n, n)

    @classmethod
    def from_word(cls, word: Iterable[int], n: int) -> "AffinePerm":
        w = cls.identity(n)
        for i in word:
            w = w.right_mul_s(i)
        return w

    def apply(self, i: int) -> int:
        n = self.n
        q, r = divmod(i - 1, n)
        return self.window[r] + q * n

    __call__ = apply

    def __mul__(self, other: "AffinePerm") -> "AffinePerm":
        if not isinstance(other, AffinePerm) or other.n != self.n:
            raise GroupMismatch("elements of different groups")
        return AffinePerm(tuple(self.apply(x) for x in other.window))

    def inverse(self) -> "AffinePerm":
        n = self.n
        inv = [0] * n
        for i, x in enumerate(self.window, start=1):
            q, r = divmod(x - 1, n)
            inv[r] = i - q * n
        return AffinePerm(tuple(inv))

    def right_mul_s(self, i: int) -> "AffinePerm":
        """w s_i: swap window positions i and i+1 (cyclically)."""
        n = self.n
        i %= n
        w = list(self.window)
        if i == 0:
            w[0], w[-1] = w[-1] - n, w[0] + n
        else:
            w[i - 1], w[i] = w[i], w[i - 1]
        return AffinePerm(tuple(w))

    def left_mul_s(self, i: int) -> "AffinePerm":
        return _simple(i % self.n, self.n) * self

    def length(self) -> int:
        return _length(self.window)

    def has_right_descent(self, i: int) -> bool:
        n = self.n
        i %= n
        if i == 0:
            return self.window[-1] - n > self.window[0]
        return self.window[i - 1] > self.window[i]

    def right_descents(self) -> list[int]:
        return [i for i in range(self.n) if self.has_right_descent(i)]

    def has_left_descent(self, i: int) -> bool:
        return self.inverse().has_right_descent(i)

    def reduced_word(self) -> list[int]:
        return list(_reduced_word(self.window))

    def is_grassmannian(self) -> bool:
        return all(self.window[i] < self.window[i + 1] for i in range(self.n - 1))

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.n + 1))

    def finite_part(self) -> tuple:
        """The permutation u in S_n with w = t_nu u, in one-line notation."""
        n = self.n
        return tuple((x - 1) % n + 1 for x in self.window)

    def grassmannian_rep(self) -> "AffinePerm":
        """The minimal length representative of the coset w S_n."""
        return AffinePerm(tuple(sorted(self.window)))

    def __repr__(self):
        return f"AffinePerm({list(self.window)})"

    def word_str(self) -> str:
        w = self.reduced_word()
        return " ".join(f"s{i}" for i in w) if w else "id"


@lru_cache(maxsize=None)
def _simple(i: int, n: int) -> AffinePerm:
    return AffinePerm.identity(n).right_mul_s(i)


@lru_cache(maxsize=None)
def _length(window: tuple) -> int:
    n = len(window)
    total = 0
    for i in range(n):
        for j in range(i + 1, n):
            total += abs((window[j] - window[i]) // n)
    return total


@lru_cache(maxsize=None)
def _reduced_word(window: tuple) -> tuple:
    w = AffinePerm(window)
    if w.is_identity():
        return ()
    i = w.right_descents()[0]
    return _reduced_word(w.right_mul_s(i).window) + (i,)


def partition_to_w_aff(la: Partition, n: int) -> AffinePerm:
    """
    w_la^af, the affine Grassmannian element attached to an (n-1)-bounded partition.

    >>> partition_to_w_aff((1, 1), 2).reduced_word()
    [1, 0]
    """
    if la and la[0] >= n:
        raise PartTooLarge(f"{la} has a part >= {n}")
    return AffinePerm.from_word(_partition_word(la), n)


def rho(r: int, n: int) -> AffinePerm:
    """rho^r = s_{r-1} ... s_1 s_0."""
    return partition_to_w_aff((r,) if r else (), n)


def positive_image(w, upto: int) -> list[int]:
    """Sorted elements of w.Z_{>0} that are < ``upto``."""
    if isinstance(w, AffinePerm):
        n = w.n
        out = set()
        for x in w.window:
            start = x
            out.update(range(start, upto, n))
        return sorted(out)
    lo, hi = w.support()
    out = {w.apply(i) for i in range(1, max(hi, 0) + 1)}
    out |= set(range(max(hi, 0) + 1, upto))
    return sorted(e for e in out if e < upto)


def core_of(w: AffinePerm) -> Partition:
    """The n-core attached to an affine Grassmannian element."""
    if not w.is_grassmannian():
        raise NotGrassmannian(f"{w} is not Grassmannian")
    return _set_to_partition(positive_image(w, max(w.window) + w.n + 1))


def _set_to_partition(elems: list[int]) -> Partition:
    # elems: an initial segment of a sorted almost natural set
    lc = [i - c for i, c in enumerate(elems, start=1)]
    lc = [p for p in lc if p > 0]
    return conjugate(tuple(lc))


def core_to_affine(kappa: Partition, n: int) -> AffinePerm:
    if not is_core(kappa, n):
        raise NotACore(f"{kappa} is not a {n}-core")
    lc = conjugate(kappa)
    top = (kappa[0] if kappa else 0) + n + 1
    elems = [i - (lc[i - 1] if i <= len(lc) else 0) for i in range(1, top + 1)]
    mins: dict[int, int] = {}
    for e in elems:
        r = e % n
        if r not in mins or e < mins[r]:
            mins[r] = e
    return AffinePerm(tuple(sorted(mins.values())))


def translation(nu: Sequence[int]) -> AffinePerm:
    """t_nu with t_nu(i) = i + nu_i n."""
    n = len(nu)
    if sum(nu) != 0:
        raise ValueError("translation vector must sum to zero")
    return AffinePerm(tuple(i + nu[i - 1] * n for i in range(1, n + 1)))


def translation_coset(w: AffinePerm) -> tuple:
    """
    The nu with w S_n = t_nu S_n.

    >>> translation_coset(AffinePerm.s(0, 2))
    (1, -1)
    """
    n = w.n
    nu = [0] * n
    for x in w.window:
        r = (x - 1) % n + 1
        nu[r - 1] = (x - r) // n
    return tuple(nu)


# enumeration ---------------------------------------------------------------

@lru_cache(maxsize=None)
def affine_elements_of_length(n: int, length: int) -> tuple[AffinePerm, ...]:
    if length == 0:
        return (AffinePerm.identity(n),)
    out = set()
    for w in affine_elements_of_length(n, length - 1):
        for i in range(n):
            if not w.has_right_descent(i):
                out.add(w.right_mul_s(i))
    return tuple(sorted(out, key=lambda w: w.window))


def affine_elements_up_to(n: int, length: int) -> list[AffinePerm]:
    return [w for k in range(length + 1) for w in affine_elements_of_length(n, k)]


def grassmannian_up_to(n: int, length: int) -> list[AffinePerm]:
    return [w for w in affine_elements_up_to(n, length) if w.is_grassmannian()]


# Bruhat order --------------------------------------------------------------

def bruhat_leq(v, w) -> bool:
    """
    Bruhat order via the lifting property.

    >>> s = lambda *word: AffinePerm.from_word(word, 2)
    >>> bruhat_leq(s(0), s(1, 0)), bruhat_leq(s(1), s(0))
    (True, False)
    """
    if type(v) is not type(w) or v.n != w.n:
        raise GroupMismatch("Bruhat comparison across groups")
    if isinstance(v, AffinePerm):
        return _bruhat_aff(v.window, w.window)
    return _bruhat_z(v, w)


@lru_cache(maxsize=None)
def _bruhat_aff(v: tuple, w: tuple) -> bool:
    if v == w:
        return True
    V, W = AffinePerm(v), AffinePerm(w)
    lv, lw = V.length(), W.length()
    if lv >= lw:
        return False
    if lv == 0:
        return True
    i = W.right_descents()[0]
    ws = W.right_mul_s(i)
    if V.has_right_descent(i):
        return _bruhat_aff(V.right_mul_s(i).window, ws.window)
    return _bruhat_aff(v, ws.window)


@lru_cache(maxsize=None)
def _bruhat_z(v: FinitePermZ, w: FinitePermZ) -> bool:
    if v == w:
        return True
    lv, lw = v.length(), w.length()
    if lv >= lw:
        return False
    if lv == 0:
        return True
    i = w.right_descents()[0]
    ws = w * FinitePermZ.s(i)
    vs = v * FinitePermZ.s(i)
    if v.apply(i) > v.apply(i + 1):
        return _bruhat_z(vs, ws)
    return _bruhat_z(v, ws)
