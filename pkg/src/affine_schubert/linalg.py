"""
Exact linear algebra kernels used by the transition-matrix code.

Matrices are sparse dicts ``{(row, col): value}`` over an explicit list of
indices; values are Fractions or Polys.
"""

from __future__ import annotations

__all__ = ["invert_unitriangular", "solve_rational", "SingularSystem", "Inconsistent"]

from fractions import Fraction
from typing import Hashable, Sequence


class SingularSystem(ArithmeticError):
    pass


class Inconsistent(ArithmeticError):
    pass


def invert_unitriangular(order: Sequence[Hashable], entries: dict, one=None) -> dict:
    """
    Invert a matrix that is unitriangular with respect to ``order``.

    Either triangle works: the shape is detected from ``entries``. Coefficients
    may be any ring elements; the diagonal must be exactly one.

    >>> inv = invert_unitriangular("ab", {("a", "a"): 1, ("b", "b"): 1, ("a", "b"): 3})
    >>> inv[("a", "b")]
    -3
    """
    pos = {x: i for i, x in enumerate(order)}
    upper = all(pos[r] <= pos[c] for (r, c), v in entries.items() if v)
    lower = all(pos[r] >= pos[c] for (r, c), v in entries.items() if v)
    if not (upper or lower):
        raise SingularSystem("matrix is not triangular in the given order")
    for x in order:
        d = entries.get((x, x), 0)
        if d != 1:
            raise SingularSystem(f"diagonal entry at {x!r} is {d}, not 1")
    if lower and not upper:
        t = {(c, r): v for (r, c), v in entries.items()}
        inv_t = invert_unitriangular(order, t, one)
        return {(c, r): v for (r, c), v in inv_t.items()}
    one = 1 if one is None else one
    rows: dict = {}
    for (r, c), v in entries.items():
        if v and r != c:
            rows.setdefault(r, []).append((c, v))
    inv: dict = {}
    # upper: X = M^{-1} satisfies X[r, c] = -sum_{r<k<=c} M[r, k] X[k, c]
    n = len(order)
    for j in range(n):
        c = order[j]
        inv[(c, c)] = one
        for i in range(j - 1, -1, -1):
            r = order[i]
            acc = None
            for k, v in rows.get(r, ()):
                x = inv.get((k, c))
                if x is not None and pos[k] <= j:
                    term = v * x
                    acc = term if acc is None else acc + term
            if acc is not None and acc:
                inv[(r, c)] = -acc
    return {k: v for k, v in inv.items() if v}


def solve_rational(rows: list[dict], rhs: list[Fraction], unknowns: Sequence) -> dict:
    """
    Solve a sparse linear system over Q exactly.

    ``rows[e]`` maps unknowns to coefficients of equation ``e``. Returns the
    unique solution as a dict; raises :class:`Inconsistent` if there is none
    and :class:`SingularSystem` if it is not unique.
    """
    index = {u: i for i, u in enumerate(unknowns)}
    m = len(unknowns)
    pivots: dict[int, tuple[dict, Fraction]] = {}
    for row, b in zip(rows, rhs):
        r = {index[u]: Fraction(v) for u, v in row.items() if v}
        b = Fraction(b)
        while r:
            p = min(r)
            if p in pivots:
                prow, pb = pivots[p]
                f = r[p]
                for k, v in prow.items():
                    nv = r.get(k, 0) - f * v
                    if nv:
                        r[k] = nv
                    else:
                        r.pop(k, None)
                b -= f * pb
            else:
                f = r[p]
                r = {k: v / f for k, v in r.items()}
                pivots[p] = (r, b / f)
                break
        else:
            if b:
                raise Inconsistent("linear system has no solution")
    if len(pivots) < m:
        free = [unknowns[i] for i in range(m) if i not in pivots]
        raise SingularSystem(f"solution not unique; free unknowns {free[:5]}")
    sol = [Fraction(0)] * m
    for p in sorted(pivots, reverse=True):
        prow, pb = pivots[p]
        sol[p] = pb - sum(v * sol[k] for k, v in prow.items() if k != p)
    return {unknowns[i]: sol[i] for i in range(m) if sol[i]}
