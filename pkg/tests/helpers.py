"""Conversions from sympy expressions to package polynomials, used by tests."""

from __future__ import annotations

import re
from fractions import Fraction

import sympy as sp

from affine_schubert.poly import Poly, simple_root


def _symbol_to_poly(name: str, n):
    m = re.fullmatch(r"alpha(\d+)", name)
    if m:
        return simple_root(int(m.group(1)), n)
    m = re.fullmatch(r"a(m?)(\d+)", name)
    if m:
        i = int(m.group(2)) * (-1 if m.group(1) else 1)
        return Poly.var(i, n)
    raise ValueError(f"unknown symbol {name}")


def sym_to_poly(expr, n=None) -> Poly:
    """Parse a string or sympy expression in alphaK / aK / amK symbols."""
    e = sp.sympify(expr) if isinstance(expr, str) else expr
    e = sp.expand(e)
    syms = sorted(e.free_symbols, key=lambda s: s.name)
    if not syms:
        return Poly.const(Fraction(str(sp.Rational(e))), n)
    P = sp.Poly(e, *syms)
    out = Poly.zero(n)
    images = [_symbol_to_poly(s.name, n) for s in syms]
    for exps, c in P.terms():
        t = Poly.const(Fraction(int(c.p), int(c.q)), n)
        for img, k in zip(images, exps):
            t = t * img ** k
        out = out + t
    return out


def reverse_alpha_labels(expr: str, n: int) -> str:
    """Swap alphaK -> alpha(n-K) in an expression string."""
    return re.sub(r"alpha(\d+)", lambda m: f"ALPHA{n - int(m.group(1))}", expr).replace("ALPHA", "alpha")


def table_to_polys(table: dict, n=None, reverse: bool = False) -> dict:
    out = {}
    for key, s in table.items():
        if reverse:
            s = reverse_alpha_labels(s, n)
        out[key] = sym_to_poly(s, n)
    return out


def compare_tables(expected: dict, actual: dict, rows, cols) -> list:
    """Entry-by-entry comparison over rows x cols; missing means zero."""
    bad = []
    for r in rows:
        for c in cols:
            e = expected.get((r, c))
            a = actual.get((r, c))
            e_zero = e is None or not e
            a_zero = a is None or not a
            if e_zero and a_zero:
                continue
            if e_zero != a_zero or e != a:
                bad.append((r, c, str(e) if e is not None else "0", str(a) if a is not None else "0"))
    return bad
