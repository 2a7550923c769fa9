"""
Partition-indexed tables of polynomials and their text / JSON / CSV renderings.

A :class:`Table` keeps the exact Poly entries; rendering is a separate step so
the same data can be printed in the a-variables, in simple roots, or in simple
roots with reversed labels.

>>> t = kostka_table(2, 3)
>>> print(t.render("text"))
K^(1), n=2, max size 3
    | ()  1  11        1^3
----+----------------------
()  | 1
1   |     1
11  |        1
1^3 |        -alpha_1  1
"""

from __future__ import annotations

__all__ = [
    "Table", "part_label", "parse_part_label", "monomial_table", "kostka_table",
    "kostka_inf_table", "branch_tables", "table_from_json", "FORMATS", "PRINT_MODES",
]

import csv
import io
import json
from dataclasses import dataclass
from typing import Optional

from .doublesym import equivariant_kostka, matrix_M
from .peterson import kostka_matrix_aff
from .poly import Poly, format_alpha, format_poly
from .schubert import branching_coeffs
from .weyl import Partition

FORMATS = ("text", "json", "csv")
PRINT_MODES = ("raw", "alpha", "alpha-reversed")


def part_label(la: Partition) -> str:
    """
    Compact partition label: parts concatenated, runs of three or more
    written with an exponent.

    >>> part_label((2, 1, 1, 1)), part_label((1, 1)), part_label(())
    ('21^3', '11', '()')
    """
    if not la:
        return "()"
    out = []
    i = 0
    while i < len(la):
        j = i
        while j < len(la) and la[j] == la[i]:
            j += 1
        k = j - i
        p = str(la[i]) if la[i] < 10 else f"({la[i]})"
        out.append(p + f"^{k}" if k >= 3 else p * k)
        i = j
    return "".join(out)


def parse_part_label(s: str) -> Partition:
    """
    Inverse of :func:`part_label`; also accepts comma separated parts.

    >>> parse_part_label("21^3"), parse_part_label("3,1"), parse_part_label("()")
    ((2, 1, 1, 1), (3, 1), ())
    """
    s = s.strip()
    if s in ("()", "", "0", "empty"):
        return ()
    if "," in s:
        parts = tuple(int(x) for x in s.split(","))
    else:
        parts_l: list[int] = []
        i = 0
        while i < len(s):
            if s[i] == "(":
                j = s.index(")", i)
                p, i = int(s[i + 1:j]), j + 1
            else:
                p, i = int(s[i]), i + 1
            k = 1
            if i < len(s) and s[i] == "^":
                j = i + 1
                while j < len(s) and s[j].isdigit():
                    j += 1
                k, i = int(s[i + 1:j]), j
            parts_l.extend([p] * k)
        parts = tuple(parts_l)
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)) or any(p <= 0 for p in parts):
        raise ValueError(f"not a partition: {s!r}")
    return parts


def _fmt(c: Poly, mode: str) -> str:
    if mode == "raw":
        return format_poly(c)
    return format_alpha(c, reverse=(mode == "alpha-reversed"))


@dataclass(frozen=True)
class Table:
    title: str
    rows: tuple
    cols: tuple
    entries: dict          # (row, col) -> Poly, zeros omitted
    print_mode: str = "raw"

    def cell(self, r, c) -> str:
        v = self.entries.get((r, c))
        return "" if v is None or not v else _fmt(v, self.print_mode)

    def with_mode(self, mode: str) -> "Table":
        if mode not in PRINT_MODES:
            raise ValueError(f"unknown print mode {mode!r}")
        return Table(self.title, self.rows, self.cols, self.entries, mode)

    def render(self, fmt: str = "text") -> str:
        if fmt == "text":
            return self._text()
        if fmt == "json":
            return json.dumps(self.to_json(), indent=1, sort_keys=True)
        if fmt == "csv":
            return self._csv()
        raise ValueError(f"unknown format {fmt!r}")

    def _text(self) -> str:
        grid = [[part_label(r)] + [self.cell(r, c) for c in self.cols] for r in self.rows]
        head = [""] + [part_label(c) for c in self.cols]
        widths = [max(len(x[k]) for x in grid + [head]) for k in range(len(head))]

        def line(cells):
            first = cells[0].ljust(widths[0]) + " |"
            rest = "  ".join(c.ljust(w) for c, w in zip(cells[1:], widths[1:]))
            return (first + " " + rest).rstrip()

        rule = "-" * (widths[0] + 1) + "+" + "-" * (sum(widths[1:]) + 2 * len(widths[1:]))
        return "\n".join([self.title, line(head), rule] + [line(g) for g in grid])

    def _csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([""] + [part_label(c) for c in self.cols])
        for r in self.rows:
            w.writerow([part_label(r)] + [self.cell(r, c) for c in self.cols])
        return buf.getvalue().rstrip("\n")

    def to_json(self) -> dict:
        return {
            "title": self.title,
            "print_mode": self.print_mode,
            "rows": [list(r) for r in self.rows],
            "cols": [list(c) for c in self.cols],
            "entries": [[list(r), list(c), self.entries[(r, c)].to_json(), self.cell(r, c)]
                        for r in self.rows for c in self.cols if (r, c) in self.entries],
        }


def table_from_json(data) -> Table:
    """Rebuild a :class:`Table` from :meth:`Table.to_json` output (dict or string)."""
    if isinstance(data, str):
        data = json.loads(data)
    ents = {(tuple(r), tuple(c)): Poly.from_json(p) for r, c, p, _ in data["entries"]}
    return Table(data["title"], tuple(tuple(r) for r in data["rows"]),
                 tuple(tuple(c) for c in data["cols"]), ents, data["print_mode"])


# the concrete tables ----------------------------------------------------------------

def monomial_table(max_size: int, min_size: int = 2) -> Table:
    """Rows m_la(x||a), columns m_mu[x-a]."""
    M = matrix_M(max_size)
    rows = tuple(r for r in M.rows if sum(r) >= min_size)
    cols = tuple(c for c in M.cols if c)
    ents = {k: v for k, v in M.entries.items() if k[0] in rows}
    return Table(f"double monomials, size {min_size}..{max_size}", rows, cols, ents, "raw")


def kostka_table(n: int, max_size: int, mode: str = "alpha") -> Table:
    K = kostka_matrix_aff(n, max_size)
    return Table(f"K^({n - 1}), n={n}, max size {max_size}", K.rows, K.cols, dict(K.entries), mode)


def kostka_inf_table(max_size: int) -> Table:
    K = equivariant_kostka(max_size)
    return Table(f"K^, n=infinity, max size {max_size}", K.rows, K.cols, dict(K.entries), "raw")


def branch_tables(n: int, m: Optional[int], max_size: int, basis: str = "schubert",
                  mode: str = "alpha") -> tuple[Table, Table]:
    """
    The reduced Kostka matrix and the branching matrix (rows la_1 >= n).
    ``basis="reduced-rows"`` expresses those rows over the reduced rows with
    la_1 < n instead of over the affine double Schur rows.
    """
    if basis not in ("schubert", "reduced-rows"):
        raise ValueError(f"unknown basis {basis!r}")
    B = branching_coeffs(n, m, max_size)
    src = "infinity" if m is None else str(m)
    first = Table(f"reduced Kostka matrix, n={n}, m={src}", B.source_rows, B.target,
                  dict(B.reduced), mode)
    wide = tuple(nu for nu in B.source_rows if nu and nu[0] >= n)
    ents = B.branch if basis == "schubert" else B.branch_reduced_rows
    second = Table(f"branching matrix ({basis}), n={n}, m={src}", wide, B.target,
                   {k: v for k, v in ents.items() if k[0] in wide}, mode)
    return first, second
