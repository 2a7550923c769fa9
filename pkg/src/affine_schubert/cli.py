"""
Command line front end: ``affine-schubert <verb> [options]``.

Exit status is 0 on success, 1 when a check fails and 2 on usage errors.
Output goes to stdout, or to ``$AFFINE_SCHUBERT_OUTPUT_DIR/<verb>.<format>``
when that variable (or ``--output-dir``) is set.
"""

from __future__ import annotations

import argparse
import difflib
import json
import os
import sys
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence

from .doublesym import (CutoffTooSmall, basis_element, dual_basis_element, pairing)
from .peterson import compute_j
from .poly import PolyError, format_alpha, format_poly
from .schubert import (InsufficientData, affine_double_stanley, affine_window, epsilon_gr,
                       epsilon_inf, gkm_check, k_double_schur, localize_gr, localize_inf,
                       sz_window, xi_function)
from .tables import (FORMATS, branch_tables, kostka_inf_table, kostka_table, monomial_table,
                     parse_part_label, part_label)
from .weyl import (AffinePerm, FinitePermZ, NotGrassmannian, PartTooLarge,
                   partition_to_w_aff, partition_to_w_inf)

VERBS = ("monomial", "kostka", "kostka-inf", "jbasis", "stanley", "kschur", "localize",
         "gkm-check", "branch", "pair", "verify-all")

OUTPUT_ENV = "AFFINE_SCHUBERT_OUTPUT_DIR"

# verify-all regenerates each of these and compares byte for byte (text mode)
GOLDENS = {
    "monomial_4.txt": ["monomial", "--max-size", "4"],
    "monomial_1r_6.txt": ["monomial", "--max-size", "6", "--hooks-only"],
    "kostka_n2_6.txt": ["kostka", "--n", "2", "--max-size", "6"],
    "kostka_n3_5.txt": ["kostka", "--n", "3", "--max-size", "5"],
    "kostka_n4_4.txt": ["kostka", "--n", "4", "--max-size", "4", "--alpha-labels", "reversed"],
    "kostka_inf_4.txt": ["kostka-inf", "--max-size", "4"],
    "branch_n2_inf_4.txt": ["branch", "--n", "2", "--m", "0", "--max-size", "4"],
    "branch_n3_inf_4.txt": ["branch", "--n", "3", "--m", "0", "--max-size", "4"],
    "branch_n3_inf_4_reduced_rows.txt": ["branch", "--n", "3", "--m", "0", "--max-size", "4",
                                         "--basis", "reduced-rows"],
    "branch_n2_m4_4.txt": ["branch", "--n", "2", "--m", "4", "--max-size", "4"],
}


class UsageError(Exception):
    pass


def _parts(s: Optional[str], flag: str):
    if s is None:
        raise UsageError(f"{flag} is required")
    try:
        return parse_part_label(s)
    except ValueError as e:
        raise UsageError(f"{flag}: {e}") from None


def _word(s: str, flag: str) -> list[int]:
    if s.strip() in ("", "id"):
        return []
    try:
        return [int(x) for x in s.split(",")]
    except ValueError:
        raise UsageError(f"{flag}: expected comma separated integers, got {s!r}") from None


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    pm = common.add_mutually_exclusive_group()
    pm.add_argument("--alpha", dest="alpha", action="store_true", default=None,
                    help="print coefficients in simple roots")
    pm.add_argument("--raw", dest="alpha", action="store_false",
                    help="print coefficients in the a-variables")
    common.add_argument("--alpha-labels", choices=("standard", "reversed"), default="standard",
                        help="reversed relabels alpha_i as alpha_{n-i}")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--output-dir", default=None)

    p = argparse.ArgumentParser(prog="affine-schubert",
                                description="Equivariant affine Schubert calculus tables and checks.")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("monomial", parents=[common], help="double monomial expansions")
    s.add_argument("--max-size", type=int, default=4)
    s.add_argument("--hooks-only", action="store_true", help="only the column partitions 1^r")

    s = sub.add_parser("kostka", parents=[common], help="equivariant k-Kostka matrix")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--max-size", type=int, default=4)

    s = sub.add_parser("kostka-inf", parents=[common], help="equivariant Kostka matrix")
    s.add_argument("--max-size", type=int, default=4)

    s = sub.add_parser("jbasis", parents=[common], help="Peterson basis elements j_w")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--partition", default=None)
    s.add_argument("--max-size", type=int, default=3)
    s.add_argument("--length-cutoff", type=int, default=None)

    s = sub.add_parser("stanley", parents=[common], help="affine double Stanley coordinates")
    s.add_argument("--n", type=int, required=True)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--word")
    g.add_argument("--partition")

    s = sub.add_parser("kschur", parents=[common], help="k-double Schur coordinates over h^")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--partition", required=True)
    s.add_argument("--degree-cutoff", type=int, default=None)

    s = sub.add_parser("localize", parents=[common], help="value of eps at a group element")
    s.add_argument("--n", type=int, default=0, help="0 for S_Z")
    s.add_argument("--basis", default="sDouble")
    s.add_argument("--partition", required=True)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--word", help="reduced word of the group element")
    g.add_argument("--at-partition", help="evaluate at the Grassmannian element of a partition")

    s = sub.add_parser("gkm-check", parents=[common], help="GKM conditions on a window")
    s.add_argument("--n", type=int, default=0, help="0 for S_Z")
    s.add_argument("--source", choices=("xi", "eps"), default="eps")
    s.add_argument("--basis", default="sDouble")
    s.add_argument("--partition", default="1")
    s.add_argument("--word", default="0", help="v for xi^v")
    s.add_argument("--length-cutoff", type=int, default=3, help="window length")
    s.add_argument("--d-max", type=int, default=3)
    s.add_argument("--perturb", default=None, metavar="WORD",
                   help="add 1 to the value at this element (failure demonstration)")

    s = sub.add_parser("branch", parents=[common], help="branching matrices")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int, default=0, help="0 for infinity")
    s.add_argument("--max-size", type=int, default=4)
    s.add_argument("--basis", choices=("schubert", "reduced-rows"), default="schubert")

    s = sub.add_parser("pair", parents=[common], help="pairing of a primal and a dual element")
    s.add_argument("--left-basis", default="sDouble")
    s.add_argument("--left", required=True)
    s.add_argument("--right-basis", default="sHat")
    s.add_argument("--right", required=True)
    s.add_argument("--degree-cutoff", type=int, default=None)

    s = sub.add_parser("verify-all", parents=[common], help="diff regenerated tables against goldens")
    s.add_argument("--golden-dir", default=None)
    s.add_argument("--update", action="store_true", help="rewrite the golden files")
    return p


def _mode(args, default_alpha: bool) -> str:
    alpha = default_alpha if args.alpha is None else args.alpha
    if not alpha:
        return "raw"
    return "alpha-reversed" if args.alpha_labels == "reversed" else "alpha"


def _poly_str(c, mode: str) -> str:
    if mode == "raw" or c.n is None:
        return format_poly(c)
    return format_alpha(c, reverse=(mode == "alpha-reversed"))


def _emit_map(title: str, data: list[tuple[str, object]], fmt: str, mode: str, extra=None) -> str:
    """Render a list of (label, Poly) pairs."""
    if fmt == "json":
        out = {"title": title, "entries": [[k, v.to_json(), _poly_str(v, mode)] for k, v in data]}
        if extra:
            out.update(extra)
        return json.dumps(out, indent=1, sort_keys=True)
    if fmt == "csv":
        return "\n".join(["key,value"] + [f"{k},\"{_poly_str(v, mode)}\"" for k, v in data])
    lines = [title] + [f"{k}: {_poly_str(v, mode)}" for k, v in data]
    if extra:
        lines += [f"{k}: {v}" for k, v in extra.items()]
    return "\n".join(lines)


def _check_n(n: int, flag: str = "--n") -> None:
    if n < 2:
        raise UsageError(f"{flag} must be at least 2")


def _run_verb(args) -> tuple[str, int]:
    v = args.verb
    fmt = args.format
    if v == "monomial":
        if args.max_size < 2:
            raise UsageError("--max-size must be at least 2")
        t = monomial_table(args.max_size).with_mode(_mode(args, False))
        if args.hooks_only:
            rows = tuple(r for r in t.rows if set(r) == {1})
            cols = tuple(c for c in t.cols if set(c) == {1})
            t = type(t)(f"double monomials 1^r, r <= {args.max_size}", rows, cols,
                        {k: x for k, x in t.entries.items() if k[0] in rows}, t.print_mode)
        return t.render(fmt), 0
    if v == "kostka":
        _check_n(args.n)
        return kostka_table(args.n, args.max_size, _mode(args, True)).render(fmt), 0
    if v == "kostka-inf":
        return kostka_inf_table(args.max_size).with_mode(_mode(args, False)).render(fmt), 0
    if v == "jbasis":
        _check_n(args.n)
        mode = _mode(args, True)
        if args.partition is not None:
            las = [_parts(args.partition, "--partition")]
        else:
            from .peterson import k_bounded_partitions
            las = k_bounded_partitions(args.n, args.max_size)
        chunks, data = [], {}
        for la in las:
            w = partition_to_w_aff(la, args.n)
            j = compute_j(w, args.length_cutoff)
            terms = [(x.word_str(), c) for x, c in j.elt.sorted_terms()]
            data[part_label(la)] = {"w": w.word_str(), "stabilized": j.stabilized,
                                    "length_cutoff": j.length_cutoff,
                                    "terms": [[k, c.to_json(), _poly_str(c, mode)] for k, c in terms]}
            head = f"j_{part_label(la)} (w = {w.word_str()}, {'exact' if j.stabilized else f'truncated at length {j.length_cutoff}'})"
            chunks.append("\n".join([head] + [f"  A[{k}]: {_poly_str(c, mode)}" for k, c in terms]))
        if fmt == "json":
            return json.dumps(data, indent=1, sort_keys=True), 0
        if fmt == "csv":
            rows = ["partition,element,coefficient"]
            for lab, d in data.items():
                rows += [f"{lab},{k},\"{s}\"" for k, _, s in d["terms"]]
            return "\n".join(rows), 0
        return "\n".join(chunks), 0
    if v == "stanley":
        _check_n(args.n)
        w = (AffinePerm.from_word(_word(args.word, "--word"), args.n) if args.word is not None
             else partition_to_w_aff(_parts(args.partition, "--partition"), args.n))
        st = affine_double_stanley(w)
        data = [(part_label(mu), c) for mu, c in sorted(st.coords.items(),
                                                        key=lambda t: (sum(t[0]), t[0]))]
        return _emit_map(f"F~_w, w = {w.word_str()}, over m_mu(x||a)", data, fmt, _mode(args, True)), 0
    if v == "kschur":
        _check_n(args.n)
        la = _parts(args.partition, "--partition")
        D = args.degree_cutoff if args.degree_cutoff is not None else sum(la) + 2
        d = k_double_schur(la, args.n, D)
        data = [(part_label(nu), c) for nu, c in sorted(d.items(), key=lambda t: (sum(t[0]), t[0]))]
        return _emit_map(f"s^({args.n - 1})_{part_label(la)} over h^_nu, degrees <= {D}", data, fmt,
                         _mode(args, True)), 0
    if v == "localize":
        f = basis_element(args.basis, _parts(args.partition, "--partition"))
        if args.n == 0:
            w = (FinitePermZ.from_word(_word(args.word, "--word")) if args.word is not None
                 else partition_to_w_inf(_parts(args.at_partition, "--at-partition")))
            val = epsilon_inf(f, w)
            label = str(w)
        else:
            _check_n(args.n)
            w = (AffinePerm.from_word(_word(args.word, "--word"), args.n) if args.word is not None
                 else partition_to_w_aff(_parts(args.at_partition, "--at-partition"), args.n))
            val = epsilon_gr(f, w)
            label = w.word_str()
        return _emit_map(f"eps({args.basis}[{args.partition}])", [(label, val)], fmt,
                         _mode(args, args.n != 0)), 0
    if v == "gkm-check":
        L = args.length_cutoff
        if args.n == 0:
            if args.source != "eps":
                raise UsageError("--source xi needs --n >= 2")
            f = localize_inf(basis_element(args.basis, _parts(args.partition, "--partition")))
            window = sz_window(-2, 2, L)
            label = f"S_Z, support in [-2, 2], length <= {L}"
            target = FinitePermZ.from_word(_word(args.perturb, "--perturb")) if args.perturb else None
        else:
            _check_n(args.n)
            if args.source == "xi":
                f = xi_function(AffinePerm.from_word(_word(args.word, "--word"), args.n))
            else:
                f = localize_gr(basis_element(args.basis, _parts(args.partition, "--partition")), args.n)
            window = affine_window(args.n, L)
            label = f"affine n={args.n}, length <= {L}"
            target = AffinePerm.from_word(_word(args.perturb, "--perturb"), args.n) if args.perturb else None
        if target is not None:
            f = f.perturbed(target, 1)
        rep = gkm_check(f, window, d_max=args.d_max, window_label=label)
        if fmt == "json":
            text = json.dumps(rep.to_json(), indent=1, sort_keys=True)
        else:
            text = "\n".join([f"check: {rep.check}", f"window: {rep.window}",
                              f"conditions checked: {rep.checked}",
                              f"result: {'pass' if rep.passed else 'FAIL'}"]
                             + [f"witness: {w}" for w in rep.witnesses])
        return text, 0 if rep.passed else 1
    if v == "branch":
        _check_n(args.n)
        m = None if args.m == 0 else args.m
        if m is not None and (m % args.n or m <= args.n):
            raise UsageError("--m must be 0 or a proper multiple of --n")
        first, second = branch_tables(args.n, m, args.max_size, args.basis, _mode(args, True))
        if fmt == "json":
            return json.dumps({"reduced": first.to_json(), "branch": second.to_json()},
                              indent=1, sort_keys=True), 0
        return first.render(fmt) + "\n\n" + second.render(fmt), 0
    if v == "pair":
        f = basis_element(args.left_basis, _parts(args.left, "--left"))
        D = args.degree_cutoff if args.degree_cutoff is not None else max(f.degree(), 0)
        g = dual_basis_element(args.right_basis, _parts(args.right, "--right"), D)
        val = pairing(f, g)
        return _emit_map(f"<{args.left_basis}[{args.left}], {args.right_basis}[{args.right}]>",
                         [("value", val)], fmt, "raw"), 0
    if v == "verify-all":
        return _verify_all(args)
    raise UsageError(f"unknown verb {v!r}")


def golden_dir() -> Path:
    return Path(str(resources.files("affine_schubert") / "data" / "goldens"))


def _verify_all(args) -> tuple[str, int]:
    gdir = Path(args.golden_dir) if args.golden_dir else golden_dir()
    lines, bad = [], 0
    for name, argv in GOLDENS.items():
        text, code = run(argv, capture=True)
        path = gdir / name
        if args.update:
            gdir.mkdir(parents=True, exist_ok=True)
            path.write_text(text + "\n")
            lines.append(f"wrote {name}")
            continue
        if not path.exists():
            bad += 1
            lines.append(f"MISSING {name}")
            continue
        want = path.read_text()
        if want == text + "\n":
            lines.append(f"ok {name}")
        else:
            bad += 1
            lines.append(f"DIFF {name}")
            lines += difflib.unified_diff(want.splitlines(), text.splitlines(), "golden", "current",
                                          lineterm="")
    if args.update:
        lines.append(f"wrote {len(GOLDENS)} golden tables to {gdir}")
    else:
        lines.append(f"{len(GOLDENS) - bad}/{len(GOLDENS)} golden tables match")
    if args.format == "json":
        return json.dumps({"pass": bad == 0, "log": lines}, indent=1), 1 if bad else 0
    return "\n".join(lines), 1 if bad else 0


def run(argv: Sequence[str], capture: bool = False):
    """
    Run one command. With ``capture`` returns ``(text, status)``; otherwise
    writes the output and returns the exit status.
    """
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as e:
        code = e.code if isinstance(e.code, int) else 2
        return ("", code) if capture else code
    try:
        text, status = _run_verb(args)
    except UsageError as e:
        msg = f"usage error: {e}"
        if capture:
            return msg, 2
        print(msg, file=sys.stderr)
        return 2
    except (CutoffTooSmall, PartTooLarge, NotGrassmannian, InsufficientData, PolyError, ValueError) as e:
        msg = f"error: {type(e).__name__}: {e}"
        if capture:
            return msg, 2
        print(msg, file=sys.stderr)
        return 2
    if capture:
        return text, status
    out_dir = args.output_dir or os.environ.get(OUTPUT_ENV)
    if out_dir:
        path = Path(out_dir) / f"{args.verb}.{args.format}"
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text + "\n")
        print(str(path))
    else:
        print(text)
    return status


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
