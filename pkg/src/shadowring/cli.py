"""``shadowring`` command-line interface.

Exit codes: 0 success, 1 domain or parse error, 2 resource-guard refusal,
3 a conjecture check found a counterexample.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Sequence

from .checks import VERIFIERS
from .errors import DomainError, ResourceGuardError
from .field import QQ, Field, field_from_name
from .guards import resource_limits
from .local_stats import (
    Decomposition,
    builtin_statistic,
    decompose,
    junta_basis,
    minimal_locality,
    read_statistic_csv,
    write_decomposition_csv,
)
from .matrix_ring import hilbert_series, normal_form, standard_monomial_basis
from .polynomial import format_polynomial, parse_polynomial, polynomial_to_json
from .rep_theory import alpha, character_table, format_partition
from .schensted_core import (
    RookPlacement,
    ballot_check,
    format_permutation,
    format_rook_placement,
    iterated_shadow_sets,
    parse_permutation,
    parse_rook_placement,
    shadow_lines,
    shadow_set_to_permutation,
    viennot_schensted,
)

EXIT_OK, EXIT_DOMAIN, EXIT_GUARD, EXIT_COUNTEREXAMPLE = 0, 1, 2, 3
LONGRUN_CONJECTURE_N = 15


class _Parser(argparse.ArgumentParser):
    """Usage errors are input errors (exit 1); exit 2 is reserved for the resource guard."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise DomainError(f"{self.prog}: {message}")


def _header(**fields) -> str:
    return "# " + " ".join(f"{k}={v}" for k, v in fields.items())


def _rows_csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return out.getvalue()


def _emit(args, text: str = "", data=None, rows=None, columns=None, header: str | None = None) -> None:
    """Render one result in the requested format."""
    if args.format == "json":
        body = json.dumps(data, indent=2, sort_keys=False) + "\n"
    elif args.format == "csv" and rows is not None:
        body = (header + "\n" if header else "") + _rows_csv(columns, rows)
    else:
        body = (header + "\n" if header else "") + text
        if body and not body.endswith("\n"):
            body += "\n"
    if args.output:
        Path(args.output).write_text(body, encoding="utf-8")
    else:
        sys.stdout.write(body)


def _rational_only(args) -> None:
    if args.field != QQ:
        raise DomainError("character computations run over the rationals only (--field QQ)")


def _read_text(arg: str) -> str:
    path = Path(arg)
    if path.is_file():
        return path.read_text(encoding="utf-8").strip()
    return arg


def _rows(tableau) -> list[list[int]]:
    return [list(r) for r in tableau.rows]


def _fmt_rows(tableau) -> str:
    return ",".join("(" + ",".join(map(str, r)) + ")" for r in tableau.rows)


# -- commands ---------------------------------------------------------------------


def cmd_rsk(args) -> int:
    w = parse_permutation(args.permutation)
    pair = viennot_schensted(w)
    data = {"permutation": format_permutation(w), "shape": list(pair.shape), "P": _rows(pair.P), "Q": _rows(pair.Q)}
    text = f"P {_fmt_rows(pair.P)}\nQ {_fmt_rows(pair.Q)}\nshape {format_partition(pair.shape)}"
    rows = [["P", i + 1, ",".join(map(str, r))] for i, r in enumerate(pair.P.rows)]
    rows += [["Q", i + 1, ",".join(map(str, r))] for i, r in enumerate(pair.Q.rows)]
    _emit(args, text, data, rows, ["tableau", "row", "entries"], _header(n=w.n))
    return EXIT_OK


def cmd_shadow(args) -> int:
    text_in = _read_text(args.target)
    if ";" in text_in:
        placement = parse_rook_placement(text_in)
        w = None
    else:
        w = parse_permutation(text_in)
        placement = w.graph()
    diagram = shadow_lines(placement)
    lines = [
        {"points": [list(p) for p in line.points], "ray_x": line.ray_x, "ray_y": line.ray_y, "corners": [list(c) for c in line.corners]}
        for line in diagram.lines
    ]
    shadow = RookPlacement(placement.n, diagram.corners)
    data = {"placement": format_rook_placement(placement), "lines": lines, "shadow_set": format_rook_placement(shadow)}
    out = [f"line {t + 1}: points {' '.join(f'({i},{j})' for i, j in line.points)} ray_x={line.ray_x} ray_y={line.ray_y}" for t, line in enumerate(diagram.lines)]
    out.append(f"shadow set {format_rook_placement(shadow)}")
    if w is not None:
        iterated = [format_rook_placement(s) for s in iterated_shadow_sets(w)]
        data["iterated_shadow_sets"] = iterated
        out += [f"iterate {t + 1}: {s}" for t, s in enumerate(iterated)]
    rows = [[t + 1, line.ray_x, line.ray_y, " ".join(f"({i},{j})" for i, j in line.points)] for t, line in enumerate(diagram.lines)]
    _emit(args, "\n".join(out), data, rows, ["line", "ray_x", "ray_y", "points"], _header(n=placement.n, count=len(diagram.lines)))
    return EXIT_OK


def cmd_check_rook(args) -> int:
    placement = parse_rook_placement(_read_text(args.rook))
    ok, xs, ys = ballot_check(placement)
    data = {"placement": format_rook_placement(placement), "shadow_set": ok, "x_sequence": list(xs), "y_sequence": list(ys)}
    text = [f"shadow_set {'yes' if ok else 'no'}", "x " + ",".join(map(str, xs)), "y " + ",".join(map(str, ys))]
    if ok:
        w = shadow_set_to_permutation(placement)
        data["permutation"] = format_permutation(w)
        text.append(f"permutation {format_permutation(w)}")
    rows = [[k, x, y] for k, (x, y) in enumerate(zip(xs, ys), 1)]
    _emit(args, "\n".join(text), data, rows, ["position", "x", "y"], _header(n=placement.n))
    return EXIT_OK


def cmd_basis(args) -> int:
    basis = standard_monomial_basis(args.n)
    rows = [[format_permutation(w), m.degree, format_rook_placement(m.placement())] for w, m in basis]
    data = {"n": args.n, "field": args.field.name, "basis": [{"permutation": r[0], "degree": r[1], "shadow_set": r[2]} for r in rows]}
    text = "\n".join(f"{r[0]}\t{r[1]}\t{r[2]}" for r in rows)
    _emit(args, text, data, rows, ["permutation", "degree", "shadow_set"], _header(n=args.n, field=args.field.name, count=len(rows)))
    return EXIT_OK


def cmd_hilbert(args) -> int:
    hs = hilbert_series(args.n)
    data = {"n": args.n, "field": args.field.name, "hilbert_series": list(hs)}
    rows = [[d, c] for d, c in enumerate(hs)]
    _emit(args, ",".join(map(str, hs)), data, rows, ["degree", "dimension"], _header(n=args.n, field=args.field.name, count=len(hs)))
    return EXIT_OK


def cmd_reduce(args) -> int:
    f = parse_polynomial(_read_text(args.polynomial), args.n, args.field)
    nf = normal_form(f)
    data = {"n": args.n, "field": args.field.name, "input": format_polynomial(f), "normal_form": polynomial_to_json(nf), "text": format_polynomial(nf)}
    rows = [[format_rook_placement(m.placement()), args.field.format(c)] for m, c in nf.sorted_terms()]
    _emit(args, format_polynomial(nf), data, rows, ["rook_placement", "coefficient"], _header(n=args.n, field=args.field.name, count=len(nf.terms)))
    return EXIT_OK


def cmd_local_basis(args) -> int:
    basis = junta_basis(args.n, args.k)
    rows = [[len(r), format_rook_placement(r), format_permutation(w)] for r, w in zip(basis.elements, basis.permutations)]
    data = {"n": args.n, "k": args.k, "basis": [{"size": r[0], "rook_placement": r[1], "permutation": r[2]} for r in rows]}
    text = "\n".join(f"{r[0]}\t{r[1]}\t{r[2]}" for r in rows)
    _emit(args, text, data, rows, ["size", "rook_placement", "permutation"], _header(n=args.n, k=args.k, field=args.field.name, count=len(rows)))
    return EXIT_OK


def cmd_localize(args) -> int:
    if args.builtin:
        f = builtin_statistic(args.statistic, args.n, args.field)
    else:
        f = read_statistic_csv(Path(args.statistic).read_text(encoding="utf-8"), args.n, args.field)
    k = minimal_locality(f) if args.k is None else args.k
    result = decompose(f, k)
    if isinstance(result, Decomposition):
        coeffs = result.nonzero()
        text = write_decomposition_csv(coeffs, args.field)
        rows = [[format_rook_placement(r), args.field.format(c)] for r, c in coeffs.items()]
        data = {"n": args.n, "k": k, "local": True, "coefficients": [{"rook_placement": a, "coefficient": b} for a, b in rows]}
        _emit(args, text.rstrip("\n"), data, rows, ["rook_placement", "coefficient"], _header(n=args.n, k=k, field=args.field.name, count=len(rows)))
    else:
        data = {"n": args.n, "k": k, "local": False, "minimal_locality": result.minimal_locality}
        text = f"not {k}-local; minimal locality {result.minimal_locality}"
        _emit(args, text, data, [[k, result.minimal_locality]], ["k", "minimal_locality"], _header(n=args.n, k=k, field=args.field.name))
    return EXIT_OK


def cmd_char_table(args) -> int:
    _rational_only(args)
    table = character_table(args.n)
    columns = ["shape"] + [format_partition(mu) for mu in table.classes]
    rows = [[format_partition(lam)] + row for lam, row in zip(table.shapes, table.matrix())]
    data = {"n": args.n, "classes": columns[1:], "class_sizes": [table.class_sizes[mu] for mu in table.classes], "rows": {r[0]: r[1:] for r in rows}}
    text = _rows_csv(columns, rows).rstrip("\n")
    _emit(args, text, data, rows, columns, _header(n=args.n, field="QQ", count=len(rows)))
    return EXIT_OK


def cmd_alpha(args) -> int:
    _rational_only(args)
    phi = alpha(args.n, args.k)
    rows = [[format_partition(mu), str(v)] for mu, v in phi.values.items()]
    data = {"n": args.n, "k": args.k, "values": {r[0]: r[1] for r in rows}}
    text = "\n".join(f"{a}\t{b}" for a, b in rows)
    _emit(args, text, data, rows, ["cycle_type", "value"], _header(n=args.n, k=args.k, field="QQ", count=len(rows)))
    return EXIT_OK


def cmd_verify(args) -> int:
    name = args.check
    if name in ("graded", "novak-rhoades", "equivariant"):
        _rational_only(args)
    kwargs = {}
    if name == "basis":
        kwargs["field"] = args.field
    if name == "membership":
        kwargs.update(samples=args.samples, seed=args.seed, field=args.field)
    if name == "graded":
        kwargs["pairs"] = args.pairs
    overrides = {"max_conjecture_n": LONGRUN_CONJECTURE_N} if args.longrun else {}
    with resource_limits(**overrides):
        report = VERIFIERS[name](args.n, **kwargs)
    data = report.to_json()
    verdict = "counterexample" if report.counterexample else ("pass" if report.passed else "FAIL")
    text = f"{name} n={args.n} checked={report.checked} {verdict}"
    if report.failures:
        text += "\n" + "\n".join(json.dumps(f, sort_keys=True) for f in report.failures[:20])
    _emit(args, text, data, [[name, args.n, report.checked, verdict]], ["check", "n", "checked", "verdict"], _header(n=args.n, field=args.field.name))
    if report.counterexample:
        return EXIT_COUNTEREXAMPLE
    if not report.passed:
        print(f"verification {name} failed at n={args.n}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


def _field(text: str) -> Field:
    try:
        return field_from_name(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field, default=QQ, help="QQ (default) or a prime p")
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--output", "-o", help="write the result here instead of stdout")
    common.add_argument("--threads", type=int, default=1, help="accepted for compatibility; results never depend on it")

    parser = _Parser(prog="shadowring", description="Exact computations in the quotient ring F[x_{n x n}]/I_n.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("rsk", parents=[common], help="Schensted pair via shadow lines")
    p.add_argument("permutation", help='one-line notation, e.g. "4,1,8,5,3,6,2,7"')
    p.set_defaults(func=cmd_rsk)

    p = sub.add_parser("shadow", parents=[common], help="shadow lines of a permutation or rook placement")
    p.add_argument("target", help='a permutation, a rook placement "n; (i,j) ...", or a file holding either')
    p.set_defaults(func=cmd_shadow)

    p = sub.add_parser("check-rook", parents=[common], help="ballot test: is a rook placement a shadow set?")
    p.add_argument("rook", help='rook placement text or a file holding it')
    p.set_defaults(func=cmd_check_rook)

    for name, func, helptext in (
        ("basis", cmd_basis, "shadow monomial basis"),
        ("hilbert", cmd_hilbert, "Hilbert series coefficients by degree"),
        ("char-table", cmd_char_table, "character table of S_n"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--n", type=int, required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("reduce", parents=[common], help="normal form modulo I_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("polynomial", help='e.g. "x[1,1]*x[2,2] - 3*x[1,2]" or a file')
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("local-basis", parents=[common], help="shadow-junta basis of k-local statistics")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_local_basis)

    p = sub.add_parser("localize", parents=[common], help="decompose a statistic in the shadow-junta basis")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None, help="defaults to the minimal locality")
    p.add_argument("--builtin", action="store_true", help="treat STATISTIC as a built-in name (exc, inv, peak, lis, constant)")
    p.add_argument("statistic", help="CSV file with header permutation,value")
    p.set_defaults(func=cmd_localize)

    p = sub.add_parser("alpha", parents=[common], help="class function alpha_{n,k}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_alpha)

    p = sub.add_parser("verify", parents=[common], help="run a verification")
    p.add_argument("check", choices=sorted(VERIFIERS))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=200, help="membership: number of random polynomials")
    p.add_argument("--seed", type=int, default=0, help="membership: random seed")
    p.add_argument("--pairs", choices=["all", "identity"], default="all", help="graded: class pairs to trace")
    p.add_argument("--longrun", action="store_true", help=f"allow conjecture checks up to n={LONGRUN_CONJECTURE_N}")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.threads < 1:
            raise DomainError("--threads must be positive")
        if getattr(args, "n", 1) < 1:
            raise DomainError("--n must be at least 1")
        return args.func(args)
    except ResourceGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
