"""Command-line interface: ``seidelchain <command> ...``.

Exit status is 0 on success, 1 when a scan records a theorem-level
violation and 2 on usage or parse errors.  Data goes to stdout (or
``--out``); diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import logging
import sys

from . import formats
from .bounds import bounds_report, gamma2_closed_forms
from .chain import ChainStringError, parse_chain_string
from .explorer import (
    CHECKS,
    CONJECTURE_TOL,
    default_workers,
    gamma_family,
    min_energy_table,
    scan,
    write_csv,
    write_jsonl,
)
from .poly import (
    Poly,
    X,
    charpoly_quotient,
    charpoly_seidel,
    det_quotient,
    det_seidel,
    shifted_tridiagonals,
    tridiag_det,
)
from .spectra import (
    MERGE_TOL,
    ZERO_TOL,
    distinct_count,
    quotient_spectrum,
    seidel_energy,
    seidel_spectrum,
    sign_profile,
)

log = logging.getLogger("seidelchain")


class UsageError(Exception):
    pass


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"tolerance must be positive, got {text}")
    return value


def _checks(text: str) -> set[str]:
    names = {c.strip() for c in text.split(",") if c.strip()}
    if "all" in names:
        return set(CHECKS)
    unknown = names - CHECKS
    if unknown:
        raise argparse.ArgumentTypeError(f"unknown check(s): {', '.join(sorted(unknown))}")
    return names


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json", help="JSON output")
    fmt.add_argument("--csv", dest="format", action="store_const", const="csv", help="CSV output")
    fmt.add_argument("--table", dest="format", action="store_const", const="table", help="plain table (default)")
    common.add_argument("--out", "-o", help="write data to this file instead of stdout")
    common.add_argument("--merge-tol", type=_positive_float, default=MERGE_TOL,
                        help="eigenvalue merge tolerance (default %(default)g)")
    common.add_argument("--zero-tol", type=_positive_float, default=ZERO_TOL,
                        help="zero threshold for sign counts (default %(default)g)")

    parser = argparse.ArgumentParser(
        prog="seidelchain",
        description="Seidel spectra, characteristic polynomials and energy bounds of chain graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    for name, help_text in [
        ("spectrum", "Seidel spectrum, energy, distinct count and quotient sign profile"),
        ("charpoly", "exact Seidel characteristic polynomial"),
        ("energy", "Seidel energy"),
        ("det", "exact determinants of the quotient and Seidel matrices"),
        ("bounds", "compare energy and eigenvalue bounds with computed values"),
    ]:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("binary", help='chain string, e.g. "0^1 1^2 0^2 1^3" or 010011')
        if name == "charpoly":
            p.add_argument("--quotient", action="store_true",
                           help="characteristic polynomial of the quotient matrix instead")

    g = sub.add_parser("gamma", parents=[common], help="the minimal-energy family of order n with k blocks")
    g.add_argument("n", type=int)
    g.add_argument("k", type=int)
    g.add_argument("--min-table", action="store_true",
                   help="also tabulate minimal energy per k over all chain graphs of order n")

    s = sub.add_parser("scan", parents=[common], help="exhaustive scan over all chain graphs of given orders")
    s.add_argument("--n-min", type=int, required=True)
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--check", type=_checks, action="append", default=None,
                   help="signs, distinct, conjecture, invariants or all; repeatable or comma-separated")
    s.add_argument("--k", type=int, action="append", dest="k_values", default=None,
                   help="restrict to these k (repeatable)")
    s.add_argument("--threads", type=int, default=None,
                   help="worker processes (default: $SEIDELCHAIN_THREADS or CPU count)")
    s.add_argument("--conjecture-tol", type=_positive_float, default=CONJECTURE_TOL)
    return parser


def _table(rows, header=None) -> str:
    rows = [[formats.fmt_cell(c) for c in r] for r in rows]
    if header:
        rows.insert(0, list(header))
    if not rows:
        return ""
    widths = [max(len(r[i]) for r in rows if i < len(r)) for i in range(max(len(r) for r in rows))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(lines) + "\n"


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([formats.fmt_cell(c) for c in r])
    return buf.getvalue()


def _render(fmt: str, payload: dict, rows, header) -> str:
    if fmt == "json":
        return formats.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        return _csv(rows, header)
    return _table(rows, header)


def _spec(args):
    try:
        return parse_chain_string(args.binary)
    except ChainStringError as exc:
        raise UsageError(f"invalid chain string {args.binary!r}: {exc}") from exc


def cmd_spectrum(args) -> tuple[str, int]:
    spec = _spec(args)
    spectrum = seidel_spectrum(spec, args.merge_tol)
    energy = seidel_energy(spec, spectrum)
    distinct = distinct_count(spec, spectrum)
    signs = sign_profile(spec, args.zero_tol)
    payload = {
        "binary": str(spec),
        "n": spec.n,
        "k": spec.k,
        "spectrum": spectrum.to_json(),
        "energy": energy,
        "distinct": distinct,
        "signs": signs.to_json(),
    }
    if args.format == "table":
        head = (
            f"binary {spec}  n={spec.n} k={spec.k}\n"
            f"energy {formats.fmt_cell(energy)}  distinct {distinct}  "
            f"quotient signs +{signs.positive} -{signs.negative} 0:{signs.zero}\n"
        )
        return head + _table(spectrum.pairs, ["value", "multiplicity"]), 0
    return _render(args.format, payload, spectrum.pairs, ["value", "multiplicity"]), 0


def cmd_charpoly(args) -> tuple[str, int]:
    spec = _spec(args)
    psi = charpoly_quotient(spec) if args.quotient else charpoly_seidel(spec)
    payload = {"binary": str(spec), "n": spec.n, "k": spec.k,
               "matrix": "quotient" if args.quotient else "seidel",
               "coefficients": psi.to_json()}
    dets = None
    if not args.quotient and spec.k >= 2:
        u, v = shifted_tridiagonals(spec, X + 1)
        dets = Poly._coerce(tridiag_det(u)), Poly._coerce(tridiag_det(v))
        payload["det_u"] = dets[0].to_json()
        payload["det_v"] = dets[1].to_json()
    rows = [[d, str(c)] for d, c in enumerate(psi.coeffs)]
    if args.format == "table":
        text = f"{psi}\n"
        if dets:
            text += f"det U = {dets[0]}\ndet V = {dets[1]}\n"
        return text, 0
    return _render(args.format, payload, rows, ["degree", "coefficient"]), 0


def cmd_energy(args) -> tuple[str, int]:
    spec = _spec(args)
    energy = seidel_energy(spec, seidel_spectrum(spec, args.merge_tol))
    q_abs = sum(abs(v) for v in quotient_spectrum(spec))
    payload = {"binary": str(spec), "n": spec.n, "k": spec.k, "energy": energy,
               "quotient_abs_sum": q_abs}
    rows = [[str(spec), spec.n, spec.k, energy]]
    if args.format == "table":
        return f"{formats.fmt_cell(energy)}\n", 0
    return _render(args.format, payload, rows, ["binary", "n", "k", "energy"]), 0


def cmd_det(args) -> tuple[str, int]:
    spec = _spec(args)
    dq, ds = det_quotient(spec), det_seidel(spec)
    payload = {"binary": str(spec), "n": spec.n, "k": spec.k, "det_q": str(dq), "det_s": str(ds)}
    rows = [[str(spec), spec.n, spec.k, dq, ds]]
    return _render(args.format, payload, rows, ["binary", "n", "k", "det_q", "det_s"]), 0


def cmd_bounds(args) -> tuple[str, int]:
    spec = _spec(args)
    spectrum = seidel_spectrum(spec, args.merge_tol)
    report = bounds_report(spec, spectrum)
    rows = [[c.name, c.value, c.computed, c.satisfied, c.tight] for c in report.checks + report.comparisons]
    return _render(args.format, report.to_json(), rows, ["name", "value", "computed", "satisfied", "tight"]), 0


def cmd_gamma(args) -> tuple[str, int]:
    try:
        members = gamma_family(args.n, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    psi = charpoly_seidel(members[0])
    energy = seidel_energy(members[0])
    payload = {
        "n": args.n,
        "k": args.k,
        "members": [str(m) for m in members],
        "charpoly": psi.to_json(),
        "cospectral": all(charpoly_seidel(m) == psi for m in members),
        "energy": energy,
    }
    if args.k == 2 and args.n >= 4:
        closed = gamma2_closed_forms(args.n)
        payload["closed_form"] = {"spectrum": closed.spectrum.to_json(), "energy": closed.energy}
    table_rows = None
    if args.min_table:
        table_rows = min_energy_table(args.n)
        payload["min_energy_table"] = [r.to_json() for r in table_rows]

    if args.format == "json":
        return formats.dumps(payload, indent=2) + "\n", 0
    if table_rows is not None:
        rows = [[r.n, r.k, r.min_energy, r.argmin, r.gamma_energy, r.gap] for r in table_rows]
        header = ["n", "k", "min_energy", "argmin", "gamma_energy", "gap"]
    else:
        rows = [[m, args.n, args.k, energy] for m in members]
        header = ["binary", "n", "k", "energy"]
    if args.format == "csv":
        return _csv(rows, header), 0
    text = f"charpoly {psi}\ncospectral {formats.fmt_cell(payload['cospectral'])}\n"
    return text + _table(rows, header), 0


def cmd_scan(args) -> tuple[str, int]:
    checks = set().union(*args.check) if args.check else set(CHECKS)
    workers = default_workers() if args.threads is None else args.threads
    try:
        result = scan(
            args.n_min, args.n_max, checks, workers=workers,
            merge_tol=args.merge_tol, zero_tol=args.zero_tol,
            conjecture_tol=args.conjecture_tol, k_values=args.k_values,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc

    fmt = args.format
    if fmt is None:
        if args.out:
            fmt = "csv" if args.out.endswith(".csv") else "json"
        else:
            fmt = "table"
    buf = io.StringIO()
    if fmt == "json":
        write_jsonl(result.records, buf)
    elif fmt == "csv":
        write_csv(result.records, buf)
    else:
        rows = [[r.binary, r.n, r.k, r.energy, r.distinct, ";".join(r.violations) or "-"]
                for r in result.records]
        buf.write(_table(rows, ["binary", "n", "k", "energy", "distinct", "violations"]))

    summary = result.summary()
    print(f"scanned {summary['specs']} chain graphs, n in [{args.n_min}, {args.n_max}], "
          f"checks {','.join(sorted(checks))}", file=sys.stderr)
    print(f"findings: {summary['findings']}  theorem violations: {summary['theorem_violations']}",
          file=sys.stderr)
    for name, count in summary["counts"].items():
        print(f"  {name}: {count}", file=sys.stderr)
    return buf.getvalue(), 1 if result.theorem_violations else 0


COMMANDS = {
    "spectrum": cmd_spectrum,
    "charpoly": cmd_charpoly,
    "energy": cmd_energy,
    "det": cmd_det,
    "bounds": cmd_bounds,
    "gamma": cmd_gamma,
    "scan": cmd_scan,
}


def run_cli(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s", stream=sys.stderr)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    if args.command != "scan" and args.format is None:
        args.format = "table"
    try:
        text, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"seidelchain: error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run_cli())
