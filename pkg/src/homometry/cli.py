"""Command-line front end.

Every subcommand writes deterministic text to stdout: CSV for counts,
JSON lines for listings, and a JSON document or summary table for
verification reports.  ``--plot PATH`` additionally writes a figure.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Sequence

EX_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {value}")
    return value


def _pq(text: str) -> tuple[int, int]:
    from .difftables import VALID_PQ

    try:
        p, q = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected P,Q, got {text!r}")
    if (p, q) not in VALID_PQ:
        raise argparse.ArgumentTypeError(f"({p},{q}) is not one of {', '.join(f'{a},{b}' for a, b in VALID_PQ)}")
    return p, q


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="homometry", description="Homometric five-bead bracelets: classification, counts and checks.")
    parser.add_argument("--threads", type=_positive, default=os.cpu_count() or 1,
                        help="worker processes for oracle sweeps and full table searches")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="list the classes of length n from the seven families")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--plot", type=Path, help="write bracelet diagrams of the classes to this file")

    p = sub.add_parser("count", help="number of nontrivial classes from the generating function")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=_positive)
    group.add_argument("--n-max", type=_positive)
    p.add_argument("--refined", action="store_true", help="add pair and triple columns")
    p.add_argument("--by-type", action="store_true", help="add one column per type")
    p.add_argument("--header", action="store_true", help="print a CSV header line")
    p.add_argument("--plot", type=Path, help="write a per-type bar chart to this file")

    p = sub.add_parser("gf", help="print the generating functions")
    p.add_argument("--show", action="store_true", help="the closed form of the total series")
    p.add_argument("--by-type", action="store_true", help="the series of each type")
    p.add_argument("--terms", type=_nonnegative, help="expand the total series up to this power")

    p = sub.add_parser("oracle", help="brute-force homometry classes of length n")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--format", choices=("json", "table"), default="json")

    p = sub.add_parser("minimal-tables", help="minimal covering difference tables for one (p,q)")
    p.add_argument("--pq", type=_pq, required=True, metavar="P,Q")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--full", action="store_true", help="search all permutations (resumable)")
    mode.add_argument("--sample", type=_nonnegative, metavar="COUNT", help="reference tables plus COUNT random ones")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--checkpoint", type=Path, help="state file for --full (default under HOMOMETRY_CHECKPOINT_DIR)")
    p.add_argument("--max-chunks", type=_positive, help="stop a --full run after this many new chunks")
    p.add_argument("--dump-cells", action="store_true", help="include the raw constraint cells")

    p = sub.add_parser("intersections", help="pairwise intersections of the reference solution sets")
    p.add_argument("--format", choices=("json", "table"), default="table")

    p = sub.add_parser("verify", help="cross-check oracle, classification and series")
    p.add_argument("--n-max", type=_positive, required=True)
    p.add_argument("--long-counts", action="store_true", help="also check long-count pairs of homometric bracelets")
    p.add_argument("--un-action", action="store_true", help="also run the unit-action experiment")
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.add_argument("--plot", type=Path, help="write the three count curves to this file")

    p = sub.add_parser("un-action", help="does multiplication by units preserve class types?")
    p.add_argument("--n-max", type=_positive, required=True)
    p.add_argument("--format", choices=("json", "table"), default="table")
    return parser


# ---------------------------------------------------------------------------
# subcommands


def _cmd_classify(args, out) -> int:
    from .classification import classes_for_n

    classes = classes_for_n(args.n)
    for cls in classes:
        if args.format == "json":
            print(cls.to_json_line(), file=out)
        else:
            print(f"{cls.label():<10} {'  '.join(str(b) for b in cls.members)}", file=out)
    if args.plot:
        from .plotting import plot_classes

        plot_classes(classes, args.plot)
    return 0


def _cmd_count(args, out) -> int:
    from .classification import ClassType
    from .counting import THEOREM_GF, refined_counts, type_breakdown

    ns = [args.n] if args.n else list(range(1, args.n_max + 1))
    columns = ["n", "h_n"]
    if args.refined:
        columns += ["pairs", "triples"]
    if args.by_type:
        columns += [k.tag for k in ClassType]
    if args.header:
        print(",".join(columns), file=out)
    series = THEOREM_GF.coefficients(max(ns))
    rows = []
    for n in ns:
        row = {"n": n, "h_n": series[n]}
        if args.refined:
            row["pairs"], row["triples"] = refined_counts(n)
        if args.by_type or args.plot:
            row.update(type_breakdown(n))
        rows.append(row)
        print(",".join(str(row[c]) for c in columns), file=out)
    if args.plot:
        from .plotting import plot_type_counts

        plot_type_counts(rows, args.plot)
    return 0


def _cmd_gf(args, out) -> int:
    from .classification import ClassType
    from .counting import THEOREM_GF, type_gf

    if not (args.show or args.by_type or args.terms is not None):
        args.show = True
    if args.show:
        print(f"H(x) = {THEOREM_GF.to_text()}", file=out)
    if args.by_type:
        for kind in ClassType:
            print(f"H({kind.tag}; x) = {type_gf(kind).to_text()}", file=out)
    if args.terms is not None:
        coeffs = THEOREM_GF.coefficients(args.terms)
        terms = [f"{c}x^{k}" if c != 1 else f"x^{k}" for k, c in enumerate(coeffs) if c]
        print(" + ".join(terms) + " + ..." if terms else "0 + ...", file=out)
    return 0


def _cmd_oracle(args, out) -> int:
    from .bracelets import brute_force_classes, format_multiset

    for cls in brute_force_classes(args.n):
        if args.format == "json":
            record = {"n": cls.n, "distances": list(cls.distances), "members": [list(b.beads) for b in cls.members]}
            print(json.dumps(record, separators=(",", ":")), file=out)
        else:
            print(f"{format_multiset(cls.distances):<32} {'  '.join(str(b) for b in cls.members)}", file=out)
    return 0


def _reference_name(sol, p: int, q: int) -> str | None:
    from .difftables import PAPER_TABLES, REFERENCE_ORDER, solution_set, solution_sets_equal

    for name in REFERENCE_ORDER[(p, q)]:
        if solution_sets_equal(sol, solution_set(PAPER_TABLES[name])):
            return name
    return None


def _cmd_minimal_tables(args, out) -> int:
    from .difftables import FULL, SampledMode, default_checkpoint, minimal_tables

    p, q = args.pq
    if args.full:
        checkpoint = args.checkpoint or default_checkpoint(p, q)
        chain = minimal_tables(p, q, FULL, threads=args.threads, checkpoint=checkpoint, max_chunks=args.max_chunks)
    else:
        if args.checkpoint or args.max_chunks:
            raise UsageError("--checkpoint and --max-chunks apply only to --full")
        count = 100_000 if args.sample is None else args.sample
        chain = minimal_tables(p, q, SampledMode(count, args.seed))
    for sol in chain.members:
        record = {
            "p": p,
            "q": q,
            "equivalent_to": _reference_name(sol, p, q),
            "table": sol.table.to_text(),
            "entries": sol.table.to_json()["entries"],
            "solution": sol.to_json(),
        }
        if args.dump_cells:
            record["cells"] = [cell.to_text().splitlines() for cell in sol.x_set]
        print(json.dumps(record), file=out)
    return 0


def _cmd_intersections(args, out) -> int:
    from .difftables import TABLE_PQ, pairwise_intersections, triple_intersections, y_in_parameters
    from .exactmath import coalesce, parametrize

    results = []
    for it in pairwise_intersections():
        pieces = []
        for cell in coalesce(it.x_set):
            par = parametrize(cell)
            pieces.append({
                "x": par.describe(),
                "y_" + it.a: "(" + ", ".join(y_in_parameters(it.y_a, par)) + ")",
                "y_" + it.b: "(" + ", ".join(y_in_parameters(it.y_b, par)) + ")",
            })
        results.append({"tables": [it.a, it.b], "pq": [list(TABLE_PQ[it.a]), list(TABLE_PQ[it.b])], "pieces": pieces})
    triples = triple_intersections()
    if args.format == "json":
        for r in results:
            print(json.dumps(r), file=out)
        print(json.dumps({"nonempty_triples": [[a, b, c] for a, b, c, _ in triples]}), file=out)
    else:
        for r in results:
            a, b = r["tables"]
            for piece in r["pieces"]:
                print(f"{a} & {b}: x = {piece['x']}", file=out)
                print(f"    y({a}) = {piece['y_' + a]}", file=out)
                print(f"    y({b}) = {piece['y_' + b]}", file=out)
        print("all other pairs: empty", file=out)
        print(f"nonempty triples: {len(triples)}", file=out)
    return 0


def _emit_reports(reports, fmt: str, out) -> int:
    if fmt == "json":
        print(json.dumps([r.to_json() for r in reports], indent=1), file=out)
    else:
        print("\n\n".join(r.summary() for r in reports), file=out)
    codes = [r.exit_code() for r in reports]
    if 1 in codes:
        return 1
    if 2 in codes:
        return 2
    return 0


def _cmd_verify(args, out) -> int:
    from .verify import check_long_count_pairs, cross_check, un_action_experiment

    reports = [cross_check(args.n_max, threads=args.threads)]
    if args.long_counts:
        reports.append(check_long_count_pairs(args.n_max, threads=args.threads))
    if args.un_action:
        reports.append(un_action_experiment(args.n_max, threads=args.threads))
    code = _emit_reports(reports, args.format, out)
    if args.plot:
        from .plotting import plot_cross_check

        plot_cross_check(reports[0].rows, args.plot)
    return code


def _cmd_un_action(args, out) -> int:
    from .verify import un_action_experiment

    return _emit_reports([un_action_experiment(args.n_max, threads=args.threads)], args.format, out)


COMMANDS = {
    "classify": _cmd_classify,
    "count": _cmd_count,
    "gf": _cmd_gf,
    "oracle": _cmd_oracle,
    "minimal-tables": _cmd_minimal_tables,
    "intersections": _cmd_intersections,
    "verify": _cmd_verify,
    "un-action": _cmd_un_action,
}


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"homometry: error: {exc}", file=sys.stderr)
        return EX_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
