"""Command-line surface: a-invariants, table reproduction, field counts,
exponent fits, and representation-domination checks.

Exit codes: 0 success (and all table rows / checks passing), 1 table FAIL,
2 bad flags or unparsable group, 3 enumeration cap exceeded, 4 intransitive
group, 5 census I/O or format error, 6 insufficient samples, 7 inconsistent
paired representation.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import constructions, fields, fitting, tables
from .constructions import InconsistentDualRep, check_index_domination, dual_regular_pair
from .fields import CensusFormatError
from .fitting import InsufficientSamplesError
from .groups import DEFAULT_CAP, EnumerationCapError, PermGroup
from .groupspec import GroupSpecError, load_group_file, parse_group_expr, parse_paired_file
from .perms import CycleParseError

EXIT_OK = 0
EXIT_TABLE_FAIL = 1
EXIT_BAD_INPUT = 2
EXIT_CAP = 3
EXIT_INTRANSITIVE = 4
EXIT_CENSUS = 5
EXIT_SAMPLES = 6
EXIT_INCONSISTENT = 7


class _Intransitive(Exception):
    pass


def _parse_grid(spec: str) -> list[int]:
    parts = spec.split(":")
    if len(parts) != 3:
        raise GroupSpecError(f"grid must be lo:hi:points, got {spec!r}")
    try:
        values = []
        for p in parts:
            try:
                values.append(int(p))
            except ValueError:
                values.append(int(float(p)))
        lo, hi, points = values
    except (ValueError, OverflowError):
        raise GroupSpecError(f"grid must be numeric, got {spec!r}") from None
    return fitting.geometric_grid(lo, hi, points)


def _resolve_group(expr: Optional[str], path: Optional[str], cap: int) -> PermGroup:
    if (expr is None) == (path is None):
        raise GroupSpecError("give exactly one of a group expression or --file")
    if path is not None:
        return load_group_file(path, cap)
    return parse_group_expr(expr, cap)


def _cmd_aval(args) -> int:
    group = _resolve_group(args.expr, args.file, args.cap)
    if not group.is_transitive():
        raise _Intransitive
    a = group.a_invariant()
    print(f"degree: {group.degree}")
    print(f"order: {group.order()}")
    print(f"a(G): {a}")
    if group.order() == 1:
        print("witness: none (trivial group)")
    else:
        witness, ind = group.min_index_witness()
        print(f"witness: {witness}  [ind {ind}]")
    return EXIT_OK


def _cmd_table(args) -> int:
    rows = tables.TABLES[args.which]
    lines = []
    any_fail = False
    for row in rows:
        if row.expression is None:
            computed, status = "-", "SKIPPED(external)"
        else:
            group = parse_group_expr(row.expression, args.cap)
            a = group.a_invariant()
            computed = str(a)
            status = "PASS" if a == row.expected_a else "FAIL"
            any_fail = any_fail or status == "FAIL"
        lines.append((row.row_id, row.name, str(row.order), str(row.expected_a), computed, status))
    header = ("row", "group", "order", "expected", "computed", "status")
    widths = [max(len(line[i]) for line in [header, *lines]) for i in range(6)]
    for line in [header, *lines]:
        print("  ".join(field.ljust(width) for field, width in zip(line, widths)).rstrip())
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as handle:
            handle.write("row_id,group,order,expected,computed,status\n")
            for line in lines:
                handle.write(",".join(line) + "\n")
    return EXIT_TABLE_FAIL if any_fail else EXIT_OK


def _family_samples(args) -> list[tuple[int, int]]:
    if args.family == "quadratic":
        grid = _parse_grid(args.grid or "100:1e7:12")
        return fields.quadratic_samples(grid)
    if args.family == "cyclic":
        if args.ell is None:
            raise GroupSpecError("cyclic counts need --ell")
        ell = args.ell
        if args.grid:
            grid = _parse_grid(args.grid)
        else:
            first = (2 * ell + 1) ** (ell - 1)
            grid = fitting.geometric_grid(first, 10_000 ** (ell - 1), 12)
        tally = fields.cyclic_tally(ell, grid[-1])
        return fields.tally_samples(tally, grid)
    if args.family == "biquadratic":
        # default grid starts past the pre-asymptotic head, where the free
        # log power would otherwise soak up curvature from the first fields
        grid = _parse_grid(args.grid or "1e4:1e8:12")
        tally = fields.biquadratic_tally(grid[-1])
        return fields.tally_samples(tally, grid)
    if args.family == "census":
        if not args.label or not args.file:
            raise GroupSpecError("census counts need --label and --file")
        with open(args.file, encoding="utf-8") as handle:
            tallies = fields.ingest_census(handle)
        if args.label not in tallies:
            raise CensusFormatError(f"label {args.label!r} not present in census")
        tally = tallies[args.label]
        if args.grid:
            grid = _parse_grid(args.grid)
        else:
            top = max(d for d, _ in tally.entries)
            grid = fitting.geometric_grid(1, top, 12)
        return fields.tally_samples(tally, grid)
    raise GroupSpecError(f"unknown family {args.family!r}")


def _cmd_count(args) -> int:
    if args.family == "cyclic" and args.ell is not None and not fields._is_odd_prime(args.ell):
        raise GroupSpecError(f"--ell must be an odd prime, got {args.ell}")
    samples = _family_samples(args)
    print("x,count")
    for x, z in samples:
        print(f"{x},{z}")
    return EXIT_OK


def _read_samples(path: str) -> list[tuple[int, int]]:
    try:
        with open(path, encoding="utf-8") as handle:
            lines = [line.strip() for line in handle if line.strip()]
    except OSError as exc:
        raise InsufficientSamplesError(f"cannot read samples: {exc}") from None
    if lines and lines[0] == "x,count":
        lines = lines[1:]
    samples = []
    for line in lines:
        parts = line.split(",")
        if len(parts) != 2:
            raise InsufficientSamplesError(f"bad sample line {line!r}")
        samples.append((int(parts[0]), int(parts[1])))
    if not samples:
        raise InsufficientSamplesError("no samples in file")
    return samples


def _cmd_fit(args) -> int:
    if args.samples:
        samples = _read_samples(args.samples)
    elif args.family:
        if args.family == "cyclic" and args.ell is not None and not fields._is_odd_prime(args.ell):
            raise GroupSpecError(f"--ell must be an odd prime, got {args.ell}")
        samples = _family_samples(args)
    else:
        raise GroupSpecError("fit needs --samples or --family")
    log_power = args.log_power
    if log_power is None:
        log_power = "fit" if args.family == "biquadratic" else 0.0
    elif log_power != "fit":
        log_power = float(log_power)
    result = fitting.fit_exponent(samples, log_power=log_power)
    print(f"a_hat: {result.a_hat:.8g}")
    print(f"c_hat: {result.c_hat:.8g}")
    print(f"log_power: {result.b:.8g}" + (" (fitted)" if result.b_fitted else " (fixed)"))
    print(f"rms_residual: {result.rms_residual:.8g}")
    print(f"samples: {result.sample_count} used, {result.dropped} dropped")
    if args.predict:
        group = parse_group_expr(args.predict, args.cap)
        tolerance = args.tolerance
        if tolerance is None:
            tolerance = 0.1 if log_power == "fit" else 0.05
        verdict = fitting.conjecture_verdict(group, samples, tolerance, log_power=log_power)
        print(f"predicted a(G): {verdict.predicted}")
        print(f"|a_hat - a(G)|: {abs(verdict.fitted.a_hat - float(verdict.predicted)):.8g}")
        print(f"tolerance: {verdict.tolerance:.8g}")
        status = "WITHIN" if verdict.within_tolerance else "OUTSIDE"
        print(f"verdict: {status} tolerance (empirical evidence, not a proof)")
    return EXIT_OK


def _cmd_compare_reps(args) -> int:
    if (args.file is None) == (args.example is None):
        raise GroupSpecError("give exactly one of --file or --example")
    if args.example is not None:
        if args.example != "7.4":
            raise GroupSpecError(f"unknown built-in example {args.example!r}")
        product = constructions.direct_product(
            constructions.heisenberg_mod3(args.cap), constructions.cyclic_natural(2, args.cap)
        )
        dual = dual_regular_pair(product)
    else:
        with open(args.file, encoding="utf-8") as handle:
            dual = parse_paired_file(handle.read(), args.cap)
    report = check_index_domination(dual, args.cap)
    if report.holds:
        print("HOLDS")
    else:
        w = report.witness
        word = "*".join(f"g{j + 1}" for j in w.word)
        print("FAILS")
        print(f"witness: {word}")
        print(f"ind1: {w.ind1}")
        print(f"ind2: {w.ind2}")
        print(f"a1: {w.a1}")
        print(f"a2: {w.a2}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="galcount",
        description="Growth exponents of number-field counting functions: "
        "group invariants, exact counts over Q, and empirical exponent fits.",
    )
    parser.add_argument("--cap", type=int, default=DEFAULT_CAP, help="element enumeration cap")
    sub = parser.add_subparsers(dest="command", required=True)

    p_aval = sub.add_parser("aval", help="degree, order, exact a(G) and a minimal-index witness")
    p_aval.add_argument("expr", nargs="?", help="group expression, e.g. 'regular(C 4)'")
    p_aval.add_argument("--file", help="group file instead of an expression")
    p_aval.set_defaults(fn=_cmd_aval)

    p_table = sub.add_parser("table", help="recompute an expected-exponent table")
    p_table.add_argument("which", choices=sorted(tables.TABLES))
    p_table.add_argument("--csv", help="also write machine-readable rows to this path")
    p_table.set_defaults(fn=_cmd_table)

    p_count = sub.add_parser("count", help="stream (x, Z(x)) samples for a field family")
    p_count.add_argument("family", choices=["quadratic", "cyclic", "biquadratic", "census"])
    p_count.add_argument("--ell", type=int, help="odd prime degree for cyclic counts")
    p_count.add_argument("--grid", help="geometric grid lo:hi:points")
    p_count.add_argument("--label", help="census group label")
    p_count.add_argument("--file", help="census file path")
    p_count.set_defaults(fn=_cmd_count)

    p_fit = sub.add_parser("fit", help="fit c*x^a*(log x)^b to samples")
    p_fit.add_argument("--samples", help="file of x,count rows")
    p_fit.add_argument("--family", choices=["quadratic", "cyclic", "biquadratic", "census"])
    p_fit.add_argument("--ell", type=int)
    p_fit.add_argument("--grid")
    p_fit.add_argument("--label")
    p_fit.add_argument("--file")
    p_fit.add_argument("--log-power", dest="log_power", help="'fit' or a number (default 0; biquadratic: fit)")
    p_fit.add_argument("--predict", help="group expression to compare the fitted exponent against")
    p_fit.add_argument("--tolerance", type=float)
    p_fit.set_defaults(fn=_cmd_fit)

    p_cmp = sub.add_parser("compare-reps", help="check the index-domination inequality for a pair")
    p_cmp.add_argument("--file", help="paired-representation file")
    p_cmp.add_argument("--example", help="built-in pair name (7.4)")
    p_cmp.set_defaults(fn=_cmd_compare_reps)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except _Intransitive:
        print("error: group is not transitive", file=sys.stderr)
        return EXIT_INTRANSITIVE
    except (GroupSpecError, CycleParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except EnumerationCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except CensusFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CENSUS
    except InsufficientSamplesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SAMPLES
    except InconsistentDualRep as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CENSUS if getattr(args, "command", "") in ("count", "fit") else EXIT_BAD_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
