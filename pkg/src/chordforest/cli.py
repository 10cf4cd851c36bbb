"""Command-line interface.

Subcommands: ``count`` (one exact value), ``table`` (CSV/JSON tables),
``verify`` (cross-check formulas, series, and brute force), ``series``
(coefficient dumps), ``enumerate`` (exhaustive tallies), ``render``
(SVG drawing of one diagram).

Exit codes: 0 success, 1 verification mismatch, 2 usage or domain error,
3 output I/O error.  All values are printed as exact decimals.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import diagrams, formulas, oracle
from .errors import ConsistencyError
from .series import TruncatedSeries, rooted_gf, solve_ternary_gf, tree_gf

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_IO = 3

KREWERAS_VERIFY_MAX = 9
TYPE_SUM_VERIFY_MAX = 12
IDENTITY_ORDER = 40
SERIES_ORDER_CAP = 300

__all__ = ["build_parser", "diagram_to_svg", "entry", "main"]


def _lookup(kind: str, n: int, m: int | None) -> int:
    if kind in ("f", "r"):
        if m is None:
            raise ValueError(f"kind {kind!r} needs both --n and --m")
        if kind == "f":
            return formulas.forest_count(n, m)
        return formulas.rooted_forest_count(n, m)
    if m is not None:
        raise ValueError(f"kind {kind!r} takes no --m")
    if kind == "t":
        return formulas.tree_count(n)
    return formulas.catalan(n)


def cmd_count(args: argparse.Namespace) -> int:
    print(_lookup(args.kind, args.n, args.m))
    return EXIT_OK


def _table_records(kind: str, max_n: int) -> list[tuple[str, int, int | None, int]]:
    if max_n < 1:
        raise ValueError(f"--max-n must be >= 1, got {max_n}")
    records = []
    for n in range(1, max_n + 1):
        if kind in ("f", "r"):
            for m in range(1, n + 1):
                records.append((kind, n, m, _lookup(kind, n, m)))
        else:
            records.append((kind, n, None, _lookup(kind, n, None)))
    return records


def cmd_table(args: argparse.Namespace) -> int:
    records = _table_records(args.kind, args.max_n)
    if args.format == "csv":
        print("kind,n,m,value")
        for kind, n, m, value in records:
            print(f"{kind},{n},{'' if m is None else m},{value}")
    else:
        payload = []
        for kind, n, m, value in records:
            record: dict[str, object] = {"kind": kind, "n": n}
            if m is not None:
                record["m"] = m
            record["value"] = str(value)
            record["source"] = "formula"
            payload.append(record)
        print(json.dumps(payload, indent=2))
    return EXIT_OK


def cmd_series(args: argparse.Namespace) -> int:
    if not 0 <= args.order <= SERIES_ORDER_CAP:
        raise ValueError(f"--order must be in 0..{SERIES_ORDER_CAP}, got {args.order}")
    if args.which == "G":
        gf = solve_ternary_gf(args.order)
    elif args.which == "T":
        gf = tree_gf(max(args.order, 1)).truncate(args.order)
    else:
        gf = rooted_gf(max(args.order, 1)).truncate(args.order)
    for index, coefficient in enumerate(gf.coeffs):
        print(f"{index},{coefficient}")
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    cap = max(args.n, oracle.DIAGRAM_CAP) if args.force else oracle.DIAGRAM_CAP
    table = oracle.brute_force_counts(args.n, cap=cap, threads=args.threads)
    print(f"n={table.n}")
    print(f"total-diagrams={table.total_diagrams}")
    print(f"total-forests={table.total_forests}")
    for m in sorted(table.forests_by_trees):
        print(
            f"m={m} forests={table.forests_by_trees[m]} "
            f"rooted={table.rooted_by_trees[m]}"
        )
    if args.list:

        def show(diagram: diagrams.ChordDiagram) -> None:
            shape = diagrams.classify(diagram)
            if shape.is_forest:
                sizes = ",".join(str(size) for size in shape.tree_sizes)
                print(
                    f"{diagrams.format_diagram(diagram)} "
                    f"m={shape.component_count} sizes={sizes}"
                )

        oracle.enumerate_diagrams(args.n, show, cap=cap)
    return EXIT_OK


# -- verify ----------------------------------------------------------------


def _check_series_vs_formula(max_n: int) -> str | None:
    """Coefficient bridge: C(2n, m-1) [x^n] S^m / m against the closed forms."""
    pairs = (
        ("f", tree_gf(max_n), formulas.forest_count),
        ("r", rooted_gf(max_n), formulas.rooted_forest_count),
    )
    for label, gf, closed_form in pairs:
        power = TruncatedSeries.one(max_n)
        for m in range(1, max_n + 1):
            power = power * gf
            for n in range(m, max_n + 1):
                numerator = formulas.binomial(2 * n, m - 1) * power.coeff(n)
                quotient, remainder = divmod(numerator, m)
                expected = closed_form(n, m)
                if remainder or quotient != expected:
                    got = f"{numerator}/{m}" if remainder else str(quotient)
                    return f"{label}(n={n}, m={m}) formula={expected} series={got}"
    return None


def _check_formula_vs_bruteforce(max_n: int, threads: int) -> str | None:
    for n in range(1, max_n + 1):
        table = oracle.brute_force_counts(n, threads=threads)
        expected_total = formulas.double_factorial_pairings(n)
        if table.total_diagrams != expected_total:
            return (
                f"diagram total (n={n}) formula={expected_total} "
                f"bruteforce={table.total_diagrams}"
            )
        for m in range(1, n + 1):
            seen = table.forests_by_trees.get(m, 0)
            expected = formulas.forest_count(n, m)
            if seen != expected:
                return f"f(n={n}, m={m}) formula={expected} bruteforce={seen}"
            seen = table.rooted_by_trees.get(m, 0)
            expected = formulas.rooted_forest_count(n, m)
            if seen != expected:
                return f"r(n={n}, m={m}) formula={expected} bruteforce={seen}"
    return None


def _check_kreweras(max_n: int) -> str | None:
    for n in range(1, max_n + 1):
        tallies = oracle.enumerate_noncrossing_partitions(n)
        total = sum(tallies.values())
        expected_total = formulas.catalan(n)
        if total != expected_total:
            return (
                f"non-crossing partitions of [{n}] formula={expected_total} "
                f"bruteforce={total}"
            )
        for block_type, seen in tallies.items():
            expected = formulas.kreweras_count(block_type)
            if seen != expected:
                return (
                    f"type {block_type.parts} of [{n}] formula={expected} "
                    f"bruteforce={seen}"
                )
    return None


def _check_type_sum(max_n: int) -> str | None:
    for n in range(1, max_n + 1):
        for m in range(1, n + 1):
            via_types = formulas.type_sum_forest_count(n, m)
            closed = formulas.forest_count(n, m)
            if via_types != closed:
                return f"f(n={n}, m={m}) formula={closed} type-sum={via_types}"
    return None


def _check_series_identities(order: int) -> str | None:
    try:
        g = solve_ternary_gf(order)
        t = tree_gf(order)  # re-checks x T = x^2 + T^3 internally
        r = rooted_gf(order)  # re-checks both R routes internally
    except ConsistencyError as exc:
        return str(exc)
    residual = g - TruncatedSeries.one(order) - g.pow(3).shift_mul_x().truncate(order)
    if not residual.is_zero():
        return f"G - 1 - x G^3 is nonzero at order {order}"
    residual = t.shift_mul_x().truncate(order) - TruncatedSeries.monomial(2, order) - t.pow(3)
    if not residual.is_zero():
        return f"x T - x^2 - T^3 is nonzero at order {order}"
    closed = (
        (TruncatedSeries.x(order) * 2 - t).shift_div_x()
        * (TruncatedSeries.x(order) - t.pow(2) * 3).shift_div_x().inverse()
    ).shift_mul_x()
    if r != closed:
        return f"x T' and x (2x - T)/(x - 3 T^2) differ at order {order}"
    return None


def cmd_verify(args: argparse.Namespace) -> int:
    if args.max_n_formula < 1 or args.max_n_brute < 1:
        raise ValueError("verification bounds must be >= 1")
    if args.max_n_brute > oracle.DIAGRAM_CAP:
        raise ValueError(
            f"--max-n-brute {args.max_n_brute} exceeds the enumeration cap "
            f"of {oracle.DIAGRAM_CAP}"
        )
    suites = (
        (
            f"formula-vs-series (n<={args.max_n_formula})",
            lambda: _check_series_vs_formula(args.max_n_formula),
        ),
        (
            f"formula-vs-bruteforce (n<={args.max_n_brute})",
            lambda: _check_formula_vs_bruteforce(args.max_n_brute, args.threads),
        ),
        (
            f"kreweras-vs-enumeration (N<={KREWERAS_VERIFY_MAX})",
            lambda: _check_kreweras(KREWERAS_VERIFY_MAX),
        ),
        (
            f"type-sum-vs-closed-form (n<={TYPE_SUM_VERIFY_MAX})",
            lambda: _check_type_sum(TYPE_SUM_VERIFY_MAX),
        ),
        (
            f"series-identities (order {IDENTITY_ORDER})",
            lambda: _check_series_identities(IDENTITY_ORDER),
        ),
    )
    failures = 0
    for name, run_check in suites:
        mismatch = run_check()
        if mismatch is None:
            print(f"check {name}: PASS")
        else:
            failures += 1
            print(f"check {name}: FAIL")
            print(f"  first counterexample: {mismatch}")
    if failures:
        print(f"{failures} of {len(suites)} checks failed")
        return EXIT_MISMATCH
    print(f"all {len(suites)} checks passed")
    return EXIT_OK


# -- render ------------------------------------------------------------------


def diagram_to_svg(diagram: diagrams.ChordDiagram) -> str:
    """Standalone SVG: unit circle, points 1..2n clockwise from the top, straight chords."""
    total = 2 * diagram.n

    def position(label: int, radius: float) -> tuple[float, float]:
        angle = -math.pi / 2 + (label - 1) * 2 * math.pi / total
        return radius * math.cos(angle), radius * math.sin(angle)

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        'viewBox="-1.3 -1.3 2.6 2.6" width="390" height="390">',
        '  <circle cx="0" cy="0" r="1" fill="none" stroke="black" stroke-width="0.01"/>',
    ]
    for a, b in diagram.chords:
        xa, ya = position(a, 1.0)
        xb, yb = position(b, 1.0)
        parts.append(
            f'  <line x1="{xa:.4f}" y1="{ya:.4f}" x2="{xb:.4f}" y2="{yb:.4f}" '
            'stroke="black" stroke-width="0.02"/>'
        )
    for label in range(1, total + 1):
        x, y = position(label, 1.0)
        parts.append(f'  <circle cx="{x:.4f}" cy="{y:.4f}" r="0.03" fill="black"/>')
        tx, ty = position(label, 1.16)
        parts.append(
            f'  <text x="{tx:.4f}" y="{ty:.4f}" font-size="0.12" '
            f'text-anchor="middle" dominant-baseline="middle">{label}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def cmd_render(args: argparse.Namespace) -> int:
    diagram = diagrams.parse_diagram(args.diagram)
    svg = diagram_to_svg(diagram)
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(svg)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


# -- wiring ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordforest",
        description="Exact counts of tree and forest chord diagrams, three ways.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    count = sub.add_parser("count", help="print one exact count")
    count.add_argument(
        "--kind",
        required=True,
        choices=["f", "r", "t", "catalan"],
        help="f: forests by (n, m); r: rooted forests; t: trees; catalan",
    )
    count.add_argument("--n", type=int, required=True, help="number of chords")
    count.add_argument("--m", type=int, help="number of trees (f and r only)")
    count.set_defaults(handler=cmd_count)

    table = sub.add_parser("table", help="print a table of counts")
    table.add_argument("--kind", required=True, choices=["f", "r", "t", "catalan"])
    table.add_argument("--max-n", type=int, required=True)
    table.add_argument("--format", choices=["csv", "json"], default="csv")
    table.set_defaults(handler=cmd_table)

    verify = sub.add_parser(
        "verify", help="cross-check formulas, series, and brute force"
    )
    verify.add_argument(
        "--max-n-formula",
        type=int,
        default=60,
        help="bound for the formula-vs-series sweep (default 60)",
    )
    verify.add_argument(
        "--max-n-brute",
        type=int,
        default=7,
        help="bound for the exhaustive sweep (default 7)",
    )
    verify.add_argument(
        "--threads", type=int, default=1, help="parallelism for the exhaustive sweep"
    )
    verify.set_defaults(handler=cmd_verify)

    series_cmd = sub.add_parser("series", help="print generating-series coefficients")
    series_cmd.add_argument("--which", required=True, choices=["G", "T", "R"])
    series_cmd.add_argument("--order", type=int, required=True)
    series_cmd.set_defaults(handler=cmd_series)

    enum_cmd = sub.add_parser("enumerate", help="exhaustively tally all size-n diagrams")
    enum_cmd.add_argument("--n", type=int, required=True)
    enum_cmd.add_argument(
        "--list", action="store_true", help="also print every forest diagram"
    )
    enum_cmd.add_argument("--threads", type=int, default=1)
    enum_cmd.add_argument(
        "--force", action="store_true", help="allow n above the default cap"
    )
    enum_cmd.set_defaults(handler=cmd_enumerate)

    render = sub.add_parser("render", help="write an SVG drawing of one diagram")
    render.add_argument(
        "--diagram", required=True, help="text form, e.g. 1-8,2-9,3-5,7-10,4-6"
    )
    render.add_argument("--out", required=True, help="output SVG path")
    render.set_defaults(handler=cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())
