"""Command-line interface.

Subcommands: report (summary tables), atlas (SVG pages), export (JSON /
DOT / CSV graph dumps), scan (central-concentration verdicts), thresholds
(first appearance of built-in features).  Artifacts land under --out;
stdout carries human-readable summaries only.  Exit status is 0 on
success, 1 when a size guard refuses the request, 2 on argument errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .atlas import MODES, render_atlas
from .graph import DEFAULT_MAX_N, SizeLimitError
from .morphology import (THRESHOLD_FEATURES, GraphAnalysis, analyze,
                         concentration_scan)
from .partitions import format_parts
from .reporting import (EXPORT_FORMATS, basic_counts, central_spine,
                        export_graph, maxima, rows_to_csv, rows_to_text,
                        spectra_report)

TABLE_CHOICES = ("basic", "maxima", "central", "spectra")
DEFAULT_TABLES = ("basic", "maxima", "central")


def _parse_range(text: str) -> list[int]:
    """Inclusive 'A..B', or a single 'N'."""
    try:
        if ".." in text:
            lo_text, hi_text = text.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected N or A..B, got {text!r}") from None
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(
            f"range must satisfy 1 <= A <= B, got {text!r}")
    return list(range(lo, hi + 1))


def _parse_n(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"n must be >= 1, got {n}")
    return n


def _parse_list(text: str, choices: Sequence[str], all_token: str | None = None,
                ) -> list[str]:
    if all_token is not None and text == all_token:
        return list(choices)
    items = [item.strip() for item in text.split(",") if item.strip()]
    for item in items:
        if item not in choices:
            raise argparse.ArgumentTypeError(
                f"unknown value {item!r}; choose from {', '.join(choices)}")
    if not items:
        raise argparse.ArgumentTypeError("empty selection")
    return items


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--out", type=Path, default=Path("out"),
                     help="output directory (default: ./out)")
    sub.add_argument("--max-n", type=int, default=DEFAULT_MAX_N,
                     help=f"size guard for builds (default: {DEFAULT_MAX_N})")
    sub.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                     help="parallel per-n builds (results are assembled in "
                          "n order, so output never depends on this)")


def _build_analyses(ns: Iterable[int], args: argparse.Namespace,
                    r_values: tuple[int, ...] = (1, 2),
                    ) -> dict[int, GraphAnalysis]:
    ns = list(ns)
    jobs = max(1, args.jobs)

    def build(n: int) -> GraphAnalysis:
        return analyze(n, r_values=r_values, max_n=args.max_n)

    if jobs == 1 or len(ns) <= 1:
        return {n: build(n) for n in ns}
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        futures = {n: pool.submit(build, n) for n in ns}
        return {n: fut.result() for n, fut in futures.items()}


def _write(path: Path, data: bytes) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(data)


def cmd_report(args: argparse.Namespace) -> int:
    analyses = _build_analyses(args.range, args)
    emitters: dict[str, tuple[str, Callable[[], list]]] = {
        "basic": ("table_basic.csv",
                  lambda: basic_counts(args.range, analyses=analyses)),
        "maxima": ("table_maxima.csv",
                   lambda: maxima(args.range, analyses=analyses)),
        "central": ("table_central_spine.csv",
                    lambda: central_spine(args.range, analyses=analyses)),
        "spectra": ("table_spectra.csv",
                    lambda: spectra_report(args.range, analyses=analyses)),
    }
    for name in args.tables:
        filename, emit = emitters[name]
        rows = emit()
        _write(args.out / filename, rows_to_csv(rows).encode())
        print(f"[{name}]")
        print(rows_to_text(rows))
    print(f"wrote {len(args.tables)} table(s) to {args.out}")
    return 0


def cmd_atlas(args: argparse.Namespace) -> int:
    analyses = _build_analyses(args.range, args)
    ordered = [analyses[n] for n in sorted(analyses)]
    documents = render_atlas(ordered, args.modes)
    for filename, doc in documents.items():
        _write(args.out / filename, doc.encode())
    print(f"wrote {len(documents)} atlas document(s) to {args.out}")
    return 0


def cmd_export(args: argparse.Namespace) -> int:
    analysis = analyze(args.n, max_n=args.max_n)
    payloads = export_graph(analysis, args.format)
    for filename, data in payloads.items():
        _write(args.out / filename, data)
    names = ", ".join(payloads)
    print(f"wrote {names} to {args.out}")
    return 0


def cmd_scan(args: argparse.Namespace) -> int:
    records = concentration_scan(args.range, args.radius, max_n=args.max_n)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "radius", "axis_empty",
                     "max_degree", "max_degree_vertices", "max_degree_in_central",
                     "max_dim_loc", "max_dim_loc_vertices", "max_dim_loc_in_central"])

    def verdict(value: bool | None) -> str:
        return "" if value is None else str(int(value))

    for rec in records:
        writer.writerow([
            rec.n, rec.radius, int(rec.axis_empty),
            rec.max_degree,
            ";".join(format_parts(lam) for lam in rec.max_degree_vertices),
            verdict(rec.max_degree_in_central),
            rec.max_dim_loc,
            ";".join(format_parts(lam) for lam in rec.max_dim_loc_vertices),
            verdict(rec.max_dim_loc_in_central),
        ])
        if rec.axis_empty:
            print(f"n={rec.n} r={rec.radius}: axis empty, verdict undefined")
        else:
            deg = "yes" if rec.max_degree_in_central else "no"
            dim = "yes" if rec.max_dim_loc_in_central else "no"
            print(f"n={rec.n} r={rec.radius}: max degree {rec.max_degree} "
                  f"inside central region: {deg}; max dim_loc "
                  f"{rec.max_dim_loc} inside central region: {dim}")
    _write(args.out / "scan.csv", buf.getvalue().encode())
    print(f"wrote scan.csv to {args.out}")
    return 0


def cmd_thresholds(args: argparse.Namespace) -> int:
    analyses = _build_analyses(args.range, args)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["feature", "threshold"])
    for name, feature in THRESHOLD_FEATURES.items():
        found = next((n for n in sorted(analyses) if feature(analyses[n])), None)
        writer.writerow([name, "" if found is None else found])
        shown = "not reached" if found is None else f"n = {found}"
        print(f"{name}: {shown}")
    _write(args.out / "thresholds.csv", buf.getvalue().encode())
    print(f"wrote thresholds.csv to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partgraph",
        description="Build the cell-transfer graph on partitions of n and "
                    "report its morphology.")
    subs = parser.add_subparsers(dest="command", required=True)

    report = subs.add_parser("report", help="emit summary tables")
    report.add_argument("--range", type=_parse_range, required=True,
                        help="N or A..B (inclusive)")
    report.add_argument("--tables",
                        type=lambda t: _parse_list(t, TABLE_CHOICES),
                        default=list(DEFAULT_TABLES),
                        help="comma list of: " + ",".join(TABLE_CHOICES))
    _add_common(report)
    report.set_defaults(func=cmd_report)

    atlas = subs.add_parser("atlas", help="render the SVG atlas")
    atlas.add_argument("--range", type=_parse_range,
                       default=list(range(1, 13)),
                       help="N or A..B (default 1..12)")
    atlas.add_argument("--modes",
                       type=lambda t: _parse_list(t, MODES, all_token="all"),
                       default=list(MODES),
                       help="comma list of modes, or 'all'")
    _add_common(atlas)
    atlas.set_defaults(func=cmd_atlas)

    export = subs.add_parser("export", help="dump one graph")
    export.add_argument("--n", type=_parse_n, required=True)
    export.add_argument("--format", choices=EXPORT_FORMATS, required=True)
    _add_common(export)
    export.set_defaults(func=cmd_export)

    scan = subs.add_parser("scan", help="central-concentration verdicts")
    scan.add_argument("--range", type=_parse_range, required=True)
    scan.add_argument("--radius", type=int, default=1)
    _add_common(scan)
    scan.set_defaults(func=cmd_scan)

    thresholds = subs.add_parser("thresholds",
                                 help="first appearance of built-in features")
    thresholds.add_argument("--range", type=_parse_range, required=True)
    _add_common(thresholds)
    thresholds.set_defaults(func=cmd_thresholds)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
