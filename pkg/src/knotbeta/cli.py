"""Command line front end.

Exit status: 0 on success, 1 when a verification fails, 2 for bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import examples
from .diagram import (
    DiagramError,
    LongKnotDiagram,
    from_braid,
    make_long,
    parse_braid,
    parse_long_pd,
    render_braid,
    render_pd,
)
from .generate import GenerationBudgetError, random_knots
from .invariants import compute_bundle, report_from_bundle
from .laurent import normalize
from .serialize import batch_row, bundle_to_json, rows_to_csv

FORMAT_ENV = "KNOTBETA_FORMAT"
EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _diagram_from_text(text: str, kind: str, basepoint: int | None = None) -> LongKnotDiagram:
    if kind == "braid":
        lk = make_long(from_braid(parse_braid(text)), 0)
    else:
        lk = parse_long_pd(text)
    if basepoint is not None and basepoint != lk.basepoint_edge:
        lk = make_long(lk.diagram, basepoint)
    return lk


def _kind_for(path: str, explicit: str | None) -> str:
    if explicit:
        return explicit
    return "braid" if path.endswith(".braid") else "pd"


def _load(args) -> LongKnotDiagram:
    sources = [s for s in (args.input, args.pd, args.braid, args.example) if s is not None]
    if len(sources) != 1:
        raise InputError("give exactly one of INPUT, --pd, --braid, --example")
    try:
        if args.example is not None:
            lk = examples.load_example(args.example)
            if args.basepoint is not None:
                lk = make_long(lk.diagram, args.basepoint)
            return lk
        if args.pd is not None:
            return _diagram_from_text(args.pd, "pd", args.basepoint)
        if args.braid is not None:
            return _diagram_from_text(args.braid, "braid", args.basepoint)
        text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
        return _diagram_from_text(text, _kind_for(args.input, args.kind), args.basepoint)
    except (DiagramError, KeyError, OSError) as exc:
        raise InputError(str(exc)) from exc


def _fmt_int_matrix(rows) -> str:
    if not rows:
        return "  (empty)"
    width = max(len(str(v)) for r in rows for v in r)
    return "\n".join("  [ " + " ".join(str(v).rjust(width) for v in r) + " ]" for r in rows)


def _fmt_laurent_matrix(m) -> str:
    if not m.nrows:
        return "  (empty)"
    return "\n".join("  " + line for line in str(m).splitlines())


def _compute_text(lk: LongKnotDiagram, b) -> str:
    lines = [
        f"PD: {render_pd(lk.diagram) or '(no crossings)'}",
        f"basepoint edge: {lk.basepoint_edge}",
        f"n = {b.n}",
        f"sigma = {list(b.sigma)}",
        f"d     = {list(b.d)}",
        f"S     = {list(b.S)}",
        "T =", _fmt_int_matrix(b.T),
        "X^-S =", _fmt_laurent_matrix(b.x_neg_s),
        "A =", _fmt_laurent_matrix(b.A),
        "W =", _fmt_int_matrix(b.W),
        "X^-(1+S)/2 =", _fmt_laurent_matrix(b.x_neg_half),
        "1+T^t(1-X^-S) =", _fmt_laurent_matrix(b.proposition_rhs()),
        f"beta  = {b.beta}",
        f"delta = {b.delta}",
        f"normalized delta = {normalize(b.delta) if b.delta else 0}",
        f"l = {b.l}",
    ]
    return "\n".join(lines)


def cmd_compute(args) -> int:
    lk = _load(args)
    b = compute_bundle(lk)
    if args.format == "json":
        print(json.dumps(bundle_to_json(lk, b), indent=2))
    else:
        print(_compute_text(lk, b))
    return EXIT_OK


def cmd_verify(args) -> int:
    lk = _load(args)
    b = compute_bundle(lk)
    if args.debug_flip_t:
        i, j = args.debug_flip_t
        if not (1 <= i <= b.n and 1 <= j <= b.n):
            raise InputError(f"--debug-flip-t indices must lie in 1..{b.n}")
        b = b.with_flipped_t(i, j)
    report = report_from_bundle(b)
    print(json.dumps(report.to_json(), indent=2))
    return EXIT_OK if report.ok else EXIT_FAIL


def _batch_item(item: tuple[str, str, str]) -> tuple[dict, bool]:
    ident, kind, text = item
    lk = _diagram_from_text(text, kind)
    b = compute_bundle(lk)
    report = report_from_bundle(b)
    return batch_row(ident, b, report), report.ok


def _batch_inputs(args) -> list[tuple[str, str, str]]:
    items = []
    for raw in args.paths:
        path = Path(raw)
        files = sorted(
            p for p in path.iterdir() if p.suffix in (".pd", ".braid")
        ) if path.is_dir() else [path]
        for f in files:
            try:
                items.append((str(f), _kind_for(str(f), args.kind), f.read_text()))
            except OSError as exc:
                raise InputError(str(exc)) from exc
    if args.count:
        for k, g in enumerate(_generate(args.seed, args.count, args.max_crossings)):
            items.append((f"seed{args.seed}-{k + 1:04d}", "pd", render_pd(make_long(g.diagram, 0))))
    if not items:
        raise InputError("batch needs input paths or --count")
    # parse up front so a bad file is an input error rather than a crash in a worker
    for ident, kind, text in items:
        try:
            _diagram_from_text(text, kind)
        except DiagramError as exc:
            raise InputError(f"{ident}: {exc}") from exc
    return items


def _generate(seed: int, count: int, max_crossings: int):
    try:
        return random_knots(seed, count, max_crossings)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def cmd_batch(args) -> int:
    items = _batch_inputs(args)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_batch_item, items, chunksize=8))
    else:
        results = [_batch_item(it) for it in items]
    rows = [row for row, _ in results]
    all_ok = all(ok for _, ok in results)
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    elif args.format == "text":
        for row, ok in results:
            print(
                f"{'PASS' if ok else 'FAIL'} {row['id']} n={row['n']} l={row['l']} "
                f"sign={row['sign']} detW={row['detW']} beta={row['beta']}"
            )
        print(f"{sum(ok for _, ok in results)}/{len(results)} diagrams passed")
    else:
        sys.stdout.write(rows_to_csv(rows))
    return EXIT_OK if all_ok else EXIT_FAIL


def _gen_file_text(word, diagram) -> str:
    header = "# braid: " + render_braid(word).replace("\n", " ").strip()
    return f"{header}\nbasepoint 0\n{render_pd(diagram)}\n"


def cmd_gen(args) -> int:
    out = Path(args.out)
    try:
        knots = random_knots(args.seed, args.count, args.max_crossings, args.max_attempts)
        status = EXIT_OK
    except GenerationBudgetError as exc:
        knots = exc.produced
        print(f"error: {exc}", file=sys.stderr)
        status = EXIT_INPUT
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    out.mkdir(parents=True, exist_ok=True)
    for k, g in enumerate(knots):
        (out / f"knot_{k + 1:04d}.pd").write_text(_gen_file_text(g.word, g.diagram))
    print(f"wrote {len(knots)} diagrams to {out}", file=sys.stderr)
    return status


def cmd_example(args) -> int:
    if args.list or args.name is None:
        print("\n".join(examples.NAMES))
        return EXIT_OK
    try:
        sys.stdout.write(examples.example_text(args.name))
    except KeyError as exc:
        raise InputError(exc.args[0]) from exc
    return EXIT_OK


def _add_input_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", help="diagram file (.pd or .braid), or - for stdin")
    p.add_argument("--pd", help="inline PD text")
    p.add_argument("--braid", help='inline braid text, e.g. "strands 2; s1 s1 s1"')
    p.add_argument("--example", help=f"built-in diagram: {', '.join(examples.NAMES)}")
    p.add_argument("--kind", choices=("pd", "braid"), help="override input kind")
    p.add_argument(
        "--basepoint", type=int,
        help="cut edge, as a canonical edge label (overrides the file's basepoint)",
    )


def build_parser() -> argparse.ArgumentParser:
    default_fmt = os.environ.get(FORMAT_ENV)
    parser = argparse.ArgumentParser(
        prog="knotbeta",
        description="Compute and cross-check beta and the Alexander polynomial of long knots.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="print all matrices, beta, delta and l")
    _add_input_args(p)
    p.add_argument("--format", choices=("text", "json"),
                   default=default_fmt if default_fmt in ("text", "json") else "text")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="check the theorem, matrix identity and lemmas; emits JSON")
    _add_input_args(p)
    p.add_argument("--debug-flip-t", nargs=2, type=int, metavar=("I", "J"),
                   help="toggle T[I][J] before checking (exercises the failure path)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("batch", help="verify many diagrams; one row each")
    p.add_argument("paths", nargs="*", help="files or directories of .pd/.braid files")
    p.add_argument("--kind", choices=("pd", "braid"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=0, help="also verify this many random knots")
    p.add_argument("--max-crossings", type=int, default=12)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("csv", "json", "text"),
                   default=default_fmt if default_fmt in ("csv", "json", "text") else "csv")
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("gen", help="write random knot diagrams as .pd files")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--max-crossings", type=int, default=12)
    p.add_argument("--max-attempts", type=int, default=None)
    p.add_argument("--out", default=".")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("example", help="print a built-in diagram")
    p.add_argument("name", nargs="?")
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_example)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
