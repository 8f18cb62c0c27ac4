"""Command-line front end.

Subcommands: enumerate, census, table1, laws, verify, show.  Exit codes:
0 on success / match, 1 on verification or comparison failure, 2 on usage
or parse errors.  All output is deterministic for fixed inputs and flags,
regardless of --threads.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import export
from .contextuality import Verdict, analyze, wa_symbol
from .geometry import Space
from .pauli import OBSERVABLES, PauliError
from .pentads import enumerate_pentads, pentad_to_config, pentad_to_pentagram
from .taxonomy import TypeCountMismatch, classify_census, compare_with_table1, structural_laws

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _pentads_for(space: Space, cache: str | None, threads: int):
    """Load pentads from the cache if present, else enumerate (and cache)."""
    if cache and Path(cache).exists():
        return export.load_cache(cache, space)
    pentads = enumerate_pentads(space, workers=threads)
    if cache:
        export.write_cache(cache, space, pentads)
    return pentads


def _write_or_print(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _cmd_enumerate(args: argparse.Namespace) -> int:
    space = Space()
    if args.object == "points":
        rows = export.points_table(space, coords=args.coords)
        columns = ["id", "word", "type"] + (["coords"] if args.coords else [])
    elif args.object == "lines":
        rows = export.lines_table(space)
        columns = ["id", "points", "sign"]
    elif args.object == "planes":
        rows = export.planes_table(space)
        columns = ["id", "points", "sign", "class", "b_line"]
    else:
        pentads = _pentads_for(space, args.cache, args.threads)
        if args.out:
            if args.format == "json":
                records = export.pentad_records(space, pentads)
                obj = {
                    "format": export.CACHE_FORMAT,
                    "version": export.CACHE_VERSION,
                    "generator": {"package": "w52", "points": 63, "lines": 315, "planes": 135},
                    "records": records,
                }
                _write_or_print(export.render_json(obj), args.out)
            else:
                rows = [
                    {
                        "id": r["id"],
                        "planes": r["planes"],
                        "negative_edges": r["pentagram"]["negative_edges"],
                        "negative_contexts": r["config"]["negative_contexts"],
                    }
                    for r in export.pentad_records(space, pentads)
                ]
                _write_or_print(
                    export.render_csv(rows, ["id", "planes", "negative_edges", "negative_contexts"]),
                    args.out,
                )
        print(len(pentads))
        return EXIT_OK
    if args.out:
        if args.format == "json":
            _write_or_print(export.render_json(rows), args.out)
        else:
            _write_or_print(export.render_csv(rows, columns), args.out)
    print(len(rows))
    return EXIT_OK


def _build_census(args: argparse.Namespace):
    space = Space()
    pentads = _pentads_for(space, args.cache, args.threads)
    return space, pentads, classify_census(space, pentads)


def _cmd_census(args: argparse.Namespace) -> int:
    try:
        _, pentads, census = _build_census(args)
    except TypeCountMismatch as exc:
        print(exc, file=sys.stderr)
        for record in exc.census.records:
            print(
                f"  witness pentad {record.example_pentad}: {record.signature}",
                file=sys.stderr,
            )
        return EXIT_FAIL
    _write_or_print(export.census_csv(census), args.out)
    if args.out:
        print(f"{len(census.records)} types over {census.total} pentads -> {args.out}")
    return EXIT_OK


def _cmd_table1(args: argparse.Namespace) -> int:
    try:
        _, _, census = _build_census(args)
    except TypeCountMismatch as exc:
        print(exc, file=sys.stderr)
        return EXIT_FAIL
    diff = compare_with_table1(census)
    print(diff.render())
    return EXIT_OK if diff.ok else EXIT_FAIL


def _cmd_laws(args: argparse.Namespace) -> int:
    try:
        _, _, census = _build_census(args)
    except TypeCountMismatch as exc:
        print(exc, file=sys.stderr)
        return EXIT_FAIL
    report = structural_laws(census)
    print(report.render())
    return EXIT_OK if report.ok else EXIT_FAIL


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        context_set = export.load_context_file(args.file)
    except (OSError, ValueError) as exc:  # PauliError is a ValueError
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = analyze(context_set)
    symbol = wa_symbol(context_set)
    if args.format == "json":
        obj = report.to_json_obj()
        obj["symbol"] = str(symbol)
        sys.stdout.write(export.render_json(obj))
    else:
        print(f"contexts: {len(report.contexts)}")
        for i, ctx in enumerate(report.contexts):
            words = " ".join(o.word for o in ctx.observables)
            if ctx.sign is not None:
                status = f"sign {ctx.sign:+d}"
            else:
                status = "malformed:" + (" anticommuting" if not ctx.commuting else "") + (
                    " not closed" if not ctx.closed else ""
                )
            print(f"  [{i:2d}] {words}   {status}")
        occurrences = report.occurrence_counts
        print(f"observables: {len(occurrences)}, all even: {'yes' if report.all_even else 'no'}")
        print(
            f"negative contexts: {report.negative_count} "
            f"(odd: {'yes' if report.odd_negative else 'no'})"
        )
        print(f"symbol: {symbol}")
        print(f"verdict: {report.verdict}")
    return EXIT_OK if report.verdict is Verdict.VALID_PARITY_PROOF else EXIT_FAIL


def _render_word(point_id: int, coords: bool) -> str:
    word = OBSERVABLES[point_id - 1].word
    return f"{word}({point_id:06b})" if coords else word


def _cmd_show(args: argparse.Namespace) -> int:
    space = Space()
    pentads = _pentads_for(space, args.cache, args.threads)
    if not 0 <= args.pentad < len(pentads):
        print(f"error: unknown pentad id {args.pentad}", file=sys.stderr)
        return EXIT_USAGE
    pentad = pentads[args.pentad]
    w = lambda p: _render_word(p, args.coords)  # noqa: E731
    print(f"pentad {pentad.pentad_id}: planes {' '.join(str(p) for p in pentad.planes)}")
    if args.view == "planes":
        for plane_id in pentad.planes:
            plane = space.planes[plane_id]
            words = " ".join(w(p) for p in plane.points)
            shared = " ".join(w(p) for p in pentad.shared_points(plane_id))
            print(
                f"  plane {plane_id} [{plane.plane_class}] sign {plane.sign:+d}: {words}\n"
                f"    shared points: {shared}  (distinguished line "
                f"{pentad.distinguished_line(plane_id)})"
            )
    elif args.view == "pentagram":
        pentagram = pentad_to_pentagram(space, pentad)
        print(f"  observables: {' '.join(w(p) for p in pentagram.observables)}")
        for edge, sign in zip(pentagram.edges, pentagram.edge_signs):
            print(f"  edge {' '.join(w(p) for p in edge)}   sign {sign:+d}")
        print(f"  negative edges: {pentagram.negative_edges}")
    else:
        config = pentad_to_config(space, pentad)
        print(f"  observables ({len(config.observables)}): "
              f"{' '.join(w(p) for p in config.observables)}")
        print(f"  contexts ({len(config.contexts)}):")
        for ctx, sign in zip(config.contexts, config.context_signs):
            print(f"    {' '.join(w(p) for p in ctx)}   sign {sign:+d}")
        print(f"  negative contexts: {config.negative_contexts}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="w52",
        description="Three-qubit W(5,2): Fano pentads, Mermin pentagrams, and "
        "their 47 configuration types.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_cache_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--cache", metavar="PATH", help="pentad census cache (built on demand)")
        p.add_argument(
            "--threads", type=int, default=1, metavar="N",
            help="worker processes for pentad enumeration (output is identical for any N)",
        )

    p = sub.add_parser("enumerate", help="enumerate points, lines, planes or pentads")
    p.add_argument("object", choices=["points", "lines", "planes", "pentads"])
    p.add_argument("--format", choices=["json", "csv"], default="csv")
    p.add_argument("--out", metavar="PATH", help="write the table here")
    p.add_argument("--coords", action="store_true", help="also show GF(2)^6 coordinates")
    add_cache_flags(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("census", help="classify all pentad configurations and write the summary")
    p.add_argument("--out", metavar="PATH", help="summary CSV destination (default: stdout)")
    add_cache_flags(p)
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("table1", help="compare the census against the 47 reference rows")
    add_cache_flags(p)
    p.set_defaults(func=_cmd_table1)

    p = sub.add_parser("laws", help="check the five structural laws over the census")
    add_cache_flags(p)
    p.set_defaults(func=_cmd_laws)

    p = sub.add_parser("verify", help="verify a context file as a parity proof")
    p.add_argument("file", metavar="CONTEXTS.json")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("show", help="pretty-print one pentad")
    p.add_argument("--pentad", type=int, required=True, metavar="ID")
    p.add_argument("--as", dest="view", choices=["planes", "pentagram", "config"],
                   default="planes")
    p.add_argument("--coords", action="store_true", help="also show GF(2)^6 coordinates")
    add_cache_flags(p)
    p.set_defaults(func=_cmd_show)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles usage errors and --help
        code = exc.code if isinstance(exc.code, int) else EXIT_USAGE
        return code
    try:
        return args.func(args)
    except (OSError, export.CacheError, PauliError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
