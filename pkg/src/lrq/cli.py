"""Command-line front end.

Four subcommands: ``index`` builds and saves indexes from raw or FASTA files,
``query`` answers longest-repeat queries at one position, ``all-positions``
emits the whole leftmost-LR table, and ``bench`` measures scaling.  Records go
to stdout as TSV (default, headerless unless --header) or JSON; errors go to
stderr.  Exit codes: 0 success, 2 usage or malformed input, 3 data errors such
as an empty FASTA file.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import TextIO

from .bench import parse_sizes, render_figure, run_bench, write_tsv
from .llr import ABSENT, Repeat
from .lr_global import all_lr_fast, all_lr_reference
from .lr_point import all_lr_at, leftmost_lr_at
from .suffix_index import (
    MAX_TEXT_LENGTH,
    IndexFormatError,
    IndexIntegrityError,
    TextIndex,
    as_text,
    build_index,
    load_index,
    save_index,
)

__all__ = ["main"]

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3


class DataError(Exception):
    """Input data that parses but cannot be processed (exit code 3)."""


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (IndexFormatError, IndexIntegrityError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lrq",
        description="Longest-repeat queries over byte strings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_index = sub.add_parser("index", help="build an index from a file and save it")
    p_index.add_argument("input", help="input file path")
    p_index.add_argument(
        "--format",
        choices=("raw", "fasta"),
        default="raw",
        help="raw bytes (default) or FASTA records, one index per record",
    )
    p_index.add_argument("--out", required=True, help="output index path")
    p_index.set_defaults(func=_cmd_index)

    p_query = sub.add_parser("query", help="longest repeat covering one position")
    _add_source_options(p_query)
    p_query.add_argument("--pos", type=int, required=True, help="1-indexed position")
    p_query.add_argument(
        "--all", action="store_true", help="emit every tied longest repeat, not just the leftmost"
    )
    _add_output_options(p_query)
    p_query.set_defaults(func=_cmd_query)

    p_all = sub.add_parser("all-positions", help="leftmost longest repeat for every position")
    _add_source_options(p_all)
    p_all.add_argument(
        "--reference",
        action="store_true",
        help="use the quadratic reference solver instead of the linear one",
    )
    _add_output_options(p_all)
    p_all.set_defaults(func=_cmd_all_positions)

    p_bench = sub.add_parser("bench", help="measure build and query scaling")
    p_bench.add_argument("--sizes", required=True, help="comma-separated ascending text sizes")
    p_bench.add_argument("--alphabet", type=int, default=4, help="alphabet size (default 4)")
    p_bench.add_argument("--seed", type=int, default=0, help="text generator seed (default 0)")
    p_bench.add_argument("--repeats", type=int, default=3, help="runs per size, median kept")
    p_bench.add_argument("--out", help="write the TSV here instead of stdout")
    p_bench.add_argument("--plot", help="also render a scaling figure to this path")
    p_bench.add_argument("--header", action="store_true", help="emit a header row")
    p_bench.set_defaults(func=_cmd_bench)

    return parser


def _add_source_options(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--index", help="load a saved index file")
    source.add_argument("--text", help="index this literal text (UTF-8) instead")


def _add_output_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--output", choices=("tsv", "json"), default="tsv", help="record format")
    parser.add_argument("--header", action="store_true", help="emit a TSV header row")
    parser.add_argument(
        "--show-substring", action="store_true", help="include the repeat text in each record"
    )


def _cmd_index(args: argparse.Namespace) -> int:
    data = Path(args.input).read_bytes()
    if args.format == "raw":
        texts = [data]
        paths = [Path(args.out)]
    else:
        records = _parse_fasta(data)
        texts = [sequence for _, sequence in records]
        paths = [Path(f"{args.out}.{ordinal}") for ordinal in range(1, len(records) + 1)]
    for text, path in zip(texts, paths):
        if len(text) > MAX_TEXT_LENGTH:
            raise DataError(f"text of {len(text)} bytes is too large for the index format")
        index = build_index(text)
        with open(path, "wb") as sink:
            save_index(index, sink)
        print(path)
    return EXIT_OK


def _cmd_query(args: argparse.Namespace) -> int:
    index = _load_source(args)
    if args.all:
        repeats = all_lr_at(index, args.pos) or [ABSENT]
    else:
        repeats = [leftmost_lr_at(index, args.pos)]
    records = [_record(index, args.pos, rep, args.show_substring) for rep in repeats]
    _emit(records, args.output, args.header, args.show_substring, sys.stdout)
    return EXIT_OK


def _cmd_all_positions(args: argparse.Namespace) -> int:
    index = _load_source(args)
    solve = all_lr_reference if args.reference else all_lr_fast
    table = solve(index)
    records = [
        _record(index, k, rep, args.show_substring)
        for k, rep in enumerate(table.entries, start=1)
    ]
    _emit(records, args.output, args.header, args.show_substring, sys.stdout)
    return EXIT_OK


def _cmd_bench(args: argparse.Namespace) -> int:
    sizes = parse_sizes(args.sizes)
    rows = run_bench(sizes, args.alphabet, args.seed, args.repeats)
    if args.out:
        with open(args.out, "w") as sink:
            write_tsv(rows, sink, header=args.header)
    else:
        write_tsv(rows, sys.stdout, header=args.header)
    if args.plot:
        render_figure(rows, args.plot)
    return EXIT_OK


def _load_source(args: argparse.Namespace) -> TextIndex:
    if args.index is not None:
        with open(args.index, "rb") as source:
            return load_index(source)
    return build_index(as_text(args.text))


def _parse_fasta(data: bytes) -> list[tuple[str, bytes]]:
    """Split FASTA bytes into (name, sequence) records.

    Sequence lines are uppercased and stripped of all whitespace.  A record
    may have an empty sequence; a file with no records at all, or sequence
    data before the first header, is a data error.
    """
    records: list[tuple[str, bytes]] = []
    name: str | None = None
    parts: list[bytes] = []
    for line in data.splitlines():
        if line.startswith(b">"):
            if name is not None:
                records.append((name, b"".join(parts)))
            name = line[1:].strip().decode("utf-8", "replace")
            parts = []
        elif name is None:
            if line.strip():
                raise DataError("FASTA input has sequence data before the first '>' header")
        else:
            parts.append(b"".join(line.split()).upper())
    if name is not None:
        records.append((name, b"".join(parts)))
    if not records:
        raise DataError("no FASTA records found")
    return records


def _record(index: TextIndex, position: int, rep: Repeat, show_substring: bool) -> dict:
    record = {"position": position, "start": rep.start, "length": rep.length}
    if show_substring:
        if rep.length:
            raw = index.text[rep.start - 1 : rep.start - 1 + rep.length]
            # latin-1 maps every byte to one code point, so nothing can fail
            record["substring"] = raw.decode("latin-1")
        else:
            record["substring"] = ""
    return record


def _emit(
    records: list[dict], fmt: str, header: bool, show_substring: bool, out: TextIO
) -> None:
    if fmt == "json":
        json.dump(records, out, ensure_ascii=False)
        out.write("\n")
        return
    columns = ["position", "start", "length"]
    if show_substring:
        columns.append("substring")
    if header:
        out.write("\t".join(columns) + "\n")
    for record in records:
        out.write("\t".join(str(record[column]) for column in columns) + "\n")
