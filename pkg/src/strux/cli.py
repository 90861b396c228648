"""Command-line front end.

Data flows through standard streams by default; files only via explicit
paths. Exit status: 0 on success, 1 for invalid input (diagnostic with
line:col on stderr), 2 for usage errors.
"""

from __future__ import annotations

import argparse
import sys
import time

from .adapters import scan_corpus, size_report
from .dialect import builtin_dialects, dump_dialect, get_dialect
from .errors import StruxError
from .escapes import compress_runs, expand_escapes
from .indent import IndentConfig, decode_indent, encode_indent
from .stream import render, tokenize
from .transforms import OPS, Profile, pipeline, pipeline_inverse
from .tree import stats


def _profile(args) -> Profile:
    ops = frozenset(s for s in (args.ops or "").split(",") if s)
    return Profile(
        style=args.style,
        enabled=ops,
        fold_depth=args.fold_depth,
        colon_only_terminal=args.terminal_only,
    )


def _read(args, stdin) -> bytes:
    if getattr(args, "input", None):
        with open(args.input, "rb") as fh:
            return fh.read()
    return stdin.read()


def _write(args, stdout, data: bytes):
    if getattr(args, "out", None):
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        stdout.write(data)
        stdout.flush()


def _add_transform_flags(p):
    p.add_argument("--dialect", default="default", help="built-in name or config path")
    p.add_argument("--ops", default="", help="comma-separated subset of " + ",".join(OPS))
    p.add_argument("--style", choices=("table", "prose"), default="table")
    p.add_argument("--fold-depth", type=int, default=1, dest="fold_depth")
    p.add_argument("--terminal-only", action="store_true", dest="terminal_only")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strux",
        description="Convert interleaved bracket text between compact notations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("transform", "restore"):
        p = sub.add_parser(name)
        _add_transform_flags(p)
        p.add_argument("--out", help="output path (default: stdout)")
        p.add_argument("input", nargs="?", help="input path (default: stdin)")

    p = sub.add_parser("stats")
    p.add_argument("--dialect", default="default")
    p.add_argument("paths", nargs="*", help="files (default: stdin)")

    p = sub.add_parser("bench")
    _add_transform_flags(p)
    p.add_argument(
        "--compress-cmd",
        action="append",
        default=[],
        dest="compress_cmds",
        help="external filter command, repeatable",
    )
    p.add_argument("paths", nargs="+", help="files to benchmark")

    p = sub.add_parser("indent")
    p.add_argument("mode", choices=("encode", "decode"))
    p.add_argument("--unit", type=int, default=4)
    p.add_argument("--strict", action="store_true")
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("input", nargs="?", help="input path (default: stdin)")

    p = sub.add_parser("escape")
    p.add_argument("mode", choices=("expand", "compress"))
    p.add_argument("--min-run", type=int, default=4, dest="min_run")
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("input", nargs="?", help="input path (default: stdin)")

    p = sub.add_parser("dialect")
    p.add_argument("mode", choices=("list", "show"))
    p.add_argument("name", nargs="?")

    return parser


def _cmd_transform(args, stdin, stdout, restore: bool) -> int:
    dialect = get_dialect(args.dialect)
    profile = _profile(args)
    data = _read(args, stdin)
    stream = tokenize(data, dialect)
    out = pipeline_inverse(stream, profile) if restore else pipeline(stream, profile)
    _write(args, stdout, render(out))
    return 0


def _cmd_stats(args, stdin, stdout) -> int:
    dialect = get_dialect(args.dialect)
    if not args.paths:
        report = stats(tokenize(stdin.read(), dialect))
        print(report.to_text(), file=stdout)
        print(report.to_kv(), file=stdout)
        return 0
    entries = scan_corpus(args.paths, dialect)
    status = 0
    for entry in entries:
        print(f"== {entry.path}", file=stdout)
        if entry.report is None:
            print(f"unreadable: {entry.error}", file=stdout)
            status = 1
            continue
        print(entry.report.to_text(), file=stdout)
        print(entry.report.to_kv(), file=stdout)
    return status


def _cmd_bench(args, stdin, stdout, stderr) -> int:
    dialect = get_dialect(args.dialect)
    profile = _profile(args)
    for path in args.paths:
        with open(path, "rb") as fh:
            data = fh.read()
        t0 = time.perf_counter()
        transformed = render(pipeline(tokenize(data, dialect), profile))
        elapsed = time.perf_counter() - t0
        report = size_report(
            data, transformed, dialect, args.compress_cmds, wall_time=elapsed
        )
        for c in report.compressors:
            if c.error is not None:
                print(f"warning: {c.command}: {c.error}", file=stderr)
        print(f"== {path}", file=stdout)
        print(report.to_text(), file=stdout)
        print(report.to_kv(), file=stdout)
    return 0


def _cmd_indent(args, stdin, stdout) -> int:
    cfg = IndentConfig(unit=args.unit, strict=args.strict)
    data = _read(args, stdin)
    if args.mode == "encode":
        _write(args, stdout, encode_indent(data, cfg))
    else:
        _write(args, stdout, decode_indent(data, cfg))
    return 0


def _cmd_escape(args, stdin, stdout) -> int:
    data = _read(args, stdin)
    if args.mode == "expand":
        _write(args, stdout, expand_escapes(data))
    else:
        _write(args, stdout, compress_runs(data, args.min_run))
    return 0


def _cmd_dialect(args, stdout, parser) -> int:
    if args.mode == "list":
        for name in sorted(builtin_dialects()):
            print(name, file=stdout)
        return 0
    if not args.name:
        parser.error("dialect show requires a name")
    print(dump_dialect(get_dialect(args.name)), end="", file=stdout)
    return 0


class _TextOut:
    """print()-compatible text view over a binary stream."""

    def __init__(self, buf):
        self.buf = buf

    def write(self, s: str) -> int:
        self.buf.write(s.encode("utf-8"))
        return len(s)

    def flush(self):
        self.buf.flush()


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    stdin = stdin if stdin is not None else sys.stdin.buffer
    stdout_b = stdout if stdout is not None else sys.stdout.buffer
    stderr_t = stderr if stderr is not None else sys.stderr
    stdout_t = _TextOut(stdout_b)

    try:
        if args.command == "transform":
            return _cmd_transform(args, stdin, stdout_b, restore=False)
        if args.command == "restore":
            return _cmd_transform(args, stdin, stdout_b, restore=True)
        if args.command == "stats":
            return _cmd_stats(args, stdin, stdout_t)
        if args.command == "bench":
            return _cmd_bench(args, stdin, stdout_t, stderr_t)
        if args.command == "indent":
            return _cmd_indent(args, stdin, stdout_b)
        if args.command == "escape":
            return _cmd_escape(args, stdin, stdout_b)
        if args.command == "dialect":
            return _cmd_dialect(args, stdout_t, parser)
    except BrokenPipeError:
        return 1
    except StruxError as exc:
        where = f" at {exc.pos}" if exc.pos is not None else ""
        print(f"strux: error: {exc.message}{where}", file=stderr_t)
        return 1
    except OSError as exc:
        print(f"strux: error: {exc}", file=stderr_t)
        return 1
    parser.error(f"unknown command {args.command!r}")
    return 2


if __name__ == "__main__":
    sys.exit(main())
