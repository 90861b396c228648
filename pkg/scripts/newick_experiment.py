#!/usr/bin/env python3
"""Size experiment on a Newick file: apply the opening-mark transform, check
the byte-exact round trip, and report raw plus compressed sizes.

Usage: newick_experiment.py [FILE] [--compress-cmd CMD]...
Defaults to data/grafted_solution.tre (see fetch_tree_of_life.py).
"""

import argparse
import sys
import time
from pathlib import Path

from strux import (
    newick_dialect,
    open_collapse,
    open_expand,
    render,
    size_report,
    stats,
    tokenize,
)


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument(
        "file",
        nargs="?",
        default=str(Path(__file__).resolve().parent.parent / "data" / "grafted_solution.tre"),
    )
    ap.add_argument(
        "--compress-cmd",
        action="append",
        default=None,
        dest="cmds",
        help="external filter (default: gzip, bzip2, xz)",
    )
    args = ap.parse_args()
    cmds = args.cmds if args.cmds is not None else ["gzip", "bzip2", "xz"]

    path = Path(args.file)
    if not path.exists():
        print(f"{path} not found; run scripts/fetch_tree_of_life.py first", file=sys.stderr)
        return 1
    data = path.read_bytes()
    dialect = newick_dialect()
    t0 = time.perf_counter()
    stream = tokenize(data, dialect)
    marked = open_collapse(stream)
    out = render(marked)
    elapsed = time.perf_counter() - t0

    restored = render(open_expand(tokenize(out, dialect)))
    print(f"round trip byte-exact: {restored == data}")
    st = stats(stream)
    print(f"input: {st.byte_count} bytes, {st.paren_count} parens")
    report = size_report(data, out, dialect, cmds, wall_time=elapsed)
    print(report.to_text())
    return 0


if __name__ == "__main__":
    sys.exit(main())
